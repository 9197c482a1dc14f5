//! Herbrand quotients of cyclic modules.

use tatecoh::abgroup::FgAbGroup;
use tatecoh::cohomology::herbrand;
use tatecoh::gmodule::{random_finite_module, GModule};
use tatecoh::group::FiniteGroup;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> tatecoh::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [2, 3, 4, 6] {
        let g = FiniteGroup::cyclic(n)?;
        let z = herbrand(&GModule::integers(&g))?;
        let zm = herbrand(&GModule::trivial(&g, &FgAbGroup::of(&[10])))?;
        let zg = herbrand(&GModule::group_ring(&g))?;
        let fin = herbrand(&random_finite_module(&g, &mut rng, 3, 9))?;
        println!("Z/{n}: h(Z) = {z}, h(Z/10) = {zm}, h(Z[G]) = {zg}, h(random finite) = {fin}");
    }
    Ok(())
}
