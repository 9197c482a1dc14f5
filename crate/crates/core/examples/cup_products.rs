//! Cup products with Tate classes over a cyclic group.

use num_bigint::BigInt;
use tatecoh::abgroup::FgAbGroup;
use tatecoh::cohomology::{cup, tate, Class};
use tatecoh::gmodule::GModule;
use tatecoh::group::FiniteGroup;

fn main() -> tatecoh::Result<()> {
    let g = FiniteGroup::cyclic(4)?;
    let z = GModule::integers(&g);
    let h2 = tate(&z, 2)?;
    let hm2 = tate(&z, -2)?;
    let u = Class::new(&h2, h2.group().gen(0))?;
    println!("u generates H_T^2(Z/4, Z) = {}", h2.group());

    // u ⌣ [σ^k] lands in H_T^0(Z/4, Z) = Z/4
    for k in 0..4 {
        let x = Class::new(&hm2, hm2.group().gen(0).scale(&BigInt::from(k)))?;
        println!("u ⌣ {k}[σ] = {:?}", cup(&u, &x)?.value.coords());
    }

    // multiplying by the class of 1 in H_T^0(Z/4, Z/4)
    let m = GModule::trivial(&g, &FgAbGroup::of(&[4]));
    let h0 = tate(&m, 0)?;
    let one = Class::new(&h0, h0.group().gen(0))?;
    for r in -2..=2 {
        let a = tate(&z, r)?;
        if a.is_trivial() {
            continue;
        }
        let x = Class::new(&a, a.group().gen(0))?;
        let y = cup(&x, &one)?;
        println!("H_T^{r}: generator ⌣ 1 = {:?} in {}", y.value.coords(), tate(&z.tensor(&m)?, r)?.group());
    }
    Ok(())
}
