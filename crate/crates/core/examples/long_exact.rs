//! Connecting homomorphisms and the long exact sequence of
//! `0 -> I_G -> Z[G] -> Z -> 0`.

use tatecoh::cohomology::{connecting, long_exact_check, tate, Direction, ShortExact};
use tatecoh::gmodule::random_short_exact;
use tatecoh::group::FiniteGroup;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> tatecoh::Result<()> {
    let g = FiniteGroup::cyclic(6)?;
    let se = ShortExact::augmentation(&g);
    for r in -2..=1 {
        let d = connecting(&se, r, Direction::Tate)?;
        println!(
            "δ: H_T^{r}(Z) = {} -> H_T^{}(I_G) = {}  iso: {}",
            d.source.group(),
            r + 1,
            d.target.group(),
            d.is_isomorphism()?
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let s3 = FiniteGroup::symmetric3();
    let (f, p) = random_short_exact(&s3, &mut rng, 2, 4);
    let se = ShortExact::new(f, p)?;
    for r in -1..=1 {
        println!(
            "H_T^{r}: A = {}, B = {}, C = {}",
            tate(se.a(), r)?.group(),
            tate(se.b(), r)?.group(),
            tate(se.c(), r)?.group()
        );
    }
    let report = long_exact_check(&se, -2, 2)?;
    for (node, ok) in &report.nodes {
        println!("{} {node}", if *ok { "exact" } else { "NOT EXACT" });
    }
    Ok(())
}
