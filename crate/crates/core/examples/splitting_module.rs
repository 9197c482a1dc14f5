//! The splitting module of a 2-cocycle kills H^1 and H^2.

use tatecoh::cohomology::{cohomology, splitting_cochain, splitting_module};
use tatecoh::localfield::{build_tower, fundamental_cocycle, truncated_mult_module};

fn main() -> tatecoh::Result<()> {
    let l = truncated_mult_module(&build_tower(2, 2, 3)?)?;
    let phi = fundamental_cocycle(&l)?;
    let (c, se) = splitting_module(l.module(), &phi)?;
    println!("C(φ) has rank {} over {}", c.rank(), c.underlying());
    println!("H^1(C(φ)) = {}, H^2(C(φ)) = {}", cohomology(&c, 1)?.group(), cohomology(&c, 2)?.group());
    let x = splitting_cochain(l.module(), &phi, &c)?;
    println!("dx = φ in C(φ): {}", x.coboundary() == phi.push(se.f())?);
    Ok(())
}
