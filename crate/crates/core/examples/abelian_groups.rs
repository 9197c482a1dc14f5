//! Smith normal form, kernels and cokernels of integer maps.

use tatecoh::abgroup::{snf, AbHom, FgAbGroup, IntMatrix};

fn main() -> tatecoh::Result<()> {
    let m = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let (u, d, v) = snf(&m);
    println!("m = {m:?}\nd = {d:?}");
    println!("u m v = d: {}", u.mul(&m).mul(&v) == d);

    // Z^3 -> Z^3 given by m, as a map of abelian groups
    let z3 = FgAbGroup::free(3);
    let f = AbHom::new(z3.clone(), z3, m)?;
    let (coker, _) = f.cokernel()?;
    let (ker, _) = f.kernel()?;
    println!("coker = {coker}\nker = {ker}");

    // a map between torsion groups: Z/4 + Z/6 -> Z/12, (a, b) -> 3a + 2b
    let src = FgAbGroup::of(&[4, 6]);
    let dst = FgAbGroup::of(&[12]);
    let g = AbHom::new(src.clone(), dst, IntMatrix::from_i64(&[vec![3, 2]]))?;
    println!("source {src} has invariant factors {:?}", src.invariant_factors());
    println!("image {}, kernel {}", g.image()?, g.kernel()?.0);
    Ok(())
}
