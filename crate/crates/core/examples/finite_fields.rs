//! Finite fields as Galois modules, and Hilbert 90.

use tatecoh::cohomology::{cohomology, tate};
use tatecoh::localfield::build_finite_field;

fn main() -> tatecoh::Result<()> {
    for (p, f) in [(2, 3), (3, 2), (5, 2)] {
        let k = build_finite_field(p, f)?;
        let a = k.primitive_element();
        println!("F_{} = F_{p}[x]/({:?}), primitive element {:?}", k.size(), k.modulus(), a.coeffs());
        println!("  Nm(a) = {:?}, Tr(a) = {:?}", a.norm(1)?.coeffs(), a.trace(1)?.coeffs());
        let units = k.multiplicative_module()?;
        println!(
            "  H^1(Gal, F^×) = {}, H_T^0(Gal, F^×) = {}, H^1(Gal, F) = {}",
            cohomology(&units, 1)?.group(),
            tate(&units, 0)?.group(),
            cohomology(&k.additive_module()?, 1)?.group()
        );
    }
    Ok(())
}
