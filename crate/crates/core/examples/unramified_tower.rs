//! Arithmetic in `Z_p[x]/(p^N)` for an unramified extension, and norm lifting.

use tatecoh::localfield::{build_tower, norm_lift, norm_tower};

fn main() -> tatecoh::Result<()> {
    let t = build_tower(3, 2, 4)?;
    println!("O_L / 3^4 with modulus {:?}", t.lifted_modulus());
    let x = t.gen();
    let y = t.element(&[2, 5])?;
    println!("σ(x) = {:?}", x.frobenius().coeffs());
    println!("y = {:?}, Nm(y) = {:?}, Tr(y) = {:?}", y.coeffs(), norm_tower(&y).coeffs(), y.trace().coeffs());
    println!("y^-1 = {:?}", y.inv()?.coeffs());

    for u in [2, 5, 7, 40, 80] {
        let v = norm_lift(u, &t)?;
        println!("norm_lift({u}) = {:?}, Nm = {:?}", v.coeffs(), norm_tower(&v).as_base());
    }
    Ok(())
}
