//! The fundamental class and unramified local reciprocity.

use num_bigint::BigInt;
use tatecoh::cohomology::{reciprocity_from_cocycle, tate, tate_composite, Class};
use tatecoh::localfield::{
    build_tower, fundamental_cocycle, inv_unramified, reciprocity_check, truncated_mult_module,
};

fn main() -> tatecoh::Result<()> {
    let t = build_tower(2, 3, 2)?;
    let l = truncated_mult_module(&t)?;
    let phi = fundamental_cocycle(&l)?;
    let h2 = tate(l.module(), 2)?;
    let u = Class::of_table(&h2, phi.table())?;
    println!("H_T^2(Gal, L^×) = {}", h2.group());
    for k in 0..3u64 {
        let c = Class::new(&h2, u.value.scale(&BigInt::from(k)))?;
        println!("inv({k}·u) = {k}/3: {}", inv_unramified(&c)? == k);
    }
    for j in 0..3 {
        println!("Frob^{j} -> {:?} in K^×/Nm", reciprocity_from_cocycle(&phi, j)?.value.coords());
    }
    println!("cup with u is an isomorphism: {}", tate_composite(l.module(), &phi)?.is_isomorphism()?);

    let report = reciprocity_check(&t, 11)?;
    for c in &report.checks {
        println!("{} {}", if c.pass { "pass" } else { "FAIL" }, c.name);
    }
    Ok(())
}
