use num_bigint::BigInt;
use num_rational::BigRational;

use super::tate;
use crate::error::{Error, Result};
use crate::gmodule::GModule;

/// `h(M) = |H_T^0(G, M)| / |H_T^1(G, M)|` for cyclic `G`.
pub fn herbrand(m: &GModule) -> Result<BigRational> {
    if !m.group().is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let h0: BigInt = tate(m, 0)?.order().ok_or(Error::InfiniteCohomology)?;
    let h1: BigInt = tate(m, 1)?.order().ok_or(Error::InfiniteCohomology)?;
    Ok(BigRational::new(h0, h1))
}
