//! Restriction, corestriction and inflation for `A3 < S3`.

use num_bigint::BigInt;
use tatecoh::abgroup::AbHom;
use tatecoh::cohomology::{corestriction, inflation, restriction};
use tatecoh::gmodule::GModule;
use tatecoh::group::FiniteGroup;

fn main() -> tatecoh::Result<()> {
    let s3 = FiniteGroup::symmetric3();
    let rot = s3.elements().find(|&x| s3.element_order(x) == 3).expect("S3 has 3-cycles");
    let a3 = s3.generated_by(&[rot]);
    let z = GModule::integers(&s3);

    for r in 1..=3 {
        let res = restriction(&z, &a3, r)?;
        let cor = corestriction(&z, &a3, r)?;
        let twice = AbHom::identity(res.source.group()).scale(&BigInt::from(a3.index()));
        println!(
            "H^{r}(S3, Z) = {:<5} H^{r}(A3, Z) = {:<5} Cor∘Res = [G:H]: {}",
            res.source.group().to_string(),
            res.target.group().to_string(),
            cor.compose(&res)?.map.equals(&twice)
        );
    }

    // inflation from S3/A3 ≅ Z/2 with coefficients in Z^A3 = Z
    let inf = inflation(&z, &a3, 2)?;
    println!("Inf: {} -> {}, injective: {}", inf.source.group(), inf.target.group(), inf.map.is_injective()?);
    Ok(())
}
