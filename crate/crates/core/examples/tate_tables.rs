//! Tate cohomology tables for standard modules.

use tatecoh::abgroup::FgAbGroup;
use tatecoh::cohomology::{cohomology, homology, tate};
use tatecoh::gmodule::GModule;
use tatecoh::group::FiniteGroup;

fn row(name: &str, m: &GModule) -> tatecoh::Result<()> {
    let cells: Vec<String> = (-3..=3).map(|r| tate(m, r).map(|h| h.group().to_string())).collect::<Result<_, _>>()?;
    println!("{name:<24} {}", cells.join(" | "));
    Ok(())
}

fn main() -> tatecoh::Result<()> {
    let z4 = FiniteGroup::cyclic(4)?;
    let s3 = FiniteGroup::symmetric3();
    let v4 = FiniteGroup::klein();
    println!("H_T^r for r = -3..3");
    row("Z/4, Z", &GModule::integers(&z4))?;
    row("Z/4, Z/6", &GModule::trivial(&z4, &FgAbGroup::of(&[6])))?;
    row("Z/4, Z[G]", &GModule::group_ring(&z4))?;
    row("Z/4, I_G", &GModule::augmentation_ideal(&z4).0)?;
    row("S3, Z", &GModule::integers(&s3))?;
    row("Klein, Z", &GModule::integers(&v4))?;

    let z = GModule::integers(&v4);
    for r in 0..=3 {
        println!("H^{r}(V4, Z) = {}   H_{r}(V4, Z) = {}", cohomology(&z, r)?.group(), homology(&z, r)?.group());
    }
    Ok(())
}
