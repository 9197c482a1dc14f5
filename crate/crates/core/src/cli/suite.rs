//! Batch identity suites.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::abgroup::{AbHom, FgAbGroup};
use crate::cohomology::{
    cohomology, corestriction, inflation, long_exact_check, restriction, tate, ShortExact,
};
use crate::error::Result;
use crate::gmodule::{random_module, random_short_exact, GModule};
use crate::group::{FiniteGroup, Subgroup};
use crate::localfield::{build_finite_field, build_tower, reciprocity_check, splitting_checks, Check};

fn check(name: String, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

/// `(G, H)` with `H` normal: `(Z/4, Z/2)`, `(Z/6, Z/3)`, `(S3, A3)`.
pub fn standard_pairs() -> Vec<(String, Subgroup)> {
    let z4 = FiniteGroup::cyclic(4).expect("valid");
    let z6 = FiniteGroup::cyclic(6).expect("valid");
    let s3 = FiniteGroup::symmetric3();
    let rot = s3.elements().find(|&x| s3.element_order(x) == 3).expect("S3 has 3-cycles");
    vec![
        ("Z/4 > Z/2".into(), z4.generated_by(&[2])),
        ("Z/6 > Z/3".into(), z6.generated_by(&[2])),
        ("S3 > A3".into(), s3.generated_by(&[rot])),
    ]
}

pub fn identities(seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    for n in 2..=6 {
        let g = FiniteGroup::cyclic(n)?;
        for i in 0..4 {
            let m = random_module(&g, &mut rng, 2, 6);
            let mut ok = true;
            for r in -3..=1 {
                ok &= tate(&m, r)?.invariant_factors() == tate(&m, r + 2)?.invariant_factors();
            }
            out.push(check(format!("periodicity Z/{n} #{i}"), ok, String::new()));
        }
    }

    for (name, h) in standard_pairs() {
        let g = h.parent().clone();
        let m = GModule::group_ring(&g).direct_sum(&GModule::trivial(&g, &FgAbGroup::of(&[8])))?;
        for r in 1..=2 {
            let res = restriction(&m, &h, r)?;
            let cor = corestriction(&m, &h, r)?;
            let idx = BigInt::from(h.index());
            let ok = cor.compose(&res)?.map.equals(&AbHom::identity(res.source.group()).scale(&idx));
            out.push(check(format!("Cor∘Res = [G:H] on H^{r}, {name}"), ok, String::new()));
        }
    }

    for (name, h) in standard_pairs() {
        let g = h.parent().clone();
        for i in 0..3 {
            let m = random_module(&g, &mut rng, 2, 6);
            let inf = inflation(&m, &h, 1)?;
            let res = restriction(&m, &h, 1)?;
            let zero = res.compose(&inf)?.map.is_zero();
            let inj = inf.map.is_injective()?;
            let exact = inf.map.image()?.order() == res.map.kernel()?.0.order();
            out.push(check(format!("inflation-restriction {name} #{i}"), zero && inj && exact, String::new()));
        }
    }

    for g in [FiniteGroup::cyclic(4)?, FiniteGroup::symmetric3()] {
        for i in 0..3 {
            let (f, p) = random_short_exact(&g, &mut rng, 2, 4);
            let se = ShortExact::new(f, p)?;
            let report = long_exact_check(&se, -2, 2)?;
            let bad: Vec<&str> = report.nodes.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
            out.push(check(
                format!("long exact sequence over order {} #{i}", g.order()),
                bad.is_empty(),
                bad.join(", "),
            ));
        }
    }
    Ok(out)
}

pub fn hilbert90() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        for f in 2..=4usize {
            if p.pow(f as u32) > 625 {
                continue;
            }
            let k = build_finite_field(p, f)?;
            let units = k.multiplicative_module()?;
            let h1 = cohomology(&units, 1)?;
            out.push(check(format!("H^1(F_{p}^{f} ^×) = 0"), h1.is_trivial(), format!("{}", h1.group())));
            let h0 = tate(&units, 0)?;
            out.push(check(format!("H_T^0(F_{p}^{f} ^×) = 0"), h0.is_trivial(), format!("{}", h0.group())));
            let add = k.additive_module()?;
            for r in 1..=2 {
                let h = cohomology(&add, r)?;
                out.push(check(format!("H^{r}(F_{p}^{f} +) = 0"), h.is_trivial(), format!("{}", h.group())));
            }
        }
    }
    Ok(out)
}

pub fn tate_theorem(seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (p, f, n) in [(2, 2, 3), (3, 2, 3)] {
        for c in splitting_checks(&build_tower(p, f, n)?)? {
            out.push(check(format!("({p},{f},{n}) {}", c.name), c.pass, c.detail));
        }
    }
    for (p, f, n) in [(2, 2, 3), (3, 2, 3), (2, 3, 2), (5, 2, 2)] {
        let report = reciprocity_check(&build_tower(p, f, n)?, seed)?;
        for c in report.checks {
            out.push(check(format!("({p},{f},{n}) {}", c.name), c.pass, c.detail));
        }
    }
    Ok(out)
}
