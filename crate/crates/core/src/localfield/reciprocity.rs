//! The unramified fundamental class, its invariant, and the reciprocity
//! checks built on them.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::tower::{build_tower, norm_lift, UnramifiedTower};
use super::units::{truncated_mult_module, TruncatedMultGroup};
use crate::abgroup::{cokernel, AbHom, FgAbGroup, IntMatrix};
use crate::cohomology::{
    cohomology, connecting, cup, induced_map, invert_iso, reciprocity_from_cocycle, splitting_cochain,
    splitting_module, tate, tate_composite, ChainElement, Class, Cochain, Direction, Rep, ShortExact,
};
use crate::error::Result;
use crate::gmodule::{GModule, GModuleHom};

/// How many units to test when a full sweep is too large.
pub const SAMPLED_UNITS: usize = 200;
/// Full unit sweeps are done when `p^(N f)` is at most this.
pub const SWEEP_LIMIT: u64 = 1_000_000;

/// `φ(σ^i, σ^j) = π` if `i + j >= f`, else `1` (written additively).
pub fn fundamental_cocycle(l: &TruncatedMultGroup) -> Result<Cochain> {
    let f = l.tower().degree();
    let pi = l.pi();
    let zero = vec![BigInt::zero(); pi.len()];
    Cochain::from_fn(l.module(), 2, |t| if t[0] + t[1] >= f { pi.clone() } else { zero.clone() })
}

/// `inv : H^2(G, L^×) -> Z/f`: push along the valuation, pull back through
/// the connecting map of `0 -> Z --f--> Z -> Z/f -> 0`, evaluate at Frobenius.
pub fn inv_unramified(c: &Class) -> Result<u64> {
    let m = c.group.module();
    let g = m.group();
    let f = g.order();
    if f == 1 {
        return Ok(0);
    }
    let z = GModule::integers(g);
    let mut row = IntMatrix::zeros(1, m.rank());
    row.set(0, 0, BigInt::from(1));
    let ord = GModuleHom::new(m, &z, row)?;
    let zf = GModule::trivial(g, &FgAbGroup::of(&[f as u64]));
    let times = GModuleHom::new(&z, &z, IntMatrix::from_i64(&[vec![f as i64]]))?;
    let red = GModuleHom::new(&z, &zf, IntMatrix::from_i64(&[vec![1]]))?;
    let d = connecting(&ShortExact::new(times, red)?, 1, Direction::Cohomology)?;
    let pushed = induced_map(&ord, &c.group, &d.target)?.apply(&c.value);
    let chi = invert_iso(&d.map)?.apply(&pushed);
    let table = d.source.lift_table(&chi);
    Ok(table[1].to_u64().expect("reduced mod f") % f as u64)
}

/// One named check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReciprocityReport {
    pub p: u64,
    pub f: usize,
    #[serde(rename = "N")]
    pub n: u32,
    /// invariant factors of `K^× / Nm(L^×)` (truncated)
    pub norm_quotient: Vec<String>,
    pub units_checked: usize,
    pub checks: Vec<Check>,
}

impl ReciprocityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// `Nm : L^× -> K^×` on truncated coordinates, and the base group.
pub fn norm_map(l: &TruncatedMultGroup) -> Result<(AbHom, TruncatedMultGroup)> {
    let t = l.tower();
    let base = build_tower(t.p(), 1, t.precision())?;
    let k = truncated_mult_module(&base)?;
    let f = t.degree() as i64;
    let units = t.unit_group()?;
    let mut cols = vec![{
        let mut c = vec![BigInt::zero(); k.module().rank()];
        c[0] = BigInt::from(f);
        c
    }];
    for i in 0..units.ngens() {
        let u = t.unit_from_coords(&units.gen(i))?;
        let n = u.norm().as_base().expect("norms lie in the base");
        cols.push(k.coords(0, &base.from_int(n as i64))?);
    }
    let m = IntMatrix::from_columns(k.module().rank(), &cols);
    Ok((AbHom::new(l.module().underlying().clone(), k.module().underlying().clone(), m)?, k))
}

fn units_to_check(t: &UnramifiedTower, seed: u64) -> Vec<i64> {
    let pn = t.modulus_power();
    let all: Vec<i64> = (1..pn as i64).filter(|u| u % t.p() as i64 != 0).collect();
    let size = t.p().pow(t.precision() * t.degree() as u32);
    if size <= SWEEP_LIMIT {
        return all;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..SAMPLED_UNITS).map(|_| all[rng.gen_range(0..all.len())]).collect()
}

/// The unramified reciprocity pipeline for one tower.
pub fn reciprocity_check(t: &UnramifiedTower, seed: u64) -> Result<ReciprocityReport> {
    let f = t.degree();
    let l = truncated_mult_module(t)?;
    let g = l.module().group().clone();
    let mut checks = Vec::new();

    // (a) the norm group and the quotient
    let (nm, k) = norm_map(&l)?;
    let (quot, proj) = cokernel(&nm)?;
    let pk = k.pi();
    let p_class = proj.apply_coords(&pk);
    let p_order = quot.element(p_class.clone())?.order();
    let quotient_ok = quot.invariant_factors() == if f == 1 { vec![] } else { vec![BigInt::from(f)] };
    checks.push(check("norm quotient is Z/f", quotient_ok, format!("{quot}")));
    checks.push(check(
        "[p] generates the quotient",
        p_order == BigInt::from(f) || (f == 1 && quot.is_trivial()),
        format!("order of [p] is {p_order}"),
    ));
    let unit_classes_zero = (1..k.module().rank()).all(|i| {
        let mut e = vec![BigInt::zero(); k.module().rank()];
        e[i] = BigInt::from(1);
        proj.apply_coords(&e).iter().all(|x| x.is_zero())
    });
    checks.push(check("all units of K are norms", unit_classes_zero, ""));
    let units = units_to_check(t, seed);
    let mut lifted = 0;
    for &u in &units {
        if let Ok(v) = norm_lift(u, t) {
            if v.norm().as_base() == Some(u as u64) {
                lifted += 1;
            }
        }
    }
    checks.push(check("norm_lift on units", lifted == units.len(), format!("{lifted}/{}", units.len())));

    // (c) reciprocity from the fundamental cocycle
    let phi = fundamental_cocycle(&l)?;
    let h0 = tate(l.module(), 0)?;
    let mut recip_ok = phi.is_cocycle();
    for kk in 0..f {
        let r = reciprocity_from_cocycle(&phi, kk)?;
        let mut pk = l.pi();
        pk[0] = BigInt::from(kk);
        recip_ok &= r.value == h0.classify_table(&pk)?;
    }
    checks.push(check("Frob^k maps to [p^k]", recip_ok, ""));

    // (d) the Tate-theorem composite agrees
    let comp = tate_composite(l.module(), &phi)?;
    let z = GModule::integers(&g);
    let mut comp_ok = comp.is_isomorphism()? && comp.source.order() == Some(BigInt::from(f));
    for s in g.elements() {
        let chain = ChainElement::from_fn(&z, 1, |x| vec![BigInt::from((x[0] == s) as i64)])?;
        let cls = comp.source.classify(&Rep::Chain(chain))?;
        comp_ok &= comp.apply(&cls) == reciprocity_from_cocycle(&phi, g.inv(s))?.value;
    }
    checks.push(check("Tate composite matches", comp_ok, ""));

    Ok(ReciprocityReport {
        p: t.p(),
        f,
        n: t.precision(),
        norm_quotient: quot.invariant_factors().iter().map(|x| x.to_string()).collect(),
        units_checked: units.len(),
        checks,
    })
}

/// The splitting-module checks for the fundamental class of a tower.
pub fn splitting_checks(t: &UnramifiedTower) -> Result<Vec<Check>> {
    let l = truncated_mult_module(t)?;
    let phi = fundamental_cocycle(&l)?;
    let (cphi, se) = splitting_module(l.module(), &phi)?;
    let mut out = vec![check("C(φ) is a module", cphi.check_axioms().is_ok(), "")];
    out.push(check("H^1(C(φ)) = 0", cohomology(&cphi, 1)?.is_trivial(), ""));
    out.push(check("H^2(C(φ)) = 0", cohomology(&cphi, 2)?.is_trivial(), ""));
    let x = splitting_cochain(l.module(), &phi, &cphi)?;
    out.push(check("∂(σ -> x_σ) = φ", x.coboundary() == phi.push(se.f())?, ""));
    let comp = tate_composite(l.module(), &phi)?;
    let ord = comp.source.order();
    out.push(check(
        "composite is an isomorphism of order f",
        comp.is_isomorphism()? && ord == Some(BigInt::from(t.degree())),
        format!("{:?}", ord),
    ));
    Ok(out)
}

/// `[φ] ⌣ [σ]` for each chain `σ` in `H_T^-2(G, Z)`, against the closed formula.
pub fn cup_matches_reciprocity(l: &TruncatedMultGroup) -> Result<bool> {
    let phi = fundamental_cocycle(l)?;
    let g = l.module().group();
    let h2 = tate(l.module(), 2)?;
    let a = Class::of_table(&h2, phi.table())?;
    let z = GModule::integers(g);
    let hz = tate(&z, -2)?;
    for s in g.elements() {
        let chain = ChainElement::from_fn(&z, 1, |x| vec![BigInt::from((x[0] == s) as i64)])?;
        let b = Class::new(&hz, hz.classify(&Rep::Chain(chain))?)?;
        let c = cup(&a, &b)?;
        if c.value != reciprocity_from_cocycle(&phi, g.inv(s))?.value {
            return Ok(false);
        }
    }
    Ok(true)
}
