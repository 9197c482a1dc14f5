//! The splitting module of a 2-cocycle and the reciprocity map it yields.

use num_bigint::BigInt;

use super::bar::encode;
use super::cup::Class;
use super::exact::{connecting_between, ShortExact};
use super::{tate, CohMap, Cochain};
use crate::abgroup::{FgAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::gmodule::{GModule, GModuleHom};

fn check_cocycle(c: &GModule, phi: &Cochain) -> Result<()> {
    if phi.degree() != 2 || phi.module() != c {
        return Err(Error::NotACocycle);
    }
    if !phi.is_cocycle() {
        return Err(Error::NotACocycle);
    }
    Ok(())
}

/// `C(φ) = C ⊕ ⊕_(σ≠1) Z x_σ` with `σ x_τ = x_στ - x_σ + φ(σ,τ)` and
/// `x_1 = φ(1,1)`, and the sequence `0 -> C -> C(φ) --α--> I_G -> 0`,
/// `α(x_σ) = σ - 1`.
pub fn splitting_module(c: &GModule, phi: &Cochain) -> Result<(GModule, ShortExact)> {
    check_cocycle(c, phi)?;
    let g = c.group();
    let n = g.order();
    let e = g.identity();
    let k = c.rank();
    let basis: Vec<usize> = g.elements().filter(|&x| x != e).collect();
    let slot = |x: usize| basis.iter().position(|&b| b == x).map(|p| k + p);
    let under = c.underlying().direct_sum(&FgAbGroup::free(n - 1));
    let dim = k + n - 1;
    // adds ±x_y to a column, x_1 being φ(1,1)
    let add_x = |col: &mut Vec<BigInt>, y: usize, sign: i64| match slot(y) {
        Some(i) => col[i] += sign,
        None => {
            for (j, v) in phi.value(&[e, e]).iter().enumerate() {
                col[j] += v * sign;
            }
        }
    };
    let action = g
        .elements()
        .map(|s| {
            let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(dim);
            let a = c.action(s).matrix();
            for j in 0..k {
                let mut col = vec![BigInt::from(0); dim];
                for (i, v) in a.column(j).into_iter().enumerate() {
                    col[i] = v;
                }
                cols.push(col);
            }
            for &t in &basis {
                let mut col = vec![BigInt::from(0); dim];
                add_x(&mut col, g.mul(s, t), 1);
                add_x(&mut col, s, -1);
                for (j, v) in phi.value(&[s, t]).iter().enumerate() {
                    col[j] += v;
                }
                cols.push(col);
            }
            IntMatrix::from_columns(dim, &cols)
        })
        .collect();
    let cphi = GModule::new(g, &under, action)?;
    let mut incl = IntMatrix::zeros(dim, k);
    let mut alpha = IntMatrix::zeros(n - 1, dim);
    for j in 0..k {
        incl.set(j, j, BigInt::from(1));
    }
    for p in 0..n - 1 {
        alpha.set(p, k + p, BigInt::from(1));
    }
    let (ig, _) = GModule::augmentation_ideal(g);
    let f = GModuleHom::new(c, &cphi, incl)?;
    let a = GModuleHom::new(&cphi, &ig, alpha)?;
    let se = ShortExact::new(f, a)?;
    Ok((cphi, se))
}

/// The 1-cochain `σ -> x_σ` in `C(φ)`, whose coboundary is `φ`.
pub fn splitting_cochain(c: &GModule, phi: &Cochain, cphi: &GModule) -> Result<Cochain> {
    let g = c.group();
    let e = g.identity();
    let k = c.rank();
    let dim = cphi.rank();
    let basis: Vec<usize> = g.elements().filter(|&x| x != e).collect();
    Cochain::from_fn(cphi, 1, |t| {
        let mut v = vec![BigInt::from(0); dim];
        match basis.iter().position(|&b| b == t[0]) {
            Some(p) => v[k + p] = BigInt::from(1),
            None => v[..k].clone_from_slice(phi.value(&[e, e])),
        }
        v
    })
}

/// The class of `Σ_τ φ(τ, σ)` in `H_T^0(G, C)`.
pub fn reciprocity_from_cocycle(phi: &Cochain, sigma: usize) -> Result<Class> {
    let c = phi.module();
    check_cocycle(c, phi)?;
    let g = c.group();
    let n = g.order();
    let mut acc = c.underlying().zero();
    for t in g.elements() {
        let v = &phi.table()[encode(&[t, sigma], n) * c.rank()..][..c.rank()];
        acc = acc.add(&c.underlying().element(v.to_vec())?);
    }
    Class::of_table(&tate(c, 0)?, acc.coords())
}

/// `H_T^-2(G, Z) -> H_T^-1(G, I_G) -> H_T^0(G, C)`, the two connecting maps
/// of `0 -> I_G -> Z[G] -> Z -> 0` and the splitting sequence of `φ`.
pub fn tate_composite(c: &GModule, phi: &Cochain) -> Result<CohMap> {
    let g = c.group();
    let aug = ShortExact::augmentation(g);
    let (_, split) = splitting_module(c, phi)?;
    let source = tate(aug.c(), -2)?;
    let mid = tate(aug.a(), -1)?;
    let target = tate(c, 0)?;
    let d1 = connecting_between(&aug, &source, &mid)?;
    let d2 = connecting_between(&split, &mid, &target)?;
    Ok(CohMap { source, target, map: d2.compose(&d1)? })
}
