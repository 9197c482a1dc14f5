//! Restriction, corestriction and inflation.

use num_bigint::BigInt;
use num_traits::Zero;

use super::bar::{decode, encode, tuple_count};
use super::exact::{connecting_between, dimension_shift, Shift};
use super::{invert_iso, tate, CohGroup, CohMap, Space};
use crate::abgroup::AbHom;
use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::Subgroup;

/// `Res : H_T^r(G, M) -> H_T^r(H, M)`.
pub fn restriction(m: &GModule, h: &Subgroup, r: i32) -> Result<CohMap> {
    if h.parent() != m.group() {
        return Err(Error::GroupMismatch);
    }
    let source = tate(m, r)?;
    let target = tate(&m.restrict(h)?, r)?;
    let map = restriction_between(&source, &target, h)?;
    Ok(CohMap { source, target, map })
}

fn restriction_between(source: &CohGroup, target: &CohGroup, h: &Subgroup) -> Result<AbHom> {
    let m = source.module();
    if source.degree() < 0 {
        // Res_r = δ_H^-1 ∘ Res_(r+1) ∘ δ_G along 0 -> I_G ⊗ M -> Z[G] ⊗ M -> M -> 0
        let r = source.degree();
        let (im, se) = dimension_shift(m, Shift::Up)?;
        let se_h = se.restrict(h)?;
        let up = tate(&im, r + 1)?;
        let up_h = tate(se_h.a(), r + 1)?;
        let d_g = connecting_between(&se, source, &up)?;
        let d_h = connecting_between(&se_h, target, &up_h)?;
        let res = restriction_between(&up, &up_h, h)?;
        return invert_iso(&d_h)?.compose(&res.compose(&d_g)?);
    }
    let Space::Cochains(r) = source.space() else { unreachable!("degree >= 0 uses cochains") };
    let n = m.group().order();
    let nh = h.order();
    let k = m.rank();
    source.induced_by(target, |t| {
        let mut out = Vec::with_capacity(tuple_count(nh, r) * k);
        for idx in 0..tuple_count(nh, r) {
            let parent: Vec<usize> = decode(idx, nh, r).iter().map(|&x| h.elements()[x]).collect();
            let i = encode(&parent, n);
            out.extend_from_slice(&t[i * k..(i + 1) * k]);
        }
        Ok(out)
    })
}

/// `Cor : H_T^r(H, M) -> H_T^r(G, M)`.
pub fn corestriction(m: &GModule, h: &Subgroup, r: i32) -> Result<CohMap> {
    if h.parent() != m.group() {
        return Err(Error::GroupMismatch);
    }
    let source = tate(&m.restrict(h)?, r)?;
    let target = tate(m, r)?;
    let map = corestriction_between(&source, &target, h)?;
    Ok(CohMap { source, target, map })
}

fn corestriction_between(source: &CohGroup, target: &CohGroup, h: &Subgroup) -> Result<AbHom> {
    let m = target.module();
    if source.degree() < 0 {
        let r = source.degree();
        let (im, se) = dimension_shift(m, Shift::Up)?;
        let se_h = se.restrict(h)?;
        let up = tate(&im, r + 1)?;
        let up_h = tate(se_h.a(), r + 1)?;
        let d_g = connecting_between(&se, target, &up)?;
        let d_h = connecting_between(&se_h, source, &up_h)?;
        let cor = corestriction_between(&up_h, &up, h)?;
        return invert_iso(&d_g)?.compose(&cor.compose(&d_h)?);
    }
    let Space::Cochains(r) = source.space() else { unreachable!("degree >= 0 uses cochains") };
    let g = m.group();
    let n = g.order();
    let nh = h.order();
    let k = m.rank();
    // ρ(x) = h for x = h t_j
    let rho: Vec<usize> = g.elements().map(|x| h.right_decompose(x).0).collect();
    source.induced_by(target, |t| {
        let f = |hs: &[usize]| {
            let local: Vec<usize> = hs.iter().map(|&x| h.local_index(x).expect("in H")).collect();
            let i = encode(&local, nh);
            &t[i * k..(i + 1) * k]
        };
        let mut out = Vec::with_capacity(tuple_count(n, r) * k);
        for idx in 0..tuple_count(n, r) {
            let gs = decode(idx, n, r);
            let mut p = vec![g.identity()];
            for &x in &gs {
                p.push(g.mul(*p.last().expect("nonempty"), x));
            }
            let mut acc = vec![BigInt::zero(); k];
            for &gk in h.left_coset_reps() {
                let gi = g.inv(gk);
                let q: Vec<usize> = p.iter().map(|&x| rho[g.mul(gi, x)]).collect();
                let args: Vec<usize> = q.windows(2).map(|w| g.mul(g.inv(w[0]), w[1])).collect();
                let v = m.act_coords(g.mul(gk, q[0]), f(&args));
                for (a, b) in acc.iter_mut().zip(v) {
                    *a += b;
                }
            }
            out.extend(acc);
        }
        Ok(out)
    })
}

/// `Inf : H^r(G/H, M^H) -> H^r(G, M)` for normal `H` and `r >= 1`.
pub fn inflation(m: &GModule, h: &Subgroup, r: i32) -> Result<CohMap> {
    if r < 1 {
        return Err(Error::DegreeOutOfRange(r));
    }
    let (mh, incl, proj) = m.fixed_under(h)?;
    let source = tate(&mh, r)?;
    let target = tate(m, r)?;
    let r = r as usize;
    let n = m.group().order();
    let nq = mh.group().order();
    let kq = mh.rank();
    let map = source.induced_by(&target, |t| {
        let mut out = Vec::with_capacity(tuple_count(n, r) * m.rank());
        for idx in 0..tuple_count(n, r) {
            let q: Vec<usize> = decode(idx, n, r).iter().map(|&x| proj[x]).collect();
            let i = encode(&q, nq);
            out.extend(incl.apply_coords(&t[i * kq..(i + 1) * kq]));
        }
        Ok(out)
    })?;
    Ok(CohMap { source, target, map })
}
