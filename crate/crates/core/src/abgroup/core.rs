use num_bigint::BigInt;

use super::engine::{self, snf as snf_kernel, snf_mod, Echelon, Lattice, Mat, Res, Scalar, SnfFlags};
use super::AbHom;

pub(super) struct Core<S> {
    echelon: Echelon<S>,
    u: Mat<S>,
    uinv: Mat<S>,
    nontriv: Vec<usize>,
    pub(super) factors: Vec<S>,
}

pub(super) fn build_core<S: Scalar>(d_in: &AbHom, d_out: &AbHom) -> Res<Core<S>> {
    let mid = d_out.source.orders();
    let b = mid.len();
    // cycles: x with d_out x = 0 in the target
    let rows = d_out.matrix.to_sparse::<S>()?;
    let moduli = mid.iter().map(engine::convert::<S>).collect::<Res<Vec<S>>>()?;
    let mut lat = Lattice::<S>::full_mod(moduli);
    for (row, o) in rows.iter().zip(d_out.target.orders()) {
        if row.is_empty() {
            continue;
        }
        lat.impose(row, &engine::convert::<S>(o)?)?;
    }
    let echelon = Echelon::new(b, lat.generators())?;
    let s = echelon.rank();
    // boundaries together with the relations of the middle group
    let mut ycols: Vec<Vec<S>> = Vec::new();
    let din_t = d_in.matrix.transpose();
    for j in 0..din_t.rows() {
        if din_t.row(j).is_empty() {
            continue;
        }
        let mut x = vec![S::nil(); b];
        for (i, v) in din_t.row(j) {
            x[*i] = engine::convert::<S>(v)?;
        }
        let y = echelon.solve(&x)?.expect("boundaries are cycles");
        ycols.push(y);
    }
    for (i, o) in mid.iter().enumerate() {
        if o.is_nil() {
            continue;
        }
        let mut x = vec![S::nil(); b];
        x[i] = engine::convert::<S>(o)?;
        ycols.push(echelon.solve(&x)?.expect("relations are cycles"));
    }
    let mut y = Mat::<S>::zeros(s, ycols.len());
    for (j, c) in ycols.iter().enumerate() {
        for (i, v) in c.iter().enumerate() {
            if !v.is_nil() {
                y.set(i, j, v.clone());
            }
        }
    }
    let flags = SnfFlags { u: true, uinv: true, ..Default::default() };
    // a finite middle group bounds the exponent of the quotient
    let out = match exponent::<S>(mid)? {
        Some(e) => snf_mod(y, flags, &e)?,
        None => snf_kernel(y, flags)?,
    };
    let mut nontriv = Vec::new();
    let mut factors = Vec::new();
    for i in 0..s {
        let d = out.diag.get(i).cloned().unwrap_or_else(S::nil);
        if !d.is_unit() {
            nontriv.push(i);
            factors.push(d);
        }
    }
    Ok(Core { echelon, u: out.u.expect("u requested"), uinv: out.uinv.expect("uinv requested"), nontriv, factors })
}

fn exponent<S: Scalar>(orders: &[BigInt]) -> Res<Option<S>> {
    let mut e = BigInt::from(1);
    for o in orders {
        if o.sign() == num_bigint::Sign::NoSign {
            return Ok(None);
        }
        e = num_integer::Integer::lcm(&e, o);
    }
    engine::convert::<S>(&e).map(Some)
}

impl<S: Scalar> Core<S> {
    pub(super) fn classify(&self, x: &[BigInt]) -> Res<Option<Vec<BigInt>>> {
        let xs = x.iter().map(engine::convert::<S>).collect::<Res<Vec<S>>>()?;
        let Some(y) = self.echelon.solve(&xs)? else { return Ok(None) };
        let mut out = Vec::with_capacity(self.nontriv.len());
        for (k, &i) in self.nontriv.iter().enumerate() {
            let mut acc = S::nil();
            for (j, yj) in y.iter().enumerate() {
                let a = self.u.at(i, j);
                if !a.is_nil() && !yj.is_nil() {
                    acc = acc.plus(&a.times(yj)?)?;
                }
            }
            let d = &self.factors[k];
            if !d.is_nil() {
                acc = acc.fmod(d)?;
            }
            out.push(acc.to_big());
        }
        Ok(Some(out))
    }

    pub(super) fn lift(&self, c: &[BigInt]) -> Res<Vec<BigInt>> {
        let s = self.echelon.rank();
        let mut y = vec![S::nil(); s];
        for (k, &i) in self.nontriv.iter().enumerate() {
            let ck = engine::convert::<S>(&c[k])?;
            if ck.is_nil() {
                continue;
            }
            for (r, yr) in y.iter_mut().enumerate() {
                let a = self.uinv.at(r, i);
                if !a.is_nil() {
                    *yr = yr.plus(&a.times(&ck)?)?;
                }
            }
        }
        Ok(self.echelon.combine(&y)?.iter().map(|v| v.to_big()).collect())
    }
}

