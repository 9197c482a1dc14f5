//! Unramified extensions of `Q_p` at finite precision: `O_L / p^N` as
//! `(Z/p^N)[x] / (m(x))` with Frobenius lifted by Newton's method.

use std::fmt;
use std::sync::{Arc, OnceLock};

use super::ff::{build_finite_field, mulmod, poly_mul, poly_pow, FiniteField};
use super::units::UnitDecomposition;
use crate::error::{Error, Result};

/// Cap on `p^(N f)`.
pub const MAX_TOWER_SIZE: u64 = 1_000_000_000;

pub(crate) struct TowerData {
    pub(crate) field: FiniteField,
    pub(crate) n: u32,
    pub(crate) pn: u64,
    /// lower coefficients of the monic lifted modulus
    pub(crate) modulus: Vec<u64>,
    pub(crate) frob: Vec<u64>,
    pub(crate) units: OnceLock<UnitDecomposition>,
}

/// `L / Q_p` unramified of degree `f`, computed modulo `p^N`.
#[derive(Clone)]
pub struct UnramifiedTower {
    pub(crate) d: Arc<TowerData>,
}

impl fmt::Debug for UnramifiedTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tower(p={}, f={}, N={})", self.p(), self.degree(), self.precision())
    }
}

impl PartialEq for UnramifiedTower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.d, &other.d)
            || (self.d.field == other.d.field && self.d.n == other.d.n && self.d.modulus == other.d.modulus)
    }
}

pub fn build_tower(p: u64, f: usize, n: u32) -> Result<UnramifiedTower> {
    let field = build_finite_field(p, f)?;
    if n == 0 {
        return Err(Error::InvalidField("precision must be at least 1".into()));
    }
    let needed = (p as u128).saturating_pow(n * f as u32);
    if needed > MAX_TOWER_SIZE as u128 {
        return Err(Error::SizeCap { needed, cap: MAX_TOWER_SIZE as u128 });
    }
    let pn = p.pow(n);
    let modulus = field.low_modulus().to_vec();
    let mut t = UnramifiedTower {
        d: Arc::new(TowerData { field, n, pn, modulus, frob: Vec::new(), units: OnceLock::new() }),
    };
    let frob = t.hensel_frobenius()?;
    Arc::get_mut(&mut t.d).expect("fresh").frob = frob;
    Ok(t)
}

impl UnramifiedTower {
    pub fn p(&self) -> u64 {
        self.d.field.p()
    }

    pub fn degree(&self) -> usize {
        self.d.field.degree()
    }

    pub fn precision(&self) -> u32 {
        self.d.n
    }

    /// `p^N`
    pub fn modulus_power(&self) -> u64 {
        self.d.pn
    }

    pub fn residue_field(&self) -> &FiniteField {
        &self.d.field
    }

    /// Coefficients of the lifted monic modulus, constant term first.
    pub fn lifted_modulus(&self) -> Vec<u64> {
        let mut m = self.d.modulus.clone();
        m.push(1);
        m
    }

    /// `σ(x)`
    pub fn frobenius_image(&self) -> OElement {
        self.raw(self.d.frob.clone())
    }

    pub(crate) fn raw(&self, c: Vec<u64>) -> OElement {
        OElement { tower: self.clone(), c }
    }

    pub fn element(&self, coeffs: &[u64]) -> Result<OElement> {
        if coeffs.len() != self.degree() {
            return Err(Error::Malformed(format!("{} coefficients for degree {}", coeffs.len(), self.degree())));
        }
        Ok(self.raw(coeffs.iter().map(|x| x % self.d.pn).collect()))
    }

    pub fn from_int(&self, a: i64) -> OElement {
        let mut c = vec![0; self.degree()];
        c[0] = a.rem_euclid(self.d.pn as i64) as u64;
        self.raw(c)
    }

    pub fn one(&self) -> OElement {
        self.from_int(1)
    }

    /// The class of `x`.
    pub fn gen(&self) -> OElement {
        if self.degree() == 1 {
            return self.from_int(-(self.d.modulus[0] as i64));
        }
        let mut c = vec![0; self.degree()];
        c[1] = 1;
        self.raw(c)
    }

    /// `m(y)` for the lifted modulus.
    fn eval_modulus(&self, y: &OElement, derivative: bool) -> OElement {
        let full = self.lifted_modulus();
        let coeffs: Vec<u64> = if derivative {
            full.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64, self.d.pn)).collect()
        } else {
            full
        };
        let mut acc = self.from_int(0);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(y).add(&self.from_int(c as i64));
        }
        acc
    }

    fn hensel_frobenius(&self) -> Result<Vec<u64>> {
        let p = self.p();
        let f = self.degree();
        let xp = poly_pow(&{
            let mut x = vec![0; f];
            if f == 1 {
                x[0] = (p - self.d.modulus[0] % p) % p;
            } else {
                x[1] = 1;
            }
            x
        }, p, &self.d.modulus.iter().map(|c| c % p).collect::<Vec<_>>(), p);
        let mut y = self.raw(xp);
        for _ in 0..=self.d.n {
            let m = self.eval_modulus(&y, false);
            if m.is_zero() {
                return Ok(y.c);
            }
            let dm = self.eval_modulus(&y, true).inv()?;
            y = y.sub(&m.mul(&dm));
        }
        if self.eval_modulus(&y, false).is_zero() {
            Ok(y.c)
        } else {
            Err(Error::InvalidField("Hensel lifting did not converge".into()))
        }
    }
}

/// An element of `O_L / p^N`.
#[derive(Clone, PartialEq)]
pub struct OElement {
    tower: UnramifiedTower,
    c: Vec<u64>,
}

impl fmt::Debug for OElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.c)
    }
}

impl OElement {
    pub fn tower(&self) -> &UnramifiedTower {
        &self.tower
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    fn pn(&self) -> u64 {
        self.tower.d.pn
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn is_one(&self) -> bool {
        *self == self.tower.one()
    }

    /// `p`-adic order, `N` for zero.
    pub fn valuation(&self) -> u32 {
        let p = self.tower.p();
        let mut v = 0;
        let mut pv = 1u64;
        while v < self.tower.d.n && self.c.iter().all(|&x| x % (pv * p) == 0) {
            v += 1;
            pv *= p;
        }
        v
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == 0
    }

    pub fn add(&self, o: &OElement) -> OElement {
        let q = self.pn();
        self.tower.raw(self.c.iter().zip(&o.c).map(|(a, b)| (a + b) % q).collect())
    }

    pub fn neg(&self) -> OElement {
        let q = self.pn();
        self.tower.raw(self.c.iter().map(|a| (q - a) % q).collect())
    }

    pub fn sub(&self, o: &OElement) -> OElement {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &OElement) -> OElement {
        self.tower.raw(poly_mul(&self.c, &o.c, &self.tower.d.modulus, self.pn()))
    }

    pub fn scale(&self, k: i64) -> OElement {
        self.mul(&self.tower.from_int(k))
    }

    pub fn pow(&self, e: u64) -> OElement {
        self.tower.raw(poly_pow(&self.c, e, &self.tower.d.modulus, self.pn()))
    }

    /// Inverse of a unit, by a residue inverse refined with `v <- v(2 - a v)`.
    pub fn inv(&self) -> Result<OElement> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let field = self.tower.residue_field();
        let p = self.tower.p();
        let r = field.element(&self.c.iter().map(|x| x % p).collect::<Vec<_>>())?.inv()?;
        let mut v = self.tower.raw(r.coeffs().to_vec());
        let two = self.tower.from_int(2);
        for _ in 0..32 - self.tower.d.n.leading_zeros() + 1 {
            v = v.mul(&two.sub(&self.mul(&v)));
        }
        debug_assert!(self.mul(&v).is_one());
        Ok(v)
    }

    /// `σ(a)`: substitute `σ(x)` for `x`.
    pub fn frobenius(&self) -> OElement {
        let s = self.tower.frobenius_image();
        let mut acc = self.tower.from_int(0);
        for &c in self.c.iter().rev() {
            acc = acc.mul(&s).add(&self.tower.from_int(c as i64));
        }
        acc
    }

    pub fn frobenius_pow(&self, k: usize) -> OElement {
        (0..k).fold(self.clone(), |e, _| e.frobenius())
    }

    /// `Nm_(L/K)(a)`, the product of the conjugates.
    pub fn norm(&self) -> OElement {
        let mut acc = self.tower.one();
        let mut e = self.clone();
        for _ in 0..self.tower.degree() {
            acc = acc.mul(&e);
            e = e.frobenius();
        }
        acc
    }

    pub fn trace(&self) -> OElement {
        let mut acc = self.tower.from_int(0);
        let mut e = self.clone();
        for _ in 0..self.tower.degree() {
            acc = acc.add(&e);
            e = e.frobenius();
        }
        acc
    }

    /// The constant coefficient when the element lies in `Z/p^N`.
    pub fn as_base(&self) -> Option<u64> {
        self.c[1..].iter().all(|&x| x == 0).then_some(self.c[0])
    }
}

/// `Nm_(L/K)(e)`, landing in `Z/p^N`.
pub fn norm_tower(e: &OElement) -> OElement {
    e.norm()
}

/// A unit `v` with `Nm(v) = u` mod `p^N`: solve the residue norm equation,
/// then one trace equation per level of the filtration.
pub fn norm_lift(u: i64, tower: &UnramifiedTower) -> Result<OElement> {
    let p = tower.p();
    let pn = tower.modulus_power();
    let u = u.rem_euclid(pn as i64) as u64;
    if u % p == 0 {
        return Err(Error::NotAUnit);
    }
    let field = tower.residue_field();
    let f = tower.degree();
    let target = field.from_int((u % p) as i64);
    let v0 = field
        .elements()
        .find(|e| !e.is_zero() && e.norm(1).expect("1 | f") == target)
        .ok_or_else(|| Error::InvalidField("residue norm is not onto".into()))?;
    let mut v = tower.raw(v0.coeffs().to_vec());
    // t with Tr(t) = 1 in the residue field
    let t = (0..f)
        .map(|i| field.from_index(p.pow(i as u32)))
        .find(|b| !b.trace(1).expect("1 | f").is_zero())
        .ok_or_else(|| Error::InvalidField("trace vanishes on the basis".into()))?;
    let tr = t.trace(1).expect("1 | f").coeffs()[0];
    let t = t.mul(&field.from_int(super::ff::powmod(tr, p - 2, p) as i64));
    let uu = tower.from_int(u as i64);
    let mut pm = 1u64;
    for _ in 1..tower.precision() {
        pm *= p;
        // w = u / Nm(v) = 1 + c p^m + ...
        let w = uu.mul(&v.norm().inv()?);
        let c = (w.coeffs()[0] + pn - 1) % pn / pm % p;
        if c == 0 {
            continue;
        }
        let a = t.mul(&field.from_int(c as i64));
        let step: Vec<u64> = a.coeffs().iter().map(|&x| x * pm % pn).collect();
        v = v.mul(&tower.one().add(&tower.raw(step)));
    }
    if v.norm() != uu {
        return Err(Error::InvalidField("norm lifting failed".into()));
    }
    Ok(v)
}
