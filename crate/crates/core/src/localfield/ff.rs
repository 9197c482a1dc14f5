//! Finite fields `F_p[x]/(m)` and polynomial arithmetic modulo an integer.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::abgroup::{FgAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::FiniteGroup;

pub const MAX_FIELD_DEGREE: usize = 6;
pub const MAX_FIELD_SIZE: u64 = 1_000_000;

pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `a * b` modulo the monic polynomial whose lower coefficients are `m`,
/// coefficients modulo `q`. Inputs and output have length `m.len()`.
pub(crate) fn poly_mul(a: &[u64], b: &[u64], m: &[u64], q: u64) -> Vec<u64> {
    let f = m.len();
    let mut prod = vec![0u128; 2 * f.max(1)];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u128 * y as u128) % q as u128;
        }
    }
    for i in (f..2 * f).rev() {
        let c = prod[i] % q as u128;
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        // x^i = x^(i-f) x^f and x^f = -sum m_j x^j
        for (j, &mj) in m.iter().enumerate() {
            let k = i - f + j;
            prod[k] = (prod[k] + (q as u128 - c) * mj as u128) % q as u128;
        }
    }
    prod[..f].iter().map(|&x| (x % q as u128) as u64).collect()
}

pub(crate) fn poly_pow(a: &[u64], mut e: u64, m: &[u64], q: u64) -> Vec<u64> {
    let f = m.len();
    let mut r = vec![0; f];
    if f > 0 {
        r[0] = 1 % q;
    }
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mul(&r, &base, m, q);
        }
        base = poly_mul(&base, &base, m, q);
        e >>= 1;
    }
    r
}

/// Trims trailing zeros; the zero polynomial becomes empty.
fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` by nonzero `b` over `F_p`.
fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    let lead_inv = powmod(*b.last().expect("nonzero divisor"), p - 2, p);
    a = trim(a);
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let c = mulmod(*a.last().expect("nonempty"), lead_inv, p);
        for (j, &bj) in b.iter().enumerate() {
            a[shift + j] = (a[shift + j] + p - mulmod(c, bj, p)) % p;
        }
        a = trim(a);
    }
    a
}

fn poly_gcd(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility of `x^f + sum m_j x^j` over `F_p`.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let f = m.len();
    if f == 1 {
        return true;
    }
    let mut full = m.to_vec();
    full.push(1);
    let mut x = vec![0; f];
    x[1] = 1;
    let mut y = x.clone();
    for i in 1..=f {
        y = poly_pow(&y, p, m, p);
        let mut diff = y.clone();
        diff[1] = (diff[1] + p - 1) % p;
        if i < f {
            if poly_gcd(full.clone(), diff, p).len() != 1 {
                return false;
            }
        } else if trim(diff).len() != 0 {
            return false;
        }
    }
    true
}

struct FieldData {
    p: u64,
    f: usize,
    modulus: Vec<u64>,
}

/// `F_(p^f)` as `F_p[x]/(m)`.
#[derive(Clone)]
pub struct FiniteField {
    d: Arc<FieldData>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.d.p == other.d.p && self.d.modulus == other.d.modulus
    }
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.d.p, self.d.f, self.modulus())
    }
}

/// `F_(p^f)` with the first monic irreducible modulus of degree `f`, scanning
/// `(c_0, ..., c_(f-1))` in lexicographic order.
pub fn build_finite_field(p: u64, f: usize) -> Result<FiniteField> {
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    if f == 0 || f > MAX_FIELD_DEGREE {
        return Err(Error::InvalidField(format!("degree {f} outside 1..={MAX_FIELD_DEGREE}")));
    }
    let needed = (p as u128).saturating_pow(f as u32);
    if needed > MAX_FIELD_SIZE as u128 {
        return Err(Error::SizeCap { needed, cap: MAX_FIELD_SIZE as u128 });
    }
    let q = needed as u64;
    for t in 0..q {
        // c_0 is the most significant digit
        let mut m = vec![0; f];
        let mut rest = t;
        for j in (0..f).rev() {
            m[j] = rest % p;
            rest /= p;
        }
        if is_irreducible(&m, p) {
            return Ok(FiniteField { d: Arc::new(FieldData { p, f, modulus: m }) });
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

impl FiniteField {
    pub fn p(&self) -> u64 {
        self.d.p
    }

    pub fn degree(&self) -> usize {
        self.d.f
    }

    pub fn size(&self) -> u64 {
        self.d.p.pow(self.d.f as u32)
    }

    /// Coefficients of the monic modulus, constant term first.
    pub fn modulus(&self) -> Vec<u64> {
        let mut m = self.d.modulus.clone();
        m.push(1);
        m
    }

    pub(crate) fn low_modulus(&self) -> &[u64] {
        &self.d.modulus
    }

    pub fn element(&self, coeffs: &[u64]) -> Result<FFElement> {
        if coeffs.len() != self.d.f {
            return Err(Error::Malformed(format!("{} coefficients for degree {}", coeffs.len(), self.d.f)));
        }
        Ok(FFElement { field: self.clone(), c: coeffs.iter().map(|x| x % self.d.p).collect() })
    }

    pub fn from_int(&self, a: i64) -> FFElement {
        let mut c = vec![0; self.d.f];
        c[0] = a.rem_euclid(self.d.p as i64) as u64;
        FFElement { field: self.clone(), c }
    }

    pub fn zero(&self) -> FFElement {
        self.from_int(0)
    }

    pub fn one(&self) -> FFElement {
        self.from_int(1)
    }

    /// The class of `x`.
    pub fn gen(&self) -> FFElement {
        let mut c = vec![0; self.d.f];
        if self.d.f == 1 {
            c[0] = (self.d.p - self.d.modulus[0]) % self.d.p;
        } else {
            c[1] = 1;
        }
        FFElement { field: self.clone(), c }
    }

    /// Element with base-`p` digits of `i` as coefficients, `c_0` lowest.
    pub fn from_index(&self, mut i: u64) -> FFElement {
        let c = (0..self.d.f)
            .map(|_| {
                let d = i % self.d.p;
                i /= self.d.p;
                d
            })
            .collect();
        FFElement { field: self.clone(), c }
    }

    pub fn elements(&self) -> impl Iterator<Item = FFElement> + '_ {
        (0..self.size()).map(|i| self.from_index(i))
    }

    /// Smallest-index generator of the multiplicative group.
    pub fn primitive_element(&self) -> FFElement {
        let q1 = self.size() - 1;
        let primes = prime_factors(q1);
        (1..self.size())
            .map(|i| self.from_index(i))
            .find(|e| primes.iter().all(|&r| !e.pow(q1 / r).is_one()))
            .expect("the multiplicative group is cyclic")
    }

    /// `F^×` as `Z/(q-1)` over `Gal = Z/f`, Frobenius acting by `× p`.
    pub fn multiplicative_module(&self) -> Result<GModule> {
        let g = FiniteGroup::cyclic(self.d.f)?;
        let under = FgAbGroup::of(&[self.size() - 1]);
        galois_module(&g, &under, IntMatrix::from_i64(&[vec![self.d.p as i64]]))
    }

    /// `F^+` as `(Z/p)^f` over `Gal = Z/f`.
    pub fn additive_module(&self) -> Result<GModule> {
        let f = self.d.f;
        let g = FiniteGroup::cyclic(f)?;
        let under = FgAbGroup::of(&vec![self.d.p; f]);
        let cols: Vec<Vec<BigInt>> = (0..f)
            .map(|i| {
                let mut c = vec![0; f];
                c[i] = 1;
                let e = FFElement { field: self.clone(), c };
                e.frobenius().c.iter().map(|&x| BigInt::from(x)).collect()
            })
            .collect();
        galois_module(&g, &under, IntMatrix::from_columns(f, &cols))
    }
}

/// The module over `Z/f` where the generator `1` acts by `a`.
pub(crate) fn galois_module(g: &FiniteGroup, under: &FgAbGroup, a: IntMatrix) -> Result<GModule> {
    if g.order() == 1 {
        return Ok(GModule::trivial(g, under));
    }
    GModule::from_generators(g, under, &[(1, a)])
}

/// An element of a finite field.
#[derive(Clone, PartialEq)]
pub struct FFElement {
    field: FiniteField,
    c: Vec<u64>,
}

impl fmt::Debug for FFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.c)
    }
}

impl FFElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn index(&self) -> u64 {
        self.c.iter().rev().fold(0, |acc, &x| acc * self.field.p() + x)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    pub fn add(&self, o: &FFElement) -> FFElement {
        let p = self.field.p();
        FFElement { field: self.field.clone(), c: self.c.iter().zip(&o.c).map(|(a, b)| (a + b) % p).collect() }
    }

    pub fn neg(&self) -> FFElement {
        let p = self.field.p();
        FFElement { field: self.field.clone(), c: self.c.iter().map(|a| (p - a) % p).collect() }
    }

    pub fn sub(&self, o: &FFElement) -> FFElement {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &FFElement) -> FFElement {
        FFElement { field: self.field.clone(), c: poly_mul(&self.c, &o.c, self.field.low_modulus(), self.field.p()) }
    }

    pub fn pow(&self, e: u64) -> FFElement {
        FFElement { field: self.field.clone(), c: poly_pow(&self.c, e, self.field.low_modulus(), self.field.p()) }
    }

    pub fn inv(&self) -> Result<FFElement> {
        if self.is_zero() {
            return Err(Error::NotAUnit);
        }
        Ok(self.pow(self.field.size() - 2))
    }

    pub fn frobenius(&self) -> FFElement {
        self.pow(self.field.p())
    }

    fn frobenius_pow(&self, k: usize) -> FFElement {
        (0..k).fold(self.clone(), |e, _| e.frobenius())
    }

    fn check_sub(&self, d: usize) -> Result<()> {
        if d == 0 || self.field.degree() % d != 0 {
            return Err(Error::InvalidField(format!("{d} does not divide {}", self.field.degree())));
        }
        Ok(())
    }

    /// Lies in `F_(p^d)`.
    pub fn in_subfield(&self, d: usize) -> bool {
        self.frobenius_pow(d) == *self
    }

    /// Norm to the subfield of degree `d`: product of the `σ^(di)(e)`.
    pub fn norm(&self, d: usize) -> Result<FFElement> {
        self.check_sub(d)?;
        let mut acc = self.field.one();
        let mut e = self.clone();
        for _ in 0..self.field.degree() / d {
            acc = acc.mul(&e);
            e = e.frobenius_pow(d);
        }
        Ok(acc)
    }

    /// Trace to the subfield of degree `d`.
    pub fn trace(&self, d: usize) -> Result<FFElement> {
        self.check_sub(d)?;
        let mut acc = self.field.zero();
        let mut e = self.clone();
        for _ in 0..self.field.degree() / d {
            acc = acc.add(&e);
            e = e.frobenius_pow(d);
        }
        Ok(acc)
    }
}
