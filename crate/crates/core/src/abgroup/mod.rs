//! Finitely generated abelian groups, homomorphisms between them, and the
//! homology of composable pairs.

pub(crate) mod engine;
mod core;
mod matrix;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use self::core::{build_core, Core};
use engine::{snf as snf_kernel, with_fallback, Res, Scalar, SnfFlags};
pub use matrix::IntMatrix;

use crate::error::{Error, Result};

/// Smith normal form: returns `(u, d, v)` with `u * m * v = d`.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let flags = SnfFlags { u: true, v: true, ..Default::default() };
    fn go<S: Scalar>(m: &IntMatrix, flags: SnfFlags) -> Res<(IntMatrix, IntMatrix, IntMatrix)> {
        let out = snf_kernel(m.to_mat::<S>()?, flags)?;
        let diag: Vec<BigInt> = out.diag.iter().map(|x| x.to_big()).collect();
        Ok((
            IntMatrix::from_mat(out.u.as_ref().expect("u requested")),
            IntMatrix::diagonal(&diag, m.rows(), m.cols()),
            IntMatrix::from_mat(out.v.as_ref().expect("v requested")),
        ))
    }
    with_fallback(|| go::<i64>(m, flags), || go::<BigInt>(m, flags))
}

/// Diagonal of the Smith normal form, without transforms.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    fn go<S: Scalar>(m: &IntMatrix) -> Res<Vec<BigInt>> {
        let out = snf_kernel(m.to_mat::<S>()?, SnfFlags::default())?;
        Ok(out.diag.iter().map(|x| x.to_big()).collect())
    }
    with_fallback(|| go::<i64>(m), || go::<BigInt>(m))
}

fn normalize(orders: &[BigInt]) -> Vec<BigInt> {
    let mut tors: Vec<BigInt> =
        orders.iter().filter(|d| !d.is_zero() && !d.is_one()).map(|d| d.abs()).collect();
    let n = tors.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = tors[i].gcd(&tors[j]);
            let l = &tors[i] / &g * &tors[j];
            tors[i] = g;
            tors[j] = l;
        }
    }
    let mut out: Vec<BigInt> = tors.into_iter().filter(|d| !d.is_one()).collect();
    out.extend(orders.iter().filter(|d| d.is_zero()).cloned());
    out
}

/// A finitely generated abelian group `Z/d_1 + ... + Z/d_k` given by the
/// orders of its generators, `0` standing for an infinite cyclic factor.
///
/// Any diagonal presentation is allowed; equality compares invariant
/// factors.
#[derive(Clone)]
pub struct FgAbGroup {
    orders: Arc<Vec<BigInt>>,
}

impl FgAbGroup {
    pub fn new(orders: Vec<BigInt>) -> Result<Self> {
        if orders.iter().any(|d| d.is_negative()) {
            return Err(Error::Malformed("negative generator order".into()));
        }
        Ok(FgAbGroup { orders: Arc::new(orders) })
    }

    /// Group from small orders; `0` is a free factor.
    pub fn of(orders: &[u64]) -> Self {
        FgAbGroup { orders: Arc::new(orders.iter().map(|&d| BigInt::from(d)).collect()) }
    }

    /// Canonical group with the given invariant factors.
    pub fn from_factors(factors: &[BigInt]) -> Result<Self> {
        Ok(Self::new(factors.to_vec())?.canonical())
    }

    pub fn trivial() -> Self {
        Self::of(&[])
    }

    pub fn free(rank: usize) -> Self {
        Self::of(&vec![0; rank])
    }

    pub fn cyclic(n: u64) -> Self {
        Self::of(&[n])
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn ngens(&self) -> usize {
        self.orders.len()
    }

    /// Normalized factors: `d_1 | d_2 | ...`, each at least 2, free factors last.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        normalize(&self.orders)
    }

    pub fn canonical(&self) -> Self {
        FgAbGroup { orders: Arc::new(self.invariant_factors()) }
    }

    pub fn is_canonical(&self) -> bool {
        *self.orders == self.invariant_factors()
    }

    pub fn same_presentation(&self, other: &FgAbGroup) -> bool {
        Arc::ptr_eq(&self.orders, &other.orders) || self.orders == other.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.iter().filter(|d| d.is_zero()).count()
    }

    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.invariant_factors().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.iter().all(|d| d.is_one())
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(self.orders.iter().product())
    }

    /// Exponent of the torsion subgroup.
    pub fn exponent(&self) -> BigInt {
        self.orders.iter().filter(|d| !d.is_zero()).fold(BigInt::one(), |a, d| a.lcm(d))
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut o = (*self.orders).clone();
        o.extend(other.orders.iter().cloned());
        FgAbGroup { orders: Arc::new(o) }
    }

    pub fn reduce(&self, coords: &mut [BigInt]) {
        debug_assert_eq!(coords.len(), self.ngens());
        for (x, d) in coords.iter_mut().zip(self.orders.iter()) {
            if !d.is_zero() {
                *x = x.mod_floor(d);
            }
        }
    }

    pub fn element(&self, mut coords: Vec<BigInt>) -> Result<ElementOf> {
        if coords.len() != self.ngens() {
            return Err(Error::Malformed(format!(
                "element has {} coordinates, group has {} generators",
                coords.len(),
                self.ngens()
            )));
        }
        self.reduce(&mut coords);
        Ok(ElementOf { group: self.clone(), coords })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<ElementOf> {
        self.element(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(&self) -> ElementOf {
        ElementOf { group: self.clone(), coords: vec![BigInt::zero(); self.ngens()] }
    }

    pub fn gen(&self, i: usize) -> ElementOf {
        let mut c = vec![BigInt::zero(); self.ngens()];
        c[i] = BigInt::one();
        self.reduce(&mut c);
        ElementOf { group: self.clone(), coords: c }
    }

    pub fn gens(&self) -> Vec<ElementOf> {
        (0..self.ngens()).map(|i| self.gen(i)).collect()
    }

    /// All elements of a finite group, or `None` when infinite or larger
    /// than `limit`.
    pub fn elements(&self, limit: usize) -> Option<Vec<ElementOf>> {
        let n = self.order()?.to_usize()?;
        if n > limit {
            return None;
        }
        let mut out = Vec::with_capacity(n);
        let mut c = vec![BigInt::zero(); self.ngens()];
        loop {
            out.push(ElementOf { group: self.clone(), coords: c.clone() });
            let mut i = 0;
            loop {
                if i == c.len() {
                    return Some(out);
                }
                c[i] += 1;
                if c[i] < self.orders[i] {
                    break;
                }
                c[i] = BigInt::zero();
                i += 1;
            }
        }
    }
}

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }
}

impl Eq for FgAbGroup {}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.orders.iter().map(|d| d.to_string()).collect();
        write!(f, "FgAbGroup[{}]", s.join(","))
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fac = self.invariant_factors();
        if fac.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            fac.iter().map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z/{d}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of a group, coordinates reduced modulo the generator orders.
#[derive(Clone)]
pub struct ElementOf {
    group: FgAbGroup,
    coords: Vec<BigInt>,
}

impl ElementOf {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    fn check(&self, other: &ElementOf) {
        assert!(self.group.same_presentation(&other.group), "elements of different groups");
    }

    pub fn add(&self, other: &ElementOf) -> ElementOf {
        self.check(other);
        let c = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        self.group.element(c).expect("same length")
    }

    pub fn sub(&self, other: &ElementOf) -> ElementOf {
        self.check(other);
        let c = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        self.group.element(c).expect("same length")
    }

    pub fn neg(&self) -> ElementOf {
        self.group.element(self.coords.iter().map(|a| -a).collect()).expect("same length")
    }

    pub fn scale(&self, k: &BigInt) -> ElementOf {
        self.group.element(self.coords.iter().map(|a| a * k).collect()).expect("same length")
    }

    /// Order of the element, `0` when it has infinite order.
    pub fn order(&self) -> BigInt {
        let mut o = BigInt::one();
        for (x, d) in self.coords.iter().zip(self.group.orders.iter()) {
            if x.is_zero() {
                continue;
            }
            if d.is_zero() {
                return BigInt::zero();
            }
            o = o.lcm(&(d / x.gcd(d)));
        }
        o
    }
}

impl PartialEq for ElementOf {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_presentation(&other.group) && self.coords == other.coords
    }
}

impl Eq for ElementOf {}

impl fmt::Debug for ElementOf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coords.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A homomorphism of finitely generated abelian groups: column `j` of the
/// matrix is the image of source generator `j`.
#[derive(Clone, Debug)]
pub struct AbHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl AbHom {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.ngens() || matrix.cols() != source.ngens() {
            return Err(Error::Malformed(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.ngens(),
                source.ngens()
            )));
        }
        let h = AbHom { source, target, matrix };
        if !h.is_well_defined() {
            return Err(Error::Malformed("map does not respect the source relations".into()));
        }
        Ok(h)
    }

    /// Builds without the well-definedness scan; for maps correct by
    /// construction.
    pub(crate) fn new_unchecked(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), target.ngens());
        debug_assert_eq!(matrix.cols(), source.ngens());
        AbHom { source, target, matrix }
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        AbHom { source: g.clone(), target: g.clone(), matrix: IntMatrix::identity(g.ngens()) }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        AbHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.ngens(), source.ngens()),
        }
    }

    /// The map sending source generator `j` to the given element.
    pub fn from_images(source: &FgAbGroup, target: &FgAbGroup, images: &[ElementOf]) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::Malformed("wrong number of images".into()));
        }
        let cols: Vec<Vec<BigInt>> = images.iter().map(|e| e.coords.clone()).collect();
        Self::new(source.clone(), target.clone(), IntMatrix::from_columns(target.ngens(), &cols))
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_well_defined(&self) -> bool {
        let t = self.matrix.transpose();
        for (j, d) in self.source.orders.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            for (i, x) in t.row(j) {
                let o = &self.target.orders[*i];
                let v = x * d;
                if o.is_zero() || !v.mod_floor(o).is_zero() {
                    if !v.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn apply_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut y = self.matrix.apply(x);
        self.target.reduce(&mut y);
        y
    }

    pub fn apply(&self, x: &ElementOf) -> ElementOf {
        assert!(x.group.same_presentation(&self.source), "element is not in the source");
        ElementOf { group: self.target.clone(), coords: self.apply_coords(&x.coords) }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &AbHom) -> Result<AbHom> {
        if !other.target.same_presentation(&self.source) {
            return Err(Error::NonComposable("inner target differs from outer source".into()));
        }
        Ok(AbHom {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.reduced(self.matrix.mul(&other.matrix)),
        })
    }

    fn reduced(&self, m: IntMatrix) -> IntMatrix {
        let rows = (0..m.rows())
            .map(|i| {
                let d = &self.target.orders[i];
                m.row(i)
                    .iter()
                    .map(|(j, x)| (*j, if d.is_zero() { x.clone() } else { x.mod_floor(d) }))
                    .collect()
            })
            .collect();
        IntMatrix::from_sparse_rows(m.rows(), m.cols(), rows)
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        self.same_shape(other)?;
        Ok(AbHom { matrix: self.reduced(self.matrix.add(&other.matrix)), ..self.clone() })
    }

    pub fn sub(&self, other: &AbHom) -> Result<AbHom> {
        self.same_shape(other)?;
        Ok(AbHom { matrix: self.reduced(self.matrix.sub(&other.matrix)), ..self.clone() })
    }

    pub fn scale(&self, k: &BigInt) -> AbHom {
        AbHom { matrix: self.reduced(self.matrix.scale(k)), ..self.clone() }
    }

    fn same_shape(&self, other: &AbHom) -> Result<()> {
        if self.source.same_presentation(&other.source) && self.target.same_presentation(&other.target) {
            Ok(())
        } else {
            Err(Error::NonComposable("maps have different source or target".into()))
        }
    }

    /// True when every generator maps to zero.
    pub fn is_zero(&self) -> bool {
        self.reduced(self.matrix.clone()).is_zero()
    }

    pub fn equals(&self, other: &AbHom) -> bool {
        self.sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }

    pub fn kernel(&self) -> Result<(FgAbGroup, AbHom)> {
        kernel(self)
    }

    pub fn cokernel(&self) -> Result<(FgAbGroup, AbHom)> {
        cokernel(self)
    }

    /// The image as an abstract group.
    pub fn image(&self) -> Result<FgAbGroup> {
        let (_, incl) = self.kernel()?;
        Ok(cokernel(&incl)?.0)
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.0.is_trivial())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.cokernel()?.0.is_trivial())
    }

    /// Some `x` with `self(x) = y`, or `None` if `y` is not in the image.
    pub fn preimage(&self, y: &ElementOf) -> Option<ElementOf> {
        PreimageSolver::new(self).solve(y)
    }

    pub fn preimage_solver(&self) -> PreimageSolver {
        PreimageSolver::new(self)
    }
}

/// Solves `h(x) = y` repeatedly for a fixed map `h`.
pub struct PreimageSolver {
    h: AbHom,
    // SNF of [M | D_target]: u * A * v = diag
    u: IntMatrix,
    v: IntMatrix,
    diag: Vec<BigInt>,
}

impl PreimageSolver {
    fn new(h: &AbHom) -> Self {
        let rel: Vec<usize> = (0..h.target.ngens()).filter(|&i| !h.target.orders[i].is_zero()).collect();
        let mut rels = IntMatrix::zeros(h.target.ngens(), rel.len());
        for (k, &i) in rel.iter().enumerate() {
            rels.set(i, k, h.target.orders[i].clone());
        }
        let a = h.matrix.hstack(&rels);
        let (u, d, v) = snf(&a);
        let diag = (0..d.rows().min(d.cols())).map(|i| d.get(i, i)).collect();
        PreimageSolver { h: h.clone(), u, v, diag }
    }

    pub fn solve(&self, y: &ElementOf) -> Option<ElementOf> {
        assert!(y.group.same_presentation(&self.h.target), "element is not in the target");
        let z = self.u.apply(&y.coords);
        let mut w = vec![BigInt::zero(); self.v.rows()];
        for (i, zi) in z.iter().enumerate() {
            let d = self.diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if d.is_zero() {
                if !zi.is_zero() {
                    return None;
                }
            } else {
                let (q, r) = zi.div_mod_floor(&d);
                if !r.is_zero() {
                    return None;
                }
                w[i] = q;
            }
        }
        let full = self.v.apply(&w);
        let x = full[..self.h.source.ngens()].to_vec();
        Some(self.h.source.element(x).expect("length matches"))
    }
}

/// Homology `ker(d_out) / im(d_in)` at the middle term of a complex, with
/// maps between cycles and classes.
pub struct Homology {
    group: FgAbGroup,
    middle: FgAbGroup,
    d_in: AbHom,
    d_out: AbHom,
    small: Option<Core<i64>>,
    big: OnceLock<Core<BigInt>>,
}

impl fmt::Debug for Homology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Homology({})", self.group)
    }
}

pub fn homology_at(d_in: &AbHom, d_out: &AbHom) -> Result<Homology> {
    if !d_in.target.same_presentation(&d_out.source) {
        return Err(Error::NonComposable(format!(
            "target of d_in has {} generators, source of d_out has {}",
            d_in.target.ngens(),
            d_out.source.ngens()
        )));
    }
    if !d_out.compose(d_in)?.is_zero() {
        return Err(Error::NotAComplex);
    }
    let (small, big) = match build_core::<i64>(d_in, d_out) {
        Ok(c) => (Some(c), OnceLock::new()),
        Err(_) => {
            let big = OnceLock::new();
            let _ = big.set(build_core::<BigInt>(d_in, d_out).expect("BigInt arithmetic cannot overflow"));
            (None, big)
        }
    };
    let factors: Vec<BigInt> = match &small {
        Some(c) => c.factors.iter().map(|x| x.to_big()).collect(),
        None => big.get().expect("set above").factors.clone(),
    };
    Ok(Homology {
        group: FgAbGroup::new(factors)?,
        middle: d_out.source.clone(),
        d_in: d_in.clone(),
        d_out: d_out.clone(),
        small,
        big,
    })
}

impl Homology {
    /// The homology group, in canonical invariant-factor form.
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn middle(&self) -> &FgAbGroup {
        &self.middle
    }

    fn big(&self) -> &Core<BigInt> {
        self.big.get_or_init(|| {
            build_core::<BigInt>(&self.d_in, &self.d_out).expect("BigInt arithmetic cannot overflow")
        })
    }

    pub fn classify_coords(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.middle.ngens() {
            return Err(Error::Malformed("element has the wrong length".into()));
        }
        let mut x = x.to_vec();
        self.middle.reduce(&mut x);
        let r = match self.small.as_ref().map(|c| c.classify(&x)) {
            Some(Ok(r)) => r,
            _ => self.big().classify(&x).expect("BigInt arithmetic cannot overflow"),
        };
        r.ok_or(Error::NotACycle)
    }

    /// Class of a cycle.
    pub fn classify(&self, x: &ElementOf) -> Result<ElementOf> {
        if !x.group.same_presentation(&self.middle) {
            return Err(Error::Malformed("element is not in the middle group".into()));
        }
        let c = self.classify_coords(&x.coords)?;
        self.group.element(c)
    }

    pub fn lift_coords(&self, c: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(c.len(), self.group.ngens());
        let mut x = match self.small.as_ref().map(|core| core.lift(c)) {
            Some(Ok(x)) => x,
            _ => self.big().lift(c).expect("BigInt arithmetic cannot overflow"),
        };
        self.middle.reduce(&mut x);
        x
    }

    /// A cycle representing the class.
    pub fn lift(&self, c: &ElementOf) -> ElementOf {
        assert!(c.group.same_presentation(&self.group), "element is not a class");
        ElementOf { group: self.middle.clone(), coords: self.lift_coords(&c.coords) }
    }

    /// Representative cycles of the canonical generators.
    pub fn representatives(&self) -> Vec<ElementOf> {
        self.group.gens().iter().map(|g| self.lift(g)).collect()
    }

    /// True when the cycle `x` is a boundary.
    pub fn is_boundary(&self, x: &ElementOf) -> Result<bool> {
        Ok(self.classify(x)?.is_zero())
    }

    /// The map `ker(d_out) -> middle` as a homomorphism from the homology
    /// generators (a section, not a homomorphism on classes).
    pub fn inclusion_of_representatives(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = self.representatives().into_iter().map(|e| e.coords).collect();
        IntMatrix::from_columns(self.middle.ngens(), &cols)
    }
}

/// Kernel of `h`, with the inclusion into the source.
pub fn kernel(h: &AbHom) -> Result<(FgAbGroup, AbHom)> {
    let zero = AbHom::zero(&FgAbGroup::trivial(), &h.source);
    let hom = homology_at(&zero, h)?;
    let k = hom.group.clone();
    let incl = AbHom::new_unchecked(k.clone(), h.source.clone(), hom.inclusion_of_representatives());
    Ok((k, incl))
}

/// Cokernel of `h`, with the projection from the target.
pub fn cokernel(h: &AbHom) -> Result<(FgAbGroup, AbHom)> {
    let zero = AbHom::zero(&h.target, &FgAbGroup::trivial());
    let hom = homology_at(h, &zero)?;
    let q = hom.group.clone();
    let images: Vec<Vec<BigInt>> = (0..h.target.ngens())
        .map(|j| hom.classify(&h.target.gen(j)).expect("every element is a cycle").coords)
        .collect();
    let proj = AbHom::new_unchecked(h.target.clone(), q.clone(), IntMatrix::from_columns(q.ngens(), &images));
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn check_snf(a: &IntMatrix) -> Vec<BigInt> {
        let (u, d, v) = snf(a);
        assert_eq!(u.mul(a).mul(&v), d);
        assert!(u.is_unimodular() && v.is_unimodular());
        let diag: Vec<BigInt> = (0..d.rows().min(d.cols())).map(|i| d.get(i, i)).collect();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    assert!(d.get(i, j).is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        diag
    }

    #[test]
    fn snf_examples() {
        assert_eq!(check_snf(&IntMatrix::identity(2)), vec![b(1), b(1)]);
        assert_eq!(check_snf(&m(&[vec![2, 4], vec![6, 8]])), vec![b(2), b(4)]);
        assert_eq!(check_snf(&IntMatrix::zeros(2, 3)), vec![b(0), b(0)]);
    }

    #[test]
    fn snf_survives_overflow() {
        let big = i64::MAX / 3;
        let a = m(&[vec![big, big - 1, 7], vec![big - 5, big, 3], vec![1, 2, big]]);
        let diag = check_snf(&a);
        let prod: BigInt = diag.iter().product();
        assert_eq!(prod, a.determinant().abs());
    }

    #[test]
    fn kernel_examples() {
        let z8 = FgAbGroup::of(&[8]);
        let times4 = AbHom::new(z8.clone(), z8.clone(), m(&[vec![4]])).unwrap();
        let (k, incl) = kernel(&times4).unwrap();
        assert_eq!(k, FgAbGroup::of(&[4]));
        assert!(times4.compose(&incl).unwrap().is_zero());

        let z2 = FgAbGroup::free(2);
        assert!(kernel(&AbHom::identity(&z2)).unwrap().0.is_trivial());

        let z6 = FgAbGroup::of(&[6]);
        assert_eq!(kernel(&AbHom::zero(&z6, &z6)).unwrap().0, z6);
    }

    #[test]
    fn cokernel_examples() {
        let z = FgAbGroup::free(1);
        let (q, _) = cokernel(&AbHom::new(z.clone(), z.clone(), m(&[vec![5]])).unwrap()).unwrap();
        assert_eq!(q, FgAbGroup::of(&[5]));
        let z2 = FgAbGroup::free(2);
        let (q, proj) = cokernel(&AbHom::new(z2.clone(), z2.clone(), m(&[vec![2, 0], vec![0, 3]])).unwrap()).unwrap();
        assert_eq!(q.invariant_factors(), vec![b(6)]);
        assert!(proj.is_surjective().unwrap());
        let (q, _) = cokernel(&AbHom::identity(&z2)).unwrap();
        assert!(q.is_trivial());
    }

    #[test]
    fn homology_examples() {
        let z = FgAbGroup::free(1);
        let t = FgAbGroup::trivial();
        let two = AbHom::new(z.clone(), z.clone(), m(&[vec![2]])).unwrap();
        let h = homology_at(&two, &AbHom::zero(&z, &t)).unwrap();
        assert_eq!(h.group(), &FgAbGroup::of(&[2]));

        let zero = AbHom::zero(&z, &z);
        let h = homology_at(&zero, &zero).unwrap();
        assert_eq!(h.group(), &z);

        // Z[Z/2]: sigma - 1 then norm
        let z2 = FgAbGroup::free(2);
        let sm1 = AbHom::new(z.clone(), z2.clone(), m(&[vec![-1], vec![1]])).unwrap();
        let nm = AbHom::new(z2.clone(), z2.clone(), m(&[vec![1, 1], vec![1, 1]])).unwrap();
        let h = homology_at(&sm1, &nm).unwrap();
        assert!(h.group().is_trivial());
        // oracle: every small vector in ker Nm is a multiple of (1,-1)
        for a in -4i64..=4 {
            for c in -4i64..=4 {
                let x = z2.element_i64(&[a, c]).unwrap();
                if nm.apply(&x).is_zero() {
                    assert_eq!(a, -c);
                    assert!(h.is_boundary(&x).unwrap());
                }
            }
        }
    }

    #[test]
    fn homology_errors() {
        let z = FgAbGroup::free(1);
        let z2 = FgAbGroup::free(2);
        let one = AbHom::identity(&z);
        let wide = AbHom::zero(&z2, &z);
        assert!(matches!(homology_at(&one, &wide), Err(Error::NonComposable(_))));
        assert!(matches!(homology_at(&one, &one), Err(Error::NotAComplex)));
        let h = homology_at(&AbHom::zero(&z, &z), &one).unwrap();
        assert!(matches!(h.classify(&z.gen(0)), Err(Error::NotACycle)));
    }

    #[test]
    fn malformed_hom_rejected() {
        let z2 = FgAbGroup::of(&[2]);
        let z3 = FgAbGroup::of(&[3]);
        assert!(AbHom::new(z2.clone(), z3.clone(), m(&[vec![1]])).is_err());
        assert!(AbHom::new(z2.clone(), z3, m(&[vec![1, 0]])).is_err());
        let z4 = FgAbGroup::of(&[4]);
        assert!(AbHom::new(z2, z4, m(&[vec![2]])).is_ok());
    }

    #[test]
    fn preimage_solves() {
        let z = FgAbGroup::free(1);
        let z12 = FgAbGroup::of(&[12]);
        let h = AbHom::new(z, z12.clone(), m(&[vec![8]])).unwrap();
        let y = z12.element_i64(&[4]).unwrap();
        let x = h.preimage(&y).unwrap();
        assert_eq!(h.apply(&x), y);
        assert!(h.preimage(&z12.element_i64(&[2]).unwrap()).is_none());
    }

    #[test]
    fn normalization() {
        let g = FgAbGroup::of(&[0, 4, 6, 1, 9]);
        assert_eq!(g.invariant_factors(), vec![b(6), b(36), b(0)]);
        assert_eq!(g.canonical().invariant_factors(), g.invariant_factors());
        assert!(g.canonical().is_canonical());
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-9i64..10, c), r)
                .prop_map(|rows| IntMatrix::from_i64(&rows))
        })
    }

    fn finite_group() -> impl Strategy<Value = FgAbGroup> {
        proptest::collection::vec(1u64..7, 0..4).prop_map(|o| FgAbGroup::of(&o))
    }

    fn hom_between() -> impl Strategy<Value = AbHom> {
        (finite_group(), finite_group()).prop_flat_map(|(s, t)| {
            let n = s.ngens() * t.ngens();
            proptest::collection::vec(0i64..12, n).prop_map(move |vals| {
                // scale each entry so that the source relations map to zero
                let rows: Vec<Vec<BigInt>> = (0..t.ngens())
                    .map(|i| {
                        (0..s.ngens())
                            .map(|j| {
                                let (sj, ti) = (&s.orders()[j], &t.orders()[i]);
                                BigInt::from(vals[i * s.ngens() + j]) * (ti / sj.gcd(ti))
                            })
                            .collect()
                    })
                    .collect();
                AbHom::new(s.clone(), t.clone(), IntMatrix::from_dense(t.ngens(), s.ngens(), rows)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn snf_is_exact(a in small_matrix()) {
            check_snf(&a);
        }

        #[test]
        fn lagrange_for_kernel_and_image(h in hom_between()) {
            let (k, incl) = kernel(&h).unwrap();
            prop_assert!(h.compose(&incl).unwrap().is_zero());
            prop_assert!(incl.is_injective().unwrap());
            let elems = h.source().elements(1000).unwrap();
            let killed = elems.iter().filter(|x| h.apply(x).is_zero()).count();
            prop_assert_eq!(BigInt::from(killed), k.order().unwrap());
            let mut image: Vec<Vec<BigInt>> = elems.iter().map(|x| h.apply(x).into_coords()).collect();
            image.sort();
            image.dedup();
            prop_assert_eq!(elems.len(), killed * image.len());
        }

        #[test]
        fn classify_lift_roundtrip(h in hom_between()) {
            let zero = AbHom::zero(h.target(), &FgAbGroup::trivial());
            let hom = homology_at(&h, &zero).unwrap();
            for c in hom.group().elements(1000).unwrap() {
                prop_assert_eq!(hom.classify(&hom.lift(&c)).unwrap(), c);
            }
            for x in h.target().elements(1000).unwrap() {
                let back = hom.lift(&hom.classify(&x).unwrap());
                let diff = back.sub(&x);
                prop_assert!(h.preimage(&diff).is_some());
            }
        }

        #[test]
        fn normalize_idempotent(o in proptest::collection::vec(0u64..30, 0..6)) {
            let g = FgAbGroup::of(&o);
            let once = g.canonical();
            let twice = once.canonical();
            prop_assert_eq!(once.orders(), twice.orders());
            prop_assert_eq!(g.order(), once.order());
        }
    }
}
