//! Integer elimination kernels shared by every abelian-group computation.
//!
//! All routines are generic over [`Scalar`] so they can run on checked `i64`
//! first and be replayed on `BigInt` when an intermediate value leaves the
//! machine range. An overflow is reported, never wrapped.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) type Res<T> = Result<T, Overflow>;

pub(crate) trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn nil() -> Self;
    fn unit() -> Self;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_nil(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn abs_cmp(&self, other: &Self) -> Ordering;
    fn plus(&self, o: &Self) -> Res<Self>;
    fn minus(&self, o: &Self) -> Res<Self>;
    fn times(&self, o: &Self) -> Res<Self>;
    fn negated(&self) -> Res<Self>;
    /// Floor division; `o` is nonzero.
    fn fdiv(&self, o: &Self) -> Res<Self>;
    /// Remainder in `[0, |o|)`; `o` is nonzero.
    fn fmod(&self, o: &Self) -> Res<Self>;
    fn gcd_with(&self, o: &Self) -> Res<Self>;

    fn is_unit(&self) -> bool {
        *self == Self::unit()
    }
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Res<Self> {
        self.minus(&q.times(b)?)
    }
}

impl Scalar for i64 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        // keep a margin so that negation and abs never overflow
        v.to_i64().filter(|x| *x != i64::MIN)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn plus(&self, o: &Self) -> Res<Self> {
        self.checked_add(*o).filter(|x| *x != i64::MIN).ok_or(Overflow)
    }
    fn minus(&self, o: &Self) -> Res<Self> {
        self.checked_sub(*o).filter(|x| *x != i64::MIN).ok_or(Overflow)
    }
    fn times(&self, o: &Self) -> Res<Self> {
        self.checked_mul(*o).filter(|x| *x != i64::MIN).ok_or(Overflow)
    }
    fn negated(&self) -> Res<Self> {
        self.checked_neg().ok_or(Overflow)
    }
    fn fdiv(&self, o: &Self) -> Res<Self> {
        Ok(Integer::div_floor(self, o))
    }
    fn fmod(&self, o: &Self) -> Res<Self> {
        Ok(self.rem_euclid(*o))
    }
    fn gcd_with(&self, o: &Self) -> Res<Self> {
        Ok(Integer::gcd(self, o))
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Res<Self> {
        let p = q.checked_mul(*b).ok_or(Overflow)?;
        self.checked_sub(p).filter(|x| *x != i64::MIN).ok_or(Overflow)
    }
}

impl Scalar for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn plus(&self, o: &Self) -> Res<Self> {
        Ok(self + o)
    }
    fn minus(&self, o: &Self) -> Res<Self> {
        Ok(self - o)
    }
    fn times(&self, o: &Self) -> Res<Self> {
        Ok(self * o)
    }
    fn negated(&self) -> Res<Self> {
        Ok(-self)
    }
    fn fdiv(&self, o: &Self) -> Res<Self> {
        Ok(Integer::div_floor(self, o))
    }
    fn fmod(&self, o: &Self) -> Res<Self> {
        Ok(Integer::mod_floor(self, &o.abs()))
    }
    fn gcd_with(&self, o: &Self) -> Res<Self> {
        Ok(Integer::gcd(self, o))
    }
}

/// Runs `f` on checked machine integers and replays it on `BigInt` if that
/// overflows.
pub(crate) fn with_fallback<T>(
    fast: impl FnOnce() -> Res<T>,
    exact: impl FnOnce() -> Res<T>,
) -> T {
    match fast() {
        Ok(v) => v,
        Err(Overflow) => exact().expect("BigInt arithmetic cannot overflow"),
    }
}

pub(crate) fn convert<S: Scalar>(v: &BigInt) -> Res<S> {
    S::from_big(v).ok_or(Overflow)
}

/// Dense row-major matrix used inside the kernels.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Mat<S> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![S::nil(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::unit();
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src], restricted to columns `from..`
    pub fn row_axpy(&mut self, dst: usize, q: &S, src: usize, from: usize) -> Res<()> {
        if q.is_nil() {
            return Ok(());
        }
        let c = self.cols;
        for j in from..c {
            let s = self.data[src * c + j].clone();
            if s.is_nil() {
                continue;
            }
            let d = &mut self.data[dst * c + j];
            *d = d.sub_mul(q, &s)?;
        }
        Ok(())
    }

    /// col[dst] -= q * col[src], restricted to rows `from..`
    pub fn col_axpy(&mut self, dst: usize, q: &S, src: usize, from: usize) -> Res<()> {
        if q.is_nil() {
            return Ok(());
        }
        let c = self.cols;
        for i in from..self.rows {
            let s = self.data[i * c + src].clone();
            if s.is_nil() {
                continue;
            }
            let d = &mut self.data[i * c + dst];
            *d = d.sub_mul(q, &s)?;
        }
        Ok(())
    }

    /// Entries of row `r` from column `from` on, reduced into `[0, m)`.
    pub fn reduce_row(&mut self, r: usize, from: usize, m: &S) -> Res<()> {
        let c = self.cols;
        for x in &mut self.data[r * c + from..(r + 1) * c] {
            if !x.is_nil() {
                *x = x.fmod(m)?;
            }
        }
        Ok(())
    }

    pub fn reduce_col(&mut self, col: usize, from: usize, m: &S) -> Res<()> {
        let c = self.cols;
        for i in from..self.rows {
            let x = &mut self.data[i * c + col];
            if !x.is_nil() {
                *x = x.fmod(m)?;
            }
        }
        Ok(())
    }

    pub fn negate_row(&mut self, r: usize) -> Res<()> {
        let c = self.cols;
        for j in 0..c {
            let v = self.data[r * c + j].negated()?;
            self.data[r * c + j] = v;
        }
        Ok(())
    }

    pub fn negate_col(&mut self, col: usize) -> Res<()> {
        let c = self.cols;
        for i in 0..self.rows {
            let v = self.data[i * c + col].negated()?;
            self.data[i * c + col] = v;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct SnfFlags {
    pub u: bool,
    pub uinv: bool,
    pub v: bool,
}

#[derive(Debug)]
pub(crate) struct SnfOut<S> {
    /// Diagonal entries `d_1 | d_2 | ...`, length `min(rows, cols)`.
    pub diag: Vec<S>,
    pub u: Option<Mat<S>>,
    pub uinv: Option<Mat<S>>,
    pub v: Option<Mat<S>>,
}

struct SnfCalc<S> {
    a: Mat<S>,
    u: Option<Mat<S>>,
    uinv: Option<Mat<S>>,
    v: Option<Mat<S>>,
    modulus: Option<S>,
}

impl<S: Scalar> SnfCalc<S> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(ui) = &mut self.uinv {
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    /// row[dst] -= q row[src]
    fn row_op(&mut self, dst: usize, q: &S, src: usize, from: usize) -> Res<()> {
        self.a.row_axpy(dst, q, src, from)?;
        if let Some(m) = &self.modulus {
            self.a.reduce_row(dst, from, m)?;
        }
        if let Some(u) = &mut self.u {
            u.row_axpy(dst, q, src, 0)?;
            if let Some(m) = &self.modulus {
                u.reduce_row(dst, 0, m)?;
            }
        }
        if let Some(ui) = &mut self.uinv {
            // inverse of R_dst -= q R_src is C_src += q C_dst
            let nq = q.negated()?;
            ui.col_axpy(src, &nq, dst, 0)?;
            if let Some(m) = &self.modulus {
                ui.reduce_col(src, 0, m)?;
            }
        }
        Ok(())
    }

    /// col[dst] -= q col[src]
    fn col_op(&mut self, dst: usize, q: &S, src: usize, from: usize) -> Res<()> {
        self.a.col_axpy(dst, q, src, from)?;
        if let Some(m) = &self.modulus {
            self.a.reduce_col(dst, from, m)?;
        }
        if let Some(v) = &mut self.v {
            v.col_axpy(dst, q, src, 0)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) -> Res<()> {
        self.a.negate_row(r)?;
        if let Some(u) = &mut self.u {
            u.negate_row(r)?;
        }
        if let Some(ui) = &mut self.uinv {
            ui.negate_col(r)?;
        }
        Ok(())
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = self.a.at(i, j);
                if x.is_nil() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if x.abs_cmp(self.a.at(bi, bj)) == Ordering::Less {
                            best = Some((i, j));
                        }
                    }
                }
                if self.a.at(i, j).abs_cmp(&S::unit()) == Ordering::Equal {
                    return Some((i, j));
                }
            }
        }
        best
    }

    fn run(&mut self) -> Res<()> {
        let (m, n) = (self.a.rows, self.a.cols);
        let k = m.min(n);
        for t in 0..k {
            let Some((pi, pj)) = self.find_pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                // clear column t
                for i in t + 1..m {
                    while !self.a.at(i, t).is_nil() {
                        let q = self.a.at(i, t).fdiv(self.a.at(t, t))?;
                        self.row_op(i, &q, t, t)?;
                        if !self.a.at(i, t).is_nil() {
                            self.swap_rows(t, i);
                        }
                    }
                }
                // clear row t
                let mut dirty = false;
                for j in t + 1..n {
                    while !self.a.at(t, j).is_nil() {
                        let q = self.a.at(t, j).fdiv(self.a.at(t, t))?;
                        self.col_op(j, &q, t, t)?;
                        if !self.a.at(t, j).is_nil() {
                            self.swap_cols(t, j);
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    // a column swap may have refilled column t
                    continue;
                }
                // divisibility of the remaining block by the pivot
                let p = self.a.at(t, t).clone();
                let mut bad = None;
                'scan: for i in t + 1..m {
                    for j in t + 1..n {
                        let x = self.a.at(i, j);
                        if !x.is_nil() && !x.fmod(&p)?.is_nil() {
                            bad = Some(i);
                            break 'scan;
                        }
                    }
                }
                match bad {
                    Some(i) => {
                        // row_t += row_i
                        let mone = S::unit().negated()?;
                        self.row_op(t, &mone, i, t)?;
                    }
                    None => break,
                }
            }
            if let Some(m) = &self.modulus {
                // absorb the implicit column m e_t
                let g = self.a.at(t, t).gcd_with(m)?;
                self.a.set(t, t, g);
            }
            if self.a.at(t, t).is_neg() {
                self.negate_row(t)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn snf<S: Scalar>(a: Mat<S>, flags: SnfFlags) -> Res<SnfOut<S>> {
    let (m, n) = (a.rows, a.cols);
    let mut calc = SnfCalc {
        a,
        u: flags.u.then(|| Mat::identity(m)),
        uinv: flags.uinv.then(|| Mat::identity(m)),
        v: flags.v.then(|| Mat::identity(n)),
        modulus: None,
    };
    calc.run()?;
    let diag = (0..m.min(n)).map(|i| calc.a.at(i, i).clone()).collect();
    Ok(SnfOut { diag, u: calc.u, uinv: calc.uinv, v: calc.v })
}

/// Smith form of the cokernel of `[a | modulus I]`, with every entry kept in
/// `[0, modulus)`. The returned `diag` has one entry per row and `u`, `uinv`
/// are only meaningful modulo `modulus`; `v` is not tracked.
pub(crate) fn snf_mod<S: Scalar>(mut a: Mat<S>, flags: SnfFlags, modulus: &S) -> Res<SnfOut<S>> {
    let (m, n) = (a.rows, a.cols);
    for i in 0..m {
        a.reduce_row(i, 0, modulus)?;
    }
    let mut calc = SnfCalc {
        a,
        u: flags.u.then(|| Mat::identity(m)),
        uinv: flags.uinv.then(|| Mat::identity(m)),
        v: None,
        modulus: Some(modulus.clone()),
    };
    calc.run()?;
    let diag = (0..m)
        .map(|i| {
            let d = if i < n { calc.a.at(i, i).clone() } else { S::nil() };
            if d.is_nil() {
                modulus.clone()
            } else {
                d
            }
        })
        .collect();
    Ok(SnfOut { diag, u: calc.u, uinv: calc.uinv, v: None })
}

/// Sparse row: (column, coefficient), columns strictly increasing.
pub(crate) type SparseRow<S> = Vec<(usize, S)>;

fn dot<S: Scalar>(row: &[(usize, S)], col: &[S]) -> Res<S> {
    let mut acc = S::nil();
    for (j, c) in row {
        let x = &col[*j];
        if !x.is_nil() {
            acc = acc.plus(&c.times(x)?)?;
        }
    }
    Ok(acc)
}

/// Generators (as columns) of a sublattice of `Z^dim`, refined one linear
/// constraint at a time. The vectors `o_i e_i` for the nonzero `moduli` are
/// implicit generators: every constraint must vanish on them, and column
/// entries are kept reduced modulo them.
#[derive(Clone, Debug)]
pub(crate) struct Lattice<S> {
    pub cols: Vec<Vec<S>>,
    moduli: Vec<S>,
}

impl<S: Scalar> Lattice<S> {
    pub fn full_mod(moduli: Vec<S>) -> Self {
        let dim = moduli.len();
        let cols = (0..dim)
            .filter(|&i| !moduli[i].is_unit())
            .map(|i| {
                let mut c = vec![S::nil(); dim];
                c[i] = S::unit();
                c
            })
            .collect();
        Lattice { cols, moduli }
    }

    /// All generators, the implicit ones included.
    pub fn generators(mut self) -> Vec<Vec<S>> {
        let dim = self.moduli.len();
        for (i, o) in self.moduli.iter().enumerate() {
            if !o.is_nil() {
                let mut c = vec![S::nil(); dim];
                c[i] = o.clone();
                self.cols.push(c);
            }
        }
        self.cols
    }

    fn reduce(&self, c: &mut [S]) -> Res<()> {
        for (x, o) in c.iter_mut().zip(&self.moduli) {
            if !o.is_nil() && !x.is_nil() {
                *x = x.fmod(o)?;
            }
        }
        Ok(())
    }

    /// Keeps only the vectors `x` with `row . x == 0` (modulus zero) or
    /// `row . x == 0 mod modulus`.
    pub fn impose(&mut self, row: &[(usize, S)], modulus: &S) -> Res<()> {
        let exact = modulus.is_nil();
        if !exact && modulus.is_unit() {
            return Ok(());
        }
        let mut vals: Vec<S> = Vec::with_capacity(self.cols.len());
        for c in &self.cols {
            let mut v = dot(row, c)?;
            if !exact {
                v = v.fmod(modulus)?;
            }
            vals.push(v);
        }
        let touched: Vec<usize> = (0..vals.len()).filter(|&j| !vals[j].is_nil()).collect();
        if touched.is_empty() {
            return Ok(());
        }
        let mut live = touched.clone();
        // Euclid across the live columns until a single one carries the value
        while live.len() > 1 {
            let p = *live
                .iter()
                .min_by(|a, b| vals[**a].abs_cmp(&vals[**b]))
                .expect("nonempty");
            let mut next = vec![p];
            for &j in &live {
                if j == p {
                    continue;
                }
                let q = vals[j].fdiv(&vals[p])?;
                let (src, dst) = two_mut(&mut self.cols, p, j);
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_nil() {
                        *d = d.sub_mul(&q, s)?;
                    }
                }
                let mut nv = vals[j].sub_mul(&q, &vals[p])?;
                if !exact {
                    nv = nv.fmod(modulus)?;
                }
                vals[j] = nv;
                if !vals[j].is_nil() {
                    next.push(j);
                }
            }
            live = next;
        }
        let p = live[0];
        if !exact {
            let g = vals[p].gcd_with(modulus)?;
            let scale = modulus.fdiv(&g)?;
            if !scale.is_unit() {
                for x in self.cols[p].iter_mut() {
                    if !x.is_nil() {
                        *x = x.times(&scale)?;
                    }
                }
            }
        }
        let mut dead = Vec::new();
        if self.moduli.iter().any(|o| !o.is_nil()) {
            for &j in &touched {
                let mut c = std::mem::take(&mut self.cols[j]);
                self.reduce(&mut c)?;
                if c.iter().all(|x| x.is_nil()) {
                    dead.push(j);
                }
                self.cols[j] = c;
            }
        }
        if exact && !dead.contains(&p) {
            dead.push(p);
        }
        dead.sort_unstable();
        for j in dead.into_iter().rev() {
            self.cols.swap_remove(j);
        }
        Ok(())
    }
}

fn two_mut<T>(v: &mut [T], a: usize, b: usize) -> (&T, &mut T) {
    assert_ne!(a, b);
    if a < b {
        let (l, r) = v.split_at_mut(b);
        (&l[a], &mut r[0])
    } else {
        let (l, r) = v.split_at_mut(a);
        (&r[0], &mut l[b])
    }
}

/// Lattice basis in column echelon form: pivot rows strictly increase and
/// every column vanishes above its pivot. Entries left of a pivot are reduced
/// modulo that pivot.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<S> {
    pub dim: usize,
    pub pivots: Vec<usize>,
    pub cols: Vec<Vec<S>>,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(dim: usize, mut pool: Vec<Vec<S>>) -> Res<Self> {
        let mut pivots = Vec::new();
        let mut done: Vec<Vec<S>> = Vec::new();
        pool.retain(|c| c.iter().any(|x| !x.is_nil()));
        for row in 0..dim {
            if pool.is_empty() {
                break;
            }
            let mut live: Vec<usize> = (0..pool.len()).filter(|&j| !pool[j][row].is_nil()).collect();
            if live.is_empty() {
                continue;
            }
            while live.len() > 1 {
                let p = *live
                    .iter()
                    .min_by(|a, b| pool[**a][row].abs_cmp(&pool[**b][row]))
                    .expect("nonempty");
                let mut next = vec![p];
                for &j in &live {
                    if j == p {
                        continue;
                    }
                    let q = pool[j][row].fdiv(&pool[p][row])?;
                    let (src, dst) = two_mut(&mut pool, p, j);
                    for (d, s) in dst.iter_mut().zip(src.iter()).skip(row) {
                        if !s.is_nil() {
                            *d = d.sub_mul(&q, s)?;
                        }
                    }
                    if !pool[j][row].is_nil() {
                        next.push(j);
                    }
                }
                live = next;
            }
            let mut piv = pool.swap_remove(live[0]);
            if piv[row].is_neg() {
                for x in piv.iter_mut() {
                    *x = x.negated()?;
                }
            }
            for c in done.iter_mut() {
                if c[row].is_nil() {
                    continue;
                }
                let q = c[row].fdiv(&piv[row])?;
                if q.is_nil() {
                    continue;
                }
                for (d, s) in c.iter_mut().zip(piv.iter()).skip(row) {
                    if !s.is_nil() {
                        *d = d.sub_mul(&q, s)?;
                    }
                }
            }
            pivots.push(row);
            done.push(piv);
            pool.retain(|c| c.iter().any(|x| !x.is_nil()));
        }
        debug_assert!(pool.is_empty());
        Ok(Echelon { dim, pivots, cols: done })
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    /// Coordinates of `x` in this basis, or `None` when `x` is not in the
    /// lattice.
    pub fn solve(&self, x: &[S]) -> Res<Option<Vec<S>>> {
        let mut x = x.to_vec();
        let mut coords = Vec::with_capacity(self.cols.len());
        let mut next_pivot = 0;
        for row in 0..self.dim {
            if next_pivot < self.pivots.len() && self.pivots[next_pivot] == row {
                let col = &self.cols[next_pivot];
                if x[row].is_nil() {
                    coords.push(S::nil());
                } else {
                    if !x[row].fmod(&col[row])?.is_nil() {
                        return Ok(None);
                    }
                    let q = x[row].fdiv(&col[row])?;
                    for (d, s) in x.iter_mut().zip(col.iter()).skip(row) {
                        if !s.is_nil() {
                            *d = d.sub_mul(&q, s)?;
                        }
                    }
                    coords.push(q);
                }
                next_pivot += 1;
            } else if !x[row].is_nil() {
                return Ok(None);
            }
        }
        Ok(Some(coords))
    }

    pub fn combine(&self, coords: &[S]) -> Res<Vec<S>> {
        let mut out = vec![S::nil(); self.dim];
        for (c, col) in coords.iter().zip(&self.cols) {
            if c.is_nil() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(col.iter()) {
                if !x.is_nil() {
                    *o = o.plus(&c.times(x)?)?;
                }
            }
        }
        Ok(out)
    }
}
