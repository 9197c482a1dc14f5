use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::engine::{Mat, Res, Scalar, SparseRow};
use crate::error::{Error, Result};

/// Exact integer matrix, stored as sparse rows.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, BigInt)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, BigInt::one())]).collect();
        IntMatrix { rows: n, cols: n, data }
    }

    pub fn diagonal(entries: &[BigInt], rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, e) in entries.iter().enumerate().take(rows.min(cols)) {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Malformed("ragged matrix rows".into()));
        }
        Ok(Self::from_dense(rows.len(), cols, rows))
    }

    /// Like [`from_rows`](Self::from_rows) with an explicit column count, so
    /// that matrices with zero rows keep their shape.
    pub fn from_dense(rows: usize, cols: usize, dense: Vec<Vec<BigInt>>) -> Self {
        let data = dense
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect::<Vec<_>>()
            })
            .collect();
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Self::from_dense(
            rows.len(),
            cols,
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    pub fn from_sparse_rows(rows: usize, cols: usize, data: Vec<Vec<(usize, BigInt)>>) -> Self {
        assert_eq!(data.len(), rows);
        let data = data
            .into_iter()
            .map(|r| {
                let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
                for (j, x) in r {
                    assert!(j < cols, "column index out of range");
                    *acc.entry(j).or_default() += x;
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        IntMatrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut data = vec![Vec::new(); rows];
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    data[i].push((j, x.clone()));
                }
            }
        }
        IntMatrix { rows, cols: columns.len(), data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, BigInt)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols);
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => {
                if v.is_zero() {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    row.insert(k, (j, v));
                }
            }
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r {
                out[i][*j] = x.clone();
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r {
                data[*j].push((i, x.clone()));
            }
        }
        IntMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
                for (k, a) in r {
                    for (j, b) in &other.data[*k] {
                        *acc.entry(*j).or_default() += a * b;
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        IntMatrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols, "dimension mismatch in apply");
        self.data
            .iter()
            .map(|r| {
                let mut acc = BigInt::zero();
                for (j, a) in r {
                    if !x[*j].is_zero() {
                        acc += a * &x[*j];
                    }
                }
                acc
            })
            .collect()
    }

    fn zip_with(&self, other: &IntMatrix, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let zero = BigInt::zero();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, (Option<&BigInt>, Option<&BigInt>)> = BTreeMap::new();
                for (j, x) in a {
                    acc.entry(*j).or_default().0 = Some(x);
                }
                for (j, x) in b {
                    acc.entry(*j).or_default().1 = Some(x);
                }
                acc.into_iter()
                    .map(|(j, (x, y))| (j, f(x.unwrap_or(&zero), y.unwrap_or(&zero))))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        if k.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, x)| (*j, x * k)).collect())
            .collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> IntMatrix {
        self.scale(&-BigInt::one())
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(j, x)| (j + self.cols, x.clone())));
                r
            })
            .collect();
        IntMatrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, other: &IntMatrix) -> IntMatrix {
        let top = self.hstack(&IntMatrix::zeros(self.rows, other.cols));
        let bottom = IntMatrix::zeros(other.rows, self.cols).hstack(other);
        top.vstack(&bottom)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let mut data = vec![Vec::new(); self.rows * other.rows];
        for (i, ra) in self.data.iter().enumerate() {
            for (k, rb) in other.data.iter().enumerate() {
                let row = &mut data[i * other.rows + k];
                for (j, a) in ra {
                    for (l, b) in rb {
                        row.push((j * other.cols + l, a * b));
                    }
                }
            }
        }
        IntMatrix { rows: self.rows * other.rows, cols: self.cols * other.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        IntMatrix { rows: idx.len(), cols: self.cols, data: idx.iter().map(|&i| self.data[i].clone()).collect() }
    }

    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        self.transpose().select_rows(idx).transpose()
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.to_dense();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    pub(crate) fn to_sparse<S: Scalar>(&self) -> Res<Vec<SparseRow<S>>> {
        self.data
            .iter()
            .map(|r| r.iter().map(|(j, x)| Ok((*j, super::engine::convert::<S>(x)?))).collect())
            .collect()
    }

    pub(crate) fn to_mat<S: Scalar>(&self) -> Res<Mat<S>> {
        let mut m = Mat::zeros(self.rows, self.cols);
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r {
                m.set(i, *j, super::engine::convert::<S>(x)?);
            }
        }
        Ok(m)
    }

    pub(crate) fn from_mat<S: Scalar>(m: &Mat<S>) -> Self {
        let data = (0..m.rows)
            .map(|i| {
                (0..m.cols)
                    .filter(|&j| !m.at(i, j).is_nil())
                    .map(|j| (j, m.at(i, j).to_big()))
                    .collect()
            })
            .collect();
        IntMatrix { rows: m.rows, cols: m.cols, data }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows * self.cols > 400 {
            return write!(f, "IntMatrix({}x{}, nnz={})", self.rows, self.cols, self.nnz());
        }
        write!(f, "[")?;
        for (i, r) in self.to_dense().iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", s.join(" "))?;
        }
        write!(f, "]")
    }
}
