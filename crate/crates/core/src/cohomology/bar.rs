//! The standard (bar) resolution: inhomogeneous and homogeneous bases,
//! boundaries, the comparison isomorphism and the contracting homotopy.
//!
//! An `r`-tuple `(g_1, ..., g_r)` is stored at index `sum g_i n^(r-i)`, so
//! `g_1` is the most significant digit. Cochain and chain tables are flat:
//! entry `(tuple, j)` sits at `tuple * k + j` for a module of rank `k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::check_cap;
use crate::abgroup::{AbHom, IntMatrix};
use crate::error::Result;
use crate::gmodule::{repeat_group, GModule};
use crate::group::FiniteGroup;

pub fn tuple_count(n: usize, r: usize) -> usize {
    n.pow(r as u32)
}

pub fn encode(t: &[usize], n: usize) -> usize {
    t.iter().fold(0, |acc, &g| acc * n + g)
}

pub fn decode(mut idx: usize, n: usize, r: usize) -> Vec<usize> {
    let mut t = vec![0; r];
    for i in (0..r).rev() {
        t[i] = idx % n;
        idx /= n;
    }
    t
}

/// Faces of the inhomogeneous boundary of `(g_1..g_r)`: `(sign, left
/// multiplier, face)`; the first face carries the multiplier `g_1`.
fn faces(g: &FiniteGroup, t: &[usize]) -> Vec<(i64, usize, Vec<usize>)> {
    let r = t.len();
    let e = g.identity();
    let mut out = Vec::with_capacity(r + 1);
    out.push((1, t[0], t[1..].to_vec()));
    for i in 1..r {
        let mut f = t[..i - 1].to_vec();
        f.push(g.mul(t[i - 1], t[i]));
        f.extend_from_slice(&t[i + 1..]);
        out.push((if i % 2 == 0 { 1 } else { -1 }, e, f));
    }
    out.push((if r % 2 == 0 { 1 } else { -1 }, e, t[..r - 1].to_vec()));
    out
}

/// `d_r : C_r(G) -> C_(r-1)(G)` on the Z-basis `h (g_1..g_r)`, indexed as
/// the tuple `(h, g_1, ..., g_r)`.
pub fn bar_boundary(g: &FiniteGroup, r: usize) -> Result<IntMatrix> {
    assert!((1..=4).contains(&r), "bar boundary is provided for 1 <= r <= 4");
    let n = g.order();
    check_cap(tuple_count(n, r + 1))?;
    let rows_n = tuple_count(n, r);
    let mut cols: Vec<Vec<(usize, BigInt)>> = Vec::with_capacity(tuple_count(n, r + 1));
    for idx in 0..tuple_count(n, r + 1) {
        let full = decode(idx, n, r + 1);
        let h = full[0];
        let mut col = Vec::new();
        for (s, mult, face) in faces(g, &full[1..]) {
            let hh = g.mul(h, mult);
            let mut tup = vec![hh];
            tup.extend(face);
            col.push((encode(&tup, n), BigInt::from(s)));
        }
        cols.push(col);
    }
    Ok(from_cols(rows_n, cols))
}

fn from_cols(rows: usize, cols: Vec<Vec<(usize, BigInt)>>) -> IntMatrix {
    let ncols = cols.len();
    let mut data = vec![Vec::new(); rows];
    for (j, c) in cols.into_iter().enumerate() {
        for (i, x) in c {
            data[i].push((j, x));
        }
    }
    IntMatrix::from_sparse_rows(rows, ncols, data)
}

/// Augmentation `C_0(G) = Z[G] -> Z`.
pub fn augmentation(g: &FiniteGroup) -> IntMatrix {
    IntMatrix::from_i64(&[vec![1; g.order()]])
}

/// Homogeneous boundary `(h_0..h_r) -> sum (-1)^i (h_0..^h_i..h_r)`.
pub fn homogeneous_boundary(g: &FiniteGroup, r: usize) -> Result<IntMatrix> {
    assert!(r >= 1);
    let n = g.order();
    check_cap(tuple_count(n, r + 1))?;
    let mut data = vec![Vec::new(); tuple_count(n, r)];
    for idx in 0..tuple_count(n, r + 1) {
        let t = decode(idx, n, r + 1);
        for i in 0..=r {
            let mut f = t.clone();
            f.remove(i);
            data[encode(&f, n)].push((idx, BigInt::from(if i % 2 == 0 { 1 } else { -1 })));
        }
    }
    Ok(IntMatrix::from_sparse_rows(tuple_count(n, r), tuple_count(n, r + 1), data))
}

/// `Φ_r : h (g_1..g_r) -> (h, h g_1, h g_1 g_2, ...)` as a permutation
/// matrix on `n^(r+1)` basis vectors.
pub fn homogeneous_iso(g: &FiniteGroup, r: usize) -> Result<IntMatrix> {
    let n = g.order();
    check_cap(tuple_count(n, r + 1))?;
    let size = tuple_count(n, r + 1);
    let mut data = vec![Vec::new(); size];
    for idx in 0..size {
        data[encode(&to_homogeneous(g, &decode(idx, n, r + 1)), n)].push((idx, BigInt::one()));
    }
    Ok(IntMatrix::from_sparse_rows(size, size, data))
}

/// `(h, g_1, ..., g_r) -> (h, h g_1, h g_1 g_2, ...)`
pub fn to_homogeneous(g: &FiniteGroup, t: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(t.len());
    let mut acc = g.identity();
    for &x in t {
        acc = g.mul(acc, x);
        out.push(acc);
    }
    out
}

/// `(h_0, ..., h_r) -> h_0 (h_0^-1 h_1, ..., h_(r-1)^-1 h_r)`, returned as
/// `(h_0, g_1, ..., g_r)`.
pub fn from_homogeneous(g: &FiniteGroup, h: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(h.len());
    out.push(h[0]);
    for w in h.windows(2) {
        out.push(g.mul(g.inv(w[0]), w[1]));
    }
    out
}

/// `f_r(h_0..h_r) = (1, h_0, ..., h_r)`; `r = -1` gives `1 -> (1)`.
pub fn contracting_homotopy(g: &FiniteGroup, r: isize) -> Result<IntMatrix> {
    let n = g.order();
    let e = g.identity();
    if r < 0 {
        let mut m = IntMatrix::zeros(n, 1);
        m.set(e, 0, BigInt::one());
        return Ok(m);
    }
    let r = r as usize;
    check_cap(tuple_count(n, r + 2))?;
    let size = tuple_count(n, r + 1);
    let mut data = vec![Vec::new(); tuple_count(n, r + 2)];
    for idx in 0..size {
        data[e * size + idx].push((idx, BigInt::one()));
    }
    Ok(IntMatrix::from_sparse_rows(tuple_count(n, r + 2), size, data))
}

/// Coboundary `C^r(G, M) -> C^(r+1)(G, M)` as a homomorphism.
pub fn cochain_differential(m: &GModule, r: usize) -> Result<AbHom> {
    let g = m.group();
    let n = g.order();
    let k = m.rank();
    check_cap(tuple_count(n, r + 1) * k.max(1))?;
    let src = repeat_group(m.underlying(), tuple_count(n, r));
    let tgt = repeat_group(m.underlying(), tuple_count(n, r + 1));
    let mut rows: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); tgt.ngens()];
    for idx in 0..tuple_count(n, r + 1) {
        let t = decode(idx, n, r + 1);
        let base = idx * k;
        if r == 0 {
            // (d a)(g) = g a - a
            push_block(&mut rows, base, 0, m.action(t[0]).matrix(), 1);
            push_identity(&mut rows, base, 0, k, -1);
            continue;
        }
        for (pos, (s, mult, face)) in faces(g, &t).into_iter().enumerate() {
            let col = encode(&face, n) * k;
            if pos == 0 {
                push_block(&mut rows, base, col, m.action(mult).matrix(), s);
            } else {
                push_identity(&mut rows, base, col, k, s);
            }
        }
    }
    let mat = IntMatrix::from_sparse_rows(tgt.ngens(), src.ngens(), rows);
    Ok(AbHom::new_unchecked(src, tgt.clone(), crate::gmodule::reduce_rows(&mat, &tgt)))
}

/// Boundary `C_r ⊗ M -> C_(r-1) ⊗ M`:
/// `(g_1..g_r) ⊗ m -> (g_2..g_r) ⊗ g_1^-1 m + sum (-1)^i (..g_i g_(i+1)..) ⊗ m + (-1)^r (g_1..g_(r-1)) ⊗ m`.
pub fn chain_differential(m: &GModule, r: usize) -> Result<AbHom> {
    assert!(r >= 1);
    let g = m.group();
    let n = g.order();
    let k = m.rank();
    check_cap(tuple_count(n, r) * k.max(1))?;
    let src = repeat_group(m.underlying(), tuple_count(n, r));
    let tgt = repeat_group(m.underlying(), tuple_count(n, r - 1));
    let mut rows: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); tgt.ngens()];
    for idx in 0..tuple_count(n, r) {
        let t = decode(idx, n, r);
        let col = idx * k;
        if r == 1 {
            push_block(&mut rows, 0, col, m.action(g.inv(t[0])).matrix(), 1);
            push_identity(&mut rows, 0, col, k, -1);
            continue;
        }
        for (pos, (s, mult, face)) in faces(g, &t).into_iter().enumerate() {
            let row = encode(&face, n) * k;
            if pos == 0 {
                push_block(&mut rows, row, col, m.action(g.inv(mult)).matrix(), s);
            } else {
                push_identity(&mut rows, row, col, k, s);
            }
        }
    }
    let mat = IntMatrix::from_sparse_rows(tgt.ngens(), src.ngens(), rows);
    Ok(AbHom::new_unchecked(src, tgt.clone(), crate::gmodule::reduce_rows(&mat, &tgt)))
}

fn push_block(rows: &mut [Vec<(usize, BigInt)>], r0: usize, c0: usize, a: &IntMatrix, sign: i64) {
    for i in 0..a.rows() {
        for (j, x) in a.row(i) {
            rows[r0 + i].push((c0 + j, x * sign));
        }
    }
}

fn push_identity(rows: &mut [Vec<(usize, BigInt)>], r0: usize, c0: usize, k: usize, sign: i64) {
    for i in 0..k {
        rows[r0 + i].push((c0 + i, BigInt::from(sign)));
    }
}

/// Evaluates the coboundary on a cochain table without building a matrix.
pub fn coboundary_table(m: &GModule, r: usize, table: &[BigInt]) -> Vec<BigInt> {
    let g = m.group();
    let n = g.order();
    let k = m.rank();
    let mut out = vec![BigInt::zero(); tuple_count(n, r + 1) * k];
    for idx in 0..tuple_count(n, r + 1) {
        let t = decode(idx, n, r + 1);
        let slot = &mut out[idx * k..(idx + 1) * k];
        if r == 0 {
            let ga = m.act_coords(t[0], &table[..k]);
            for j in 0..k {
                slot[j] = &ga[j] - &table[j];
            }
            continue;
        }
        for (pos, (s, mult, face)) in faces(g, &t).into_iter().enumerate() {
            let f = encode(&face, n) * k;
            let v = &table[f..f + k];
            if pos == 0 {
                let gv = m.act_coords(mult, v);
                for j in 0..k {
                    slot[j] += &gv[j] * s;
                }
            } else {
                for j in 0..k {
                    slot[j] += &v[j] * s;
                }
            }
        }
    }
    let under = repeat_group(m.underlying(), tuple_count(n, r + 1));
    under.reduce(&mut out);
    out
}

/// Evaluates the chain boundary on a chain table.
pub fn boundary_table(m: &GModule, r: usize, table: &[BigInt]) -> Vec<BigInt> {
    assert!(r >= 1);
    let g = m.group();
    let n = g.order();
    let k = m.rank();
    let mut out = vec![BigInt::zero(); tuple_count(n, r - 1) * k];
    for idx in 0..tuple_count(n, r) {
        let v = &table[idx * k..(idx + 1) * k];
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        let t = decode(idx, n, r);
        if r == 1 {
            let gv = m.act_coords(g.inv(t[0]), v);
            for j in 0..k {
                out[j] += &gv[j] - &v[j];
            }
            continue;
        }
        for (pos, (s, mult, face)) in faces(g, &t).into_iter().enumerate() {
            let f = encode(&face, n) * k;
            if pos == 0 {
                let gv = m.act_coords(g.inv(mult), v);
                for j in 0..k {
                    out[f + j] += &gv[j] * s;
                }
            } else {
                for j in 0..k {
                    out[f + j] += &v[j] * s;
                }
            }
        }
    }
    let under = repeat_group(m.underlying(), tuple_count(n, r - 1));
    under.reduce(&mut out);
    out
}
