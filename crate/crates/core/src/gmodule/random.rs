//! Seeded random modules and short exact sequences for property suites.

use num_bigint::BigInt;
use rand::Rng;

use super::{GModule, GModuleHom};
use crate::abgroup::{FgAbGroup, IntMatrix};
use crate::group::FiniteGroup;

fn random_order<R: Rng>(rng: &mut R, max_torsion: u64, finite: bool) -> u64 {
    loop {
        let d = rng.gen_range(0..=max_torsion);
        if d >= 2 || (d == 0 && !finite) {
            return d;
        }
    }
}

fn mat_pow_mod(a: &IntMatrix, k: usize, d: u64) -> IntMatrix {
    let mut r = IntMatrix::identity(a.rows());
    for _ in 0..k {
        r = r.mul(a);
        if d != 0 {
            let dd = BigInt::from(d);
            let rows = (0..r.rows())
                .map(|i| r.row(i).iter().map(|(j, x)| (*j, ((x % &dd) + &dd) % &dd)).collect())
                .collect();
            r = IntMatrix::from_sparse_rows(r.rows(), r.cols(), rows);
        }
    }
    r
}

/// A random automorphism `A` of `(Z/d)^s` with `A^n = 1`, by rejection.
fn random_finite_order<R: Rng>(rng: &mut R, s: usize, d: u64, n: usize) -> Option<IntMatrix> {
    for _ in 0..400 {
        let rows: Vec<Vec<i64>> =
            (0..s).map(|_| (0..s).map(|_| rng.gen_range(0..d as i64)).collect()).collect();
        let a = IntMatrix::from_i64(&rows);
        if mat_pow_mod(&a, n, d) == mat_pow_mod(&IntMatrix::identity(s), 1, d) {
            return Some(a);
        }
    }
    None
}

/// Integer matrices of finite order dividing `n`, size at most `s`.
fn integral_finite_order(n: usize, s: usize) -> Vec<IntMatrix> {
    let mut out = vec![IntMatrix::identity(1)];
    if n % 2 == 0 {
        out.push(IntMatrix::from_i64(&[vec![-1]]));
    }
    if s >= 2 {
        if n % 2 == 0 {
            out.push(IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]]));
        }
        if n % 3 == 0 {
            out.push(IntMatrix::from_i64(&[vec![0, -1], vec![1, -1]]));
        }
        if n % 4 == 0 {
            out.push(IntMatrix::from_i64(&[vec![0, -1], vec![1, 0]]));
        }
        if n % 6 == 0 {
            out.push(IntMatrix::from_i64(&[vec![1, -1], vec![1, 0]]));
        }
    }
    if s >= 3 && n % 3 == 0 {
        out.push(IntMatrix::from_i64(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]));
    }
    out
}

fn random_block<R: Rng>(g: &FiniteGroup, rng: &mut R, budget: usize, max_torsion: u64, finite: bool) -> GModule {
    let d = random_order(rng, max_torsion, finite);
    let coeff = FgAbGroup::of(&[d]);
    let trivial = GModule::trivial(g, &coeff);
    match rng.gen_range(0..4) {
        0 => trivial,
        1 => {
            // sign character through an index-2 subgroup
            let halves: Vec<_> = g.subgroups().into_iter().filter(|h| h.index() == 2).collect();
            if halves.is_empty() {
                return trivial;
            }
            let h = &halves[rng.gen_range(0..halves.len())];
            let sign: Vec<i64> = g.elements().map(|x| if h.contains(x) { 1 } else { -1 }).collect();
            let z = GModule::sign_twisted(g, &sign).expect("sign is a character");
            z.tensor(&trivial).expect("same group")
        }
        2 => {
            let subs: Vec<_> = g.subgroups().into_iter().filter(|h| h.index() <= budget && h.index() > 1).collect();
            if subs.is_empty() {
                return trivial;
            }
            let h = &subs[rng.gen_range(0..subs.len())];
            GModule::permutation(h).tensor(&trivial).expect("same group")
        }
        _ => {
            let Some(s) = g.cyclic_generator() else { return trivial };
            let n = g.order();
            let size = rng.gen_range(1..=budget.min(2));
            let a = if d == 0 {
                let opts: Vec<IntMatrix> =
                    integral_finite_order(n, size).into_iter().filter(|m| m.rows() == size).collect();
                if opts.is_empty() {
                    return trivial;
                }
                opts[rng.gen_range(0..opts.len())].clone()
            } else {
                match random_finite_order(rng, size, d, n) {
                    Some(a) => a,
                    None => return trivial,
                }
            };
            let under = FgAbGroup::of(&vec![d; a.rows()]);
            GModule::from_generators(g, &under, &[(s, a)]).unwrap_or(trivial)
        }
    }
}

fn assemble<R: Rng>(g: &FiniteGroup, rng: &mut R, max_rank: usize, max_torsion: u64, finite: bool) -> GModule {
    let target = rng.gen_range(1..=max_rank.max(1));
    let mut m: Option<GModule> = None;
    loop {
        let used = m.as_ref().map_or(0, |x| x.rank());
        if used >= target {
            break;
        }
        let b = random_block(g, rng, target - used, max_torsion, finite);
        if used + b.rank() > max_rank.max(1) {
            continue;
        }
        m = Some(match m {
            None => b,
            Some(x) => x.direct_sum(&b).expect("same group"),
        });
    }
    m.expect("at least one block")
}

/// A random module of rank at most `max_rank` whose torsion orders are at
/// most `max_torsion`.
pub fn random_module<R: Rng>(g: &FiniteGroup, rng: &mut R, max_rank: usize, max_torsion: u64) -> GModule {
    assemble(g, rng, max_rank, max_torsion, false)
}

/// Like [`random_module`] with a finite underlying group.
pub fn random_finite_module<R: Rng>(g: &FiniteGroup, rng: &mut R, max_rank: usize, max_torsion: u64) -> GModule {
    assemble(g, rng, max_rank, max_torsion, true)
}

/// A random `0 -> A -> B -> C -> 0`: `A` is generated by the orbit of a
/// random element of `B` and `C` is the quotient.
pub fn random_short_exact<R: Rng>(
    g: &FiniteGroup,
    rng: &mut R,
    max_rank: usize,
    max_torsion: u64,
) -> (GModuleHom, GModuleHom) {
    let b = random_module(g, rng, max_rank, max_torsion);
    let coords: Vec<i64> = (0..b.rank()).map(|_| rng.gen_range(-3..=3)).collect();
    let x = b.underlying().element_i64(&coords).expect("length");
    let (_, incl) = b.submodule_generated(&[x]).expect("submodule");
    let (_, proj) = GModule::quotient_by(&incl).expect("quotient");
    (incl, proj)
}
