//! Cup products at the bidegrees with closed formulas.

use num_bigint::BigInt;
use num_traits::Zero;

use super::bar::{encode, tuple_count};
use super::{tate, CohGroup, Space};
use crate::abgroup::ElementOf;
use crate::error::{Error, Result};
use crate::gmodule::{tensor_elements, GModule};

/// A class in a computed group.
#[derive(Clone, Debug)]
pub struct Class {
    pub group: CohGroup,
    pub value: ElementOf,
}

impl Class {
    pub fn new(group: &CohGroup, value: ElementOf) -> Result<Self> {
        if !value.group().same_presentation(group.group()) {
            return Err(Error::GroupMismatch);
        }
        Ok(Class { group: group.clone(), value })
    }

    /// The class of a representative table.
    pub fn of_table(group: &CohGroup, table: &[BigInt]) -> Result<Self> {
        Ok(Class { group: group.clone(), value: group.classify_table(table)? })
    }

    pub fn degree(&self) -> i32 {
        self.group.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn representative(&self) -> Vec<BigInt> {
        self.group.lift_table(&self.value)
    }
}

fn value_of(m: &GModule, t: &[BigInt], i: usize) -> ElementOf {
    let k = m.rank();
    m.underlying().element(t[i * k..(i + 1) * k].to_vec()).expect("length")
}

/// `a ⌣ b` in `H_T^(r+s)(G, M ⊗ N)` for `(r, s)` one of `(p, 0)` with
/// `-2 <= p <= 2`, `(1, -1)`, `(1, -2)` and `(2, -2)`. The last two need
/// `N = Z` with trivial action; a chain `τ ⊗ 1` in degree -2 stands for the
/// class of `τ^-1 - 1` in `I_G / I_G^2`.
pub fn cup(a: &Class, b: &Class) -> Result<Class> {
    let (r, s) = (a.degree(), b.degree());
    let (m, nmod) = (a.group.module(), b.group.module());
    if m.group() != nmod.group() {
        return Err(Error::GroupMismatch);
    }
    let supported = (s == 0 && (-2..=2).contains(&r)) || (r == 1 && s == -1) || (s == -2 && (r == 1 || r == 2));
    if !supported {
        return Err(Error::UnsupportedBidegree(r, s));
    }
    let g = m.group();
    let n = g.order();
    let mn = m.tensor(nmod)?;
    let target = tate(&mn, r + s)?;
    let ta = a.representative();
    let tb = b.representative();
    let mut out: Vec<BigInt> = Vec::new();
    if s == 0 {
        let y = value_of(nmod, &tb, 0);
        let count = match a.group.space() {
            Space::Cochains(d) | Space::Chains(d) => tuple_count(n, d),
        };
        for i in 0..count {
            out.extend(tensor_elements(&value_of(m, &ta, i), &y).into_coords());
        }
    } else if s == -1 {
        // sum over τ of a(τ) ⊗ τ b
        let mut acc = mn.underlying().zero();
        let y = value_of(nmod, &tb, 0);
        for t in g.elements() {
            acc = acc.add(&tensor_elements(&value_of(m, &ta, t), &nmod.act(t, &y)));
        }
        out = acc.into_coords();
    } else {
        if !(nmod.rank() == 1 && nmod.underlying().orders()[0].is_zero() && nmod.is_trivial_action()) {
            return Err(Error::UnsupportedBidegree(r, s));
        }
        let z1 = nmod.underlying().gen(0);
        let mut acc = m.underlying().zero();
        for t in g.elements() {
            let coeff = &tb[t];
            if coeff.is_zero() {
                continue;
            }
            let ti = g.inv(t);
            let v = if r == 1 {
                value_of(m, &ta, ti)
            } else {
                // Σ_ρ φ(ρ, τ^-1)
                g.elements().fold(m.underlying().zero(), |s, rho| s.add(&value_of(m, &ta, encode(&[rho, ti], n))))
            };
            acc = acc.add(&v.scale(coeff));
        }
        out = tensor_elements(&acc, &z1).into_coords();
    }
    Class::of_table(&target, &out)
}
