//! Finite groups as multiplication tables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::abgroup::FgAbGroup;
use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[derive(PartialEq, Eq)]
struct Table {
    n: usize,
    mult: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

/// A finite group; elements are the indices `0..order`.
#[derive(Clone)]
pub struct FiniteGroup {
    t: Arc<Table>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t) || self.t == other.t
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order())
    }
}

impl FiniteGroup {
    /// Validates the table: closure, identity, inverses, associativity.
    pub fn from_table(mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("order {n} exceeds the cap of {MAX_ORDER}")));
        }
        if mult.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table is not n x n over 0..n".into()));
        }
        let flat: Vec<usize> = mult.concat();
        let at = |a: usize, b: usize| flat[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { t: Arc::new(Table { n, mult: flat, identity, inv }) })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order 1 is valid")
    }

    /// `Z/n`, generator at index 1.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        Self::from_table((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect())
    }

    pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<Self> {
        let (n1, n2) = (g1.order(), g2.order());
        let table = (0..n1 * n2)
            .map(|x| {
                (0..n1 * n2)
                    .map(|y| g1.mul(x / n2, y / n2) * n2 + g2.mul(x % n2, y % n2))
                    .collect()
            })
            .collect();
        Self::from_table(table)
    }

    /// Permutations of {0,1,2} in lexicographic order, composed as functions.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| idx([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        Self::from_table(table).expect("S3 table is valid")
    }

    pub fn klein() -> Self {
        let z2 = Self::cyclic(2).expect("valid");
        Self::direct_product(&z2, &z2).expect("valid")
    }

    /// Parses `cyclic:n`, `s3`, `klein`, `trivial`, or products joined by `x`.
    pub fn named(spec: &str) -> Result<Self> {
        let parts: Vec<&str> = spec.split('x').map(str::trim).collect();
        if parts.len() > 1 {
            let mut g = Self::named(parts[0])?;
            for p in &parts[1..] {
                g = Self::direct_product(&g, &Self::named(p)?)?;
            }
            return Ok(g);
        }
        match spec.trim() {
            "s3" | "S3" => Ok(Self::symmetric3()),
            "klein" | "v4" => Ok(Self::klein()),
            "trivial" => Ok(Self::trivial()),
            s => {
                let n = s
                    .strip_prefix("cyclic:")
                    .or_else(|| s.strip_prefix("Z/"))
                    .ok_or_else(|| Error::Parse(format!("unknown group `{s}`")))?;
                let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad order in `{s}`")))?;
                Self::cyclic(n)
            }
        }
    }

    pub fn order(&self) -> usize {
        self.t.n
    }

    pub fn identity(&self) -> usize {
        self.t.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.t.mult[a * self.t.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.t.inv[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.t.n
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.t.mult.chunks(self.t.n).map(|r| r.to_vec()).collect()
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity(), |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A generator when the group is cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        self.elements().find(|&a| self.element_order(a) == self.order())
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic_generator().is_some()
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(self.mul(b, a)))
    }

    pub fn generated_by(&self, gens: &[usize]) -> Subgroup {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.identity()]);
        let mut frontier: Vec<usize> = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup::new(self, set.into_iter().collect()).expect("closure is a subgroup")
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let comms: BTreeSet<usize> =
            self.elements().flat_map(|a| self.elements().map(move |b| (a, b))).map(|(a, b)| self.commutator(a, b)).collect();
        self.generated_by(&comms.into_iter().collect::<Vec<_>>())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::new(self, self.elements().collect()).expect("whole group")
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::new(self, vec![self.identity()]).expect("trivial subgroup")
    }

    /// Every subgroup, ordered by size then elements.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let cyclic: Vec<Vec<usize>> = self.elements().map(|a| self.generated_by(&[a]).elements).collect();
        let mut frontier: Vec<Vec<usize>> = Vec::new();
        for c in cyclic.iter() {
            if found.insert(c.clone()) {
                frontier.push(c.clone());
            }
        }
        while let Some(h) = frontier.pop() {
            for c in &cyclic {
                let mut gens = h.clone();
                gens.extend(c.iter().copied());
                let j = self.generated_by(&gens).elements;
                if found.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        let mut subs: Vec<Vec<usize>> = found.into_iter().collect();
        subs.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        subs.into_iter().map(|e| Subgroup::new(self, e).expect("closed")).collect()
    }

    /// A Sylow `p`-subgroup.
    pub fn sylow_subgroup(&self, p: usize) -> Subgroup {
        let mut pa = 1;
        while self.order() % (pa * p) == 0 {
            pa *= p;
        }
        self.subgroups().into_iter().find(|h| h.order() == pa).expect("Sylow subgroups exist")
    }
}

/// A subgroup `H` of a finite group `G` with left and right coset
/// representatives.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: FiniteGroup,
    elements: Vec<usize>,
    position: Vec<Option<usize>>,
    left_reps: Vec<usize>,
    right_reps: Vec<usize>,
}

impl Subgroup {
    /// Checks closure under products and inverses.
    pub fn new(parent: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let mut position = vec![None; parent.order()];
        for (k, &e) in elements.iter().enumerate() {
            if e >= parent.order() {
                return Err(Error::InvalidGroup(format!("element {e} out of range")));
            }
            position[e] = Some(k);
        }
        if position[parent.identity()].is_none() {
            return Err(Error::InvalidGroup("subgroup misses the identity".into()));
        }
        for &a in &elements {
            if position[parent.inv(a)].is_none() {
                return Err(Error::InvalidGroup("subgroup not closed under inverses".into()));
            }
            for &b in &elements {
                if position[parent.mul(a, b)].is_none() {
                    return Err(Error::InvalidGroup("subgroup not closed under products".into()));
                }
            }
        }
        let mut left_reps = Vec::new();
        let mut right_reps = Vec::new();
        let mut seen_l = vec![false; parent.order()];
        let mut seen_r = vec![false; parent.order()];
        for g in parent.elements() {
            if !seen_l[g] {
                left_reps.push(g);
                for &h in &elements {
                    seen_l[parent.mul(g, h)] = true;
                }
            }
            if !seen_r[g] {
                right_reps.push(g);
                for &h in &elements {
                    seen_r[parent.mul(h, g)] = true;
                }
            }
        }
        Ok(Subgroup { parent: parent.clone(), elements, position, left_reps, right_reps })
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    /// Sorted parent indices of the elements.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.position[g].is_some()
    }

    /// Position of a parent element in [`elements`](Self::elements), which is
    /// also its index in [`as_group`](Self::as_group).
    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.position[g]
    }

    /// Representatives `g_1, ..., g_m` with `G` the disjoint union of `g_i H`.
    pub fn left_coset_reps(&self) -> &[usize] {
        &self.left_reps
    }

    /// Representatives `t_1, ..., t_m` with `G` the disjoint union of `H t_j`.
    pub fn right_coset_reps(&self) -> &[usize] {
        &self.right_reps
    }

    /// Writes `g = g_i h` with `g_i` a left coset representative.
    pub fn left_decompose(&self, g: usize) -> (usize, usize) {
        let p = &self.parent;
        for (i, &r) in self.left_reps.iter().enumerate() {
            let h = p.mul(p.inv(r), g);
            if self.contains(h) {
                return (i, h);
            }
        }
        unreachable!("cosets cover the group")
    }

    /// Writes `g = h t_j` with `t_j` a right coset representative.
    pub fn right_decompose(&self, g: usize) -> (usize, usize) {
        let p = &self.parent;
        for (j, &t) in self.right_reps.iter().enumerate() {
            let h = p.mul(g, p.inv(t));
            if self.contains(h) {
                return (h, j);
            }
        }
        unreachable!("cosets cover the group")
    }

    /// The subgroup as a group in its own right; element `k` is
    /// `elements()[k]`.
    pub fn as_group(&self) -> FiniteGroup {
        let table = self
            .elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .map(|&b| self.position[self.parent.mul(a, b)].expect("closed"))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table).expect("subgroup table is a group")
    }

    pub fn is_normal(&self) -> bool {
        let p = &self.parent;
        p.elements().all(|g| self.elements.iter().all(|&h| self.contains(p.mul(p.mul(g, h), p.inv(g)))))
    }

    /// `G/H` for normal `H`, with the projection `G -> G/H`; coset `i` is
    /// `left_coset_reps()[i] H`.
    pub fn quotient(&self) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal() {
            return Err(Error::NotNormal);
        }
        let proj: Vec<usize> = self.parent.elements().map(|g| self.left_decompose(g).0).collect();
        let table = self
            .left_reps
            .iter()
            .map(|&a| self.left_reps.iter().map(|&b| proj[self.parent.mul(a, b)]).collect())
            .collect();
        Ok((FiniteGroup::from_table(table)?, proj))
    }
}

/// `G^ab = G/[G,G]`, decomposed from the element-order statistics of the
/// quotient.
pub fn abelianization_oracle(g: &FiniteGroup) -> FgAbGroup {
    let (q, _) = g.commutator_subgroup().quotient().expect("commutator subgroup is normal");
    abelian_invariants(&q)
}

/// Invariant factors of an abelian group given by its table, from counts of
/// solutions of `x^(p^i) = 1`.
pub fn abelian_invariants(a: &FiniteGroup) -> FgAbGroup {
    let n = a.order();
    let mut factors: Vec<BigInt> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m % p != 0 {
            p += 1;
            continue;
        }
        while m % p == 0 {
            m /= p;
        }
        // r[i] = log_p #{x : x^(p^i) = 1}
        let mut r = vec![0u32];
        let mut pi = 1;
        loop {
            pi *= p;
            let cnt = a.elements().filter(|&x| a.pow(x, pi) == a.identity()).count();
            let mut e = 0;
            let mut c = cnt;
            while c % p == 0 {
                c /= p;
                e += 1;
            }
            if e == *r.last().expect("nonempty") {
                break;
            }
            r.push(e);
        }
        // number of cyclic p-factors of exponent >= i is r[i] - r[i-1]
        let mut at_least: BTreeMap<usize, u32> = BTreeMap::new();
        for i in 1..r.len() {
            at_least.insert(i, r[i] - r[i - 1]);
        }
        for i in 1..r.len() {
            let next = at_least.get(&(i + 1)).copied().unwrap_or(0);
            for _ in 0..(at_least[&i] - next) {
                factors.push(BigInt::from(p).pow(i as u32));
            }
        }
    }
    FgAbGroup::new(factors).expect("positive orders").canonical()
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    order: usize,
    mult: Vec<Vec<usize>>,
}

impl Serialize for FiniteGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupJson { order: self.order(), mult: self.table() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GroupJson::deserialize(d)?;
        if j.order != j.mult.len() {
            return Err(serde::de::Error::custom("order does not match the table"));
        }
        FiniteGroup::from_table(j.mult).map_err(serde::de::Error::custom)
    }
}
