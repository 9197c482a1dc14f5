//! Modules over finite groups: an abelian group with one automorphism per
//! group element.

mod random;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::abgroup::{cokernel, kernel, AbHom, ElementOf, FgAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

pub use random::{random_finite_module, random_module, random_short_exact};

struct ModData {
    group: FiniteGroup,
    underlying: FgAbGroup,
    action: Vec<AbHom>,
}

/// A `G`-module.
#[derive(Clone)]
pub struct GModule {
    d: Arc<ModData>,
}

impl fmt::Debug for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GModule(|G|={}, {:?})", self.group().order(), self.underlying())
    }
}

impl PartialEq for GModule {
    /// Same group, same presentation, same action matrices.
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.d, &other.d)
            || (self.group() == other.group()
                && self.underlying().same_presentation(other.underlying())
                && self.d.action.iter().zip(&other.d.action).all(|(a, b)| a.equals(b)))
    }
}

impl GModule {
    /// Validates `action[1] = id` and `action[g] action[h] = action[gh]`.
    pub fn new(group: &FiniteGroup, underlying: &FgAbGroup, action: Vec<IntMatrix>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        let action = action
            .into_iter()
            .map(|m| AbHom::new(underlying.clone(), underlying.clone(), m))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidModule(format!("action matrix: {e}")))?;
        let m = GModule { d: Arc::new(ModData { group: group.clone(), underlying: underlying.clone(), action }) };
        m.check_axioms()?;
        Ok(m)
    }

    fn new_unchecked(group: &FiniteGroup, underlying: &FgAbGroup, action: Vec<IntMatrix>) -> Self {
        let action = action
            .into_iter()
            .map(|m| AbHom::new_unchecked(underlying.clone(), underlying.clone(), m))
            .collect();
        let m = GModule { d: Arc::new(ModData { group: group.clone(), underlying: underlying.clone(), action }) };
        debug_assert!(m.check_axioms().is_ok());
        m
    }

    /// Full scan of the module axioms.
    pub fn check_axioms(&self) -> Result<()> {
        let g = self.group();
        let id = AbHom::identity(self.underlying());
        if !self.action(g.identity()).equals(&id) {
            return Err(Error::InvalidModule("identity does not act trivially".into()));
        }
        for a in g.elements() {
            for b in g.elements() {
                let lhs = self.action(a).compose(self.action(b))?;
                if !lhs.equals(self.action(g.mul(a, b))) {
                    return Err(Error::InvalidModule(format!("action fails g h = (gh) at ({a},{b})")));
                }
            }
        }
        Ok(())
    }

    /// Extends an action given on generators of the group.
    pub fn from_generators(
        group: &FiniteGroup,
        underlying: &FgAbGroup,
        gens: &[(usize, IntMatrix)],
    ) -> Result<Self> {
        let mut known: BTreeMap<usize, IntMatrix> = BTreeMap::new();
        known.insert(group.identity(), IntMatrix::identity(underlying.ngens()));
        let mut frontier = vec![group.identity()];
        while let Some(x) = frontier.pop() {
            for (g, m) in gens {
                let y = group.mul(*g, x);
                if !known.contains_key(&y) {
                    let prod = m.mul(&known[&x]);
                    known.insert(y, reduce_rows(&prod, underlying));
                    frontier.push(y);
                }
            }
        }
        if known.len() != group.order() {
            return Err(Error::InvalidModule("elements do not generate the group".into()));
        }
        Self::new(group, underlying, known.into_values().collect())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.d.group
    }

    pub fn underlying(&self) -> &FgAbGroup {
        &self.d.underlying
    }

    /// Number of generators of the underlying group.
    pub fn rank(&self) -> usize {
        self.d.underlying.ngens()
    }

    pub fn action(&self, g: usize) -> &AbHom {
        &self.d.action[g]
    }

    pub fn act_coords(&self, g: usize, x: &[BigInt]) -> Vec<BigInt> {
        self.d.action[g].apply_coords(x)
    }

    pub fn act(&self, g: usize, x: &ElementOf) -> ElementOf {
        self.d.action[g].apply(x)
    }

    pub fn is_trivial_action(&self) -> bool {
        let id = AbHom::identity(self.underlying());
        self.d.action.iter().all(|a| a.equals(&id))
    }

    pub fn trivial(group: &FiniteGroup, a: &FgAbGroup) -> Self {
        let id = IntMatrix::identity(a.ngens());
        Self::new_unchecked(group, a, vec![id; group.order()])
    }

    /// Trivial `Z`.
    pub fn integers(group: &FiniteGroup) -> Self {
        Self::trivial(group, &FgAbGroup::free(1))
    }

    /// `Z[G]`, basis indexed by the group elements.
    pub fn group_ring(group: &FiniteGroup) -> Self {
        let n = group.order();
        let action = group
            .elements()
            .map(|g| {
                let mut m = IntMatrix::zeros(n, n);
                for h in group.elements() {
                    m.set(group.mul(g, h), h, BigInt::one());
                }
                m
            })
            .collect();
        Self::new_unchecked(group, &FgAbGroup::free(n), action)
    }

    /// Permutation module `Z[G/H]` on left cosets.
    pub fn permutation(h: &Subgroup) -> Self {
        let g = h.parent();
        let m = h.index();
        let action = g
            .elements()
            .map(|x| {
                let mut a = IntMatrix::zeros(m, m);
                for (i, &r) in h.left_coset_reps().iter().enumerate() {
                    let (j, _) = h.left_decompose(g.mul(x, r));
                    a.set(j, i, BigInt::one());
                }
                a
            })
            .collect();
        Self::new_unchecked(g, &FgAbGroup::free(m), action)
    }

    /// `Z` on which `g` acts by `sign(g)`; the sign must be a homomorphism.
    pub fn sign_twisted(group: &FiniteGroup, sign: &[i64]) -> Result<Self> {
        let action = sign.iter().map(|&s| IntMatrix::from_i64(&[vec![s]])).collect();
        Self::new(group, &FgAbGroup::free(1), action)
    }

    /// Augmentation ideal `I_G` with basis `g - 1` (`g != 1`), and its
    /// inclusion into `Z[G]`.
    pub fn augmentation_ideal(group: &FiniteGroup) -> (GModule, GModuleHom) {
        let n = group.order();
        let e = group.identity();
        let basis: Vec<usize> = group.elements().filter(|&g| g != e).collect();
        let pos = |g: usize| basis.iter().position(|&b| b == g);
        let action = group
            .elements()
            .map(|g| {
                let mut m = IntMatrix::zeros(n - 1, n - 1);
                for (col, &h) in basis.iter().enumerate() {
                    // g(h - 1) = (gh - 1) - (g - 1)
                    if let Some(r) = pos(group.mul(g, h)) {
                        m.set(r, col, m.get(r, col) + 1);
                    }
                    if let Some(r) = pos(g) {
                        m.set(r, col, m.get(r, col) - 1);
                    }
                }
                m
            })
            .collect();
        let ig = Self::new_unchecked(group, &FgAbGroup::free(n - 1), action);
        let zg = Self::group_ring(group);
        let mut incl = IntMatrix::zeros(n, n - 1);
        for (col, &h) in basis.iter().enumerate() {
            incl.set(h, col, BigInt::one());
            incl.set(e, col, -BigInt::one());
        }
        let hom = GModuleHom::new_unchecked(&ig, &zg, incl);
        (ig, hom)
    }

    /// `J_G = Z[G] / Z (sum of g)` with basis `[g]` (`g != 1`), and the
    /// projection from `Z[G]`.
    pub fn j_module(group: &FiniteGroup) -> (GModule, GModuleHom) {
        let n = group.order();
        let e = group.identity();
        let basis: Vec<usize> = group.elements().filter(|&g| g != e).collect();
        let pos = |g: usize| basis.iter().position(|&b| b == g);
        // image of [h] in the basis, with [1] = -(sum of the others)
        let class = |h: usize| -> Vec<BigInt> {
            match pos(h) {
                Some(p) => {
                    let mut v = vec![BigInt::zero(); n - 1];
                    v[p] = BigInt::one();
                    v
                }
                None => vec![-BigInt::one(); n - 1],
            }
        };
        let action = group
            .elements()
            .map(|g| {
                let cols: Vec<Vec<BigInt>> = basis.iter().map(|&h| class(group.mul(g, h))).collect();
                IntMatrix::from_columns(n - 1, &cols)
            })
            .collect();
        let jg = Self::new_unchecked(group, &FgAbGroup::free(n - 1), action);
        let zg = Self::group_ring(group);
        let cols: Vec<Vec<BigInt>> = group.elements().map(class).collect();
        let hom = GModuleHom::new_unchecked(&zg, &jg, IntMatrix::from_columns(n - 1, &cols));
        (jg, hom)
    }

    /// `M ⊗_Z N` with the diagonal action.
    pub fn tensor(&self, other: &GModule) -> Result<GModule> {
        if self.group() != other.group() {
            return Err(Error::GroupMismatch);
        }
        let (under, keep) = tensor_layout(self.underlying(), other.underlying());
        let action = self
            .group()
            .elements()
            .map(|g| {
                let k = self.action(g).matrix().kron(other.action(g).matrix());
                reduce_rows(&k.select_rows(&keep).select_cols(&keep), &under)
            })
            .collect();
        Ok(Self::new_unchecked(self.group(), &under, action))
    }

    pub fn direct_sum(&self, other: &GModule) -> Result<GModule> {
        if self.group() != other.group() {
            return Err(Error::GroupMismatch);
        }
        let under = self.underlying().direct_sum(other.underlying());
        let action = self
            .group()
            .elements()
            .map(|g| self.action(g).matrix().block_diag(other.action(g).matrix()))
            .collect();
        Ok(Self::new_unchecked(self.group(), &under, action))
    }

    /// Restriction to a subgroup, as a module over `h.as_group()`.
    pub fn restrict(&self, h: &Subgroup) -> Result<GModule> {
        if h.parent() != self.group() {
            return Err(Error::GroupMismatch);
        }
        let action = h.elements().iter().map(|&g| self.action(g).matrix().clone()).collect();
        Ok(Self::new_unchecked(&h.as_group(), self.underlying(), action))
    }

    /// `Hom_{Z[H]}(Z[G], M)` realized on functions determined by their
    /// values at right coset representatives `t_j`, with `(g f)(x) = f(x g)`.
    pub fn coinduced(h: &Subgroup, m: &GModule) -> Result<GModule> {
        check_over_subgroup(h, m)?;
        let g = h.parent();
        let k = m.rank();
        let reps = h.right_coset_reps();
        let cnt = reps.len();
        let under = repeat_group(m.underlying(), cnt);
        let action = g
            .elements()
            .map(|x| {
                let mut rows = vec![Vec::new(); cnt * k];
                for (j, &t) in reps.iter().enumerate() {
                    // (x f)(t_j) = f(t_j x) = h' f(t_j')
                    let (hp, jp) = h.right_decompose(g.mul(t, x));
                    let a = m.action(h.local_index(hp).expect("in H")).matrix();
                    place_block(&mut rows, j * k, jp * k, a);
                }
                IntMatrix::from_sparse_rows(cnt * k, cnt * k, rows)
            })
            .collect();
        Ok(Self::new_unchecked(g, &under, action))
    }

    /// `Z[G] ⊗_{Z[H]} M` with basis `g_i ⊗ m` over left coset representatives.
    pub fn induced(h: &Subgroup, m: &GModule) -> Result<GModule> {
        check_over_subgroup(h, m)?;
        let g = h.parent();
        let k = m.rank();
        let reps = h.left_coset_reps();
        let cnt = reps.len();
        let under = repeat_group(m.underlying(), cnt);
        let action = g
            .elements()
            .map(|x| {
                let mut rows = vec![Vec::new(); cnt * k];
                for (i, &r) in reps.iter().enumerate() {
                    let (ip, hp) = h.left_decompose(g.mul(x, r));
                    let a = m.action(h.local_index(hp).expect("in H")).matrix();
                    place_block(&mut rows, ip * k, i * k, a);
                }
                IntMatrix::from_sparse_rows(cnt * k, cnt * k, rows)
            })
            .collect();
        Ok(Self::new_unchecked(g, &under, action))
    }

    /// `M^G` with its inclusion into `M`.
    pub fn fixed_points(&self) -> Result<(FgAbGroup, AbHom)> {
        kernel(&self.stacked_differences())
    }

    /// The map `M -> M^{|G|}`, `x -> (g x - x)_g`.
    pub fn stacked_differences(&self) -> AbHom {
        let k = self.rank();
        let n = self.group().order();
        let under = self.underlying();
        let mut m = IntMatrix::zeros(0, k);
        for g in self.group().elements() {
            m = m.vstack(&self.action(g).matrix().sub(&IntMatrix::identity(k)));
        }
        AbHom::new_unchecked(under.clone(), repeat_group(under, n), reduce_rows(&m, &repeat_group(under, n)))
    }

    /// The map `M^{|G|} -> M`, `(x_g) -> sum (g x_g - x_g)`, whose image is `I_G M`.
    pub fn summed_differences(&self) -> AbHom {
        let k = self.rank();
        let n = self.group().order();
        let under = self.underlying();
        let mut m = IntMatrix::zeros(k, 0);
        for g in self.group().elements() {
            m = m.hstack(&self.action(g).matrix().sub(&IntMatrix::identity(k)));
        }
        AbHom::new_unchecked(repeat_group(under, n), under.clone(), reduce_rows(&m, under))
    }

    /// `M_G = M / I_G M` with the projection.
    pub fn coinvariants(&self) -> Result<(FgAbGroup, AbHom)> {
        cokernel(&self.summed_differences())
    }

    /// `Nm(x) = sum of g x`.
    pub fn norm_map(&self) -> AbHom {
        let k = self.rank();
        let mut m = IntMatrix::zeros(k, k);
        for g in self.group().elements() {
            m = m.add(self.action(g).matrix());
        }
        AbHom::new_unchecked(self.underlying().clone(), self.underlying().clone(), reduce_rows(&m, self.underlying()))
    }

    /// The map `M_G -> M^G` induced by the norm, on the canonical generators
    /// of both sides.
    pub fn induced_norm(&self) -> Result<AbHom> {
        let (q, proj) = self.coinvariants()?;
        let (f, incl) = self.fixed_points()?;
        let nm = self.norm_map();
        let lift = proj.preimage_solver();
        let back = incl.preimage_solver();
        let images: Vec<ElementOf> = q
            .gens()
            .iter()
            .map(|c| {
                let x = lift.solve(c).expect("projection is onto");
                back.solve(&nm.apply(&x)).expect("norms are fixed")
            })
            .collect();
        AbHom::from_images(&q, &f, &images)
    }

    /// The `G`-stable subgroup generated by the orbits of `xs`, with its
    /// inclusion.
    pub fn submodule_generated(&self, xs: &[ElementOf]) -> Result<(GModule, GModuleHom)> {
        let g = self.group();
        let mut orbit: Vec<Vec<BigInt>> = Vec::new();
        for x in xs {
            for a in g.elements() {
                let y = self.act(a, x).into_coords();
                if !orbit.contains(&y) {
                    orbit.push(y);
                }
            }
        }
        let under = self.underlying();
        let free = FgAbGroup::free(orbit.len());
        let span = AbHom::new_unchecked(free.clone(), under.clone(), IntMatrix::from_columns(under.ngens(), &orbit));
        let (_, kincl) = kernel(&span)?;
        let (sub, proj) = cokernel(&kincl)?;
        let lift = proj.preimage_solver();
        let mut incl_cols = Vec::new();
        let mut lifts = Vec::new();
        for c in sub.gens() {
            let y = lift.solve(&c).expect("onto");
            incl_cols.push(span.apply(&y).into_coords());
            lifts.push(y);
        }
        let action = g
            .elements()
            .map(|a| {
                // a permutes the orbit, so acts on the free module by a permutation
                let cols: Vec<Vec<BigInt>> = lifts
                    .iter()
                    .map(|y| {
                        let mut z = vec![BigInt::zero(); orbit.len()];
                        for (j, c) in y.coords().iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let img = self.act_coords(a, &orbit[j]);
                            let jp = orbit.iter().position(|o| *o == img).expect("orbit is stable");
                            z[jp] += c;
                        }
                        proj.apply_coords(&z)
                    })
                    .collect();
                IntMatrix::from_columns(sub.ngens(), &cols)
            })
            .collect();
        let sm = Self::new(g, &sub, action)?;
        let incl = GModuleHom::new(&sm, self, IntMatrix::from_columns(under.ngens(), &incl_cols))?;
        Ok((sm, incl))
    }

    /// The cokernel of an equivariant map, with the projection.
    pub fn quotient_by(f: &GModuleHom) -> Result<(GModule, GModuleHom)> {
        let b = f.target();
        let (q, proj) = cokernel(f.map())?;
        let lift = proj.preimage_solver();
        let reps: Vec<ElementOf> = q.gens().iter().map(|c| lift.solve(c).expect("onto")).collect();
        let action = b
            .group()
            .elements()
            .map(|a| {
                let cols: Vec<Vec<BigInt>> =
                    reps.iter().map(|y| proj.apply(&b.act(a, y)).into_coords()).collect();
                IntMatrix::from_columns(q.ngens(), &cols)
            })
            .collect();
        let qm = Self::new(b.group(), &q, action)?;
        let p = GModuleHom::new(b, &qm, proj.matrix().clone())?;
        Ok((qm, p))
    }

    /// `M^H` as a module over `G/H` for normal `H`, with its inclusion into
    /// `M` and the projection `G -> G/H`.
    pub fn fixed_under(&self, h: &Subgroup) -> Result<(GModule, AbHom, Vec<usize>)> {
        if h.parent() != self.group() {
            return Err(Error::GroupMismatch);
        }
        let (qg, proj) = h.quotient()?;
        let (fix, incl) = self.restrict(h)?.fixed_points()?;
        let incl = AbHom::new_unchecked(fix.clone(), self.underlying().clone(), incl.matrix().clone());
        let back = incl.preimage_solver();
        let action = h
            .left_coset_reps()
            .iter()
            .map(|&r| {
                let cols: Vec<Vec<BigInt>> = fix
                    .gens()
                    .iter()
                    .map(|x| {
                        let y = self.act(r, &incl.apply(x));
                        back.solve(&y).expect("M^H is G-stable for normal H").into_coords()
                    })
                    .collect();
                IntMatrix::from_columns(fix.ngens(), &cols)
            })
            .collect();
        Ok((Self::new(&qg, &fix, action)?, incl, proj))
    }
}

fn check_over_subgroup(h: &Subgroup, m: &GModule) -> Result<()> {
    if *m.group() != h.as_group() {
        return Err(Error::GroupMismatch);
    }
    Ok(())
}

fn place_block(rows: &mut [Vec<(usize, BigInt)>], r0: usize, c0: usize, a: &IntMatrix) {
    for i in 0..a.rows() {
        for (j, x) in a.row(i) {
            rows[r0 + i].push((c0 + j, x.clone()));
        }
    }
}

pub(crate) fn repeat_group(g: &FgAbGroup, times: usize) -> FgAbGroup {
    let mut o = Vec::with_capacity(g.ngens() * times);
    for _ in 0..times {
        o.extend(g.orders().iter().cloned());
    }
    FgAbGroup::new(o).expect("orders are valid")
}

pub(crate) fn reduce_rows(m: &IntMatrix, target: &FgAbGroup) -> IntMatrix {
    let rows = (0..m.rows())
        .map(|i| {
            let d = &target.orders()[i];
            m.row(i)
                .iter()
                .map(|(j, x)| (*j, if d.is_zero() { x.clone() } else { x.mod_floor(d) }))
                .collect()
        })
        .collect();
    IntMatrix::from_sparse_rows(m.rows(), m.cols(), rows)
}

/// Underlying group of `A ⊗ B` by the gcd rule, and the kept generator
/// pairs `i * |B| + j`. Pairs of order 1 are dropped unless one side is
/// free, so `Z ⊗ M` and `M ⊗ Z` keep the presentation of `M`.
pub fn tensor_layout(a: &FgAbGroup, b: &FgAbGroup) -> (FgAbGroup, Vec<usize>) {
    let mut orders = Vec::new();
    let mut keep = Vec::new();
    for (i, x) in a.orders().iter().enumerate() {
        for (j, y) in b.orders().iter().enumerate() {
            let g = x.gcd(y);
            if !g.is_one() || x.is_zero() || y.is_zero() {
                orders.push(g);
                keep.push(i * b.ngens() + j);
            }
        }
    }
    (FgAbGroup::new(orders).expect("valid"), keep)
}

/// Coordinates of `x ⊗ y` in the presentation of [`tensor_layout`].
pub fn tensor_elements(x: &ElementOf, y: &ElementOf) -> ElementOf {
    let (under, keep) = tensor_layout(x.group(), y.group());
    let nb = y.group().ngens();
    let coords = keep.iter().map(|&p| &x.coords()[p / nb] * &y.coords()[p % nb]).collect();
    under.element(coords).expect("length matches")
}

/// `f ⊗ g` between tensor products laid out by [`tensor_layout`].
pub fn tensor_maps(f: &AbHom, g: &AbHom) -> AbHom {
    let (src, keep_s) = tensor_layout(f.source(), g.source());
    let (tgt, keep_t) = tensor_layout(f.target(), g.target());
    let k = f.matrix().kron(g.matrix()).select_rows(&keep_t).select_cols(&keep_s);
    AbHom::new_unchecked(src, tgt.clone(), reduce_rows(&k, &tgt))
}

/// An equivariant homomorphism.
#[derive(Clone, Debug)]
pub struct GModuleHom {
    source: GModule,
    target: GModule,
    map: AbHom,
}

impl GModuleHom {
    pub fn new(source: &GModule, target: &GModule, matrix: IntMatrix) -> Result<Self> {
        if source.group() != target.group() {
            return Err(Error::GroupMismatch);
        }
        let map = AbHom::new(source.underlying().clone(), target.underlying().clone(), matrix)?;
        let h = GModuleHom { source: source.clone(), target: target.clone(), map };
        if !h.is_equivariant() {
            return Err(Error::InvalidModule("map is not equivariant".into()));
        }
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: &GModule, target: &GModule, matrix: IntMatrix) -> Self {
        let map = AbHom::new_unchecked(
            source.underlying().clone(),
            target.underlying().clone(),
            reduce_rows(&matrix, target.underlying()),
        );
        let h = GModuleHom { source: source.clone(), target: target.clone(), map };
        debug_assert!(h.is_equivariant());
        h
    }

    pub fn identity(m: &GModule) -> Self {
        Self::new_unchecked(m, m, IntMatrix::identity(m.rank()))
    }

    pub fn source(&self) -> &GModule {
        &self.source
    }

    pub fn target(&self) -> &GModule {
        &self.target
    }

    pub fn map(&self) -> &AbHom {
        &self.map
    }

    pub fn is_equivariant(&self) -> bool {
        self.source.group().elements().all(|g| {
            let a = self.map.compose(self.source.action(g)).expect("shapes");
            let b = self.target.action(g).compose(&self.map).expect("shapes");
            a.equals(&b)
        })
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &GModuleHom) -> Result<GModuleHom> {
        let map = self.map.compose(&other.map)?;
        Ok(GModuleHom { source: other.source.clone(), target: self.target.clone(), map })
    }

    pub fn apply(&self, x: &ElementOf) -> ElementOf {
        self.map.apply(x)
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.map.is_injective()? && self.map.is_surjective()?)
    }

    /// `f ⊗ g` on diagonal-action tensor products.
    pub fn tensor(&self, other: &GModuleHom) -> Result<GModuleHom> {
        let s = self.source.tensor(&other.source)?;
        let t = self.target.tensor(&other.target)?;
        let m = tensor_maps(&self.map, &other.map);
        Ok(GModuleHom::new_unchecked(&s, &t, m.matrix().clone()))
    }
}

/// The isomorphism `Hom_{Z[H]}(Z[G], M) -> Z[G] ⊗_{Z[H]} M`,
/// `φ -> sum g_j ⊗ φ(g_j^{-1})` over left coset representatives `g_j`.
pub fn induced_coinduced_iso(h: &Subgroup, m: &GModule) -> Result<GModuleHom> {
    let co = GModule::coinduced(h, m)?;
    let ind = GModule::induced(h, m)?;
    let g = h.parent();
    let k = m.rank();
    let cnt = h.index();
    let mut rows = vec![Vec::new(); cnt * k];
    for (j, &r) in h.left_coset_reps().iter().enumerate() {
        // φ(g_j^{-1}) = h' φ(t_k)
        let (hp, kk) = h.right_decompose(g.inv(r));
        let a = m.action(h.local_index(hp).expect("in H")).matrix();
        place_block(&mut rows, j * k, kk * k, a);
    }
    let mat = IntMatrix::from_sparse_rows(cnt * k, cnt * k, rows);
    GModuleHom::new(&co, &ind, mat)
}

#[derive(Serialize, Deserialize)]
struct ModuleJson {
    group: FiniteGroup,
    underlying: FgAbGroup,
    action: Vec<IntMatrix>,
}

impl Serialize for GModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ModuleJson {
            group: self.group().clone(),
            underlying: self.underlying().clone(),
            action: self.d.action.iter().map(|a| a.matrix().clone()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GModule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ModuleJson::deserialize(d)?;
        let k = j.underlying.ngens();
        // zero-generator modules serialize their matrices as []
        let action = j
            .action
            .into_iter()
            .map(|m| if k == 0 { IntMatrix::zeros(0, 0) } else { m })
            .collect();
        GModule::new(&j.group, &j.underlying, action).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests;
