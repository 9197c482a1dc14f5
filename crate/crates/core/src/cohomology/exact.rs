//! Short exact sequences, connecting homomorphisms and dimension shifting.

use num_bigint::BigInt;
use num_traits::One;

use super::bar::{boundary_table, coboundary_table};
use super::{cohomology, homology, map_values, solve_values, tate, tuples_of, CohGroup, CohMap, Space, Theory};
use crate::abgroup::{kernel, AbHom, IntMatrix};
use crate::error::{Error, Result};
use crate::gmodule::{GModule, GModuleHom};
use crate::group::{FiniteGroup, Subgroup};

/// `0 -> A --f--> B --g--> C -> 0`, verified exact.
#[derive(Clone, Debug)]
pub struct ShortExact {
    f: GModuleHom,
    g: GModuleHom,
}

impl ShortExact {
    pub fn new(f: GModuleHom, g: GModuleHom) -> Result<Self> {
        if f.target() != g.source() {
            return Err(Error::NonComposable("f does not land in the source of g".into()));
        }
        if !f.map().is_injective()? {
            return Err(Error::NotExact("f is not injective".into()));
        }
        if !g.map().is_surjective()? {
            return Err(Error::NotExact("g is not surjective".into()));
        }
        if !g.map().compose(f.map())?.is_zero() {
            return Err(Error::NotExact("g ∘ f is not zero".into()));
        }
        let (k, incl) = kernel(g.map())?;
        let solver = f.map().preimage_solver();
        if k.gens().iter().any(|x| solver.solve(&incl.apply(x)).is_none()) {
            return Err(Error::NotExact("ker g is larger than im f".into()));
        }
        Ok(ShortExact { f, g })
    }

    pub fn a(&self) -> &GModule {
        self.f.source()
    }

    pub fn b(&self) -> &GModule {
        self.f.target()
    }

    pub fn c(&self) -> &GModule {
        self.g.target()
    }

    pub fn f(&self) -> &GModuleHom {
        &self.f
    }

    pub fn g(&self) -> &GModuleHom {
        &self.g
    }

    /// `0 -> I_G -> Z[G] -> Z -> 0`.
    pub fn augmentation(group: &FiniteGroup) -> Self {
        let (_, incl) = GModule::augmentation_ideal(group);
        let z = GModule::integers(group);
        let eps = GModuleHom::new(&GModule::group_ring(group), &z, IntMatrix::from_i64(&[vec![1; group.order()]]))
            .expect("augmentation is equivariant");
        ShortExact::new(incl, eps).expect("augmentation sequence is exact")
    }

    /// `M ⊗ A -> M ⊗ B -> M ⊗ C`; exactness is checked again.
    pub fn tensor_left(&self, m: &GModule) -> Result<Self> {
        let id = GModuleHom::identity(m);
        ShortExact::new(id.tensor(&self.f)?, id.tensor(&self.g)?)
    }

    /// `A ⊗ M -> B ⊗ M -> C ⊗ M`.
    pub fn tensor_right(&self, m: &GModule) -> Result<Self> {
        let id = GModuleHom::identity(m);
        ShortExact::new(self.f.tensor(&id)?, self.g.tensor(&id)?)
    }

    /// The same sequence viewed over a subgroup.
    pub fn restrict(&self, h: &Subgroup) -> Result<Self> {
        let (a, b, c) = (self.a().restrict(h)?, self.b().restrict(h)?, self.c().restrict(h)?);
        let f = GModuleHom::new(&a, &b, self.f.map().matrix().clone())?;
        let g = GModuleHom::new(&b, &c, self.g.map().matrix().clone())?;
        ShortExact::new(f, g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `H^r(C) -> H^(r+1)(A)`
    Cohomology,
    /// `H_r(C) -> H_(r-1)(A)`
    Homology,
    /// `H_T^r(C) -> H_T^(r+1)(A)`, including the splice at `r = -1`.
    Tate,
}

/// The connecting homomorphism out of degree `r`.
pub fn connecting(se: &ShortExact, r: i32, direction: Direction) -> Result<CohMap> {
    let (source, target) = match direction {
        Direction::Cohomology => {
            if r < 0 {
                return Err(Error::DegreeOutOfRange(r));
            }
            (cohomology(se.c(), r as usize)?, cohomology(se.a(), r as usize + 1)?)
        }
        Direction::Homology => {
            if r < 1 {
                return Err(Error::DegreeOutOfRange(r));
            }
            (homology(se.c(), r as usize)?, homology(se.a(), r as usize - 1)?)
        }
        Direction::Tate => (tate(se.c(), r)?, tate(se.a(), r + 1)?),
    };
    let map = connecting_between(se, &source, &target)?;
    Ok(CohMap { source, target, map })
}

/// The connecting homomorphism between already computed groups of `C` and
/// `A`: lift through `g`, apply the boundary (or the norm at the splice),
/// pull back through `f`.
pub fn connecting_between(se: &ShortExact, source: &CohGroup, target: &CohGroup) -> Result<AbHom> {
    if source.module() != se.c() || target.module() != se.a() {
        return Err(Error::GroupMismatch);
    }
    let b = se.b();
    let n = b.group().order();
    let next = match source.space() {
        Space::Cochains(r) => Space::Cochains(r + 1),
        Space::Chains(0) if source.theory() == Theory::Tate => Space::Cochains(0),
        Space::Chains(0) => return Err(Error::DegreeOutOfRange(-1)),
        Space::Chains(r) => Space::Chains(r - 1),
    };
    if target.space() != next {
        return Err(Error::GroupMismatch);
    }
    let lift = se.g.map().preimage_solver();
    let back = se.f.map().preimage_solver();
    let count = tuples_of(source.space(), n);
    let count_next = tuples_of(next, n);
    let norm = b.norm_map();
    source.induced_by(target, |t| {
        let tb = solve_values(se.g.map(), &lift, count, t).ok_or_else(|| Error::LiftFailed("through g".into()))?;
        let db = match source.space() {
            Space::Cochains(r) => coboundary_table(b, r, &tb),
            Space::Chains(0) => map_values(&norm, 1, &tb),
            Space::Chains(r) => boundary_table(b, r, &tb),
        };
        solve_values(se.f.map(), &back, count_next, &db).ok_or_else(|| Error::LiftFailed("through f".into()))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    /// `0 -> I_G ⊗ M -> Z[G] ⊗ M -> M -> 0`
    Up,
    /// `0 -> M -> Z[G] ⊗ M -> J_G ⊗ M -> 0`
    Down,
}

/// The shifted module and its sequence. `Up` gives
/// `H_T^r(M) ≅ H_T^(r+1)(I_G ⊗ M)`, `Down` gives `H_T^r(J_G ⊗ M) ≅ H_T^(r+1)(M)`.
pub fn dimension_shift(m: &GModule, direction: Shift) -> Result<(GModule, ShortExact)> {
    let g = m.group();
    let n = g.order();
    let k = m.rank();
    super::check_cap(n * k.max(1))?;
    let zg = GModule::group_ring(g);
    let zgm = zg.tensor(m)?;
    // Z[G] ⊗ M has generator (h, j) at h * k + j
    match direction {
        Shift::Up => {
            let (ig, incl) = GModule::augmentation_ideal(g);
            let f = incl.tensor(&GModuleHom::identity(m))?;
            let mut eps = IntMatrix::zeros(k, n * k);
            for h in 0..n {
                for j in 0..k {
                    eps.set(j, h * k + j, BigInt::one());
                }
            }
            let gmap = GModuleHom::new(&zgm, m, eps)?;
            let se = ShortExact::new(f, gmap)?;
            Ok((ig.tensor(m)?, se))
        }
        Shift::Down => {
            let (jg, proj) = GModule::j_module(g);
            let mut mu = IntMatrix::zeros(n * k, k);
            for h in 0..n {
                for j in 0..k {
                    mu.set(h * k + j, j, BigInt::one());
                }
            }
            let f = GModuleHom::new(m, &zgm, mu)?;
            let gmap = proj.tensor(&GModuleHom::identity(m))?;
            let se = ShortExact::new(f, gmap)?;
            Ok((jg.tensor(m)?, se))
        }
    }
}

/// Result of checking a long exact sequence node by node.
#[derive(Clone, Debug, Default)]
pub struct ExactReport {
    pub nodes: Vec<(String, bool)>,
}

impl ExactReport {
    pub fn all_exact(&self) -> bool {
        self.nodes.iter().all(|(_, ok)| *ok)
    }
}

/// `ker(beta) = im(alpha)`, by composition and order counting.
fn exact_at(alpha: &AbHom, beta: &AbHom) -> Result<bool> {
    if !beta.compose(alpha)?.is_zero() {
        return Ok(false);
    }
    let im = alpha.image()?;
    let (ker, _) = kernel(beta)?;
    Ok(im.order() == ker.order())
}

/// Checks `... -> H_T^r(A) -> H_T^r(B) -> H_T^r(C) -> H_T^(r+1)(A) -> ...`
/// at every node between degrees `lo` and `hi`.
pub fn long_exact_check(se: &ShortExact, lo: i32, hi: i32) -> Result<ExactReport> {
    let mut ha = Vec::new();
    let mut hb = Vec::new();
    let mut hc = Vec::new();
    for r in lo..=hi + 1 {
        ha.push(tate(se.a(), r)?);
        hb.push(tate(se.b(), r)?);
        if r <= hi {
            hc.push(tate(se.c(), r)?);
        }
    }
    let mut fs = Vec::new();
    let mut gs = Vec::new();
    let mut ds = Vec::new();
    for i in 0..ha.len() {
        fs.push(super::induced_map(se.f(), &ha[i], &hb[i])?);
        if i < hc.len() {
            gs.push(super::induced_map(se.g(), &hb[i], &hc[i])?);
            ds.push(connecting_between(se, &hc[i], &ha[i + 1])?);
        }
    }
    let mut report = ExactReport::default();
    for (i, r) in (lo..=hi).enumerate() {
        report.nodes.push((format!("H^{r}(B)"), exact_at(&fs[i], &gs[i])?));
        report.nodes.push((format!("H^{r}(C)"), exact_at(&gs[i], &ds[i])?));
        report.nodes.push((format!("H^{}(A)", r + 1), exact_at(&ds[i], &fs[i + 1])?));
    }
    Ok(report)
}
