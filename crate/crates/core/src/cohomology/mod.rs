//! Group cohomology, homology and Tate cohomology from the standard
//! resolution, with the maps between them.

pub mod bar;
mod cup;
mod exact;
mod herbrand;
mod maps;
mod splitting;
#[cfg(test)]
mod tests;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abgroup::{homology_at, AbHom, ElementOf, FgAbGroup, Homology, PreimageSolver};
use crate::error::{Error, Result};
use crate::gmodule::{repeat_group, GModule, GModuleHom};
use bar::{boundary_table, chain_differential, coboundary_table, cochain_differential, decode, tuple_count};

pub use cup::{cup, Class};
pub use exact::{connecting, connecting_between, dimension_shift, long_exact_check, Direction, ExactReport, Shift, ShortExact};
pub use herbrand::herbrand;
pub use maps::{corestriction, inflation, restriction};
pub use splitting::{reciprocity_from_cocycle, splitting_cochain, splitting_module, tate_composite};

pub const MIN_DEGREE: i32 = -3;
pub const MAX_DEGREE: i32 = 3;
pub const DEFAULT_SIZE_CAP: u128 = 1 << 24;

/// The table cap in entries; `COHOMOLOGY_SIZE_CAP` overrides the default.
pub fn size_cap() -> u128 {
    std::env::var("COHOMOLOGY_SIZE_CAP").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SIZE_CAP)
}

pub(crate) fn check_cap(entries: usize) -> Result<()> {
    let cap = size_cap();
    if entries as u128 > cap {
        return Err(Error::SizeCap { needed: entries as u128, cap });
    }
    Ok(())
}

/// An inhomogeneous cochain `G^r -> M`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    module: GModule,
    degree: usize,
    table: Vec<BigInt>,
}

/// A chain `sum (g_1..g_r) ⊗ m` in `C_r(G) ⊗_{Z[G]} M`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainElement {
    module: GModule,
    degree: usize,
    table: Vec<BigInt>,
}

fn table_group(m: &GModule, degree: usize) -> FgAbGroup {
    repeat_group(m.underlying(), tuple_count(m.group().order(), degree))
}

fn checked_table(m: &GModule, degree: usize, mut table: Vec<BigInt>) -> Result<Vec<BigInt>> {
    let len = tuple_count(m.group().order(), degree) * m.rank();
    if table.len() != len {
        return Err(Error::Malformed(format!("table of length {} where {len} was expected", table.len())));
    }
    table_group(m, degree).reduce(&mut table);
    Ok(table)
}

fn fill_table(m: &GModule, degree: usize, f: impl Fn(&[usize]) -> Vec<BigInt>) -> Result<Vec<BigInt>> {
    let n = m.group().order();
    let mut table = Vec::with_capacity(tuple_count(n, degree) * m.rank());
    for idx in 0..tuple_count(n, degree) {
        let v = f(&decode(idx, n, degree));
        if v.len() != m.rank() {
            return Err(Error::Malformed("value of the wrong length".into()));
        }
        table.extend(v);
    }
    checked_table(m, degree, table)
}

macro_rules! table_common {
    ($t:ident) => {
        impl $t {
            pub fn new(module: &GModule, degree: usize, table: Vec<BigInt>) -> Result<Self> {
                check_cap(tuple_count(module.group().order(), degree) * module.rank().max(1))?;
                Ok($t { module: module.clone(), degree, table: checked_table(module, degree, table)? })
            }

            /// Builds the table from a function of the tuple.
            pub fn from_fn(module: &GModule, degree: usize, f: impl Fn(&[usize]) -> Vec<BigInt>) -> Result<Self> {
                check_cap(tuple_count(module.group().order(), degree) * module.rank().max(1))?;
                Ok($t { module: module.clone(), degree, table: fill_table(module, degree, f)? })
            }

            pub fn zero(module: &GModule, degree: usize) -> Self {
                let len = tuple_count(module.group().order(), degree) * module.rank();
                $t { module: module.clone(), degree, table: vec![BigInt::zero(); len] }
            }

            pub fn module(&self) -> &GModule {
                &self.module
            }

            pub fn degree(&self) -> usize {
                self.degree
            }

            pub fn table(&self) -> &[BigInt] {
                &self.table
            }

            /// The value at a tuple of group elements.
            pub fn value(&self, t: &[usize]) -> &[BigInt] {
                assert_eq!(t.len(), self.degree);
                let k = self.module.rank();
                let i = bar::encode(t, self.module.group().order());
                &self.table[i * k..(i + 1) * k]
            }

            pub fn as_element(&self) -> ElementOf {
                table_group(&self.module, self.degree).element(self.table.clone()).expect("length")
            }

            pub fn add(&self, other: &Self) -> Self {
                let table = self.table.iter().zip(&other.table).map(|(a, b)| a + b).collect();
                $t { table: checked_table(&self.module, self.degree, table).expect("same shape"), ..self.clone() }
            }

            pub fn neg(&self) -> Self {
                let table = self.table.iter().map(|a| -a).collect();
                $t { table: checked_table(&self.module, self.degree, table).expect("same shape"), ..self.clone() }
            }

            pub fn sub(&self, other: &Self) -> Self {
                self.add(&other.neg())
            }

            /// Applies a module map valuewise.
            pub fn push(&self, f: &GModuleHom) -> Result<Self> {
                if *f.source() != self.module {
                    return Err(Error::GroupMismatch);
                }
                Ok($t { module: f.target().clone(), degree: self.degree, table: map_values(f.map(), tuple_count(self.module.group().order(), self.degree), &self.table) })
            }
        }
    };
}

table_common!(Cochain);
table_common!(ChainElement);

impl Cochain {
    pub fn coboundary(&self) -> Cochain {
        Cochain {
            module: self.module.clone(),
            degree: self.degree + 1,
            table: coboundary_table(&self.module, self.degree, &self.table),
        }
    }

    pub fn is_cocycle(&self) -> bool {
        self.coboundary().table.iter().all(|x| x.is_zero())
    }

    pub fn is_coboundary(&self) -> Result<bool> {
        if self.degree == 0 {
            return Ok(self.table.iter().all(|x| x.is_zero()));
        }
        let c = cohomology(&self.module, self.degree)?;
        Ok(c.classify_table(&self.table)?.is_zero())
    }
}

impl ChainElement {
    pub fn boundary(&self) -> ChainElement {
        assert!(self.degree >= 1, "C_0 has no boundary");
        ChainElement {
            module: self.module.clone(),
            degree: self.degree - 1,
            table: boundary_table(&self.module, self.degree, &self.table),
        }
    }

    pub fn is_cycle(&self) -> bool {
        self.degree == 0 || self.boundary().table.iter().all(|x| x.is_zero())
    }
}

/// Applies `f` to each of the `count` values of a table.
fn map_values(f: &AbHom, count: usize, table: &[BigInt]) -> Vec<BigInt> {
    let (k, l) = (f.source().ngens(), f.target().ngens());
    let mut out = Vec::with_capacity(count * l);
    for i in 0..count {
        out.extend(f.apply_coords(&table[i * k..(i + 1) * k]));
    }
    out
}

/// Solves `f(x) = y` valuewise; `None` if some value has no preimage.
fn solve_values(f: &AbHom, s: &PreimageSolver, count: usize, table: &[BigInt]) -> Option<Vec<BigInt>> {
    let l = f.target().ngens();
    let mut out = Vec::with_capacity(count * f.source().ngens());
    for i in 0..count {
        let y = f.target().element(table[i * l..(i + 1) * l].to_vec()).expect("length");
        out.extend(s.solve(&y)?.into_coords());
    }
    Some(out)
}

fn tuples_of(space: Space, n: usize) -> usize {
    match space {
        Space::Cochains(r) | Space::Chains(r) => tuple_count(n, r),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theory {
    Cohomology,
    Homology,
    Tate,
}

/// Where representatives live: `r`-cochains or `r`-chains. Tate degree 0
/// uses 0-cochains (elements of `M`), degree -1 uses 0-chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    Cochains(usize),
    Chains(usize),
}

struct CohData {
    module: GModule,
    theory: Theory,
    degree: i32,
    space: Space,
    hom: Homology,
}

/// A computed (co)homology group with representatives and classification.
#[derive(Clone)]
pub struct CohGroup {
    d: Arc<CohData>,
}

impl fmt::Debug for CohGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}^{}({:?}) = {}", self.d.theory, self.d.degree, self.d.module, self.group())
    }
}

/// A representative of a class.
#[derive(Clone, Debug, PartialEq)]
pub enum Rep {
    Cochain(Cochain),
    Chain(ChainElement),
}

impl Rep {
    pub fn table(&self) -> &[BigInt] {
        match self {
            Rep::Cochain(c) => c.table(),
            Rep::Chain(c) => c.table(),
        }
    }

    pub fn module(&self) -> &GModule {
        match self {
            Rep::Cochain(c) => c.module(),
            Rep::Chain(c) => c.module(),
        }
    }

    pub fn space(&self) -> Space {
        match self {
            Rep::Cochain(c) => Space::Cochains(c.degree()),
            Rep::Chain(c) => Space::Chains(c.degree()),
        }
    }
}

fn zero_into(src: &FgAbGroup, m: &FgAbGroup) -> AbHom {
    AbHom::zero(src, m)
}

/// `H^r(G, M)` for `0 <= r <= 3`; `r = 0` gives `M^G`.
pub fn cohomology(m: &GModule, r: usize) -> Result<CohGroup> {
    if r as i32 > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(r as i32));
    }
    let d_out = cochain_differential(m, r)?;
    let d_in = if r == 0 {
        zero_into(&FgAbGroup::trivial(), m.underlying())
    } else {
        cochain_differential(m, r - 1)?
    };
    build(m, Theory::Cohomology, r as i32, Space::Cochains(r), &d_in, &d_out)
}

/// `H_r(G, M)` for `0 <= r <= 3`; `r = 0` gives `M_G`.
pub fn homology(m: &GModule, r: usize) -> Result<CohGroup> {
    if r as i32 > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(r as i32));
    }
    let d_in = chain_differential(m, r + 1)?;
    let d_out = if r == 0 {
        AbHom::zero(m.underlying(), &FgAbGroup::trivial())
    } else {
        chain_differential(m, r)?
    };
    build(m, Theory::Homology, r as i32, Space::Chains(r), &d_in, &d_out)
}

/// Tate cohomology `H_T^r(G, M)` for `-3 <= r <= 3`.
pub fn tate(m: &GModule, r: i32) -> Result<CohGroup> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&r) {
        return Err(Error::DegreeOutOfRange(r));
    }
    match r {
        0 => {
            check_cap(m.group().order() * m.rank().max(1))?;
            build(m, Theory::Tate, 0, Space::Cochains(0), &m.norm_map(), &m.stacked_differences())
        }
        -1 => {
            check_cap(m.group().order() * m.rank().max(1))?;
            build(m, Theory::Tate, -1, Space::Chains(0), &m.summed_differences(), &m.norm_map())
        }
        r if r > 0 => retag(cohomology(m, r as usize)?, r),
        r => retag(homology(m, (-r - 1) as usize)?, r),
    }
}

fn retag(c: CohGroup, degree: i32) -> Result<CohGroup> {
    let d = Arc::try_unwrap(c.d).unwrap_or_else(|_| unreachable!("fresh group"));
    Ok(CohGroup { d: Arc::new(CohData { theory: Theory::Tate, degree, ..d }) })
}

fn build(m: &GModule, theory: Theory, degree: i32, space: Space, d_in: &AbHom, d_out: &AbHom) -> Result<CohGroup> {
    let hom = homology_at(d_in, d_out)?;
    Ok(CohGroup { d: Arc::new(CohData { module: m.clone(), theory, degree, space, hom }) })
}

impl CohGroup {
    pub fn module(&self) -> &GModule {
        &self.d.module
    }

    pub fn theory(&self) -> Theory {
        self.d.theory
    }

    pub fn degree(&self) -> i32 {
        self.d.degree
    }

    pub fn space(&self) -> Space {
        self.d.space
    }

    /// The group itself, presented by its invariant factors.
    pub fn group(&self) -> &FgAbGroup {
        self.d.hom.group()
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.group().orders().to_vec()
    }

    pub fn order(&self) -> Option<BigInt> {
        self.group().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.group().is_trivial()
    }

    pub fn homology(&self) -> &Homology {
        &self.d.hom
    }

    /// The class of a raw cochain or chain table.
    pub fn classify_table(&self, table: &[BigInt]) -> Result<ElementOf> {
        self.d.hom.classify(&self.d.hom.middle().element(table.to_vec())?)
    }

    pub fn classify(&self, rep: &Rep) -> Result<ElementOf> {
        if rep.space() != self.space() || rep.module() != self.module() {
            return Err(Error::GroupMismatch);
        }
        self.classify_table(rep.table())
    }

    /// A representative table of a class.
    pub fn lift_table(&self, c: &ElementOf) -> Vec<BigInt> {
        self.d.hom.lift_coords(c.coords())
    }

    pub fn lift(&self, c: &ElementOf) -> Rep {
        self.make_rep(self.lift_table(c))
    }

    pub(crate) fn make_rep(&self, table: Vec<BigInt>) -> Rep {
        let module = self.module().clone();
        match self.space() {
            Space::Cochains(degree) => Rep::Cochain(Cochain { module, degree, table }),
            Space::Chains(degree) => Rep::Chain(ChainElement { module, degree, table }),
        }
    }

    /// One representative per canonical generator.
    pub fn representatives(&self) -> Vec<Rep> {
        self.group().gens().iter().map(|c| self.lift(c)).collect()
    }

    /// The map on canonical generators induced by a table-level map.
    pub(crate) fn induced_by(
        &self,
        target: &CohGroup,
        f: impl Fn(&[BigInt]) -> Result<Vec<BigInt>>,
    ) -> Result<AbHom> {
        let images = self
            .group()
            .gens()
            .iter()
            .map(|c| target.classify_table(&f(&self.lift_table(c))?))
            .collect::<Result<Vec<_>>>()?;
        AbHom::from_images(self.group(), target.group(), &images)
    }
}

/// A homomorphism between two computed groups, on canonical generators.
#[derive(Clone, Debug)]
pub struct CohMap {
    pub source: CohGroup,
    pub target: CohGroup,
    pub map: AbHom,
}

impl CohMap {
    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.map.is_injective()? && self.map.is_surjective()?)
    }

    pub fn apply(&self, c: &ElementOf) -> ElementOf {
        self.map.apply(c)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &CohMap) -> Result<CohMap> {
        Ok(CohMap { source: other.source.clone(), target: self.target.clone(), map: self.map.compose(&other.map)? })
    }
}

/// The map `H(M) -> H(N)` induced by a module map, between groups of the
/// same theory and degree.
pub fn induced_map(f: &GModuleHom, source: &CohGroup, target: &CohGroup) -> Result<AbHom> {
    if source.module() != f.source() || target.module() != f.target() || source.space() != target.space() {
        return Err(Error::GroupMismatch);
    }
    let count = tuples_of(source.space(), f.source().group().order());
    source.induced_by(target, |t| Ok(map_values(f.map(), count, t)))
}

/// Inverse of an isomorphism.
pub fn invert_iso(h: &AbHom) -> Result<AbHom> {
    let solver = h.preimage_solver();
    let images = h
        .target()
        .gens()
        .iter()
        .map(|y| solver.solve(y).ok_or_else(|| Error::LiftFailed("map is not onto".into())))
        .collect::<Result<Vec<_>>>()?;
    if !h.is_injective()? {
        return Err(Error::NotExact("map is not injective".into()));
    }
    AbHom::from_images(h.target(), h.source(), &images)
}

impl Serialize for Cochain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            degree: usize,
            module: &'a GModule,
            table: Table<'a>,
        }
        struct Table<'a>(&'a Cochain);
        impl Serialize for Table<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let c = self.0;
                let n = c.module.group().order();
                let k = c.module.rank();
                let mut map = s.serialize_map(Some(tuple_count(n, c.degree)))?;
                for idx in 0..tuple_count(n, c.degree) {
                    let key: Vec<String> = decode(idx, n, c.degree).iter().map(|g| g.to_string()).collect();
                    let val: Vec<String> = c.table[idx * k..(idx + 1) * k].iter().map(|x| x.to_string()).collect();
                    map.serialize_entry(&key.join(","), &val)?;
                }
                map.end()
            }
        }
        Out { degree: self.degree, module: &self.module, table: Table(self) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cochain {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct In {
            degree: usize,
            module: GModule,
            table: std::collections::BTreeMap<String, Vec<String>>,
        }
        let raw = In::deserialize(d)?;
        let m = raw.module;
        let n = m.group().order();
        let k = m.rank();
        let count = tuple_count(n, raw.degree);
        if raw.table.len() != count {
            return Err(D::Error::custom(format!("expected {count} table entries")));
        }
        let mut table = vec![BigInt::zero(); count * k];
        for (key, val) in &raw.table {
            let t: Vec<usize> = if key.is_empty() {
                Vec::new()
            } else {
                key.split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| D::Error::custom(format!("bad key `{key}`"))))
                    .collect::<std::result::Result<_, _>>()?
            };
            if t.len() != raw.degree || t.iter().any(|&g| g >= n) || val.len() != k {
                return Err(D::Error::custom(format!("bad entry `{key}`")));
            }
            let i = bar::encode(&t, n);
            for (j, v) in val.iter().enumerate() {
                table[i * k + j] = crate::serial::str_to_big(v)?;
            }
        }
        Cochain::new(&m, raw.degree, table).map_err(D::Error::custom)
    }
}
