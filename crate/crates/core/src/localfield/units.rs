//! Structure of `(O_L / p^N)^×` and the truncated multiplicative module
//! `Z ⊕ (O_L / p^N)^×`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::ff::galois_module;
use super::tower::{OElement, UnramifiedTower};
use crate::abgroup::{cokernel, AbHom, ElementOf, FgAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::FiniteGroup;

/// `U = μ_(q-1) × U^(1)`: a Teichmüller generator `ω` with a discrete log
/// table on the residue field, and `U^(1)` presented on the generators
/// `1 + p^j x^i` with relation matrix `p I - D`, `D` the digit expansions
/// of their `p`-th powers.
pub(crate) struct UnitDecomposition {
    q1: u64,
    omega: OElement,
    dlog: HashMap<u64, u64>,
    digit_gens: Vec<OElement>,
    digit_invs: Vec<OElement>,
    proj: AbHom,
    lifts: Vec<OElement>,
    group: FgAbGroup,
}

fn digits(tower: &UnramifiedTower, d: &UnitDecomposition, u1: &OElement) -> Vec<BigInt> {
    let p = tower.p();
    let f = tower.degree();
    let pn = tower.modulus_power();
    let mut w = u1.clone();
    let mut out = vec![BigInt::zero(); d.digit_gens.len()];
    let mut pj = 1u64;
    for j in 1..tower.precision() as usize {
        pj *= p;
        for i in 0..f {
            let x = if i == 0 { (w.coeffs()[0] + pn - 1) % pn } else { w.coeffs()[i] };
            debug_assert_eq!(x % pj, 0);
            let c = x / pj % p;
            if c > 0 {
                let k = (j - 1) * f + i;
                out[k] = BigInt::from(c);
                w = w.mul(&d.digit_invs[k].pow(c));
            }
        }
    }
    debug_assert!(w.is_one());
    out
}

fn decompose(tower: &UnramifiedTower) -> Result<UnitDecomposition> {
    let p = tower.p();
    let f = tower.degree();
    let pn = tower.modulus_power();
    let field = tower.residue_field();
    let q = field.size();
    let g = field.primitive_element();
    let mut dlog = HashMap::with_capacity(q as usize);
    let mut e = field.one();
    for k in 0..q - 1 {
        dlog.insert(e.index(), k);
        e = e.mul(&g);
    }
    // Teichmüller lift: a^(q^(N-1))
    let mut omega = tower.element(g.coeffs())?;
    for _ in 1..tower.precision() {
        omega = omega.pow(q);
    }
    if !omega.pow(q - 1).is_one() {
        return Err(Error::InvalidField("Teichmüller lift has the wrong order".into()));
    }
    let mut digit_gens = Vec::new();
    let mut pj = 1u64;
    for _ in 1..tower.precision() {
        pj *= p;
        for i in 0..f {
            let mut c = vec![0; f];
            c[i] = pj % pn;
            digit_gens.push(tower.one().add(&tower.raw(c)));
        }
    }
    let digit_invs = digit_gens.iter().map(|x| x.inv()).collect::<Result<Vec<_>>>()?;
    let r = digit_gens.len();
    let mut d = UnitDecomposition {
        q1: q - 1,
        omega,
        dlog,
        digit_gens,
        digit_invs,
        proj: AbHom::identity(&FgAbGroup::free(0)),
        lifts: Vec::new(),
        group: FgAbGroup::trivial(),
    };
    let cols: Vec<Vec<BigInt>> = (0..r)
        .map(|k| {
            let mut col = digits(tower, &d, &d.digit_gens[k].pow(p));
            for x in col.iter_mut() {
                *x = -&*x;
            }
            col[k] += p;
            col
        })
        .collect();
    let rel = AbHom::new_unchecked(FgAbGroup::free(r), FgAbGroup::free(r), IntMatrix::from_columns(r, &cols));
    let (quot, proj) = cokernel(&rel)?;
    let expected = BigInt::from(p).pow((r) as u32);
    if quot.order() != Some(expected) {
        return Err(Error::InvalidField("principal unit decomposition has the wrong order".into()));
    }
    let solver = proj.preimage_solver();
    let exp = quot.exponent();
    let lifts = quot
        .gens()
        .iter()
        .map(|c| {
            let a = solver.solve(c).expect("projection is onto");
            let mut x = tower.one();
            for (k, ak) in a.coords().iter().enumerate() {
                let e = ak.mod_floor(&exp).to_u64().expect("small exponent");
                x = x.mul(&d.digit_gens[k].pow(e));
            }
            x
        })
        .collect();
    let mut orders = Vec::new();
    if q > 2 {
        orders.push(BigInt::from(q - 1));
    }
    orders.extend(quot.orders().iter().cloned());
    d.group = FgAbGroup::new(orders)?;
    d.proj = proj;
    d.lifts = lifts;
    let _ = pn;
    Ok(d)
}

impl UnitDecomposition {
    fn has_teich(&self) -> bool {
        self.q1 > 1
    }

    fn coords(&self, tower: &UnramifiedTower, u: &OElement) -> Result<Vec<BigInt>> {
        if !u.is_unit() {
            return Err(Error::NotAUnit);
        }
        let p = tower.p();
        let res = tower.residue_field().element(&u.coeffs().iter().map(|x| x % p).collect::<Vec<_>>())?;
        let s = self.dlog[&res.index()];
        let u1 = u.mul(&self.omega.pow(self.q1 - s));
        let mut out = Vec::new();
        if self.has_teich() {
            out.push(BigInt::from(s));
        }
        out.extend(self.proj.apply_coords(&digits(tower, self, &u1)));
        Ok(out)
    }

    fn generator(&self, i: usize) -> OElement {
        if self.has_teich() {
            if i == 0 {
                return self.omega.clone();
            }
            return self.lifts[i - 1].clone();
        }
        self.lifts[i].clone()
    }
}

impl UnramifiedTower {
    pub(crate) fn units(&self) -> Result<&UnitDecomposition> {
        if let Some(u) = self.d.units.get() {
            return Ok(u);
        }
        let u = decompose(self)?;
        Ok(self.d.units.get_or_init(|| u))
    }

    /// `(O_L / p^N)^×` as an abstract group.
    pub fn unit_group(&self) -> Result<FgAbGroup> {
        Ok(self.units()?.group.clone())
    }

    /// Coordinates of a unit in [`unit_group`](Self::unit_group).
    pub fn unit_coords(&self, u: &OElement) -> Result<ElementOf> {
        let d = self.units()?;
        d.group.element(d.coords(self, u)?)
    }

    /// The unit with the given coordinates.
    pub fn unit_from_coords(&self, x: &ElementOf) -> Result<OElement> {
        let d = self.units()?;
        if !x.group().same_presentation(&d.group) {
            return Err(Error::GroupMismatch);
        }
        let mut acc = self.one();
        for (i, c) in x.coords().iter().enumerate() {
            let e = c.to_u64().expect("reduced coordinate");
            acc = acc.mul(&d.generator(i).pow(e));
        }
        Ok(acc)
    }
}

/// `L^×` truncated to `Z ⊕ (O_L/p^N)^×` (`π = p` spans `Z`) as a module over
/// `Gal(L/K) = Z/f`, the generator `1` acting as Frobenius.
#[derive(Clone, Debug)]
pub struct TruncatedMultGroup {
    tower: UnramifiedTower,
    module: GModule,
}

pub fn truncated_mult_module(tower: &UnramifiedTower) -> Result<TruncatedMultGroup> {
    let g = FiniteGroup::cyclic(tower.degree())?;
    let units = tower.unit_group()?;
    let k = units.ngens();
    let cols: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            let x = tower.unit_from_coords(&units.gen(i))?;
            Ok(tower.unit_coords(&x.frobenius())?.into_coords())
        })
        .collect::<Result<_>>()?;
    let a = IntMatrix::from_columns(k, &cols);
    let unit_module = galois_module(&g, &units, a)?;
    let module = GModule::integers(&g).direct_sum(&unit_module)?;
    Ok(TruncatedMultGroup { tower: tower.clone(), module })
}

impl TruncatedMultGroup {
    pub fn tower(&self) -> &UnramifiedTower {
        &self.tower
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    /// Coordinates of `p^v u`.
    pub fn coords(&self, v: i64, u: &OElement) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::from(v)];
        out.extend(self.tower.unit_coords(u)?.into_coords());
        Ok(out)
    }

    /// Coordinates of `π = p`.
    pub fn pi(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.module.rank()];
        out[0] = BigInt::from(1);
        out
    }

    /// The unit part as a submodule, with its inclusion.
    pub fn unit_module(&self) -> Result<GModule> {
        let k = self.module.rank() - 1;
        let g = self.module.group();
        let action = g
            .elements()
            .map(|s| {
                let a = self.module.action(s).matrix();
                a.select_rows(&(1..=k).collect::<Vec<_>>()).select_cols(&(1..=k).collect::<Vec<_>>())
            })
            .collect();
        GModule::new(g, &self.tower.unit_group()?, action)
    }
}
