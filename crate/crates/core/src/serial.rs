//! JSON forms. Integers travel as decimal strings.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abgroup::{AbHom, FgAbGroup, IntMatrix};

pub fn big_to_str(x: &BigInt) -> String {
    x.to_string()
}

pub fn str_to_big<E: serde::de::Error>(s: &str) -> Result<BigInt, E> {
    s.trim().parse::<BigInt>().map_err(|_| E::custom(format!("not an integer: `{s}`")))
}

/// Accepts a decimal string or a JSON integer.
#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Str(String),
    Int(i64),
}

impl IntRepr {
    fn to_big<E: serde::de::Error>(&self) -> Result<BigInt, E> {
        match self {
            IntRepr::Str(s) => str_to_big(s),
            IntRepr::Int(i) => Ok(BigInt::from(*i)),
        }
    }
}

pub mod bigvec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(big_to_str).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw: Vec<IntRepr> = Vec::deserialize(d)?;
        raw.iter().map(|r| r.to_big()).collect()
    }
}

pub mod bigmat {
    use super::*;

    pub fn serialize<S: Serializer>(m: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        m.iter().map(|r| r.iter().map(big_to_str).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let raw: Vec<Vec<IntRepr>> = Vec::deserialize(d)?;
        raw.iter().map(|r| r.iter().map(|x| x.to_big()).collect()).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    #[serde(with = "bigvec")]
    factors: Vec<BigInt>,
}

impl Serialize for FgAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GroupJson { factors: self.orders().to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FgAbGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let g = GroupJson::deserialize(d)?;
        FgAbGroup::new(g.factors).map_err(D::Error::custom)
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        bigmat::serialize(&self.to_dense(), s)
    }
}

/// Matrix JSON carries no column count, so a matrix with zero rows comes back
/// as `0 x 0`; [`AbHom`] restores the shape from its groups.
impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        IntMatrix::from_rows(bigmat::deserialize(d)?).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct HomJson {
    source: FgAbGroup,
    target: FgAbGroup,
    #[serde(with = "bigmat")]
    matrix: Vec<Vec<BigInt>>,
}

impl Serialize for AbHom {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HomJson { source: self.source().clone(), target: self.target().clone(), matrix: self.matrix().to_dense() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AbHom {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let h = HomJson::deserialize(d)?;
        let (r, c) = (h.target.ngens(), h.source.ngens());
        if h.matrix.len() != r || h.matrix.iter().any(|row| row.len() != c) {
            return Err(D::Error::custom("matrix shape does not match the groups"));
        }
        AbHom::new(h.source, h.target, IntMatrix::from_dense(r, c, h.matrix)).map_err(D::Error::custom)
    }
}
