//! The group and module spec grammar.

use crate::abgroup::FgAbGroup;
use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::FiniteGroup;
use crate::localfield::{build_finite_field, build_tower, truncated_mult_module};

pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    FiniteGroup::named(spec)
}

fn parse_u64(s: &str, what: &str) -> Result<u64> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad {what} `{s}`")))
}

/// `p^f`
fn parse_prime_power(s: &str) -> Result<(u64, usize)> {
    let (p, f) = s.split_once('^').ok_or_else(|| Error::Parse(format!("expected p^f, got `{s}`")))?;
    Ok((parse_u64(p, "prime")?, parse_u64(f, "degree")? as usize))
}

fn galois_group(given: Option<&FiniteGroup>, f: usize) -> Result<FiniteGroup> {
    let g = FiniteGroup::cyclic(f)?;
    match given {
        Some(h) if h.order() != f || !h.is_cyclic() => {
            Err(Error::Parse(format!("module needs the cyclic group of order {f}")))
        }
        _ => Ok(g),
    }
}

/// Parses `trivial:Z`, `trivial:Z/n`, `groupring`, `ig`, `jg`, `ffunits:p^f`,
/// `ffadd:p^f` or `ltrunc:p,f,N`. The field modules carry their own Galois
/// group; a `--group` given alongside must be cyclic of the right order.
pub fn parse_module(group: Option<&FiniteGroup>, spec: &str) -> Result<GModule> {
    let need = || group.cloned().ok_or_else(|| Error::Parse(format!("module `{spec}` needs --group")));
    let spec = spec.trim();
    if let Some(a) = spec.strip_prefix("trivial:") {
        let a = match a {
            "Z" => FgAbGroup::free(1),
            _ => {
                let n = a.strip_prefix("Z/").ok_or_else(|| Error::Parse(format!("bad trivial module `{a}`")))?;
                let n = parse_u64(n, "order")?;
                if n == 0 {
                    return Err(Error::Parse("Z/0: use trivial:Z".into()));
                }
                FgAbGroup::of(&[n])
            }
        };
        return Ok(GModule::trivial(&need()?, &a));
    }
    match spec {
        "groupring" => return Ok(GModule::group_ring(&need()?)),
        "ig" => return Ok(GModule::augmentation_ideal(&need()?).0),
        "jg" => return Ok(GModule::j_module(&need()?).0),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("ffunits:") {
        let (p, f) = parse_prime_power(rest)?;
        galois_group(group, f)?;
        return build_finite_field(p, f)?.multiplicative_module();
    }
    if let Some(rest) = spec.strip_prefix("ffadd:") {
        let (p, f) = parse_prime_power(rest)?;
        galois_group(group, f)?;
        return build_finite_field(p, f)?.additive_module();
    }
    if let Some(rest) = spec.strip_prefix("ltrunc:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected ltrunc:p,f,N, got `{spec}`")));
        }
        let p = parse_u64(parts[0], "prime")?;
        let f = parse_u64(parts[1], "degree")? as usize;
        let n = parse_u64(parts[2], "precision")? as u32;
        galois_group(group, f)?;
        return Ok(truncated_mult_module(&build_tower(p, f, n)?)?.module().clone());
    }
    Err(Error::Parse(format!("unknown module `{spec}`")))
}

/// `a..b` (inclusive) or a single degree.
pub fn parse_range(s: &str) -> Result<(i32, i32)> {
    let num = |x: &str| x.trim().parse::<i32>().map_err(|_| Error::Parse(format!("bad degree `{x}`")));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let r = num(s)?;
            (r, r)
        }
    };
    if lo > hi {
        return Err(Error::Parse(format!("empty range `{s}`")));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-2..2").unwrap(), (-2, 2));
        assert_eq!(parse_range("1..=3").unwrap(), (1, 3));
        assert_eq!(parse_range("0").unwrap(), (0, 0));
        assert!(parse_range("2..1").is_err());
        assert!(parse_range("a..1").is_err());
    }

    #[test]
    fn modules() {
        let g = parse_group("cyclic:4").unwrap();
        assert_eq!(parse_module(Some(&g), "trivial:Z").unwrap().rank(), 1);
        assert_eq!(parse_module(Some(&g), "trivial:Z/8").unwrap().underlying().orders()[0], 8.into());
        assert_eq!(parse_module(Some(&g), "groupring").unwrap().rank(), 4);
        assert_eq!(parse_module(Some(&g), "ig").unwrap().rank(), 3);
        assert_eq!(parse_module(Some(&g), "jg").unwrap().rank(), 3);
        assert_eq!(parse_module(None, "ffunits:3^2").unwrap().group().order(), 2);
        assert_eq!(parse_module(None, "ltrunc:2,2,3").unwrap().group().order(), 2);
        assert!(matches!(parse_module(Some(&g), "ffunits:3^2"), Err(Error::Parse(_))));
        assert!(matches!(parse_module(None, "groupring"), Err(Error::Parse(_))));
        assert!(matches!(parse_module(Some(&g), "trivial:Q"), Err(Error::Parse(_))));
        assert!(matches!(parse_module(Some(&g), "bogus"), Err(Error::Parse(_))));
    }
}
