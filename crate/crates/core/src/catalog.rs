//! Named permutation realizations of small groups.
//!
//! Specs have the form `name[:params]`:
//!
//! | spec | group |
//! |------|-------|
//! | `cyclic:n` | C_n on n points |
//! | `dihedral:m` | dihedral group of order m (m even, m ≥ 6) on m/2 points |
//! | `symmetric:n`, `alternating:n` | S_n, A_n |
//! | `direct_product:s1,s2,...` | product acting on the disjoint union of points |
//! | `D8xA4` | D₈ × A₄, order 96 |
//! | `AutD16` | Aut(D₁₆) ≅ Hol(C₈), affine maps of Z/8, order 32 |
//! | `HolC5` | Hol(C₅), affine maps of Z/5, order 20 |
//! | `E8semiC4` | (C₂)³ ⋊ C₄ with a↦ab, b↦bc, c↦c, order 32 |

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// A group with its generators before enumeration.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn build(self) -> Result<PermGroup> {
        PermGroup::from_generators(self.degree, self.generators)
    }
}

fn bad(name: &str, reason: impl Into<String>) -> Error {
    Error::InvalidCatalogParams {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn parse_n(name: &str, params: Option<&str>) -> Result<usize> {
    params
        .ok_or_else(|| bad(name, "missing size parameter"))?
        .trim()
        .parse::<usize>()
        .map_err(|e| bad(name, e.to_string()))
}

fn perm(images: Vec<u32>) -> Permutation {
    Permutation::new(images).expect("catalog permutation")
}

pub fn cyclic(n: usize) -> Result<GroupSpec> {
    if n == 0 {
        return Err(bad("cyclic", "order must be positive"));
    }
    let generators = if n == 1 {
        vec![]
    } else {
        vec![perm((0..n as u32).map(|i| (i + 1) % n as u32).collect())]
    };
    Ok(GroupSpec {
        degree: n,
        generators,
    })
}

/// Dihedral group of order `order` acting on `order / 2` points.
pub fn dihedral(order: usize) -> Result<GroupSpec> {
    if order < 6 || !order.is_multiple_of(2) {
        return Err(bad("dihedral", "order must be even and at least 6"));
    }
    let n = (order / 2) as u32;
    let rot = perm((0..n).map(|i| (i + 1) % n).collect());
    let refl = perm((0..n).map(|i| (n - i) % n).collect());
    Ok(GroupSpec {
        degree: n as usize,
        generators: vec![rot, refl],
    })
}

pub fn symmetric(n: usize) -> Result<GroupSpec> {
    if n == 0 {
        return Err(bad("symmetric", "degree must be positive"));
    }
    let mut generators = Vec::new();
    if n >= 2 {
        generators.push(Permutation::from_cycles(n, &[&[0, 1]])?);
    }
    if n >= 3 {
        let cycle: Vec<u32> = (0..n as u32).collect();
        generators.push(Permutation::from_cycles(n, &[&cycle])?);
    }
    Ok(GroupSpec {
        degree: n,
        generators,
    })
}

pub fn alternating(n: usize) -> Result<GroupSpec> {
    if n == 0 {
        return Err(bad("alternating", "degree must be positive"));
    }
    let generators = (2..n as u32)
        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupSpec {
        degree: n,
        generators,
    })
}

pub fn direct_product(parts: &[GroupSpec]) -> GroupSpec {
    let degree: usize = parts.iter().map(|p| p.degree).sum();
    let mut generators = Vec::new();
    let mut offset = 0u32;
    for p in parts {
        for g in &p.generators {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (i, &v) in g.images().iter().enumerate() {
                images[offset as usize + i] = offset + v;
            }
            generators.push(perm(images));
        }
        offset += p.degree as u32;
    }
    GroupSpec { degree, generators }
}

/// Affine maps `x ↦ u·x + b` of Z/n for `u` in the given multipliers.
fn affine(n: u32, multipliers: &[u32]) -> GroupSpec {
    let mut generators = vec![perm((0..n).map(|x| (x + 1) % n).collect())];
    for &u in multipliers {
        generators.push(perm((0..n).map(|x| (u * x) % n).collect()));
    }
    GroupSpec {
        degree: n as usize,
        generators,
    }
}

pub fn d8_x_a4() -> GroupSpec {
    direct_product(&[dihedral(8).unwrap(), alternating(4).unwrap()])
}

pub fn aut_d16() -> GroupSpec {
    affine(8, &[3, 5])
}

pub fn hol_c5() -> GroupSpec {
    affine(5, &[2])
}

/// Points are vectors of F₂³ with bits a = 1, b = 2, c = 4. The generators
/// are the translation by `a` and the linear map `x` with
/// a ↦ a+b, b ↦ b+c, c ↦ c; the translations by b and c follow.
pub fn e8_semi_c4() -> GroupSpec {
    let x = |v: u32| {
        let (a, b, c) = (v & 1, (v >> 1) & 1, (v >> 2) & 1);
        // image of αa + βb + γc is αa + (α+β)b + (β+γ)c
        a | ((a ^ b) << 1) | ((b ^ c) << 2)
    };
    GroupSpec {
        degree: 8,
        generators: vec![
            perm((0..8).map(|v| v ^ 1).collect()),
            perm((0..8).map(x).collect()),
        ],
    }
}

/// Parses a catalog spec without enumerating the group.
pub fn spec(desc: &str) -> Result<GroupSpec> {
    let desc = desc.trim();
    let (name, params) = match desc.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (desc, None),
    };
    match name {
        "cyclic" => cyclic(parse_n(name, params)?),
        "dihedral" => dihedral(parse_n(name, params)?),
        "symmetric" => symmetric(parse_n(name, params)?),
        "alternating" => alternating(parse_n(name, params)?),
        "direct_product" => {
            let params = params.ok_or_else(|| bad(name, "missing factor list"))?;
            let parts = params.split(',').map(spec).collect::<Result<Vec<_>>>()?;
            if parts.is_empty() {
                return Err(bad(name, "empty factor list"));
            }
            Ok(direct_product(&parts))
        }
        "D8xA4" => Ok(d8_x_a4()),
        "AutD16" => Ok(aut_d16()),
        "HolC5" => Ok(hol_c5()),
        "E8semiC4" => Ok(e8_semi_c4()),
        _ => Err(Error::UnknownCatalogName(name.to_string())),
    }
}

/// Builds a catalog group from its spec string.
pub fn catalog(desc: &str) -> Result<PermGroup> {
    spec(desc)?.build()
}

/// Every catalog group plus the small products used by the corpus harness.
pub const CORPUS: &[&str] = &[
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "cyclic:8",
    "symmetric:3",
    "symmetric:4",
    "symmetric:5",
    "alternating:4",
    "alternating:5",
    "dihedral:8",
    "dihedral:10",
    "dihedral:12",
    "dihedral:16",
    "direct_product:cyclic:2,cyclic:2",
    "direct_product:cyclic:2,cyclic:2,cyclic:2",
    "direct_product:cyclic:2,cyclic:4",
    "direct_product:cyclic:3,cyclic:3",
    "direct_product:cyclic:2,symmetric:3",
    "direct_product:cyclic:3,symmetric:3",
    "direct_product:symmetric:3,symmetric:3",
    "direct_product:dihedral:8,cyclic:2",
    "direct_product:alternating:4,cyclic:2",
    "direct_product:symmetric:4,cyclic:2",
    "direct_product:dihedral:8,cyclic:3",
    "HolC5",
    "AutD16",
    "E8semiC4",
    "D8xA4",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::conjugacy_classes;

    #[test]
    fn orders() {
        for (s, n) in [
            ("cyclic:5", 5),
            ("dihedral:8", 8),
            ("symmetric:4", 24),
            ("alternating:4", 12),
            ("alternating:5", 60),
            ("D8xA4", 96),
            ("AutD16", 32),
            ("HolC5", 20),
            ("E8semiC4", 32),
            ("direct_product:cyclic:2,symmetric:3", 12),
        ] {
            assert_eq!(catalog(s).unwrap().order(), n, "{s}");
        }
    }

    #[test]
    fn cyclic_five_has_five_classes() {
        assert_eq!(conjugacy_classes(&catalog("cyclic:5").unwrap()).len(), 5);
    }

    #[test]
    fn aut_d16_class_data() {
        let cd = conjugacy_classes(&catalog("AutD16").unwrap());
        assert_eq!(cd.len(), 11);
        let mut sizes = cd.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn e8_semi_c4_relations() {
        let s = e8_semi_c4();
        let g = s.clone().build().unwrap();
        let ta = &s.generators[0];
        let x = &s.generators[1];
        let xi = x.inverse();
        let conj = |p: &Permutation| xi.compose(p).compose(x);
        let tb = conj(ta).compose(ta); // a^x = ab
        let tc = conj(&tb).compose(&tb); // b^x = bc
        assert_eq!(tb, perm((0..8).map(|v| v ^ 2).collect()));
        assert_eq!(tc, perm((0..8).map(|v| v ^ 4).collect()));
        assert_eq!(conj(&tc), tc);
        assert_eq!(x.order(), 4);
        assert_eq!(g.order(), 32);
    }

    #[test]
    fn unknown_and_bad_params() {
        assert!(matches!(catalog("nope"), Err(Error::UnknownCatalogName(_))));
        assert!(matches!(
            catalog("dihedral:5"),
            Err(Error::InvalidCatalogParams { .. })
        ));
        assert!(catalog("cyclic").is_err());
    }
}
