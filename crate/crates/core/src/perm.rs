//! Finite permutation groups given by generators, with full element
//! enumeration, conjugacy classes and power maps.
//!
//! Permutations act on the right: `x^(pq) = (x^p)^q`, so the product
//! `p * q` applies `p` first. Conjugation is `x^g = g⁻¹ x g`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &i in &images {
            let i = i as usize;
            if i >= degree || seen[i] {
                return Err(Error::NotAPermutation { degree });
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (pos, &from) in cycle.iter().enumerate() {
                let to = cycle[(pos + 1) % cycle.len()];
                if from as usize >= degree || to as usize >= degree {
                    return Err(Error::NotAPermutation { degree });
                }
                images[from as usize] = to;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self * other`: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }

    /// The disjoint cycles of length at least two.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// A finite permutation group with all elements enumerated.
///
/// Element 0 is the identity; the rest follow breadth-first order from the
/// identity, multiplying by the generators in the order given.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_with_cap(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_with_cap(
        degree: usize,
        gens: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let p = elements[i].compose(g);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();
        Ok(Self {
            degree,
            generators: gens,
            elements,
            index,
            inverses,
            orders,
        })
    }

    /// Builds the group of a given degree from 0-based image lists.
    pub fn from_image_lists(degree: usize, gens: &[Vec<u32>]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| Permutation::new(g.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        let p = self.elements[self.inverses[g]]
            .compose(&self.elements[x])
            .compose(&self.elements[g]);
        self.index[&p]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let e = k.rem_euclid(self.orders[a] as i64);
        let base = &self.elements[a];
        let mut acc = Permutation::identity(self.degree);
        for _ in 0..e {
            acc = acc.compose(base);
        }
        self.index[&acc]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    /// Lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| acc.lcm(&o))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Sorted generator image lists, the input to the canonical group hash.
    pub fn canonical_generator_images(&self) -> Vec<Vec<u32>> {
        let mut gens: Vec<Vec<u32>> = self.generators.iter().map(|g| g.images.clone()).collect();
        gens.sort();
        gens.dedup();
        gens
    }
}

/// Conjugacy classes in canonical order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassData {
    /// Class index of each element.
    pub class_of: Vec<usize>,
    /// Smallest element index in each class.
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
    /// Element order of each class.
    pub orders: Vec<u64>,
    /// ATLAS-style labels ("1A", "2A", "2B", ...).
    pub names: Vec<String>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Element indices of class `c`, ascending.
    pub fn members(&self, c: usize) -> Vec<usize> {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(_, &k)| k == c)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn letter_code(mut i: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'A' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}

/// Partitions the group into conjugacy classes.
///
/// Classes are sorted by (element order, class size, smallest member).
pub fn conjugacy_classes(g: &PermGroup) -> ClassData {
    let n = g.order();
    let gens: Vec<usize> = g
        .generators()
        .iter()
        .map(|p| g.index_of(p).expect("generator is an element"))
        .collect();
    let mut raw = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if raw[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        raw[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &s in &gens {
                let y = g.conj(x, s);
                if raw[y] == usize::MAX {
                    raw[y] = id;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&c| (g.element_order(orbits[c][0]), orbits[c].len(), orbits[c][0]));
    let mut relabel = vec![0usize; orbits.len()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new;
    }
    let class_of = raw.iter().map(|&c| relabel[c]).collect();
    let representatives: Vec<usize> = order.iter().map(|&c| orbits[c][0]).collect();
    let sizes = order.iter().map(|&c| orbits[c].len()).collect();
    let orders: Vec<u64> = representatives
        .iter()
        .map(|&r| g.element_order(r))
        .collect();
    let mut names = Vec::with_capacity(orders.len());
    let mut run = 0usize;
    for (i, &o) in orders.iter().enumerate() {
        if i > 0 && orders[i - 1] == o {
            run += 1;
        } else {
            run = 0;
        }
        names.push(format!("{o}{}", letter_code(run)));
    }
    ClassData {
        class_of,
        representatives,
        sizes,
        orders,
        names,
    }
}

/// Maps each class to the class of the `k`-th power of its elements.
pub fn power_class_map(g: &PermGroup, cd: &ClassData, k: i64) -> Vec<usize> {
    cd.representatives
        .iter()
        .map(|&r| cd.class_of[g.pow(r, k)])
        .collect()
}

/// Group description accepted on input: 1-based image lists.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl GroupJson {
    pub fn into_group(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                if g.contains(&0) {
                    return Err(Error::NotAPermutation {
                        degree: self.degree,
                    });
                }
                Permutation::new(g.iter().map(|&x| x - 1).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        PermGroup::from_generators(self.degree, gens)
    }

    pub fn from_group(g: &PermGroup) -> Self {
        Self {
            degree: g.degree(),
            generators: g
                .generators()
                .iter()
                .map(|p| p.images().iter().map(|&x| x + 1).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        let t = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        PermGroup::from_generators(4, vec![t, c]).unwrap()
    }

    /// Closure by brute force: multiply every pair until nothing new appears.
    fn closure_oracle(gens: &[Permutation], degree: usize) -> usize {
        let mut set = std::collections::BTreeSet::new();
        set.insert(Permutation::identity(degree));
        set.extend(gens.iter().cloned());
        loop {
            let cur: Vec<_> = set.iter().cloned().collect();
            let before = set.len();
            for a in &cur {
                for b in &cur {
                    set.insert(a.compose(b));
                }
            }
            if set.len() == before {
                return set.len();
            }
        }
    }

    #[test]
    fn trivial_group_from_empty_generators() {
        let g = PermGroup::from_generators(1, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn s4_order_matches_closure() {
        let g = s4();
        assert_eq!(g.order(), 24);
        assert_eq!(closure_oracle(g.generators(), 4), 24);
    }

    #[test]
    fn degree_mismatch_and_cap() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            PermGroup::from_generators(3, vec![a, b]),
            Err(Error::DegreeMismatch { .. })
        ));
        let t = Permutation::from_cycles(5, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert!(matches!(
            PermGroup::from_generators_with_cap(5, vec![t, c], 100),
            Err(Error::OrderCapExceeded { cap: 100 })
        ));
    }

    #[test]
    fn not_a_permutation() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn s4_classes() {
        let g = s4();
        let cd = conjugacy_classes(&g);
        // Brute-force orbit sizes under all of G.
        let mut brute: Vec<usize> = (0..g.order())
            .map(|x| {
                let mut orbit: Vec<usize> = (0..g.order()).map(|h| g.conj(x, h)).collect();
                orbit.sort();
                orbit.dedup();
                orbit.len()
            })
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        brute.sort();
        // Canonical order puts the double transpositions (size 3) before
        // the transpositions (size 6).
        assert_eq!(cd.sizes, vec![1, 3, 6, 8, 6]);
        assert_eq!(cd.names, vec!["1A", "2A", "2B", "3A", "4A"]);
        assert_eq!(cd.sizes.iter().sum::<usize>(), 24);
        assert_eq!(cd.representatives[0], 0);
        assert!(brute.iter().all(|s| cd.sizes.contains(s)));
    }

    #[test]
    fn s4_square_map() {
        let g = s4();
        let cd = conjugacy_classes(&g);
        let sq = power_class_map(&g, &cd, 2);
        let four = cd.index_of_name("4A").unwrap();
        // The double transpositions form the class of size 3.
        assert_eq!(cd.sizes[sq[four]], 3);
        assert_eq!(cd.orders[sq[four]], 2);
        assert_eq!(power_class_map(&g, &cd, 1), (0..5).collect::<Vec<_>>());
    }

    #[test]
    fn abelian_groups_have_singleton_classes() {
        let c = Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap();
        let g = PermGroup::from_generators(6, vec![c]).unwrap();
        let cd = conjugacy_classes(&g);
        assert_eq!(cd.len(), 6);
        assert!(cd.sizes.iter().all(|&s| s == 1));
    }

    #[test]
    fn json_round_trip() {
        let j = GroupJson {
            degree: 4,
            generators: vec![vec![2, 1, 3, 4], vec![2, 3, 4, 1]],
        };
        let g = j.into_group().unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(GroupJson::from_group(&g), j);
    }

    #[test]
    fn letter_codes() {
        assert_eq!(letter_code(0), "A");
        assert_eq!(letter_code(25), "Z");
        assert_eq!(letter_code(26), "AA");
    }
}
