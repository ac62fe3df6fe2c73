//! Normal subgroups as unions of classes, and the action of G on Irr(N).

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::perm::{ClassData, PermGroup, Permutation};

/// A normal subgroup given by the G-classes it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSubgroup {
    class_indices: Vec<usize>,
    order: usize,
    members: Vec<bool>,
    id: String,
}

impl NormalSubgroup {
    /// Checks that the union of the given classes is a subgroup.
    pub fn from_classes(g: &PermGroup, cd: &ClassData, classes: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = classes.iter().copied().collect();
        let class_indices: Vec<usize> = set.into_iter().collect();
        let describe = || {
            class_indices
                .iter()
                .map(|&c| cd.names[c].as_str())
                .collect::<Vec<_>>()
                .join("+")
        };
        if class_indices.first() != Some(&0) || class_indices.iter().any(|&c| c >= cd.len()) {
            return Err(Error::UnknownNormal(describe()));
        }
        let mut in_set = vec![false; cd.len()];
        for &c in &class_indices {
            in_set[c] = true;
        }
        let members: Vec<bool> = cd.class_of.iter().map(|&c| in_set[c]).collect();
        let elems: Vec<usize> = (0..g.order()).filter(|&x| members[x]).collect();
        // A finite nonempty subset closed under products is a subgroup.
        for &a in &elems {
            for &b in &elems {
                if !members[g.mul(a, b)] {
                    return Err(Error::UnknownNormal(describe()));
                }
            }
        }
        let mut reps: Vec<&[u32]> = class_indices
            .iter()
            .map(|&c| g.element(cd.representatives[c]).images())
            .collect();
        reps.sort();
        let mut h = Sha256::new();
        for r in reps {
            for &x in r {
                h.update(x.to_le_bytes());
            }
            h.update(u32::MAX.to_le_bytes());
        }
        let id = hex::encode(&h.finalize()[..6]);
        Ok(Self {
            order: elems.len(),
            class_indices,
            members,
            id,
        })
    }

    pub fn class_indices(&self) -> &[usize] {
        &self.class_indices
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members[element]
    }

    pub fn contains_class(&self, c: usize) -> bool {
        self.class_indices.binary_search(&c).is_ok()
    }

    /// Stable identifier derived from the sorted class representatives.
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.members.len())
            .filter(|&x| self.members[x])
            .collect()
    }

    /// Class names joined with `+`, e.g. `1A+2B+4A`.
    pub fn label(&self, cd: &ClassData) -> String {
        self.class_indices
            .iter()
            .map(|&c| cd.names[c].as_str())
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Classes on which character `i` takes its degree.
pub fn kernel_of(t: &CharacterTable, i: usize) -> Vec<usize> {
    let row = t.row(i);
    (0..row.len()).filter(|&j| row[j] == row[0]).collect()
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter()
        .copied()
        .filter(|x| b.binary_search(x).is_ok())
        .collect()
}

/// All intersections of kernels of irreducible characters, sorted by order.
pub fn normal_subgroups(t: &CharacterTable) -> Vec<NormalSubgroup> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    for i in 0..t.len() {
        let k = kernel_of(t, i);
        if found.insert(k.clone()) {
            queue.push_back(k);
        }
    }
    let kernels: Vec<Vec<usize>> = found.iter().cloned().collect();
    while let Some(s) = queue.pop_front() {
        for k in &kernels {
            let n = intersect(&s, k);
            if found.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    let mut out: Vec<NormalSubgroup> = found
        .into_iter()
        .map(|cls| {
            NormalSubgroup::from_classes(t.group(), t.classes(), &cls)
                .expect("kernel intersection is a subgroup")
        })
        .collect();
    out.sort_by(|a, b| (a.order, &a.class_indices).cmp(&(b.order, &b.class_indices)));
    out
}

/// Smallest subgroup containing the given elements, as a membership map.
fn generated(g: &PermGroup, gens: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !inside[y] {
                inside[y] = true;
                queue.push_back(y);
            }
        }
    }
    inside
}

fn classes_of(cd: &ClassData, inside: &[bool]) -> Vec<usize> {
    (0..cd.len())
        .filter(|&c| inside[cd.representatives[c]])
        .collect()
}

/// Looks up a normal subgroup by id, by 1-based position in
/// [`normal_subgroups`], or by a class list such as `1A+2B`.
pub fn find_normal(t: &CharacterTable, key: &str) -> Result<NormalSubgroup> {
    let all = normal_subgroups(t);
    if let Some(n) = all.iter().find(|n| n.id() == key) {
        return Ok(n.clone());
    }
    if let Ok(i) = key.parse::<usize>() {
        return i
            .checked_sub(1)
            .and_then(|i| all.get(i))
            .cloned()
            .ok_or_else(|| Error::UnknownNormal(key.to_string()));
    }
    let cd = t.classes();
    let classes = key
        .split('+')
        .map(|name| {
            cd.index_of_name(name.trim())
                .ok_or_else(|| Error::UnknownNormal(key.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    NormalSubgroup::from_classes(t.group(), cd, &classes)
}

/// Normal subgroups found without the character table: joins of normal
/// closures of single classes. Returned as sorted class-index sets.
pub fn normal_subgroups_oracle(g: &PermGroup, cd: &ClassData) -> Vec<Vec<usize>> {
    let closures: Vec<Vec<usize>> = (0..cd.len())
        .map(|c| classes_of(cd, &generated(g, &cd.members(c))))
        .collect();
    let mut found: BTreeSet<Vec<usize>> = closures.iter().cloned().collect();
    found.insert(vec![0]);
    let mut queue: VecDeque<Vec<usize>> = found.iter().cloned().collect();
    while let Some(s) = queue.pop_front() {
        for c in &closures {
            let mut all = Vec::new();
            for &k in s.iter().chain(c) {
                all.extend(cd.members(k));
            }
            let j = classes_of(cd, &generated(g, &all));
            if found.insert(j.clone()) {
                queue.push_back(j);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by_key(|s| (s.iter().map(|&c| cd.sizes[c]).sum::<usize>(), s.clone()));
    out
}

/// N as a permutation group in its own right, with index maps to G.
#[derive(Clone, Debug)]
pub struct Materialized {
    pub group: PermGroup,
    /// G-element index of each N-element.
    pub to_g: Vec<usize>,
    /// N-element index of each G-element in N.
    pub from_g: Vec<Option<usize>>,
}

/// Restricts the natural action of G to N, which is faithful.
pub fn materialize(g: &PermGroup, n: &NormalSubgroup) -> Materialized {
    let mut gens: Vec<usize> = Vec::new();
    let mut inside = generated(g, &gens);
    for x in n.elements() {
        if !inside[x] {
            gens.push(x);
            inside = generated(g, &gens);
        }
    }
    let perms: Vec<Permutation> = gens.iter().map(|&x| g.element(x).clone()).collect();
    let group =
        PermGroup::from_generators(g.degree(), perms).expect("subgroup of an enumerated group");
    assert_eq!(group.order(), n.order());
    let to_g: Vec<usize> = group
        .elements()
        .iter()
        .map(|p| g.index_of(p).expect("N-element lies in G"))
        .collect();
    let mut from_g = vec![None; g.order()];
    for (i, &x) in to_g.iter().enumerate() {
        from_g[x] = Some(i);
    }
    Materialized {
        group,
        to_g,
        from_g,
    }
}

/// Irr(N) with the conjugation action of G.
#[derive(Clone, Debug)]
pub struct SubIrrData {
    pub sub: Materialized,
    pub table_n: CharacterTable,
    /// G-class containing each N-class.
    pub g_class_of: Vec<usize>,
    /// Permutation of Irr(N) induced by each generator of G.
    pub generator_action: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    /// Orbit lengths.
    pub t: Vec<usize>,
    /// Smallest member of each orbit.
    pub theta_reps: Vec<usize>,
}

impl SubIrrData {
    /// N-class of `g x g⁻¹` for each N-class of x.
    pub fn class_action(&self, g: &PermGroup, elem: usize) -> Vec<usize> {
        let cd_n = self.table_n.classes();
        let gi = g.inv(elem);
        cd_n.representatives
            .iter()
            .map(|&r| {
                let y = g.conj(self.sub.to_g[r], gi);
                cd_n.class_of[self.sub.from_g[y].expect("N is normal")]
            })
            .collect()
    }

    /// Characters θ of N with θ^g = θ, where θ^g(x) = θ(g x g⁻¹).
    pub fn fixed_characters(&self, g: &PermGroup, elem: usize) -> Vec<usize> {
        let pi = self.class_action(g, elem);
        (0..self.table_n.len())
            .filter(|&i| {
                let row = self.table_n.row(i);
                pi.iter().enumerate().all(|(c, &d)| row[d] == row[c])
            })
            .collect()
    }

    pub fn fixed_classes(&self, g: &PermGroup, elem: usize) -> Vec<usize> {
        let pi = self.class_action(g, elem);
        (0..pi.len()).filter(|&c| pi[c] == c).collect()
    }

    /// Row degree θ(1) of an Irr(N) character.
    pub fn theta_degree(&self, i: usize) -> u64 {
        self.table_n.degree(i)
    }
}

pub fn g_action_on_irr_n(t: &CharacterTable, n: &NormalSubgroup) -> Result<SubIrrData> {
    let g = t.group();
    let sub = materialize(g, n);
    let table_n = CharacterTable::compute_seeded(sub.group.clone(), t.seed());
    let cd_n = table_n.classes();
    let g_class_of: Vec<usize> = cd_n
        .representatives
        .iter()
        .map(|&r| t.classes().class_of[sub.to_g[r]])
        .collect();
    let mut data = SubIrrData {
        sub,
        table_n,
        g_class_of,
        generator_action: Vec::new(),
        orbit_of: Vec::new(),
        orbits: Vec::new(),
        t: Vec::new(),
        theta_reps: Vec::new(),
    };
    let k = data.table_n.len();
    for (gi, s) in g.generators().iter().enumerate() {
        let elem = g.index_of(s).expect("generator is an element");
        let pi = data.class_action(g, elem);
        let perm = (0..k)
            .map(|i| {
                let row = data.table_n.row(i);
                let image: Vec<_> = pi.iter().map(|&d| &row[d]).collect();
                (0..k)
                    .find(|&j| data.table_n.row(j).iter().eq(image.iter().copied()))
                    .ok_or(Error::ActionInconsistent {
                        row: i,
                        generator: gi,
                    })
            })
            .collect::<Result<Vec<usize>>>()?;
        data.generator_action.push(perm);
    }
    let mut orbit_of = vec![usize::MAX; k];
    let mut orbits = Vec::new();
    for start in 0..k {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for perm in &data.generator_action {
                let y = perm[x];
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = id;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    data.t = orbits.iter().map(Vec::len).collect();
    data.theta_reps = orbits.iter().map(|o| o[0]).collect();
    data.orbit_of = orbit_of;
    data.orbits = orbits;
    Ok(data)
}

/// Fixed-point counts of one element of G acting on N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerCount {
    /// G-element index.
    pub element: usize,
    pub fixed_characters: usize,
    pub fixed_classes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerReport {
    pub per_element: Vec<BrauerCount>,
    /// Irr(N) characters fixed by every element of G.
    pub invariant_characters: usize,
    /// N-classes fixed by every element of G.
    pub invariant_classes: usize,
}

impl BrauerReport {
    pub fn per_element_equal(&self) -> bool {
        self.per_element
            .iter()
            .all(|c| c.fixed_characters == c.fixed_classes)
    }
}

/// First element of each coset xN, in element order.
pub fn transversal(g: &PermGroup, n: &NormalSubgroup) -> Vec<usize> {
    let elems = n.elements();
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        out.push(x);
        for &y in &elems {
            seen[g.mul(x, y)] = true;
        }
    }
    out
}

pub fn brauer_per_element_check(
    t: &CharacterTable,
    n: &NormalSubgroup,
    sub: &SubIrrData,
) -> BrauerReport {
    let g = t.group();
    let per_element = transversal(g, n)
        .into_iter()
        .map(|x| BrauerCount {
            element: x,
            fixed_characters: sub.fixed_characters(g, x).len(),
            fixed_classes: sub.fixed_classes(g, x).len(),
        })
        .collect();
    let gens: Vec<usize> = g
        .generators()
        .iter()
        .map(|s| g.index_of(s).expect("generator is an element"))
        .collect();
    let common = |sets: Vec<Vec<usize>>, k: usize| {
        (0..k)
            .filter(|i| sets.iter().all(|s| s.contains(i)))
            .count()
    };
    let invariant_characters = common(
        gens.iter().map(|&s| sub.fixed_characters(g, s)).collect(),
        sub.table_n.len(),
    );
    let invariant_classes = common(
        gens.iter().map(|&s| sub.fixed_classes(g, s)).collect(),
        sub.table_n.len(),
    );
    BrauerReport {
        per_element,
        invariant_characters,
        invariant_classes,
    }
}

/// G-classes in N that contain the inverses of their elements.
pub fn real_g_classes(t: &CharacterTable, n: &NormalSubgroup) -> Vec<usize> {
    let inv = t.power_map(-1);
    n.class_indices()
        .iter()
        .copied()
        .filter(|&c| inv[c] == c)
        .collect()
}

/// Direct structural tests on a group, independent of any character table.
pub mod oracle {
    use crate::perm::PermGroup;

    pub fn is_abelian(g: &PermGroup) -> bool {
        g.is_abelian()
    }

    fn prime_factors(mut n: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                out.push(d);
                while n.is_multiple_of(d) {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    pub fn p_part(mut n: usize, p: usize) -> usize {
        let mut out = 1;
        while n.is_multiple_of(p) {
            n /= p;
            out *= p;
        }
        out
    }

    fn is_p_power(mut n: u64, p: u64) -> bool {
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }

    /// Elements whose order is a power of p.
    pub fn p_elements(g: &PermGroup, p: usize) -> Vec<usize> {
        (0..g.order())
            .filter(|&x| is_p_power(g.element_order(x), p as u64))
            .collect()
    }

    /// The Sylow p-subgroup is normal iff the p-elements number |G|_p.
    pub fn has_normal_sylow(g: &PermGroup, p: usize) -> bool {
        p_elements(g, p).len() == p_part(g.order(), p)
    }

    pub fn has_abelian_normal_sylow(g: &PermGroup, p: usize) -> bool {
        if !has_normal_sylow(g, p) {
            return false;
        }
        let els = p_elements(g, p);
        els.iter()
            .all(|&a| els.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Nilpotent iff every Sylow subgroup is normal.
    pub fn is_nilpotent(g: &PermGroup) -> bool {
        prime_factors(g.order())
            .into_iter()
            .all(|p| has_normal_sylow(g, p))
    }

    pub fn primes_of(n: usize) -> Vec<usize> {
        prime_factors(n)
    }
}
