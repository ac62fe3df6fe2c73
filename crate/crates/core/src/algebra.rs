//! Elements of the group algebra over cyclotomic coefficients.

use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::chartab::{structure_constants, CharacterTable};
use crate::cyclo::Cyclotomic;
use crate::gtable::EquivClasses;
use crate::normal::{NormalSubgroup, SubIrrData};
use crate::perm::{ClassData, PermGroup};

/// A dense formal sum Σ c_g g over the enumerated elements of a group.
#[derive(Clone, Debug)]
pub struct GroupAlgebraElement<'g> {
    group: &'g PermGroup,
    coeffs: Vec<Cyclotomic>,
}

impl PartialEq for GroupAlgebraElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for GroupAlgebraElement<'_> {}

impl<'g> GroupAlgebraElement<'g> {
    pub fn zero(group: &'g PermGroup) -> Self {
        Self {
            group,
            coeffs: vec![Cyclotomic::zero(); group.order()],
        }
    }

    pub fn basis(group: &'g PermGroup, element: usize) -> Self {
        let mut v = Self::zero(group);
        v.coeffs[element] = Cyclotomic::one();
        v
    }

    pub fn from_coeffs(group: &'g PermGroup, coeffs: Vec<Cyclotomic>) -> Self {
        assert_eq!(coeffs.len(), group.order());
        Self { group, coeffs }
    }

    pub fn coeff(&self, element: usize) -> &Cyclotomic {
        &self.coeffs[element]
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            group: self.group,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        Self {
            group: self.group,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Convolution product over the supports.
    pub fn product(&self, other: &Self) -> Self {
        let g = self.group;
        let mut out = Self::zero(g);
        let rhs = other.support();
        for x in self.support() {
            for &y in &rhs {
                let z = g.mul(x, y);
                out.coeffs[z] = &out.coeffs[z] + &(&self.coeffs[x] * &other.coeffs[y]);
            }
        }
        out
    }

    /// Commutes with every generator of the group.
    pub fn is_central(&self) -> bool {
        let g = self.group;
        g.generators().iter().all(|s| {
            let s = Self::basis(g, g.index_of(s).expect("generator is an element"));
            self.product(&s) == s.product(self)
        })
    }
}

impl<'g> Mul for &GroupAlgebraElement<'g> {
    type Output = GroupAlgebraElement<'g>;
    fn mul(self, rhs: Self) -> GroupAlgebraElement<'g> {
        self.product(rhs)
    }
}

/// The sum of the elements of class `i`.
pub fn class_sum<'g>(g: &'g PermGroup, cd: &ClassData, i: usize) -> GroupAlgebraElement<'g> {
    let mut v = GroupAlgebraElement::zero(g);
    for x in cd.members(i) {
        v.coeffs[x] = Cyclotomic::one();
    }
    v
}

/// Coordinates in the class sums of the G-classes of N, if `v` is constant
/// on G-classes and supported in N.
pub fn membership_and_coords(
    v: &GroupAlgebraElement<'_>,
    cd: &ClassData,
    n: &NormalSubgroup,
) -> Option<Vec<Cyclotomic>> {
    for (x, c) in v.coeffs.iter().enumerate() {
        if *c != v.coeffs[cd.representatives[cd.class_of[x]]] {
            return None;
        }
        if !c.is_zero() && !n.contains(x) {
            return None;
        }
    }
    Some(
        n.class_indices()
            .iter()
            .map(|&k| v.coeffs[cd.representatives[k]].clone())
            .collect(),
    )
}

/// The three counts that must agree for the center of the algebra restricted to N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub g_classes_in_n: usize,
    pub orbits_on_irr_n: usize,
    pub blocks: usize,
    pub passed: bool,
}

pub fn dimension_check(n: &NormalSubgroup, sub: &SubIrrData, eq: &EquivClasses) -> DimensionReport {
    let a = n.class_indices().len();
    let b = sub.orbits.len();
    let c = eq.len();
    DimensionReport {
        g_classes_in_n: a,
        orbits_on_irr_n: b,
        blocks: c,
        passed: a == b && b == c,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentReport {
    pub supported_in_n: bool,
    pub class_constant: bool,
    pub idempotent: bool,
    pub orthogonal: bool,
    pub sum_is_identity: bool,
    pub passed: bool,
}

/// Values of f_b = Σ_{χ ∈ block b} χ(1)χ(g⁻¹)/|G| on the classes of G.
pub fn block_idempotents(t: &CharacterTable, eq: &EquivClasses) -> Vec<Vec<Cyclotomic>> {
    let cd = t.classes();
    let inv = t.power_map(-1);
    let order = BigInt::from(t.group().order());
    eq.blocks
        .iter()
        .map(|rows| {
            (0..cd.len())
                .map(|c| {
                    let s: Cyclotomic = rows
                        .iter()
                        .map(|&r| t.value(r, inv[c]).scale_int(t.degree(r) as i64))
                        .sum();
                    s.scale(&BigRational::new(BigInt::from(1), order.clone()))
                })
                .collect()
        })
        .collect()
}

/// Products of central elements, given by their class values, computed
/// through the pair counts of the class multiplication.
pub struct ClassAlgebra {
    /// c[r][s][t] = #{(x, y) ∈ K_r × K_s : xy = z_t}
    c: Vec<Vec<Vec<u64>>>,
}

impl ClassAlgebra {
    pub fn new(t: &CharacterTable) -> Self {
        let k = t.len();
        let c = (0..k)
            .map(|r| {
                (0..k)
                    .map(|s| structure_constants(t.group(), t.classes(), r, s))
                    .collect()
            })
            .collect();
        Self { c }
    }

    /// m[r][t] = Σ_s c[r][s][t] b_s, so (a·b)_t = Σ_r a_r m[r][t].
    fn right_factor(&self, b: &[Cyclotomic]) -> Vec<Vec<Cyclotomic>> {
        let k = b.len();
        (0..k)
            .map(|r| {
                (0..k)
                    .map(|t| {
                        (0..k)
                            .filter(|&s| self.c[r][s][t] != 0 && !b[s].is_zero())
                            .map(|s| b[s].scale_int(self.c[r][s][t] as i64))
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    fn apply(a: &[Cyclotomic], m: &[Vec<Cyclotomic>]) -> Vec<Cyclotomic> {
        let k = a.len();
        (0..k)
            .map(|t| {
                (0..k)
                    .filter(|&r| !a[r].is_zero())
                    .map(|r| &a[r] * &m[r][t])
                    .sum()
            })
            .collect()
    }
}

pub fn idempotent_support_check(
    t: &CharacterTable,
    eq: &EquivClasses,
    n: &NormalSubgroup,
) -> IdempotentReport {
    idempotent_support_check_with(t, eq, n, &ClassAlgebra::new(t))
}

/// As [`idempotent_support_check`], reusing precomputed class multiplication.
pub fn idempotent_support_check_with(
    t: &CharacterTable,
    eq: &EquivClasses,
    n: &NormalSubgroup,
    alg: &ClassAlgebra,
) -> IdempotentReport {
    let g = t.group();
    let cd = t.classes();
    let order = BigRational::from_integer(BigInt::from(g.order()));
    // Element-level coefficients χ(1)χ(x⁻¹)/|G|, summed over each block.
    let elements: Vec<GroupAlgebraElement<'_>> = eq
        .blocks
        .iter()
        .map(|rows| {
            let coeffs = (0..g.order())
                .map(|x| {
                    let c = cd.class_of[g.inv(x)];
                    let s: Cyclotomic = rows
                        .iter()
                        .map(|&r| t.value(r, c).scale_int(t.degree(r) as i64))
                        .sum();
                    s.scale(&order.recip())
                })
                .collect();
            GroupAlgebraElement::from_coeffs(g, coeffs)
        })
        .collect();
    let supported_in_n = elements
        .iter()
        .all(|e| e.support().into_iter().all(|x| n.contains(x)));
    let class_constant = elements.iter().all(|e| {
        (0..g.order()).all(|x| e.coeffs[x] == e.coeffs[cd.representatives[cd.class_of[x]]])
    });
    let f = block_idempotents(t, eq);
    debug_assert!(elements
        .iter()
        .zip(&f)
        .all(|(e, v)| (0..cd.len()).all(|c| e.coeffs[cd.representatives[c]] == v[c])));
    let factors: Vec<Vec<Vec<Cyclotomic>>> = f.iter().map(|v| alg.right_factor(v)).collect();
    let zero = vec![Cyclotomic::zero(); cd.len()];
    let mut idempotent = true;
    let mut orthogonal = true;
    for (i, fi) in f.iter().enumerate() {
        for (j, mj) in factors.iter().enumerate() {
            let p = ClassAlgebra::apply(fi, mj);
            if i == j {
                idempotent &= p == *fi;
            } else {
                orthogonal &= p == zero;
            }
        }
    }
    let total: Vec<Cyclotomic> = (0..cd.len())
        .map(|c| f.iter().map(|v| &v[c]).sum())
        .collect();
    let sum_is_identity = total.iter().enumerate().all(|(c, v)| {
        *v == if c == 0 {
            Cyclotomic::one()
        } else {
            Cyclotomic::zero()
        }
    });
    IdempotentReport {
        passed: supported_in_n && class_constant && idempotent && orthogonal && sum_is_identity,
        supported_in_n,
        class_constant,
        idempotent,
        orthogonal,
        sum_is_identity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::chartab::class_matrix;
    use crate::gtable::equivalence_classes;
    use crate::normal::normal_subgroups;

    #[test]
    fn identity_class_sum() {
        let g = catalog("symmetric:3").unwrap();
        let cd = crate::perm::conjugacy_classes(&g);
        assert_eq!(class_sum(&g, &cd, 0), GroupAlgebraElement::basis(&g, 0));
        let t = cd.index_of_name("2A").unwrap();
        assert_eq!(class_sum(&g, &cd, t).support().len(), 3);
    }

    #[test]
    fn class_sum_products_follow_class_matrices() {
        let g = catalog("symmetric:4").unwrap();
        let cd = crate::perm::conjugacy_classes(&g);
        for i in 0..cd.len() {
            let ki = class_sum(&g, &cd, i);
            assert!(ki.is_central());
            let m = class_matrix(&g, &cd, i);
            for j in 0..cd.len() {
                let p = &ki * &class_sum(&g, &cd, j);
                for l in 0..cd.len() {
                    // coefficient of z_l in K_i K_j is #{(x,y) : xy = z_l}
                    let c = structure_constants(&g, &cd, i, j)[l];
                    assert_eq!(
                        p.coeff(cd.representatives[l]),
                        &Cyclotomic::from_int(c as i64)
                    );
                    assert_eq!(c * cd.sizes[l] as u64, m[j][l] * cd.sizes[j] as u64);
                }
            }
        }
    }

    #[test]
    fn coordinates() {
        let t = CharacterTable::compute(catalog("symmetric:4").unwrap());
        let n = &normal_subgroups(&t)[1];
        let g = t.group();
        let cd = t.classes();
        let inside = class_sum(g, cd, n.class_indices()[1]);
        assert_eq!(
            membership_and_coords(&inside, cd, n),
            Some(vec![Cyclotomic::zero(), Cyclotomic::one()])
        );
        let outside = class_sum(g, cd, cd.index_of_name("3A").unwrap());
        assert!(membership_and_coords(&outside, cd, n).is_none());
        let combo = class_sum(g, cd, 0)
            .scale(&Cyclotomic::from_fraction(3, 7))
            .add(&inside.scale(&Cyclotomic::from_int(-2)));
        assert_eq!(
            membership_and_coords(&combo, cd, n),
            Some(vec![
                Cyclotomic::from_fraction(3, 7),
                Cyclotomic::from_int(-2)
            ])
        );
        let lone = GroupAlgebraElement::basis(g, cd.representatives[n.class_indices()[1]]);
        assert!(membership_and_coords(&lone, cd, n).is_none());
    }

    #[test]
    fn s4_v4_idempotents() {
        let t = CharacterTable::compute(catalog("symmetric:4").unwrap());
        let ns = normal_subgroups(&t);
        for n in &ns {
            let eq = equivalence_classes(&t, n);
            let r = idempotent_support_check(&t, &eq, n);
            assert!(r.passed, "{r:?}");
        }
        // Element-level product agrees with the class-level one.
        let eq = equivalence_classes(&t, &ns[1]);
        let f = block_idempotents(&t, &eq);
        let g = t.group();
        let e = GroupAlgebraElement::from_coeffs(
            g,
            t.classes()
                .class_of
                .iter()
                .map(|&c| f[0][c].clone())
                .collect(),
        );
        assert_eq!(&e * &e, e);
        assert!(e.support().iter().all(|&x| ns[1].contains(x)));
    }
}
