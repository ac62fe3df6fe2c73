//! Ordinary character tables.

mod dixon;
pub mod matching;
pub(crate) mod modp;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub use dixon::{class_matrix, dixon_prime, structure_constants};

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::{conjugacy_classes, power_class_map, ClassData, PermGroup};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// The irreducible characters of a group, rows in canonical order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<PermGroup>,
    classes: ClassData,
    values: Vec<Vec<Cyclotomic>>,
    exponent: u64,
    seed: u64,
    prime: u64,
}

impl CharacterTable {
    pub fn compute(group: impl Into<Arc<PermGroup>>) -> Self {
        Self::compute_seeded(group, DEFAULT_SEED)
    }

    pub fn compute_seeded(group: impl Into<Arc<PermGroup>>, seed: u64) -> Self {
        let group = group.into();
        let classes = conjugacy_classes(&group);
        let out = dixon::irreducibles(&group, &classes, seed);
        let mut values = out.values;
        sort_rows(&mut values);
        Self {
            exponent: group.exponent(),
            group,
            classes,
            values,
            seed,
            prime: out.prime,
        }
    }

    /// Reassembles a table from stored parts, checking it against the group.
    pub fn from_parts(
        group: impl Into<Arc<PermGroup>>,
        values: Vec<Vec<Cyclotomic>>,
        seed: u64,
    ) -> Result<Self> {
        let group = group.into();
        let classes = conjugacy_classes(&group);
        if values.len() != classes.len() || values.iter().any(|r| r.len() != classes.len()) {
            return Err(Error::CacheMismatch(
                "table shape differs from class count".into(),
            ));
        }
        let t = Self {
            exponent: group.exponent(),
            prime: dixon_prime(group.order(), group.exponent()),
            group,
            classes,
            values,
            seed,
        };
        verify_orthogonality(&t)?;
        Ok(t)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn classes(&self) -> &ClassData {
        &self.classes
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.values[i]
    }

    pub fn value(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.values[i][j]
    }

    /// Number of irreducible characters (and of classes).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.values[i][0].to_i64().expect("degree is an integer") as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.len()).map(|i| self.degree(i)).collect()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The prime the modular computation ran over.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn power_map(&self, k: i64) -> Vec<usize> {
        power_class_map(&self.group, &self.classes, k)
    }
}

/// Trivial character first, then by degree and values.
fn sort_rows(values: &mut [Vec<Cyclotomic>]) {
    values.sort_by(|a, b| {
        let ta = a.iter().all(Cyclotomic::is_one);
        let tb = b.iter().all(Cyclotomic::is_one);
        tb.cmp(&ta)
            .then_with(|| a[0].to_i64().cmp(&b[0].to_i64()))
            .then_with(|| a.cmp(b))
    });
}

/// Checks both orthogonality relations of the table exactly.
pub fn verify_orthogonality(t: &CharacterTable) -> Result<()> {
    verify_orthogonality_raw(t.values(), &t.classes().sizes)
}

/// Checks both orthogonality relations for a square table of values on
/// classes of the given sizes; the group order is the sum of the sizes.
pub fn verify_orthogonality_raw(values: &[Vec<Cyclotomic>], sizes: &[usize]) -> Result<()> {
    let k = sizes.len();
    let order = BigInt::from(sizes.iter().sum::<usize>());
    if values.len() != k || values.iter().any(|r| r.len() != k) {
        return Err(Error::OrthogonalityViolation {
            relation: "shape",
            i: values.len(),
            j: k,
        });
    }
    let conj: Vec<Vec<Cyclotomic>> = values
        .iter()
        .map(|r| r.iter().map(Cyclotomic::conjugate).collect())
        .collect();
    for i in 0..k {
        for j in i..k {
            let s: Cyclotomic = (0..k)
                .map(|c| (&values[i][c] * &conj[j][c]).scale_int(sizes[c] as i64))
                .sum();
            let expected = if i == j {
                order.clone()
            } else {
                BigInt::zero()
            };
            if s != Cyclotomic::from_rational(BigRational::from_integer(expected)) {
                return Err(Error::OrthogonalityViolation {
                    relation: "row",
                    i,
                    j,
                });
            }
        }
    }
    for a in 0..k {
        for b in a..k {
            let s: Cyclotomic = (0..k).map(|i| &values[i][a] * &conj[i][b]).sum();
            let expected = if a == b {
                BigRational::new(order.clone(), BigInt::from(sizes[a]))
            } else {
                BigRational::zero()
            };
            if s != Cyclotomic::from_rational(expected) {
                return Err(Error::OrthogonalityViolation {
                    relation: "column",
                    i: a,
                    j: b,
                });
            }
        }
    }
    Ok(())
}
