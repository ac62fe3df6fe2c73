//! Dixon–Schneider: common eigenvectors of the class matrices over GF(p),
//! lifted to exact cyclotomic values.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modp;
use crate::cyclo::Cyclotomic;
use crate::perm::{ClassData, PermGroup};

/// Smallest prime p ≡ 1 (mod exponent) with p > 2⌈√order⌉.
pub fn dixon_prime(order: usize, exponent: u64) -> u64 {
    let mut root = modp::isqrt(order as u64);
    if root * root < order as u64 {
        root += 1;
    }
    let bound = 2 * root;
    let mut p = exponent + 1;
    while p <= bound || !modp::is_prime(p) {
        p += exponent;
    }
    p
}

/// `B_r[s][t] = #{x ∈ K_r : x·z_s ∈ K_t}` for class representatives `z_s`.
///
/// Row sums are `|K_r|`, and `(χ(z_t))_t` is a right eigenvector with
/// eigenvalue the central character `ω_χ(K_r)`.
pub fn class_matrix(g: &PermGroup, cd: &ClassData, r: usize) -> Vec<Vec<u64>> {
    let k = cd.len();
    let members = cd.members(r);
    let mut m = vec![vec![0u64; k]; k];
    for (s, row) in m.iter_mut().enumerate() {
        let z = cd.representatives[s];
        for &x in &members {
            row[cd.class_of[g.mul(x, z)]] += 1;
        }
    }
    m
}

/// `c[t] = #{(x, y) ∈ K_r × K_s : x·y = z_t}`.
pub fn structure_constants(g: &PermGroup, cd: &ClassData, r: usize, s: usize) -> Vec<u64> {
    let members = cd.members(r);
    cd.representatives
        .iter()
        .map(|&z| {
            members
                .iter()
                .filter(|&&x| cd.class_of[g.mul(g.inv(x), z)] == s)
                .count() as u64
        })
        .collect()
}

struct Subspace {
    /// Basis rows in reduced echelon form.
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    /// First class matrix not yet tried on this space.
    next: usize,
}

impl Subspace {
    fn new(mut rows: Vec<Vec<u64>>, next: usize, p: u64) -> Self {
        let pivots = modp::rref(&mut rows, p);
        Self { rows, pivots, next }
    }

    /// Matrix of `m` acting on the subspace, in the coordinates of `rows`.
    fn restrict(&self, m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
        let w = self.rows.len();
        let mut out = vec![vec![0u64; w]; w];
        for (j, b) in self.rows.iter().enumerate() {
            for (i, &pc) in self.pivots.iter().enumerate() {
                let u = m[pc]
                    .iter()
                    .zip(b)
                    .fold(0u64, |acc, (&a, &x)| (acc + modp::mul(a, x, p)) % p);
                out[i][j] = u;
            }
        }
        out
    }

    /// Eigenspaces of the restricted matrix `r`, or `None` if it is scalar.
    fn split(&self, r: &[Vec<u64>], p: u64) -> Option<Vec<Vec<Vec<u64>>>> {
        let w = r.len();
        let eigenvalues = modp::roots(&modp::charpoly(r, p), p);
        if eigenvalues.len() <= 1 {
            return None;
        }
        let k = self.rows[0].len();
        let mut spaces = Vec::with_capacity(eigenvalues.len());
        let mut total = 0;
        for lambda in eigenvalues {
            let shifted: Vec<Vec<u64>> = (0..w)
                .map(|i| {
                    (0..w)
                        .map(|j| {
                            if i == j {
                                modp::sub(r[i][j], lambda, p)
                            } else {
                                r[i][j]
                            }
                        })
                        .collect()
                })
                .collect();
            let vectors: Vec<Vec<u64>> = modp::nullspace(&shifted, p)
                .into_iter()
                .map(|c| {
                    let mut v = vec![0u64; k];
                    for (cj, b) in c.iter().zip(&self.rows) {
                        if *cj == 0 {
                            continue;
                        }
                        for (vt, &bt) in v.iter_mut().zip(b) {
                            *vt = (*vt + modp::mul(*cj, bt, p)) % p;
                        }
                    }
                    v
                })
                .collect();
            total += vectors.len();
            spaces.push(vectors);
        }
        assert_eq!(total, w, "class matrix is not diagonalizable modulo {p}");
        Some(spaces)
    }
}

pub(crate) struct Dixon {
    pub values: Vec<Vec<Cyclotomic>>,
    pub prime: u64,
}

/// Computes the irreducible characters, unsorted.
pub(crate) fn irreducibles(g: &PermGroup, cd: &ClassData, seed: u64) -> Dixon {
    let k = cd.len();
    let order = g.order();
    let exponent = g.exponent();
    let p = dixon_prime(order, exponent);
    let z = modp::pow(modp::primitive_root(p), (p - 1) / exponent, p);

    let mut mats: Vec<Option<Vec<Vec<u64>>>> = vec![None; k];
    let mut matrix = |r: usize| -> Vec<Vec<u64>> {
        mats[r]
            .get_or_insert_with(|| {
                class_matrix(g, cd, r)
                    .into_iter()
                    .map(|row| row.into_iter().map(|v| v % p).collect())
                    .collect()
            })
            .clone()
    };

    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut work = vec![Subspace::new(identity, 1, p)];
    let mut lines: Vec<Vec<u64>> = Vec::with_capacity(k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while let Some(mut space) = work.pop() {
        if space.rows.len() == 1 {
            lines.push(space.rows.pop().unwrap());
            continue;
        }
        let mut parts = None;
        while parts.is_none() && space.next < k {
            let r = space.restrict(&matrix(space.next), p);
            space.next += 1;
            parts = space.split(&r, p);
        }
        if parts.is_none() {
            // No single class matrix separates this space: try random combinations.
            let restricted: Vec<Vec<Vec<u64>>> =
                (1..k).map(|r| space.restrict(&matrix(r), p)).collect();
            let w = space.rows.len();
            for _ in 0..64 {
                let mut comb = vec![vec![0u64; w]; w];
                for m in &restricted {
                    let c = rng.gen_range(0..p);
                    for (crow, mrow) in comb.iter_mut().zip(m) {
                        for (a, &b) in crow.iter_mut().zip(mrow) {
                            *a = (*a + modp::mul(c, b, p)) % p;
                        }
                    }
                }
                parts = space.split(&comb, p);
                if parts.is_some() {
                    break;
                }
            }
        }
        let parts = parts.unwrap_or_else(|| {
            panic!(
                "common eigenspace of dimension {} does not split",
                space.rows.len()
            )
        });
        for rows in parts {
            work.push(Subspace::new(rows, space.next, p));
        }
    }
    assert_eq!(lines.len(), k, "wrong number of characters");

    let inverse_class: Vec<usize> = cd
        .representatives
        .iter()
        .map(|&x| cd.class_of[g.inv(x)])
        .collect();
    // power_classes[t][j] = class of z_t^j for 0 ≤ j < o(z_t)
    let power_classes: Vec<Vec<usize>> = cd
        .representatives
        .iter()
        .map(|&x| {
            let mut acc = 0usize;
            (0..g.element_order(x))
                .map(|_| {
                    let c = cd.class_of[acc];
                    acc = g.mul(acc, x);
                    c
                })
                .collect()
        })
        .collect();

    let max_degree = modp::isqrt(order as u64);
    let values = lines
        .into_iter()
        .map(|line| {
            let s = modp::inv(line[0], p);
            let v: Vec<u64> = line.iter().map(|&x| modp::mul(x, s, p)).collect();
            let norm = (0..k).fold(0u64, |acc, t| {
                let term = modp::mul(
                    cd.sizes[t] as u64 % p,
                    modp::mul(v[t], v[inverse_class[t]], p),
                    p,
                );
                (acc + term) % p
            });
            let target = modp::mul(order as u64 % p, modp::inv(norm, p), p);
            let d = (1..=max_degree)
                .find(|d| d * d % p == target)
                .expect("degree has a square root below p/2");
            let chi: Vec<u64> = v.iter().map(|&x| modp::mul(x, d, p)).collect();
            (0..k)
                .map(|t| lift(&chi, &power_classes[t], d, exponent, z, p))
                .collect()
        })
        .collect();
    Dixon { values, prime: p }
}

/// Recovers χ(g) from the reductions of χ on the powers of g.
fn lift(chi: &[u64], powers: &[usize], degree: u64, exponent: u64, z: u64, p: u64) -> Cyclotomic {
    let o = powers.len() as u64;
    let zo = modp::pow(z, exponent / o, p);
    let zo_inv = modp::inv(zo, p);
    let o_inv = modp::inv(o % p, p);
    let mult: Vec<i64> = (0..o)
        .map(|k| {
            let step = modp::pow(zo_inv, k, p);
            let mut w = 1u64;
            let mut acc = 0u64;
            for &c in powers {
                acc = (acc + modp::mul(chi[c], w, p)) % p;
                w = modp::mul(w, step, p);
            }
            modp::mul(acc, o_inv, p) as i64
        })
        .collect();
    assert_eq!(
        mult.iter().sum::<i64>() as u64,
        degree,
        "eigenvalue multiplicities do not sum to the degree"
    );
    Cyclotomic::from_multiplicities(o as u32, &mult)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::perm::conjugacy_classes;

    #[test]
    fn primes() {
        // |S3| = 6, exponent 6: bound 2·3 = 6, first p ≡ 1 mod 6 above it is 7
        assert_eq!(dixon_prime(6, 6), 7);
        // order 96, exponent 12: bound 20, candidates 25, 37
        assert_eq!(dixon_prime(96, 12), 37);
        assert_eq!(dixon_prime(1, 1), 3);
    }

    #[test]
    fn identity_class_matrix() {
        let g = catalog("symmetric:4").unwrap();
        let cd = conjugacy_classes(&g);
        let m = class_matrix(&g, &cd, 0);
        for (i, row) in m.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, u64::from(i == j));
            }
        }
    }

    #[test]
    fn row_sums_are_class_sizes() {
        let g = catalog("D8xA4").unwrap();
        let cd = conjugacy_classes(&g);
        for r in 0..cd.len() {
            for row in class_matrix(&g, &cd, r) {
                assert_eq!(row.iter().sum::<u64>(), cd.sizes[r] as u64);
            }
        }
    }

    #[test]
    fn s3_transposition_pairs() {
        let g = catalog("symmetric:3").unwrap();
        let cd = conjugacy_classes(&g);
        let t = cd.index_of_name("2A").unwrap();
        assert_eq!(structure_constants(&g, &cd, t, t)[0], 3);
    }

    #[test]
    fn pair_counts_agree_with_class_matrix() {
        let g = catalog("symmetric:4").unwrap();
        let cd = conjugacy_classes(&g);
        for r in 0..cd.len() {
            let b = class_matrix(&g, &cd, r);
            for s in 0..cd.len() {
                let c = structure_constants(&g, &cd, r, s);
                for t in 0..cd.len() {
                    assert_eq!(c[t] * cd.sizes[t] as u64, b[s][t] * cd.sizes[s] as u64);
                }
            }
        }
    }
}
