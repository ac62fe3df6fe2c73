//! G-character tables of a normal subgroup N: the blocks of Irr(G) with
//! proportional restrictions to N, the square matrix X with class-size
//! diagonal D, the relations read off from Λ = X·D·X̄ᵗ, and the G-invariant
//! table X̂.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chartab::CharacterTable;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::normal::{self, oracle, NormalSubgroup, SubIrrData};

/// Rows of Irr(G) grouped by proportional restriction to N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClasses {
    /// G-classes contained in N, ascending.
    pub columns: Vec<usize>,
    /// Ascending row lists, ordered by smallest member.
    pub blocks: Vec<Vec<usize>>,
    pub block_of: Vec<usize>,
}

impl EquivClasses {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `χ(1)/φ(1)` for every pair in block `b`, which equals `e_χ/e_φ`.
    pub fn ratios(&self, t: &CharacterTable, b: usize) -> Vec<Vec<Ratio<u64>>> {
        let rows = &self.blocks[b];
        rows.iter()
            .map(|&i| {
                rows.iter()
                    .map(|&j| Ratio::new(t.degree(i), t.degree(j)))
                    .collect()
            })
            .collect()
    }
}

pub fn equivalence_classes(t: &CharacterTable, n: &NormalSubgroup) -> EquivClasses {
    let columns = n.class_indices().to_vec();
    let mut groups: BTreeMap<Vec<Cyclotomic>, Vec<usize>> = BTreeMap::new();
    for i in 0..t.len() {
        let d = BigRational::new(BigInt::one(), BigInt::from(t.degree(i)));
        let key: Vec<Cyclotomic> = columns.iter().map(|&c| t.value(i, c).scale(&d)).collect();
        groups.entry(key).or_default().push(i);
    }
    let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
    blocks.sort();
    let mut block_of = vec![0; t.len()];
    for (b, rows) in blocks.iter().enumerate() {
        for &r in rows {
            block_of[r] = b;
        }
    }
    EquivClasses {
        columns,
        blocks,
        block_of,
    }
}

/// How representatives of the blocks are chosen.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum RepPolicy {
    /// Lowest canonical row of each block, blocks in canonical order.
    #[default]
    Lowest,
    /// One row per block, in the order given; rows of X follow this order.
    Explicit(Vec<usize>),
}

/// The matrix X of representative characters on the G-classes of N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GCharTable {
    pub normal_id: String,
    pub normal_order: usize,
    /// |G:N|.
    pub index: usize,
    pub columns: Vec<usize>,
    pub column_names: Vec<String>,
    /// Sizes of the column classes.
    pub d: Vec<usize>,
    /// Blocks in row order.
    pub blocks: Vec<Vec<usize>>,
    /// The chosen row of Irr(G) for each block.
    pub reps: Vec<usize>,
    pub degrees: Vec<u64>,
    pub x: Matrix,
}

pub fn g_character_table(
    t: &CharacterTable,
    eq: &EquivClasses,
    n: &NormalSubgroup,
    policy: &RepPolicy,
) -> Result<GCharTable> {
    let (blocks, reps): (Vec<Vec<usize>>, Vec<usize>) = match policy {
        RepPolicy::Lowest => eq.blocks.iter().map(|b| (b.clone(), b[0])).unzip(),
        RepPolicy::Explicit(rows) => {
            if rows.len() != eq.len() {
                return Err(Error::RepresentativeCount {
                    expected: eq.len(),
                    found: rows.len(),
                });
            }
            let mut seen = vec![false; eq.len()];
            for (pos, &r) in rows.iter().enumerate() {
                if r >= t.len() {
                    return Err(Error::BadRepresentative { row: r, block: pos });
                }
                let b = eq.block_of[r];
                // The trivial character's block leads.
                if seen[b] || (pos == 0 && b != 0) {
                    return Err(Error::BadRepresentative { row: r, block: pos });
                }
                seen[b] = true;
            }
            rows.iter()
                .map(|&r| (eq.blocks[eq.block_of[r]].clone(), r))
                .unzip()
        }
    };
    let cd = t.classes();
    let x = reps
        .iter()
        .map(|&r| eq.columns.iter().map(|&c| t.value(r, c).clone()).collect())
        .collect();
    Ok(GCharTable {
        normal_id: n.id().to_string(),
        normal_order: n.order(),
        index: t.group().order() / n.order(),
        column_names: eq.columns.iter().map(|&c| cd.names[c].clone()).collect(),
        d: eq.columns.iter().map(|&c| cd.sizes[c]).collect(),
        columns: eq.columns.clone(),
        degrees: reps.iter().map(|&r| t.degree(r)).collect(),
        blocks,
        reps,
        x,
    })
}

/// Λ = X·D·X̄ᵗ and the relation values derived from its diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relations {
    pub lambda: Vec<u64>,
    /// λ_i / |N| = e_i² t_i.
    pub a: Vec<u64>,
    /// |N| χ_i(1)² / λ_i = t_i θ_i(1)².
    pub b: Vec<u64>,
    /// |N| χ_i(1) / λ_i = θ_i(1) / e_i.
    pub c: Vec<Ratio<u64>>,
}

pub fn lambda_matrix(x: &GCharTable) -> Matrix {
    let xd: Matrix =
        x.x.iter()
            .map(|r| {
                r.iter()
                    .zip(&x.d)
                    .map(|(v, &d)| v.scale_int(d as i64))
                    .collect()
            })
            .collect();
    linalg::matmul(&xd, &linalg::conjugate_transpose(&x.x))
}

fn as_positive_integer(v: &Cyclotomic) -> Option<u64> {
    v.to_integer().and_then(|i| i.to_u64()).filter(|&i| i > 0)
}

pub fn lambda_and_relations(x: &GCharTable) -> Result<Relations> {
    let lam = lambda_matrix(x);
    let k = lam.len();
    let n = x.normal_order as u64;
    let mut rel = Relations {
        lambda: Vec::with_capacity(k),
        a: Vec::with_capacity(k),
        b: Vec::with_capacity(k),
        c: Vec::with_capacity(k),
    };
    for i in 0..k {
        if let Some(j) = (0..k).find(|&j| j != i && !lam[i][j].is_zero()) {
            return Err(Error::NonIntegralRelation {
                block: i,
                what: format!("Λ has a nonzero entry at ({i}, {j})"),
            });
        }
        let l = as_positive_integer(&lam[i][i]).ok_or_else(|| Error::NonIntegralRelation {
            block: i,
            what: format!("λ = {} is not a positive integer", lam[i][i]),
        })?;
        let chi = x.degrees[i];
        if l % n != 0 {
            return Err(Error::NonIntegralRelation {
                block: i,
                what: format!("λ/|N| = {l}/{n}"),
            });
        }
        if !(n * chi * chi).is_multiple_of(l) {
            return Err(Error::NonIntegralRelation {
                block: i,
                what: format!("|N|χ(1)²/λ = {}/{l}", n * chi * chi),
            });
        }
        rel.lambda.push(l);
        rel.a.push(l / n);
        rel.b.push(n * chi * chi / l);
        rel.c.push(Ratio::new(n * chi, l));
    }
    Ok(rel)
}

/// (χ_i)_N is irreducible iff λ_i = |N|.
pub fn restriction_irreducible(rel: &Relations, x: &GCharTable, i: usize) -> bool {
    rel.lambda[i] == x.normal_order as u64
}

/// A ramification number, orbit length and constituent degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub e: u64,
    pub t: u64,
    pub d: u64,
}

impl Triple {
    pub fn new(e: u64, t: u64, d: u64) -> Self {
        Self { e, t, d }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSolutions {
    pub a: u64,
    pub b: u64,
    pub c: Ratio<u64>,
    pub solutions: Vec<Triple>,
    /// gcd(|N|, |G:N|) = 1, so t is the |G:N|-part of B.
    pub hall_applied: bool,
    /// A square-free, so e = 1 and t = A.
    pub squarefree_a_applied: bool,
    /// B square-free, so θ(1) = 1 and t = B.
    pub squarefree_b_applied: bool,
    pub determined: bool,
}

fn exact_sqrt(n: u64) -> Option<u64> {
    let r = crate::chartab::modp::isqrt(n);
    (r * r == n).then_some(r)
}

fn is_squarefree(n: u64) -> bool {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d * d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest divisor of `b` whose primes all divide `m`.
fn part_on_primes_of(mut b: u64, m: u64) -> u64 {
    let mut out = 1;
    loop {
        let g = b.gcd(&m);
        if g == 1 {
            return out;
        }
        b /= g;
        out *= g;
    }
}

/// Every (e, t, d) consistent with the relations of one block.
pub fn solve_block(a: u64, b: u64, degree: u64, index: u64, order_n: u64) -> BlockSolutions {
    let hall = order_n.gcd(&index) == 1;
    let sqa = is_squarefree(a);
    let sqb = is_squarefree(b);
    let g = a.gcd(&b);
    let mut solutions: Vec<Triple> = (1..=g)
        .filter(|t| g.is_multiple_of(*t))
        .filter_map(|t| {
            let e = exact_sqrt(a / t)?;
            let d = exact_sqrt(b / t)?;
            Some(Triple::new(e, t, d))
        })
        .filter(|s| {
            s.e * s.t * s.d == degree && index.is_multiple_of(s.t) && order_n.is_multiple_of(s.d)
        })
        .collect();
    if hall {
        let t = part_on_primes_of(b, index);
        solutions.retain(|s| s.t == t);
    }
    if sqa {
        solutions.retain(|s| s.e == 1 && s.t == a);
    }
    if sqb {
        solutions.retain(|s| s.d == 1 && s.t == b);
    }
    BlockSolutions {
        a,
        b,
        // θ(1)/e = χ(1)/(e²t)
        c: Ratio::new(degree, a),
        determined: solutions.len() == 1,
        solutions,
        hall_applied: hall,
        squarefree_a_applied: sqa,
        squarefree_b_applied: sqb,
    }
}

pub fn infer_parameters(rel: &Relations, x: &GCharTable) -> Result<Vec<BlockSolutions>> {
    (0..rel.a.len())
        .map(|i| {
            let mut s = solve_block(
                rel.a[i],
                rel.b[i],
                x.degrees[i],
                x.index as u64,
                x.normal_order as u64,
            );
            s.c = rel.c[i];
            if s.solutions.is_empty() {
                Err(Error::NoSolution { block: i })
            } else {
                Ok(s)
            }
        })
        .collect()
}

/// Rows of minimal G-invariant characters of N, aligned with the rows of X.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTable {
    pub xhat: Matrix,
    /// Ramification numbers.
    pub e: Vec<u64>,
    /// Orbit of Irr(N) matched to each block.
    pub orbit: Vec<usize>,
    pub t: Vec<u64>,
    pub theta_degree: Vec<u64>,
}

impl InvariantTable {
    pub fn oracle_triple(&self, i: usize) -> Triple {
        Triple::new(self.e[i], self.t[i], self.theta_degree[i])
    }
}

/// Orbit sums of Irr(N) evaluated on the G-classes of N.
pub fn orbit_sums(t: &CharacterTable, columns: &[usize], sub: &SubIrrData) -> Matrix {
    let cd = t.classes();
    let cd_n = sub.table_n.classes();
    let ncls: Vec<usize> = columns
        .iter()
        .map(|&c| {
            let x = sub.sub.from_g[cd.representatives[c]].expect("column class lies in N");
            cd_n.class_of[x]
        })
        .collect();
    sub.orbits
        .iter()
        .map(|orbit| {
            ncls.iter()
                .map(|&nc| orbit.iter().map(|&th| sub.table_n.value(th, nc)).sum())
                .collect()
        })
        .collect()
}

pub fn invariant_table(
    t: &CharacterTable,
    x: &GCharTable,
    sub: &SubIrrData,
) -> Result<InvariantTable> {
    let sums = orbit_sums(t, &x.columns, sub);
    let mut out = InvariantTable {
        xhat: Vec::new(),
        e: Vec::new(),
        orbit: Vec::new(),
        t: Vec::new(),
        theta_degree: Vec::new(),
    };
    for (i, row) in x.x.iter().enumerate() {
        let found = sums.iter().enumerate().find_map(|(o, s)| {
            let d = s[0].to_i64()? as u64;
            if !x.degrees[i].is_multiple_of(d) {
                return None;
            }
            let e = x.degrees[i] / d;
            row.iter()
                .zip(s)
                .all(|(v, w)| *v == w.scale_int(e as i64))
                .then_some((o, e))
        });
        let (o, e) = found.ok_or(Error::BlockOrbitMismatch { block: i })?;
        out.xhat.push(sums[o].clone());
        out.e.push(e);
        out.orbit.push(o);
        out.t.push(sub.t[o] as u64);
        out.theta_degree.push(sub.theta_degree(sub.theta_reps[o]));
    }
    if linalg::det(&out.xhat).is_zero() {
        return Err(Error::Singular("X̂"));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub nonsingular: bool,
    pub class_functions_solved: usize,
    pub characters_decomposed: usize,
    pub row_sum_all_ones: bool,
    pub passed: bool,
}

fn combine(coeffs: &[Cyclotomic], rows: &[Vec<Cyclotomic>]) -> Vec<Cyclotomic> {
    let k = rows.first().map_or(0, Vec::len);
    (0..k)
        .map(|j| coeffs.iter().zip(rows).map(|(c, r)| c * &r[j]).sum())
        .collect()
}

/// The rows of X̂ form a basis of the G-invariant class functions on N.
pub fn basis_check_cf_gn(inv: &InvariantTable, seed: u64) -> BasisReport {
    let rows = &inv.xhat;
    let k = rows.len();
    let at = linalg::transpose(rows);
    let nonsingular = !linalg::det(rows).is_zero();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut class_functions_solved = 0;
    for _ in 0..4 {
        let f: Vec<Cyclotomic> = (0..k)
            .map(|_| Cyclotomic::from_fraction(rng.gen_range(-6..=6), rng.gen_range(1..=5)))
            .collect();
        if let Some(c) = linalg::solve(&at, &f) {
            if combine(&c, rows) == f {
                class_functions_solved += 1;
            }
        }
    }
    let mut characters_decomposed = 0;
    for _ in 0..4 {
        let m: Vec<Cyclotomic> = (0..k)
            .map(|_| Cyclotomic::from_int(rng.gen_range(0..4)))
            .collect();
        let chi = combine(&m, rows);
        if linalg::solve(&at, &chi).as_ref() == Some(&m) {
            characters_decomposed += 1;
        }
    }
    let ones = vec![Cyclotomic::one(); k];
    let row_sum = combine(&ones, rows);
    let row_sum_all_ones = linalg::solve(&at, &row_sum).as_ref() == Some(&ones);
    BasisReport {
        nonsingular,
        class_functions_solved,
        characters_decomposed,
        row_sum_all_ones,
        passed: nonsingular
            && class_functions_solved == 4
            && characters_decomposed == 4
            && row_sum_all_ones,
    }
}

/// Actions on N-columns and X̂-rows that commute with evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Action {
    Identity,
    /// Complex conjugation on values, n ↦ n⁻¹ on classes.
    Inversion,
    /// ζ ↦ ζ^k on values.
    Galois(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionReport {
    pub action: Action,
    /// (fixed rows, fixed columns) for each power of the action.
    pub per_power: Vec<(usize, usize)>,
    pub passed: bool,
}

fn exponent_of_columns(t: &CharacterTable, columns: &[usize]) -> u64 {
    columns
        .iter()
        .fold(1u64, |acc, &c| acc.lcm(&t.classes().orders[c]))
}

pub fn generalized_brauer_check(
    t: &CharacterTable,
    x: &GCharTable,
    inv: &InvariantTable,
    action: Action,
) -> Result<ActionReport> {
    let exp = exponent_of_columns(t, &x.columns) as i64;
    let k = match action {
        Action::Identity => 1,
        Action::Inversion => -1,
        Action::Galois(k) => k,
    }
    .rem_euclid(exp);
    let Some(kinv) = (1..=exp).find(|m| (k * m) % exp == 1 % exp) else {
        return Err(Error::IncompatibleAction(format!(
            "{k} is not a unit modulo the exponent {exp} of N"
        )));
    };
    let pmap = t.power_map(kinv);
    let q: Vec<usize> = x
        .columns
        .iter()
        .map(|&c| {
            x.columns
                .iter()
                .position(|&d| d == pmap[c])
                .expect("powers stay in N")
        })
        .collect();
    let rows = &inv.xhat;
    let p: Vec<usize> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let image: Vec<Cyclotomic> = r.iter().map(|v| v.galois(k)).collect();
            rows.iter()
                .position(|s| *s == image)
                .ok_or_else(|| Error::IncompatibleAction(format!("image of row {i} is not a row")))
        })
        .collect::<Result<_>>()?;
    for (i, r) in rows.iter().enumerate() {
        for (j, v) in r.iter().enumerate() {
            if rows[p[i]][q[j]] != *v {
                return Err(Error::IncompatibleAction(format!("entry ({i}, {j}) moves")));
            }
        }
    }
    let mut per_power = Vec::new();
    let (mut pp, mut qq): (Vec<usize>, Vec<usize>) =
        ((0..p.len()).collect(), (0..q.len()).collect());
    loop {
        let fr = (0..pp.len()).filter(|&i| pp[i] == i).count();
        let fc = (0..qq.len()).filter(|&j| qq[j] == j).count();
        per_power.push((fr, fc));
        pp = pp.iter().map(|&i| p[i]).collect();
        qq = qq.iter().map(|&j| q[j]).collect();
        if pp.iter().enumerate().all(|(i, &v)| i == v)
            && qq.iter().enumerate().all(|(j, &v)| j == v)
        {
            break;
        }
    }
    Ok(ActionReport {
        action,
        passed: per_power.iter().all(|(a, b)| a == b),
        per_power,
    })
}

/// (real-valued rows of X̂, real G-classes in N).
pub fn real_counts(t: &CharacterTable, inv: &InvariantTable, n: &NormalSubgroup) -> (usize, usize) {
    let rows = inv
        .xhat
        .iter()
        .filter(|r| r.iter().all(Cyclotomic::is_real))
        .count();
    (rows, normal::real_g_classes(t, n).len())
}

/// A statement read off the tables, with the verdict of the direct check on N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deduction {
    pub claim: String,
    pub confirmed: bool,
}

fn primes(n: u64) -> Vec<u64> {
    oracle::primes_of(n as usize)
        .into_iter()
        .map(|p| p as u64)
        .collect()
}

pub fn structural_deductions(
    t: &CharacterTable,
    x: &GCharTable,
    rel: &Relations,
    inv: &InvariantTable,
    n: &NormalSubgroup,
    sub: &SubIrrData,
) -> Vec<Deduction> {
    let ng = &sub.sub.group;
    let mut out = Vec::new();
    if x.x.iter().flatten().all(|v| !v.is_zero()) {
        out.push(Deduction {
            claim: "X has no zero entries, so N is nilpotent".into(),
            confirmed: oracle::is_nilpotent(ng),
        });
    }
    for i in 0..rel.b.len() {
        let pb = primes(rel.b[i]);
        let degree = inv.xhat[i][0].to_i64().unwrap_or(0) as u64;
        out.push(Deduction {
            claim: format!(
                "prime divisors of the degree of row {} of X̂ are {:?}",
                i + 1,
                pb
            ),
            confirmed: primes(degree) == pb,
        });
    }
    for p in primes(n.order() as u64) {
        if rel.b.iter().all(|b| b % p != 0) {
            out.push(Deduction {
                claim: format!("N has an abelian normal Sylow {p}-subgroup"),
                confirmed: oracle::has_abelian_normal_sylow(ng, p as usize),
            });
        }
    }
    let real = normal::real_g_classes(t, n).len();
    if real == 1 {
        out.push(Deduction {
            claim: "N has only one real G-class, so |N| is odd".into(),
            confirmed: n.order() % 2 == 1,
        });
    }
    if real == 2 {
        out.push(Deduction {
            claim: "N has exactly two real G-classes, so N has a normal Sylow 2-subgroup".into(),
            confirmed: oracle::has_normal_sylow(ng, 2),
        });
    }
    out
}
