//! The complete pipeline for one normal subgroup, cross-checked against
//! direct computation in N, and the versioned report format.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, ClassAlgebra, DimensionReport, IdempotentReport};
use crate::chartab::CharacterTable;
use crate::cyclo::Cyclotomic;
use crate::error::Result;
use crate::gtable::{
    self, Action, ActionReport, BasisReport, BlockSolutions, Deduction, GCharTable, InvariantTable,
    Relations, RepPolicy, Triple,
};
use crate::linalg;
use crate::normal::{self, BrauerReport, NormalSubgroup};
use crate::perm::GroupJson;

pub const SCHEMA: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// One named assertion and whether it held.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalAnalysis {
    pub id: String,
    pub order: usize,
    pub classes: Vec<String>,
    pub gtable: GCharTable,
    pub relations: Relations,
    pub solutions: Vec<BlockSolutions>,
    pub restriction_irreducible: Vec<bool>,
    pub invariant: InvariantTable,
    /// (e, t, θ(1)) read from Irr(N) itself.
    pub oracle_triples: Vec<Triple>,
    /// (real-valued rows of X̂, real G-classes in N).
    pub real_counts: (usize, usize),
    pub brauer: BrauerReport,
    pub actions: Vec<ActionReport>,
    pub basis: BasisReport,
    pub dimension: DimensionReport,
    pub idempotents: IdempotentReport,
    pub deductions: Vec<Deduction>,
    pub oracle_confirmations: Vec<Check>,
}

impl NormalAnalysis {
    pub fn failures(&self) -> Vec<&Check> {
        self.oracle_confirmations
            .iter()
            .filter(|c| !c.passed)
            .collect()
    }
}

fn units(m: u64) -> Vec<i64> {
    (1..m.max(2))
        .filter(|k| k.gcd(&m) == 1)
        .map(|k| k as i64)
        .collect()
}

/// Runs everything for (G, N) under the given representative policy.
pub fn analyze_normal(
    t: &CharacterTable,
    n: &NormalSubgroup,
    policy: &RepPolicy,
    alg: &ClassAlgebra,
) -> Result<NormalAnalysis> {
    let cd = t.classes();
    let eq = gtable::equivalence_classes(t, n);
    let x = gtable::g_character_table(t, &eq, n, policy)?;
    let rel = gtable::lambda_and_relations(&x)?;
    let solutions = gtable::infer_parameters(&rel, &x)?;
    let sub = normal::g_action_on_irr_n(t, n)?;
    let inv = gtable::invariant_table(t, &x, &sub)?;
    let k = x.x.len();
    let n_order = n.order() as u64;
    let restriction_irreducible: Vec<bool> = (0..k)
        .map(|i| gtable::restriction_irreducible(&rel, &x, i))
        .collect();
    let oracle_triples: Vec<Triple> = (0..k).map(|i| inv.oracle_triple(i)).collect();
    let real_counts = gtable::real_counts(t, &inv, n);
    let brauer = normal::brauer_per_element_check(t, n, &sub);
    let exp_n = n
        .class_indices()
        .iter()
        .fold(1u64, |acc, &c| acc.lcm(&cd.orders[c]));
    let mut actions = vec![
        gtable::generalized_brauer_check(t, &x, &inv, Action::Identity)?,
        gtable::generalized_brauer_check(t, &x, &inv, Action::Inversion)?,
    ];
    for k in units(exp_n).into_iter().filter(|&k| k > 1) {
        actions.push(gtable::generalized_brauer_check(
            t,
            &x,
            &inv,
            Action::Galois(k),
        )?);
    }
    let basis = gtable::basis_check_cf_gn(&inv, t.seed());
    let dimension = algebra::dimension_check(n, &sub, &eq);
    let idempotents = algebra::idempotent_support_check_with(t, &eq, n, alg);
    let deductions = gtable::structural_deductions(t, &x, &rel, &inv, n, &sub);

    let mut checks = Vec::new();
    checks.push(Check::new("Λ diagonal with positive integral λ", true, ""));
    checks.push(Check::new("det X ≠ 0", !linalg::det(&x.x).is_zero(), ""));
    for i in 0..k {
        let deg = x.degrees[i];
        checks.push(Check::new(
            format!("A·B = χ(1)² in block {}", i + 1),
            rel.a[i] * rel.b[i] == deg * deg,
            format!("{}·{} vs {}", rel.a[i], rel.b[i], deg * deg),
        ));
        let truth = oracle_triples[i];
        let s = &solutions[i];
        checks.push(Check::new(
            format!("oracle triple in solution set of block {}", i + 1),
            s.solutions.contains(&truth),
            format!("({},{},{})", truth.e, truth.t, truth.d),
        ));
        if s.determined {
            checks.push(Check::new(
                format!("unique solution of block {} is the oracle triple", i + 1),
                s.solutions[0] == truth,
                "",
            ));
        }
        checks.push(Check::new(
            format!("restriction of block {} irreducible iff e = t = 1", i + 1),
            restriction_irreducible[i] == (truth.e == 1 && truth.t == 1),
            "",
        ));
        checks.push(Check::new(
            format!("λ/e² = |N|·t in block {}", i + 1),
            rel.lambda[i] == n_order * truth.t * truth.e * truth.e,
            "",
        ));
        checks.push(Check::new(
            format!("orbit length of block {} divides |G:N|", i + 1),
            (x.index as u64).is_multiple_of(truth.t),
            "",
        ));
    }
    checks.push(Check::new(
        "#blocks = #G-classes in N = #orbits on Irr(N)",
        dimension.passed,
        format!(
            "{} / {} / {}",
            dimension.blocks, dimension.g_classes_in_n, dimension.orbits_on_irr_n
        ),
    ));
    checks.push(Check::new(
        "real rows of X̂ = real G-classes in N",
        real_counts.0 == real_counts.1,
        format!("{} / {}", real_counts.0, real_counts.1),
    ));
    checks.push(Check::new(
        "per-element fixed characters = fixed classes",
        brauer.per_element_equal(),
        "",
    ));
    for a in &actions {
        checks.push(Check::new(
            format!("fixed rows = fixed columns under {:?}", a.action),
            a.passed,
            format!("{:?}", a.per_power),
        ));
    }
    checks.push(Check::new(
        "rows of X̂ form a basis of invariant class functions",
        basis.passed,
        "",
    ));
    checks.push(Check::new(
        "block idempotents supported in N, orthogonal, summing to 1",
        idempotents.passed,
        format!("{idempotents:?}"),
    ));
    for d in &deductions {
        checks.push(Check::new(
            format!("deduction: {}", d.claim),
            d.confirmed,
            "",
        ));
    }
    if *policy != RepPolicy::Lowest {
        let lowest = gtable::g_character_table(t, &eq, n, &RepPolicy::Lowest)?;
        let lrel = gtable::lambda_and_relations(&lowest)?;
        // e of a row is χ(1)/θ̂(1), and λ/e² = |N|·t whichever row is chosen.
        let same = lowest.blocks.iter().enumerate().all(|(j, b)| {
            let i = x.blocks.iter().position(|c| c == b).expect("same blocks");
            let theta_hat = inv.xhat[i][0].to_i64().unwrap() as u64;
            let e = lowest.degrees[j] / theta_hat;
            lrel.lambda[j] == n_order * inv.t[i] * e * e
        });
        checks.push(Check::new("representative policy independence", same, ""));
    }

    Ok(NormalAnalysis {
        id: n.id().to_string(),
        order: n.order(),
        classes: n
            .class_indices()
            .iter()
            .map(|&c| cd.names[c].clone())
            .collect(),
        gtable: x,
        relations: rel,
        solutions,
        restriction_irreducible,
        invariant: inv,
        oracle_triples,
        real_counts,
        brauer,
        actions,
        basis,
        dimension,
        idempotents,
        deductions,
        oracle_confirmations: checks,
    })
}

/// The group-algebra assertions for one normal subgroup, each listed
/// separately.
pub fn algebra_checks(
    t: &CharacterTable,
    n: &NormalSubgroup,
    alg: &ClassAlgebra,
) -> Result<Vec<Check>> {
    let g = t.group();
    let cd = t.classes();
    let eq = gtable::equivalence_classes(t, n);
    let sub = normal::g_action_on_irr_n(t, n)?;
    let mut checks = Vec::new();
    let central = (0..cd.len()).all(|i| algebra::class_sum(g, cd, i).is_central());
    checks.push(Check::new("class sums are central", central, ""));
    let coords_ok = (0..cd.len()).all(|i| {
        let v = algebra::class_sum(g, cd, i);
        match (
            n.contains_class(i),
            algebra::membership_and_coords(&v, cd, n),
        ) {
            (true, Some(c)) => {
                c.iter()
                    .zip(n.class_indices())
                    .all(|(x, &k)| if k == i { x.is_one() } else { x.is_zero() })
            }
            (false, None) => true,
            _ => false,
        }
    });
    checks.push(Check::new(
        "class sums inside N have unit coordinates, others none",
        coords_ok,
        "",
    ));
    let dim = algebra::dimension_check(n, &sub, &eq);
    checks.push(Check::new(
        "#G-classes in N = #orbits on Irr(N) = #blocks",
        dim.passed,
        format!(
            "{} / {} / {}",
            dim.g_classes_in_n, dim.orbits_on_irr_n, dim.blocks
        ),
    ));
    let id = algebra::idempotent_support_check_with(t, &eq, n, alg);
    checks.push(Check::new(
        "block idempotents supported in N",
        id.supported_in_n,
        "",
    ));
    checks.push(Check::new(
        "block idempotents constant on G-classes",
        id.class_constant,
        "",
    ));
    checks.push(Check::new("f·f = f for every block", id.idempotent, ""));
    checks.push(Check::new(
        "f_i·f_j = 0 for distinct blocks",
        id.orthogonal,
        "",
    ));
    checks.push(Check::new("Σ f_i = 1", id.sum_is_identity, ""));
    Ok(checks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub descriptor: String,
    pub hash: String,
    pub order: usize,
    pub input: GroupJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub names: Vec<String>,
    pub sizes: Vec<usize>,
    pub orders: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalSummary {
    pub id: String,
    pub order: usize,
    pub classes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub tool_version: String,
    pub seed: u64,
    pub group: GroupInfo,
    pub classes: ClassInfo,
    pub table: Vec<Vec<Cyclotomic>>,
    pub normal_subgroups: Vec<NormalSummary>,
    pub analyses: Vec<NormalAnalysis>,
}

pub fn group_info(descriptor: &str, t: &CharacterTable) -> GroupInfo {
    GroupInfo {
        descriptor: descriptor.to_string(),
        hash: crate::cache::group_hash(t.group()),
        order: t.group().order(),
        input: GroupJson::from_group(t.group()),
    }
}

pub fn summaries(t: &CharacterTable, ns: &[NormalSubgroup]) -> Vec<NormalSummary> {
    ns.iter()
        .map(|n| NormalSummary {
            id: n.id().to_string(),
            order: n.order(),
            classes: n
                .class_indices()
                .iter()
                .map(|&c| t.classes().names[c].clone())
                .collect(),
        })
        .collect()
}

/// Analyses the chosen normal subgroups (all of them if `selected` is empty).
pub fn report(
    descriptor: &str,
    t: &CharacterTable,
    selected: &[(NormalSubgroup, RepPolicy)],
) -> Result<AnalysisReport> {
    let ns = normal::normal_subgroups(t);
    let alg = ClassAlgebra::new(t);
    let work: Vec<(NormalSubgroup, RepPolicy)> = if selected.is_empty() {
        ns.iter().map(|n| (n.clone(), RepPolicy::Lowest)).collect()
    } else {
        selected.to_vec()
    };
    let analyses = work
        .iter()
        .map(|(n, p)| analyze_normal(t, n, p, &alg))
        .collect::<Result<_>>()?;
    let cd = t.classes();
    Ok(AnalysisReport {
        schema: SCHEMA,
        tool_version: TOOL_VERSION.to_string(),
        seed: t.seed(),
        group: group_info(descriptor, t),
        classes: ClassInfo {
            names: cd.names.clone(),
            sizes: cd.sizes.clone(),
            orders: cd.orders.clone(),
        },
        table: t.values().to_vec(),
        normal_subgroups: summaries(t, &ns),
        analyses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn every_check_passes_on_small_groups() {
        for s in ["symmetric:4", "HolC5", "dihedral:8", "cyclic:6"] {
            let t = CharacterTable::compute(catalog(s).unwrap());
            let r = report(s, &t, &[]).unwrap();
            for a in &r.analyses {
                assert!(a.failures().is_empty(), "{s} {}: {:?}", a.id, a.failures());
            }
        }
    }

    #[test]
    fn report_round_trips_through_json() {
        let t = CharacterTable::compute(catalog("HolC5").unwrap());
        let r = report("HolC5", &t, &[]).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
