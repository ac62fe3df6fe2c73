//! Invariant suite over a list of groups and all their normal subgroups.

use serde::{Deserialize, Serialize};

use crate::algebra::ClassAlgebra;
use crate::analysis::{analyze_normal, Check, NormalAnalysis};
use crate::cache::{self, TableCache};
use crate::catalog;
use crate::chartab::{self, CharacterTable};
use crate::gtable::RepPolicy;
use crate::normal;
use crate::par::Exec;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairResult {
    pub normal_id: String,
    pub normal_order: usize,
    pub normal_label: String,
    /// `None` when the pipeline itself returned an error.
    pub analysis: Option<NormalAnalysis>,
    pub error: Option<String>,
}

impl PairResult {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self
                .analysis
                .as_ref()
                .is_some_and(|a| a.failures().is_empty())
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self.error.iter().cloned().collect();
        if let Some(a) = &self.analysis {
            out.extend(
                a.failures()
                    .iter()
                    .map(|c| format!("{} ({})", c.name, c.detail)),
            );
        }
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupResult {
    pub descriptor: String,
    pub order: usize,
    pub class_count: usize,
    pub checks: Vec<Check>,
    pub pairs: Vec<PairResult>,
}

impl GroupResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.pairs.iter().all(PairResult::passed)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub groups: Vec<GroupResult>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.groups.iter().all(GroupResult::passed)
    }

    pub fn pair_count(&self) -> usize {
        self.groups.iter().map(|g| g.pairs.len()).sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&GroupResult, &PairResult)> {
        self.groups
            .iter()
            .flat_map(|g| g.pairs.iter().map(move |p| (g, p)))
    }

    /// One line per failed check, prefixed by group and subgroup.
    pub fn failure_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for g in &self.groups {
            for c in g.checks.iter().filter(|c| !c.passed) {
                out.push(format!("{}: {} {}", g.descriptor, c.name, c.detail));
            }
            for p in &g.pairs {
                for f in p.failures() {
                    out.push(format!("{} / {}: {}", g.descriptor, p.normal_label, f));
                }
            }
        }
        out
    }
}

/// Checks that involve only the table of G.
pub fn table_checks(t: &CharacterTable) -> Vec<Check> {
    let order = t.group().order() as u64;
    let degrees = t.degrees();
    let cd = t.classes();
    let k = t.len();
    let mut checks = Vec::new();
    let push = |checks: &mut Vec<Check>, name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        })
    };

    let orth = chartab::verify_orthogonality(t);
    push(
        &mut checks,
        "row and column orthogonality",
        orth.is_ok(),
        orth.err().map(|e| e.to_string()).unwrap_or_default(),
    );
    push(
        &mut checks,
        "Σ χ(1)² = |G|",
        degrees.iter().map(|d| d * d).sum::<u64>() == order,
        format!("{degrees:?}"),
    );
    push(
        &mut checks,
        "χ(1) divides |G|",
        degrees.iter().all(|d| order.is_multiple_of(*d)),
        String::new(),
    );
    push(
        &mut checks,
        "first row trivial",
        t.row(0).iter().all(|v| v.is_one()),
        String::new(),
    );

    let inverse = t.power_map(-1);
    let conj_ok =
        (0..k).all(|i| (0..k).all(|j| *t.value(i, inverse[j]) == t.value(i, j).conjugate()));
    push(&mut checks, "χ(g⁻¹) = conj χ(g)", conj_ok, String::new());

    let exp = t.exponent();
    let galois_ok = (2..exp as i64)
        .filter(|&m| num_integer::gcd(m as u64, exp) == 1)
        .all(|m| {
            let pm = t.power_map(m);
            (0..k).all(|i| (0..k).all(|j| *t.value(i, pm[j]) == t.value(i, j).galois(m)))
        });
    push(&mut checks, "χ(g^k) = σ_k χ(g)", galois_ok, String::new());

    let found: Vec<Vec<usize>> = normal::normal_subgroups(t)
        .iter()
        .map(|n| n.class_indices().to_vec())
        .collect();
    let oracle = normal::normal_subgroups_oracle(t.group(), cd);
    push(
        &mut checks,
        "normal subgroups from kernels = normal closures",
        found == oracle,
        format!("{} vs {}", found.len(), oracle.len()),
    );
    checks
}

/// Runs the whole suite for one group on the calling thread.
pub fn verify_group(descriptor: &str, seed: u64, cache: Option<&TableCache>) -> GroupResult {
    let g = match catalog::catalog(descriptor) {
        Ok(g) => g,
        Err(e) => {
            return GroupResult {
                descriptor: descriptor.to_string(),
                order: 0,
                class_count: 0,
                checks: vec![Check {
                    name: "construct group".into(),
                    passed: false,
                    detail: e.to_string(),
                }],
                pairs: Vec::new(),
            }
        }
    };
    let t = match cache::table(g, seed, cache) {
        Ok(t) => t,
        Err(e) => {
            return GroupResult {
                descriptor: descriptor.to_string(),
                order: 0,
                class_count: 0,
                checks: vec![Check {
                    name: "character table".into(),
                    passed: false,
                    detail: e.to_string(),
                }],
                pairs: Vec::new(),
            }
        }
    };
    verify_table(descriptor, &t)
}

pub fn verify_table(descriptor: &str, t: &CharacterTable) -> GroupResult {
    let checks = table_checks(t);
    let alg = ClassAlgebra::new(t);
    let pairs = normal::normal_subgroups(t)
        .iter()
        .map(|n| {
            let (analysis, error) = match analyze_normal(t, n, &RepPolicy::Lowest, &alg) {
                Ok(a) => (Some(a), None),
                Err(e) => (None, Some(e.to_string())),
            };
            PairResult {
                normal_id: n.id().to_string(),
                normal_order: n.order(),
                normal_label: n.label(t.classes()),
                analysis,
                error,
            }
        })
        .collect();
    GroupResult {
        descriptor: descriptor.to_string(),
        order: t.group().order(),
        class_count: t.len(),
        checks,
        pairs,
    }
}

/// Verifies every listed group; items are independent, so `exec` may run
/// them in parallel.
pub fn verify_corpus(
    descriptors: &[&str],
    exec: Exec,
    seed: u64,
    cache: Option<&TableCache>,
) -> CorpusReport {
    CorpusReport {
        seed,
        groups: exec.map(descriptors, |d| verify_group(d, seed, cache)),
    }
}
