//! Markdown rendering.

use std::fmt::Write;

use gchar::analysis::{Check, NormalAnalysis};
use gchar::chartab::CharacterTable;
use gchar::corpus::CorpusReport;
use gchar::gtable::GCharTable;
use gchar::normal::NormalSubgroup;
use gchar::Cyclotomic;

fn row(out: &mut String, cells: impl IntoIterator<Item = String>) {
    out.push('|');
    for c in cells {
        let _ = write!(out, " {c} |");
    }
    out.push('\n');
}

fn rule(out: &mut String, n: usize) {
    row(out, std::iter::repeat_n("---".to_string(), n));
}

fn values(out: &mut String, label: String, vs: &[Cyclotomic]) {
    row(
        out,
        std::iter::once(label).chain(vs.iter().map(Cyclotomic::to_pretty)),
    );
}

pub fn table(descriptor: &str, t: &CharacterTable) -> String {
    let cd = t.classes();
    let mut out = format!(
        "## {descriptor}\n\norder {}, {} classes\n\n",
        t.group().order(),
        t.len()
    );
    row(
        &mut out,
        std::iter::once(String::new()).chain(cd.names.iter().cloned()),
    );
    rule(&mut out, cd.len() + 1);
    row(
        &mut out,
        std::iter::once("size".to_string()).chain(cd.sizes.iter().map(|s| s.to_string())),
    );
    for (i, r) in t.values().iter().enumerate() {
        values(&mut out, format!("χ{}", i + 1), r);
    }
    out
}

pub fn normals(t: &CharacterTable, ns: &[NormalSubgroup]) -> String {
    let mut out = String::new();
    row(&mut out, ["#", "id", "order", "classes"].map(String::from));
    rule(&mut out, 4);
    for (i, n) in ns.iter().enumerate() {
        row(
            &mut out,
            [
                (i + 1).to_string(),
                n.id().to_string(),
                n.order().to_string(),
                n.label(t.classes()),
            ],
        );
    }
    out
}

pub fn gtable(x: &GCharTable) -> String {
    let mut out = format!(
        "N = {} (id {}, order {}, index {})\n\n",
        x.column_names.join("+"),
        x.normal_id,
        x.normal_order,
        x.index
    );
    row(
        &mut out,
        std::iter::once(String::new()).chain(x.column_names.iter().cloned()),
    );
    rule(&mut out, x.columns.len() + 1);
    row(
        &mut out,
        std::iter::once("D".to_string()).chain(x.d.iter().map(|v| v.to_string())),
    );
    for (i, r) in x.x.iter().enumerate() {
        let members: Vec<String> = x.blocks[i].iter().map(|m| format!("χ{}", m + 1)).collect();
        let label = format!("χ{} [{}]", x.reps[i] + 1, members.join(","));
        values(&mut out, label, r);
    }
    out
}

fn checks(out: &mut String, cs: &[Check]) {
    for c in cs {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            let _ = writeln!(out, "- {mark} {}", c.name);
        } else {
            let _ = writeln!(out, "- {mark} {} ({})", c.name, c.detail);
        }
    }
}

pub fn analysis(a: &NormalAnalysis) -> String {
    let mut out = gtable(&a.gtable);
    out.push('\n');
    row(
        &mut out,
        ["block", "λ", "A", "B", "C", "(e,t,d)", "oracle"].map(String::from),
    );
    rule(&mut out, 7);
    for (i, s) in a.solutions.iter().enumerate() {
        let sols: Vec<String> = s
            .solutions
            .iter()
            .map(|x| format!("({},{},{})", x.e, x.t, x.d))
            .collect();
        let o = a.oracle_triples[i];
        row(
            &mut out,
            [
                (i + 1).to_string(),
                a.relations.lambda[i].to_string(),
                s.a.to_string(),
                s.b.to_string(),
                s.c.to_string(),
                sols.join(" "),
                format!("({},{},{})", o.e, o.t, o.d),
            ],
        );
    }
    out.push_str("\nX̂\n\n");
    row(
        &mut out,
        std::iter::once(String::new()).chain(a.gtable.column_names.iter().cloned()),
    );
    rule(&mut out, a.gtable.columns.len() + 1);
    for (i, r) in a.invariant.xhat.iter().enumerate() {
        values(&mut out, format!("θ̂{}", i + 1), r);
    }
    let _ = writeln!(
        out,
        "\nreal rows of X̂: {}, real G-classes in N: {}\n",
        a.real_counts.0, a.real_counts.1
    );
    for d in &a.deductions {
        let _ = writeln!(
            out,
            "- {} [{}]",
            d.claim,
            if d.confirmed { "confirmed" } else { "refuted" }
        );
    }
    out.push('\n');
    checks(&mut out, &a.oracle_confirmations);
    out
}

pub fn assertions(label: &str, cs: &[Check]) -> String {
    let mut out = format!("### N = {label}\n\n");
    checks(&mut out, cs);
    out
}

pub fn corpus(r: &CorpusReport) -> String {
    let mut out = String::new();
    for g in &r.groups {
        let _ = writeln!(
            out,
            "{} {} (order {}, {} classes, {} normal subgroups)",
            if g.passed() { "PASS" } else { "FAIL" },
            g.descriptor,
            g.order,
            g.class_count,
            g.pairs.len()
        );
    }
    for line in r.failure_lines() {
        let _ = writeln!(out, "  {line}");
    }
    let _ = writeln!(
        out,
        "{} groups, {} (G,N) pairs, {}",
        r.groups.len(),
        r.pair_count(),
        if r.passed() {
            "all checks passed"
        } else {
            "FAILURES"
        }
    );
    out
}
