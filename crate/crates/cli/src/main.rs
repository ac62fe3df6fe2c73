mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gchar::algebra::ClassAlgebra;
use gchar::analysis;
use gchar::cache::{self, TableCache};
use gchar::catalog::{self, CORPUS};
use gchar::chartab::{CharacterTable, DEFAULT_SEED};
use gchar::corpus;
use gchar::gtable::{self, RepPolicy};
use gchar::normal::{self, NormalSubgroup};
use gchar::par::Exec;
use gchar::perm::GroupJson;
use gchar::PermGroup;

#[derive(Parser)]
#[command(
    name = "gchar",
    version,
    about = "Character tables and G-character tables of finite permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Json,
}

#[derive(Args)]
struct Common {
    /// Catalog name such as `dihedral:8`, or a JSON file with degree and generators.
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Directory for stored tables (falls back to $GCHAR_CACHE_DIR).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct NormalArgs {
    /// Normal subgroup id, 1-based position in `normals`, or class list like `1A+2B`.
    #[arg(long)]
    normal: Option<String>,
    /// 1-based rows of the character table to use as block representatives.
    #[arg(long, value_delimiter = ',')]
    reps: Option<Vec<usize>>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table.
    Table(Common),
    /// List the normal subgroups.
    Normals(Common),
    /// Print the G-character table X and the class sizes D.
    Gtable {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        normal: NormalArgs,
    },
    /// Run the whole analysis and oracle cross-checks.
    Analyze {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        normal: NormalArgs,
    },
    /// Run the invariant suite over the built-in corpus.
    Verify {
        /// Restrict to these groups instead of the corpus.
        #[arg(long)]
        group: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check the group-algebra assertions for one or all normal subgroups.
    VerifyAlgebra {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        normal: Option<String>,
    },
}

fn load_group(source: &str) -> Result<PermGroup> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {source}"))?;
        let input: GroupJson =
            serde_json::from_str(&text).with_context(|| format!("parsing {source}"))?;
        return Ok(input.into_group()?);
    }
    Ok(catalog::catalog(source)?)
}

fn load_table(c: &Common) -> Result<CharacterTable> {
    let g = Arc::new(load_group(&c.group)?);
    let cache = TableCache::from_option(c.cache_dir.as_deref());
    Ok(cache::table(g, c.seed, cache.as_ref())?)
}

fn policy(reps: &Option<Vec<usize>>) -> Result<RepPolicy> {
    match reps {
        None => Ok(RepPolicy::Lowest),
        Some(r) => {
            if r.contains(&0) {
                bail!("--reps uses 1-based row numbers");
            }
            Ok(RepPolicy::Explicit(r.iter().map(|i| i - 1).collect()))
        }
    }
}

fn required_normal(t: &CharacterTable, key: &Option<String>) -> Result<NormalSubgroup> {
    match key {
        Some(k) => Ok(normal::find_normal(t, k)?),
        None => bail!("--normal is required"),
    }
}

fn emit_json<T: serde::Serialize>(v: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

/// Ok(code) for completed runs; Err for usage and input errors.
fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Table(c) => {
            let t = load_table(&c)?;
            match c.format {
                Format::Md => print!("{}", render::table(&c.group, &t)),
                Format::Json => emit_json(&json!({
                    "schema": analysis::SCHEMA,
                    "group": analysis::group_info(&c.group, &t),
                    "seed": t.seed(),
                    "classes": {
                        "names": t.classes().names,
                        "sizes": t.classes().sizes,
                        "orders": t.classes().orders,
                    },
                    "values": t.values(),
                }))?,
            }
            Ok(0)
        }
        Command::Normals(c) => {
            let t = load_table(&c)?;
            let ns = normal::normal_subgroups(&t);
            match c.format {
                Format::Md => print!("{}", render::normals(&t, &ns)),
                Format::Json => emit_json(&analysis::summaries(&t, &ns))?,
            }
            Ok(0)
        }
        Command::Gtable { common, normal } => {
            let t = load_table(&common)?;
            let n = required_normal(&t, &normal.normal)?;
            let eq = gtable::equivalence_classes(&t, &n);
            let x = gtable::g_character_table(&t, &eq, &n, &policy(&normal.reps)?)?;
            match common.format {
                Format::Md => print!("{}", render::gtable(&x)),
                Format::Json => emit_json(&x)?,
            }
            Ok(0)
        }
        Command::Analyze { common, normal } => {
            let t = load_table(&common)?;
            let selected = match &normal.normal {
                Some(k) => vec![(normal::find_normal(&t, k)?, policy(&normal.reps)?)],
                None if normal.reps.is_some() => bail!("--reps needs --normal"),
                None => Vec::new(),
            };
            let report = analysis::report(&common.group, &t, &selected)?;
            match common.format {
                Format::Md => {
                    for a in &report.analyses {
                        println!("{}", render::analysis(a));
                    }
                }
                Format::Json => emit_json(&report)?,
            }
            let failed = report.analyses.iter().any(|a| !a.failures().is_empty());
            Ok(u8::from(failed))
        }
        Command::Verify {
            group,
            format,
            seed,
            cache_dir,
            jobs,
        } => {
            let cache = TableCache::from_option(cache_dir.as_deref());
            let names: Vec<&str> = if group.is_empty() {
                CORPUS.to_vec()
            } else {
                group.iter().map(String::as_str).collect()
            };
            let report = corpus::verify_corpus(&names, Exec::from_jobs(jobs), seed, cache.as_ref());
            match format {
                Format::Md => print!("{}", render::corpus(&report)),
                Format::Json => {
                    let groups: Vec<_> = report
                        .groups
                        .iter()
                        .map(|g| {
                            json!({
                                "descriptor": g.descriptor,
                                "order": g.order,
                                "classes": g.class_count,
                                "normal_subgroups": g.pairs.len(),
                                "passed": g.passed(),
                            })
                        })
                        .collect();
                    emit_json(&json!({
                        "schema": analysis::SCHEMA,
                        "seed": seed,
                        "pairs": report.pair_count(),
                        "passed": report.passed(),
                        "groups": groups,
                        "failures": report.failure_lines(),
                    }))?
                }
            }
            Ok(u8::from(!report.passed()))
        }
        Command::VerifyAlgebra { common, normal } => {
            let t = load_table(&common)?;
            let ns = match &normal {
                Some(k) => vec![normal::find_normal(&t, k)?],
                None => normal::normal_subgroups(&t),
            };
            let alg = ClassAlgebra::new(&t);
            let mut results = Vec::new();
            for n in &ns {
                results.push((n, analysis::algebra_checks(&t, n, &alg)?));
            }
            let failed = results.iter().any(|(_, cs)| cs.iter().any(|c| !c.passed));
            match common.format {
                Format::Md => {
                    for (n, cs) in &results {
                        println!("{}", render::assertions(&n.label(t.classes()), cs));
                    }
                }
                Format::Json => {
                    let items: Vec<_> = results
                        .iter()
                        .map(|(n, cs)| {
                            json!({
                                "normal_id": n.id(),
                                "classes": n.label(t.classes()),
                                "assertions": cs,
                            })
                        })
                        .collect();
                    emit_json(&json!({
                        "schema": analysis::SCHEMA,
                        "group": common.group,
                        "passed": !failed,
                        "normals": items,
                    }))?
                }
            }
            Ok(u8::from(failed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
