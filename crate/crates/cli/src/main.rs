//! `fgx`: build catalogue groups, analyse Cayley tables and run the
//! verification suite.

mod checks;
mod input;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fgx_core::characters::{character_table, spin_types_with_table};
use fgx_core::cohomology::{h2_trivial_coefficients, multiplier_report, CohomologyOptions};
use fgx_core::extensions::{commuting_pairs, stairway_search, StairwayEntry};
use fgx_core::group::catalogue::{normal_form_table, presentation};
use fgx_core::group::coset::{coset_cap, DEFAULT_MAX_COSETS};
use fgx_core::group::{build_catalogue, todd_coxeter, CatalogueKey, Presentation};
use fgx_core::structure::{analyze, is_isomorphic, AnalysisReport};
use fgx_core::{GroupTable, Subgroup};
use serde::Serialize;
use serde_json::{json, Value};

use checks::{Status, VerificationSuiteReport, CHECKS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Normal-form rule cross-checked against coset enumeration when both exist.
    Auto,
    NormalForm,
    Coset,
}

#[derive(Parser)]
#[command(name = "fgx", version, about = "Exact finite group toolkit")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the output to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalogue or reference group and write its Cayley table.
    Build {
        key: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        /// Write the catalogue presentation instead of the table.
        #[arg(long)]
        presentation: bool,
    },
    /// Center, derived subgroup, abelianization and class data.
    Analyze { group: String },
    /// H²(G, Z_m) and the Schur multiplier.
    Multiplier {
        group: String,
        /// Coefficient modulus (default |G|).
        #[arg(long)]
        coeff_mod: Option<u64>,
        /// Ignore the group-order cap.
        #[arg(long)]
        force: bool,
    },
    /// Exact character table, optionally with the spin-type partition.
    Chartable {
        group: String,
        /// Comma-separated generators of a central subgroup.
        #[arg(long, value_delimiter = ',')]
        spin_center: Vec<String>,
    },
    /// Todd–Coxeter enumeration of a presentation file.
    Coset {
        presentation: PathBuf,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Exhaustive search for one-step efficient central extensions by Z_d.
    Stairway {
        group: String,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 100)]
        max_results: usize,
        /// Write each extension's Cayley table into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Run the verification suite.
    Verify {
        /// Check names; all default checks when empty.
        names: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Also run the slow checks.
        #[arg(long)]
        include_slow: bool,
        /// List the available checks.
        #[arg(long)]
        list: bool,
    },
}

/// Text to print and whether every check passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn emit<T: Serialize>(format: Format, value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&v)? + "\n",
        Format::Text => render::aligned(&v),
    })
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn cmd_build(key: &str, method: Method, as_presentation: bool) -> Result<Output> {
    let parsed = key.parse::<CatalogueKey>();
    if as_presentation {
        let p = presentation(parsed?)?;
        return Ok(Output::ok(serde_json::to_string_pretty(&p.to_json())? + "\n"));
    }
    let table = match (parsed, method) {
        (Ok(k), Method::Auto) => Arc::unwrap_or_clone(build_catalogue(k)?.table),
        (Ok(k), Method::NormalForm) => normal_form_table(k)?,
        (Ok(k), Method::Coset) => todd_coxeter(&presentation(k)?, coset_cap(10 * k.expected_order()))?,
        (Err(_), Method::Auto) => (*input::resolve(key)?.table).clone(),
        (Err(e), _) => return Err(e.into()),
    };
    Ok(Output::ok(table.to_json_string()? + "\n"))
}

#[derive(Serialize)]
struct NamedAnalysis {
    group: String,
    #[serde(flatten)]
    report: AnalysisReport,
}

fn cmd_analyze(format: Format, group: &str) -> Result<Output> {
    let g = input::resolve(group)?;
    let report = NamedAnalysis {
        group: g.name.clone(),
        report: analyze(&g.table),
    };
    Ok(Output::ok(emit(format, &report)?))
}

fn options(force: bool) -> CohomologyOptions {
    if force {
        CohomologyOptions::forced()
    } else {
        CohomologyOptions::default()
    }
}

fn cmd_multiplier(format: Format, group: &str, coeff_mod: Option<u64>, force: bool) -> Result<Output> {
    let g = input::resolve(group)?;
    let r = multiplier_report(&g.table, &g.name, coeff_mod, options(force))?;
    Ok(Output::ok(emit(format, &r)?))
}

fn cmd_chartable(format: Format, group: &str, spin_center: &[String]) -> Result<Output> {
    let g = input::resolve(group)?;
    let t = character_table(&g.table)?;
    let spin = if spin_center.is_empty() {
        None
    } else {
        let gens = spin_center.iter().map(|n| g.element(n.trim())).collect::<Result<Vec<_>>>()?;
        Some(spin_types_with_table(&g.table, &t, &Subgroup::generated(&g.table, &gens))?)
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&t.to_json(spin))? + "\n",
        Format::Text => {
            let mut s = t.render();
            if let Some(p) = spin {
                let mut rows = vec![vec!["tau".into(), "characters".into(), "degrees".into(), "sum d^2".into()]];
                for ty in &p.types {
                    let chars: Vec<String> = ty.characters.iter().map(|i| format!("X.{}", i + 1)).collect();
                    rows.push(vec![
                        format!("{:?}", ty.tau),
                        chars.join(" "),
                        format!("{:?}", ty.degrees),
                        ty.sum_of_squares.to_string(),
                    ]);
                }
                s.push_str(&format!("\nspin types over <{}> (orders {:?})\n", p.basis.join(", "), p.basis_orders));
                s.push_str(&render::table(&rows));
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn cmd_coset(path: &Path, max_cosets: Option<usize>) -> Result<Output> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let p = Presentation::from_json_str(&text).with_context(|| format!("{} is not a valid presentation", path.display()))?;
    let cap = max_cosets.unwrap_or_else(|| coset_cap(DEFAULT_MAX_COSETS));
    let table = todd_coxeter(&p, cap)?;
    Ok(Output::ok(table.to_json_string()? + "\n"))
}

#[derive(Serialize)]
struct StairwayReport {
    group: String,
    /// Order of the cyclic kernel.
    d: usize,
    h2_invariants: Vec<u64>,
    commuting_pairs: usize,
    results: Vec<StairwayEntry>,
}

/// Name of a catalogue group isomorphic to `k`, if any.
fn catalogue_match(k: &Arc<GroupTable>) -> Result<Option<String>> {
    for key in CatalogueKey::all() {
        if key.expected_order() != k.order() {
            continue;
        }
        let c = build_catalogue(key)?;
        if is_isomorphic(k, &c.table).is_some() {
            return Ok(Some(key.to_string()));
        }
    }
    Ok(None)
}

fn cmd_stairway(
    format: Format,
    group: &str,
    d: usize,
    max_results: usize,
    out_dir: Option<&Path>,
    force: bool,
) -> Result<Output> {
    let g = input::resolve(group)?;
    let opts = options(force);
    let results = stairway_search(&g.table, d, max_results, opts)?;
    let h2 = h2_trivial_coefficients(&g.table, d as u64, opts)?;
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    let mut entries = Vec::with_capacity(results.len());
    for (i, r) in results.iter().enumerate() {
        let mut e = r.entry(&g.table);
        e.iso_class_representative = catalogue_match(&r.witness.k)?;
        if let Some(dir) = out_dir {
            write_file(&dir.join(format!("extension_{i}.json")), &r.witness.k.to_json_string()?)?;
        }
        entries.push(e);
    }
    let report = StairwayReport {
        group: g.name,
        d,
        h2_invariants: h2.invariants,
        commuting_pairs: commuting_pairs(&g.table, d).len(),
        results: entries,
    };
    Ok(Output::ok(emit(format, &report)?))
}

fn suite_text(r: &VerificationSuiteReport) -> String {
    let mut rows = vec![vec!["check".to_string(), "status".into(), "ms".into(), "description".into()]];
    for c in &r.checks {
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        rows.push(vec![c.name.into(), status.into(), format!("{:.0}", c.elapsed_ms), c.description.into()]);
    }
    let mut s = render::table(&rows);
    for c in r.checks.iter().filter(|c| c.status == Status::Fail) {
        s.push_str(&format!("\n{} detail:\n{}", c.name, render::aligned(&c.detail)));
    }
    let overall = if r.status == Status::Pass { "PASS" } else { "FAIL" };
    s.push_str(&format!("\noverall: {overall} ({}/{} passed)\n", r.passed, r.checks.len()));
    s
}

fn cmd_verify(format: Format, names: &[String], all: bool, include_slow: bool, list: bool) -> Result<Output> {
    if list {
        let rows: Vec<Vec<String>> = CHECKS
            .iter()
            .map(|c| vec![c.name.into(), if c.slow { "slow".into() } else { String::new() }, c.description.into()])
            .collect();
        let text = match format {
            Format::Text => render::table(&rows),
            Format::Json => {
                let v: Vec<Value> = CHECKS
                    .iter()
                    .map(|c| json!({ "name": c.name, "slow": c.slow, "description": c.description }))
                    .collect();
                serde_json::to_string_pretty(&v)? + "\n"
            }
        };
        return Ok(Output::ok(text));
    }
    let selected: Vec<&checks::Check> = if names.is_empty() || all {
        CHECKS.iter().filter(|c| include_slow || !c.slow).collect()
    } else {
        names
            .iter()
            .map(|n| checks::find(n).with_context(|| format!("unknown check {n:?} (see `fgx verify --list`)")))
            .collect::<Result<_>>()?
    };
    let report = checks::run_suite(&selected);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Text => suite_text(&report),
    };
    Ok(Output {
        text,
        ok: report.status == Status::Pass,
    })
}

fn run(cli: &Cli) -> Result<Output> {
    let f = cli.format;
    match &cli.command {
        Command::Build {
            key,
            method,
            presentation,
        } => cmd_build(key, *method, *presentation),
        Command::Analyze { group } => cmd_analyze(f, group),
        Command::Multiplier {
            group,
            coeff_mod,
            force,
        } => cmd_multiplier(f, group, *coeff_mod, *force),
        Command::Chartable { group, spin_center } => cmd_chartable(f, group, spin_center),
        Command::Coset {
            presentation,
            max_cosets,
        } => cmd_coset(presentation, *max_cosets),
        Command::Stairway {
            group,
            order,
            max_results,
            out_dir,
            force,
        } => cmd_stairway(f, group, *order, *max_results, out_dir.as_deref(), *force),
        Command::Verify {
            names,
            all,
            include_slow,
            list,
        } => {
            if *all && !names.is_empty() {
                bail!("--all cannot be combined with check names");
            }
            cmd_verify(f, names, *all, *include_slow, *list)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => write_file(path, &out.text),
        None => {
            print!("{}", out.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
