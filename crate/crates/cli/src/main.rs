mod resolve;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use flatspec::crystal::{validate, GroupSpec};
use flatspec::families::{FamilyDescriptor, FamilyKind, GhwArray};
use flatspec::graph::{canonical_vertex_order, graph_of, to_dot};
use flatspec::numeric::json_uint;
use flatspec::spectra::{
    compare_with, table, theorem_check_with, KrawtchoukTable, MultiplicityRow, SpectralEngine, SpectrumMode,
};

use resolve::{resolve_group, resolve_groups, shell_cap};

#[derive(Parser)]
#[command(name = "flatspec", version, about = "Exact Hodge-Laplace spectra of compact flat manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Format {
    /// Emit JSON.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check a group JSON file and print its validation report.
    Validate {
        file: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Table of K_p^n(x) for 0 <= p, x <= n.
    Krawtchouk {
        n: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Multiplicities d_0..d_n, d_f for every group and squared norm.
    Spectrum {
        /// Catalog names, catalog prefixes (e.g. dim3), torus/<n>, or group JSON files.
        #[arg(required = true)]
        groups: Vec<String>,
        /// Squared norms N, comma separated.
        #[arg(short = 'N', long = "norms", value_delimiter = ',', default_value = "0,1,2")]
        norms: Vec<u64>,
        #[command(flatten)]
        format: Format,
    },
    /// Betti numbers.
    Betti {
        #[arg(required = true)]
        groups: Vec<String>,
        #[command(flatten)]
        format: Format,
    },
    /// Compare two spectra up to a squared norm.
    Compare {
        left: String,
        right: String,
        /// p=<k>, f, e, o, functions or all.
        #[arg(short, long, default_value = "f")]
        mode: String,
        #[arg(long = "max-norm", default_value_t = 25)]
        max_norm: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Enumerate a family: z2, kn or hw.
    Family {
        kind: String,
        n: usize,
        /// Print only the number of groups.
        #[arg(long)]
        count_only: bool,
        /// Print the DOT graph of every member (kn only).
        #[arg(long, conflicts_with = "count_only")]
        dot: bool,
        /// Check forms multiplicities for 0 <= N <= this bound on every member.
        #[arg(long, value_name = "N_MAX")]
        verify_theorem: Option<u64>,
        #[command(flatten)]
        format: Format,
    },
    /// Directed graph of a K_n array given by n and its free-entry bits, or by a JSON file.
    Graph {
        #[arg(required_unless_present = "array")]
        n: Option<usize>,
        #[arg(required_unless_present = "array")]
        bits: Option<u64>,
        /// JSON file holding the array as rows of "0" / "1/2".
        #[arg(long, conflicts_with_all = ["n", "bits"])]
        array: Option<PathBuf>,
        /// Emit DOT.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    io::stdout().write_all(out.as_bytes()).expect("stdout");
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Writes the command output into `out`; `Ok(false)` marks a failed check.
fn run(command: Command, out: &mut String) -> Result<bool> {
    match command {
        Command::Validate { file, format } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let report = validate(&GroupSpec::from_json(&text)?);
            if format.json {
                out.push_str(&serde_json::to_string_pretty(&report)?);
                out.push('\n');
            } else {
                let flag = |b: bool| if b { "yes" } else { "no" };
                out.push_str(&format!("accepted: {}\n", flag(report.accepted)));
                out.push_str(&format!("closure: {}\n", flag(report.closure)));
                out.push_str(&format!("cocycle consistent: {}\n", flag(report.cocycle_consistent)));
                out.push_str(&format!("torsion free: {}\n", flag(report.torsion_free)));
                if let (Some(order), Some(kind)) = (report.holonomy_order, &report.holonomy_type) {
                    out.push_str(&format!("holonomy: {kind} (order {order})\n"));
                }
                if let (Some(d), Some(o)) = (report.diagonal_type, report.orientable) {
                    out.push_str(&format!("diagonal type: {}\norientable: {}\n", flag(d), flag(o)));
                }
                if let Some(e) = &report.error {
                    out.push_str(&format!("error: {e}\n"));
                }
            }
            Ok(report.accepted)
        }
        Command::Krawtchouk { n, format } => {
            if !(1..=64).contains(&n) {
                bail!("n = {n} must lie in 1..=64");
            }
            let t = KrawtchoukTable::new(n);
            if format.json {
                out.push_str(&serde_json::to_string(&t)?);
                out.push('\n');
            } else if format.csv {
                out.push_str(&table::krawtchouk_to_csv(&t));
            } else {
                out.push_str(&table::krawtchouk_to_text(&t));
            }
            Ok(true)
        }
        Command::Spectrum { groups, norms, format } => {
            let cap = shell_cap()?;
            let mut resolved = Vec::new();
            for g in &groups {
                resolved.extend(resolve_groups(g)?);
            }
            let engines: Vec<SpectralEngine> = resolved.iter().map(|g| SpectralEngine::new(g).with_shell_cap(cap)).collect();
            let mut rows: Vec<MultiplicityRow> = Vec::new();
            for &n in &norms {
                for e in &engines {
                    rows.push(e.row(n)?);
                }
            }
            emit_rows(&rows, format, out)?;
            Ok(true)
        }
        Command::Betti { groups, format } => {
            let mut resolved = Vec::new();
            for g in &groups {
                resolved.extend(resolve_groups(g)?);
            }
            let rows: Vec<MultiplicityRow> = resolved
                .iter()
                .map(|g| SpectralEngine::new(g).row(0))
                .collect::<flatspec::Result<_>>()?;
            if format.json {
                let value: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "group": r.group,
                            "betti": r.degrees.iter().map(json_uint).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                out.push_str(&serde_json::to_string_pretty(&value)?);
                out.push('\n');
            } else {
                emit_rows(&rows, format, out)?;
            }
            Ok(true)
        }
        Command::Compare { left, right, mode, max_norm, format } => {
            let cap = shell_cap()?;
            let mode: SpectrumMode = mode.parse()?;
            let (l, r) = (resolve_group(&left)?, resolve_group(&right)?);
            let verdict = compare_with(
                &SpectralEngine::new(&l).with_shell_cap(cap),
                &SpectralEngine::new(&r).with_shell_cap(cap),
                mode,
                max_norm,
            )?;
            if format.json {
                out.push_str(&serde_json::to_string_pretty(&verdict)?);
                out.push('\n');
            } else {
                out.push_str(&format!("{verdict}\n"));
            }
            Ok(true)
        }
        Command::Family { kind, n, count_only, dot, verify_theorem, format } => {
            let kind: FamilyKind = kind.parse()?;
            let descriptor = FamilyDescriptor::new(kind, n);
            if dot && kind != FamilyKind::Kn {
                bail!("--dot needs the kn family");
            }
            let groups = descriptor.build()?;
            if let Some(expected) = descriptor.expected_count() {
                if groups.len() as u128 != expected {
                    bail!("built {} groups but the counting formula gives {expected}", groups.len());
                }
            }
            let mut all_pass = true;
            if let Some(max_norm) = verify_theorem {
                let cap = shell_cap()?;
                let mut reports = Vec::new();
                for g in &groups {
                    reports.push(theorem_check_with(&SpectralEngine::new(g).with_shell_cap(cap), max_norm)?);
                }
                let passed = reports.iter().filter(|r| r.passed()).count();
                all_pass = passed == reports.len();
                if format.json {
                    out.push_str(&serde_json::to_string_pretty(&serde_json::json!({
                        "family": kind.to_string(),
                        "n": n,
                        "max_norm": max_norm,
                        "groups": reports.len(),
                        "passed": passed,
                        "failures": reports.iter().filter(|r| !r.passed()).collect::<Vec<_>>(),
                    }))?);
                    out.push('\n');
                } else {
                    out.push_str(&format!("{} groups, {passed} pass for 0 <= N <= {max_norm}\n", reports.len()));
                    for r in reports.iter().filter(|r| !r.passed()) {
                        for row in r.failures() {
                            out.push_str(&format!(
                                "FAIL {} N={}: d_f={} expected {}, d_e={}, d_o={}\n",
                                r.group, row.norm_sq, row.forms, row.expected_forms, row.even, row.odd
                            ));
                        }
                    }
                }
            } else if count_only {
                out.push_str(&format!("{}\n", groups.len()));
            } else if dot {
                for g in &groups {
                    let bits: u64 = g.label().rsplit('/').next().unwrap_or("0").parse()?;
                    out.push_str(&format!("// {}\n", g.label()));
                    out.push_str(&to_dot(&graph_of(&GhwArray::from_free_bits(n, bits)?)));
                }
            } else {
                let specs: Vec<GroupSpec> = groups.iter().map(GroupSpec::from_group).collect();
                out.push_str(&serde_json::to_string_pretty(&specs)?);
                out.push('\n');
            }
            Ok(all_pass)
        }
        Command::Graph { n, bits, array, dot, format } => {
            let array = match array {
                Some(path) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    let rows: Vec<Vec<flatspec::Rational4>> = serde_json::from_str(&text)?;
                    GhwArray::from_rationals(&rows)?
                }
                None => GhwArray::from_free_bits(n.expect("required"), bits.expect("required"))?,
            };
            let graph = graph_of(&array);
            canonical_vertex_order(&graph)?;
            if dot {
                out.push_str(&to_dot(&graph));
            } else if format.json {
                out.push_str(&serde_json::to_string(&graph)?);
                out.push('\n');
            } else {
                out.push_str(&format!("{array}\n"));
                let edges: Vec<String> = graph.edges().iter().map(|(i, j)| format!("v{i}->v{j}")).collect();
                out.push_str(&format!("edges: {}\n", edges.join(" ")));
            }
            Ok(true)
        }
    }
}

fn emit_rows(rows: &[MultiplicityRow], format: Format, out: &mut String) -> Result<()> {
    if format.json {
        out.push_str(&table::rows_to_json(rows)?);
        out.push('\n');
    } else if format.csv {
        out.push_str(&table::rows_to_csv(rows)?);
    } else {
        out.push_str(&table::rows_to_text(rows)?);
    }
    Ok(())
}
