//! Command-line front end for the `repstab` library.
//!
//! Every subcommand assembles one [`Report`] — a command name, the echoed
//! inputs, a rectangular table of rows, and a list of citation strings
//! tracing each number to a published source or an explicit derivation
//! rule — and serializes it as JSON, CSV, or an aligned text table.
//!
//! Conventions, stable across releases:
//!
//! * every integer is emitted as a decimal string, including in JSON, so
//!   64-bit consumers never truncate big values;
//! * identical argument vectors produce byte-identical output;
//! * exit code 0 on success, 1 on domain errors (out-of-range degree,
//!   enumeration cap exceeded, incomplete profile, ...) with a one-line
//!   diagnostic on the error stream, 2 on usage errors;
//! * the environment variable `REPSTAB_CAP` overrides the partition-size
//!   cap used by `d-family` (default 30).

use std::collections::BTreeMap;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use repstab::arc_ss::{
    diagonal_vanishing_report, vanishing_line_report, w1_generation_report, E2Page, DEFAULT_Q_MAX,
};
use repstab::betti_tables::{betti, Surface};
use repstab::fi_decomp::{generator_table, secondary_generators, DimAnswer};
use repstab::fim_plus::{
    certify_not_free, free_fim_dim, parse_degree_map, FimGeneratorSpec, FreenessVerdict,
};
use repstab::partitions::{d_family_with_cap, DEFAULT_CAP};
use repstab::selfcheck;
use repstab::Error;

const CITE_PAGARIA: &str =
    "Pagaria 2020, Cor. 2.9 (torus Betti polynomials in the binomial basis)";
const CITE_SHIFT_DIVIDE: &str =
    "punctured-torus rows: shift n -> n+1, then divide by (1+t)^2, after Cohen 2010, Ex. 2.6";
const CITE_CEF: &str =
    "Church-Ellenberg-Farb 2015 (FI#-module dimension profiles in the binomial basis)";
const CITE_MW: &str =
    "Miller-Wilson 2019 (higher-order representation stability; arc resolution spectral sequence)";
const CITE_SUPPORT: &str =
    "generator support bound: deg b_k, which is 0, 1, 3 for k = 0, 1, 2 and 2k - 2 for k >= 3";
const CITE_WSEQ: &str =
    "W_i(n) = FI# generators of H_{(n+i)/2} in degree n; zero whenever n + i is odd";
const CITE_FREE_DIM: &str =
    "free FIM+ dimension rule: sum of g_d * C(N, d) * (N - d - 1)!! over even complements N - d";
const CITE_FORCING: &str =
    "forcing walk: generator counts forced degree by degree up to the cap; a deficit against the \
     forced free dimension certifies non-freeness";
const CITE_HOOK: &str = "hook length formula for irreducible symmetric-group dimensions";
const CITE_FROBENIUS: &str =
    "D-family membership: Frobenius coordinates with every arm = leg + 1; dimension total (2n-1)!!";
const CITE_E2: &str =
    "E^2 entry rule: C(n, p+1) * derangements(p+1) * (FI# generators of H_q in degree n-p-1)";
const CITE_STABLE_RANGE: &str = "stable range: E^infinity vanishes when p + q + 2 <= n";

/// Serialization format for a [`Report`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

/// Which surface's Betti table to read.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurfaceArg {
    /// The torus.
    Torus,
    /// The once-punctured torus.
    Punctured,
}

impl SurfaceArg {
    fn surface(self) -> Surface {
        match self {
            SurfaceArg::Torus => Surface::Torus,
            SurfaceArg::Punctured => Surface::PuncturedTorus,
        }
    }

    fn name(self) -> &'static str {
        match self {
            SurfaceArg::Torus => "torus",
            SurfaceArg::Punctured => "punctured",
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "repstab",
    version,
    about = "Exact dimension tables and vanishing reports for ordered configuration spaces \
             of the torus and the once-punctured torus",
    no_binary_name = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Betti polynomial b_k, as binomial-basis coefficients or evaluated at n.
    Betti {
        #[arg(long, value_enum)]
        surface: SurfaceArg,
        /// Homological degree (tabulated range 0..=5).
        #[arg(long)]
        k: u64,
        /// Evaluate at a single number of points.
        #[arg(long, conflicts_with = "n_max")]
        n: Option<u64>,
        /// Evaluate at every point count from 0 through this bound.
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// FI# generator multiplicities of H_k of the punctured-torus spaces.
    Generators {
        /// Homological degree (tabulated range 0..=5).
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// The secondary-stability sequence W_i at n = 0..=n-max.
    Wseq {
        /// Sequence index.
        #[arg(long)]
        i: u64,
        /// Largest degree to report.
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Dimension of a free FIM+ module at one degree N.
    FimDim {
        /// Generator multiplicities, as comma-separated "degree:count" pairs.
        #[arg(long, value_parser = parse_spec_arg)]
        gens: FimGeneratorSpec,
        /// Degree at which to evaluate the dimension.
        #[arg(long = "N")]
        n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Freeness certificate for an observed dimension profile.
    CertifyNonfree {
        /// Observed dimensions, as comma-separated "degree:dim" pairs.
        #[arg(long, value_parser = parse_map_arg)]
        actual: BTreeMap<u64, BigUint>,
        /// Largest degree allowed to carry generators.
        #[arg(long)]
        cap: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Partitions indexing the signed perfect-matching module.
    DFamily {
        /// Partition size 2n (must be even).
        #[arg(long)]
        size: u64,
        /// List every member with its dimension, not just the total.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// E^2 page of the arc resolution spectral sequence at one degree.
    E2Page {
        /// Number of points.
        #[arg(long)]
        n: u64,
        /// Largest homological height to assemble.
        #[arg(long, default_value_t = DEFAULT_Q_MAX)]
        q_max: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Vanishing and generation reports.
    #[command(subcommand)]
    Reports(ReportsCommand),
    /// Run every built-in acceptance identity; nonzero exit on any failure.
    Selfcheck,
}

#[derive(Subcommand, Debug)]
pub enum ReportsCommand {
    /// The slope -1 diagonal that must be structurally zero for even n >= 8.
    Diagonal {
        /// Number of points (even, at least 8).
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// All page cells inside the stable range p + q + 2 <= n.
    VanishingLine {
        /// Number of points.
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// The three-cell argument generating W_1 in degree 1.
    W1 {
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
}

fn parse_spec_arg(s: &str) -> Result<FimGeneratorSpec, String> {
    s.parse::<FimGeneratorSpec>().map_err(|e| e.to_string())
}

fn parse_map_arg(s: &str) -> Result<BTreeMap<u64, BigUint>, String> {
    parse_degree_map(s).map_err(|e| e.to_string())
}

/// One serializable result table.
struct Report {
    command: &'static str,
    inputs: Vec<(&'static str, String)>,
    columns: &'static [&'static str],
    rows: Vec<Vec<String>>,
    citations: Vec<&'static str>,
}

fn kind_value(answer: &DimAnswer) -> (&'static str, String) {
    match answer {
        DimAnswer::Zero => ("zero", "0".to_string()),
        DimAnswer::Exact(v) => ("exact", v.to_string()),
        DimAnswer::Unknown => ("unknown", String::new()),
    }
}

fn degree_map_string(map: &BTreeMap<u64, BigUint>) -> String {
    let pairs: Vec<String> = map.iter().map(|(d, v)| format!("{d}:{v}")).collect();
    pairs.join(",")
}

fn betti_report(
    surface: SurfaceArg,
    k: u64,
    n: Option<u64>,
    n_max: Option<u64>,
) -> Result<Report, Error> {
    let poly = betti(surface.surface(), k)?;
    let mut inputs = vec![("surface", surface.name().to_string()), ("k", k.to_string())];
    let (columns, rows): (&'static [&'static str], Vec<Vec<String>>) = if let Some(n) = n {
        inputs.push(("n", n.to_string()));
        (
            &["n", "betti"],
            vec![vec![n.to_string(), poly.evaluate(n).to_string()]],
        )
    } else if let Some(n_max) = n_max {
        inputs.push(("n_max", n_max.to_string()));
        (
            &["n", "betti"],
            (0..=n_max)
                .map(|n| vec![n.to_string(), poly.evaluate(n).to_string()])
                .collect(),
        )
    } else {
        (
            &["d", "coeff"],
            poly.coeffs()
                .iter()
                .enumerate()
                .map(|(d, c)| vec![d.to_string(), c.to_string()])
                .collect(),
        )
    };
    let citations = match surface {
        SurfaceArg::Torus => vec![CITE_PAGARIA],
        SurfaceArg::Punctured => vec![CITE_PAGARIA, CITE_SHIFT_DIVIDE],
    };
    Ok(Report {
        command: "betti",
        inputs,
        columns,
        rows,
        citations,
    })
}

fn generators_report(k: u64) -> Result<Report, Error> {
    let table = generator_table(k)?;
    let rows = table
        .dims
        .iter()
        .enumerate()
        .map(|(m, dim)| vec![m.to_string(), dim.to_string()])
        .collect();
    Ok(Report {
        command: "generators",
        inputs: vec![
            ("k", k.to_string()),
            ("support_bound", table.support_bound.to_string()),
        ],
        columns: &["m", "dim"],
        rows,
        citations: vec![CITE_PAGARIA, CITE_SHIFT_DIVIDE, CITE_CEF, CITE_SUPPORT],
    })
}

fn wseq_report(i: u64, n_max: u64) -> Report {
    let rows = (0..=n_max)
        .map(|n| {
            let (kind, value) = kind_value(&secondary_generators(i, n));
            vec![n.to_string(), kind.to_string(), value]
        })
        .collect();
    Report {
        command: "wseq",
        inputs: vec![("i", i.to_string()), ("n_max", n_max.to_string())],
        columns: &["n", "kind", "value"],
        rows,
        citations: vec![CITE_WSEQ, CITE_MW],
    }
}

fn fim_dim_report(gens: &FimGeneratorSpec, n: u64) -> Report {
    let dim = free_fim_dim(gens, n);
    Report {
        command: "fim-dim",
        inputs: vec![("gens", gens.to_string()), ("N", n.to_string())],
        columns: &["N", "dim"],
        rows: vec![vec![n.to_string(), dim.to_string()]],
        citations: vec![CITE_FREE_DIM, CITE_MW],
    }
}

fn certify_report(actual: &BTreeMap<u64, BigUint>, cap: u64) -> Result<Report, Error> {
    let verdict = certify_not_free(actual, cap)?;
    let row = match verdict {
        FreenessVerdict::NotFree { witness } => vec![
            "not_free".to_string(),
            witness.degree.to_string(),
            witness.required.to_string(),
            witness.actual.to_string(),
            String::new(),
        ],
        FreenessVerdict::FreeCompatible { recovered } => vec![
            "free_compatible".to_string(),
            String::new(),
            String::new(),
            String::new(),
            recovered.to_string(),
        ],
    };
    Ok(Report {
        command: "certify-nonfree",
        inputs: vec![
            ("actual", degree_map_string(actual)),
            ("cap", cap.to_string()),
        ],
        columns: &["verdict", "degree", "required", "actual", "recovered"],
        rows: vec![row],
        citations: vec![CITE_FREE_DIM, CITE_FORCING],
    })
}

fn d_family_report(size: u64, list: bool, cap: u64) -> Result<Report, Error> {
    let family = d_family_with_cap(size, cap)?;
    let total: BigUint = family.iter().map(|(_, dim)| dim.clone()).sum();
    let mut rows = Vec::new();
    if list {
        for (lambda, dim) in &family {
            rows.push(vec![lambda.to_string(), dim.to_string()]);
        }
    }
    rows.push(vec!["total".to_string(), total.to_string()]);
    Ok(Report {
        command: "d-family",
        inputs: vec![
            ("size", size.to_string()),
            ("cap", cap.to_string()),
            ("list", list.to_string()),
        ],
        columns: &["partition", "dim"],
        rows,
        citations: vec![CITE_FROBENIUS, CITE_HOOK],
    })
}

fn e2_page_report(n: u64, q_max: u64) -> Report {
    let page = E2Page::new(n, q_max);
    let rows = page
        .cells()
        .map(|(p, q, answer, vanishes)| {
            let (kind, value) = kind_value(answer);
            vec![
                p.to_string(),
                q.to_string(),
                kind.to_string(),
                value,
                vanishes.to_string(),
            ]
        })
        .collect();
    Report {
        command: "e2-page",
        inputs: vec![("n", n.to_string()), ("q_max", q_max.to_string())],
        columns: &["p", "q", "kind", "value", "vanishes"],
        rows,
        citations: vec![CITE_E2, CITE_MW, CITE_PAGARIA],
    }
}

fn diagonal_report(n: u64) -> Result<Report, Error> {
    let cells = diagonal_vanishing_report(n)?;
    let rows = cells
        .iter()
        .map(|cell| {
            let (kind, value) = kind_value(&cell.answer);
            vec![
                cell.p.to_string(),
                cell.q.to_string(),
                kind.to_string(),
                value,
            ]
        })
        .collect();
    Ok(Report {
        command: "reports diagonal",
        inputs: vec![("n", n.to_string())],
        columns: &["p", "q", "kind", "value"],
        rows,
        citations: vec![CITE_E2, CITE_SUPPORT, CITE_MW],
    })
}

fn vanishing_line_cli_report(n: u64) -> Report {
    let rows = vanishing_line_report(n, DEFAULT_Q_MAX)
        .into_iter()
        .map(|(p, q)| vec![p.to_string(), q.to_string()])
        .collect();
    Report {
        command: "reports vanishing-line",
        inputs: vec![("n", n.to_string()), ("q_max", DEFAULT_Q_MAX.to_string())],
        columns: &["p", "q"],
        rows,
        citations: vec![CITE_STABLE_RANGE, CITE_MW],
    }
}

fn w1_cli_report() -> Report {
    let report = w1_generation_report();
    let mut rows = Vec::new();
    for (role, ((p, q), answer)) in [
        ("target", report.target.clone()),
        ("d2_source", report.d2_source.clone()),
        ("d3_source", report.d3_source.clone()),
    ] {
        let (kind, value) = kind_value(&answer);
        rows.push(vec![
            role.to_string(),
            p.to_string(),
            q.to_string(),
            kind.to_string(),
            value,
        ]);
    }
    Report {
        command: "reports w1",
        inputs: vec![
            ("n", report.n.to_string()),
            (
                "target_vanishes_at_infinity",
                report.target_vanishes_at_infinity.to_string(),
            ),
        ],
        columns: &["role", "p", "q", "kind", "value"],
        rows,
        citations: vec![report.assumption, CITE_MW, CITE_STABLE_RANGE],
    }
}

fn render(report: &Report, format: OutputFormat, out: &mut impl Write) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => render_json(report, out),
        OutputFormat::Csv => render_csv(report, out),
        OutputFormat::Table => render_table(report, out),
    }
}

fn render_json(report: &Report, out: &mut impl Write) -> std::io::Result<()> {
    use serde_json::{Map, Value};
    let mut root = Map::new();
    root.insert("command".into(), Value::String(report.command.into()));
    let mut inputs = Map::new();
    for (key, value) in &report.inputs {
        inputs.insert((*key).into(), Value::String(value.clone()));
    }
    root.insert("inputs".into(), Value::Object(inputs));
    let rows = report
        .rows
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            for (column, value) in report.columns.iter().zip(row) {
                obj.insert((*column).into(), Value::String(value.clone()));
            }
            Value::Object(obj)
        })
        .collect();
    root.insert("rows".into(), Value::Array(rows));
    root.insert(
        "citations".into(),
        Value::Array(
            report
                .citations
                .iter()
                .map(|c| Value::String((*c).into()))
                .collect(),
        ),
    );
    let text = serde_json::to_string_pretty(&Value::Object(root)).expect("string-only JSON tree");
    writeln!(out, "{text}")
}

fn render_csv(report: &Report, out: &mut impl Write) -> std::io::Result<()> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(report.columns)
        .expect("header matches the column count");
    for row in &report.rows {
        writer.write_record(row).expect("row matches the header width");
    }
    let data = writer.into_inner().expect("in-memory CSV buffer");
    out.write_all(&data)
}

fn render_table(report: &Report, out: &mut impl Write) -> std::io::Result<()> {
    let mut widths: Vec<usize> = report.columns.iter().map(|c| c.len()).collect();
    for row in &report.rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let write_row = |out: &mut dyn Write, cells: &mut dyn Iterator<Item = &str>| {
        let mut line = String::new();
        for (i, cell) in cells.enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let width = widths[i];
            line.push_str(&format!("{cell:<width$}"));
        }
        writeln!(out, "{}", line.trim_end())
    };
    write_row(out, &mut report.columns.iter().copied())?;
    for row in &report.rows {
        write_row(out, &mut row.iter().map(String::as_str))?;
    }
    if !report.citations.is_empty() {
        writeln!(out)?;
        writeln!(out, "citations:")?;
        for citation in &report.citations {
            writeln!(out, "  - {citation}")?;
        }
    }
    Ok(())
}

fn run_selfcheck(stdout: &mut impl Write) -> i32 {
    let results = selfcheck::run_all();
    let mut failures = 0usize;
    for result in &results {
        match &result.outcome {
            Ok(()) => {
                let _ = writeln!(stdout, "ok {}", result.name);
            }
            Err(message) => {
                failures += 1;
                let _ = writeln!(stdout, "FAIL {}: {message}", result.name);
            }
        }
    }
    if failures == 0 {
        let _ = writeln!(stdout, "{} checks passed", results.len());
        0
    } else {
        let _ = writeln!(stdout, "{failures} of {} checks failed", results.len());
        1
    }
}

/// Reads the partition-size cap, honoring the `REPSTAB_CAP` override.
fn partition_cap(stderr: &mut impl Write) -> Result<u64, i32> {
    match std::env::var("REPSTAB_CAP") {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CAP),
        Err(std::env::VarError::NotUnicode(_)) => {
            let _ = writeln!(stderr, "error: REPSTAB_CAP must be a non-negative integer");
            Err(2)
        }
        Ok(raw) => match raw.trim().parse::<u64>() {
            Ok(cap) => Ok(cap),
            Err(_) => {
                let _ = writeln!(
                    stderr,
                    "error: REPSTAB_CAP must be a non-negative integer, got {raw:?}"
                );
                Err(2)
            }
        },
    }
}

/// Parses `args` (without the binary name), runs the requested subcommand,
/// and returns the process exit code.
pub fn run(args: &[String], stdout: &mut impl Write, stderr: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{err}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{err}");
                    2
                }
            };
        }
    };
    let outcome: Result<(Report, OutputFormat), Error> = match cli.command {
        Command::Betti {
            surface,
            k,
            n,
            n_max,
            format,
        } => betti_report(surface, k, n, n_max).map(|r| (r, format)),
        Command::Generators { k, format } => generators_report(k).map(|r| (r, format)),
        Command::Wseq { i, n_max, format } => Ok((wseq_report(i, n_max), format)),
        Command::FimDim { gens, n, format } => Ok((fim_dim_report(&gens, n), format)),
        Command::CertifyNonfree {
            actual,
            cap,
            format,
        } => certify_report(&actual, cap).map(|r| (r, format)),
        Command::DFamily { size, list, format } => match partition_cap(stderr) {
            Ok(cap) => d_family_report(size, list, cap).map(|r| (r, format)),
            Err(code) => return code,
        },
        Command::E2Page { n, q_max, format } => Ok((e2_page_report(n, q_max), format)),
        Command::Reports(reports) => match reports {
            ReportsCommand::Diagonal { n, format } => diagonal_report(n).map(|r| (r, format)),
            ReportsCommand::VanishingLine { n, format } => {
                Ok((vanishing_line_cli_report(n), format))
            }
            ReportsCommand::W1 { format } => Ok((w1_cli_report(), format)),
        },
        Command::Selfcheck => return run_selfcheck(stdout),
    };
    match outcome {
        Ok((report, format)) => {
            let _ = render(&report, format, stdout);
            0
        }
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            1
        }
    }
}
