use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use robin_core::ball::{
    assemble_count, assemble_spectrum, branch_eigenvalue, radial_eigenfunction, residual, solve_positive_root,
    BallProblem, EigenvalueRecord, RadialProfile, Spectrum,
};
use robin_core::interval::{interval_eigenfunction, solve_interval, IntervalEigenpair, IntervalProblem};
use robin_core::oracle::{verify_interval, verify_spectrum, OracleReport};
use robin_core::tables::{table1, table2, RootKind, Table};
use robin_core::Error;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "robin",
    version,
    about = "Robin Laplacian eigenvalues on the unit ball and interval"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One eigenvalue μ_{l,m} of the ball.
    Eigen(EigenArgs),
    /// All eigenvalues up to a cutoff, or the first few counted with multiplicity.
    Spectrum(SpectrumArgs),
    /// First Robin roots and μ₂/μ₁ for α ≥ 1.
    Table1(TableArgs),
    /// First roots and μ₂/μ₁ for α ∈ (−1, 0).
    Table2(TableArgs),
    /// Compare closed forms against the finite-difference oracle.
    Verify(VerifyArgs),
    /// Sample an eigenfunction profile on [0, 1].
    Eigenfunction(EigenfunctionArgs),
    /// Interval spectrum (same as `spectrum --interval`).
    Interval(IntervalArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Domain {
    /// Ball dimension N ≥ 2.
    #[arg(long)]
    dim: Option<u32>,
    /// Use the interval (0, 1) instead of a ball.
    #[arg(long)]
    interval: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Extent {
    /// Include every eigenvalue not exceeding this value.
    #[arg(long, allow_negative_numbers = true)]
    cutoff: Option<f64>,
    /// Emit this many eigenvalues, counted with multiplicity.
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Decimal places in CSV output.
    #[arg(long, default_value_t = 5)]
    digits: usize,
}

#[derive(Args)]
struct EigenArgs {
    /// Ball dimension N ≥ 2
    #[arg(long)]
    dim: u32,
    /// Robin parameter α in ∂u/∂n + αu = 0
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    /// Angular index l ≥ 0
    #[arg(long)]
    l: u32,
    /// Radial index m ≥ 1
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    /// Insist on the positive branch (an error if μ_{l,m} is not positive).
    #[arg(long)]
    positive: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    domain: Domain,
    /// Robin parameter α in ∂u/∂n + αu = 0
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[command(flatten)]
    extent: Extent,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct IntervalArgs {
    /// Robin parameter α in ∂u/∂n + αu = 0
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[command(flatten)]
    extent: Extent,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    domain: Domain,
    /// Robin parameter α in ∂u/∂n + αu = 0
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 50.0)]
    cutoff: f64,
    /// Increasing grid sizes, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [512usize, 1024, 2048])]
    grids: Vec<usize>,
    /// Print the full report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EigenfunctionArgs {
    #[command(flatten)]
    domain: Domain,
    /// Robin parameter α in ∂u/∂n + αu = 0
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    /// Angular index (ball only).
    #[arg(long, default_value_t = 0)]
    l: u32,
    /// Radial index m ≥ 1 (position in the interval spectrum with --interval)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    /// Evenly spaced sample points on [0, 1], endpoints included
    #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u32).range(2..))]
    samples: u32,
    /// Scale the ball profile to leading coefficient 1 at r = 0.
    #[arg(long)]
    normalized: bool,
    #[arg(long, default_value_t = 10)]
    digits: usize,
}

#[derive(Serialize)]
struct ProblemEcho {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<u32>,
    alpha: f64,
}

#[derive(Serialize)]
struct Output<T: Serialize> {
    schema_version: u32,
    problem: ProblemEcho,
    records: Vec<T>,
}

#[derive(Serialize)]
struct EigenOutput {
    #[serde(flatten)]
    record: EigenvalueRecord,
    residual: f64,
}

#[derive(Serialize)]
struct TableOutput<'a> {
    schema_version: u32,
    table: &'static str,
    #[serde(flatten)]
    body: &'a Table,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    schema_version: u32,
    problem: ProblemEcho,
    passed: bool,
    report: &'a OracleReport,
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn ball_echo(p: &BallProblem) -> ProblemEcho {
    ProblemEcho {
        kind: "ball",
        dim: Some(p.dim()),
        alpha: p.alpha(),
    }
}

fn interval_echo(p: &IntervalProblem) -> ProblemEcho {
    ProblemEcho {
        kind: "interval",
        dim: None,
        alpha: p.alpha(),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serialises");
    s.push('\n');
    s
}

fn fixed(x: f64, digits: usize) -> String {
    format!("{x:.digits$}")
}

fn sign_class_name(r: &EigenvalueRecord) -> String {
    serde_json::to_value(r.sign_class)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default()
}

fn ball_records_csv(records: &[EigenvalueRecord], residuals: Option<&[f64]>, digits: usize) -> String {
    let mut out = String::from("l,m,mu,k,sign_class,multiplicity");
    if residuals.is_some() {
        out.push_str(",residual");
    }
    out.push('\n');
    for (i, r) in records.iter().enumerate() {
        let _ = write!(
            out,
            "{},{},{},{},{},{}",
            r.l,
            r.m,
            fixed(r.mu, digits),
            fixed(r.k, digits),
            sign_class_name(r),
            r.multiplicity
        );
        if let Some(res) = residuals {
            let _ = write!(out, ",{:e}", res[i]);
        }
        out.push('\n');
    }
    out
}

fn interval_records_csv(pairs: &[IntervalEigenpair], digits: usize) -> String {
    let mut out = String::from("m,mu,branch\n");
    for p in pairs {
        let branch = serde_json::to_value(p.branch)
            .ok()
            .and_then(|v| v.as_str().map(String::from));
        let _ = writeln!(out, "{},{},{}", p.m, fixed(p.mu, digits), branch.unwrap_or_default());
    }
    out
}

fn cmd_eigen(args: &EigenArgs) -> CmdResult {
    let problem = BallProblem::new(args.dim, args.alpha)?;
    if args.positive {
        solve_positive_root(&problem, args.l, args.m)?;
    }
    let record = branch_eigenvalue(&problem, args.l, args.m)?;
    let res = residual(&problem, &record)?;
    Ok(match args.output.format {
        Format::Json => to_json(&Output {
            schema_version: SCHEMA_VERSION,
            problem: ball_echo(&problem),
            records: vec![EigenOutput { record, residual: res }],
        }),
        Format::Csv => ball_records_csv(&[record], Some(&[res]), args.output.digits),
    })
}

fn ball_spectrum(problem: &BallProblem, extent: &Extent) -> Result<Vec<EigenvalueRecord>, Failure> {
    Ok(match (extent.cutoff, extent.count) {
        (Some(cutoff), _) => assemble_spectrum(problem, cutoff)?.records,
        (None, Some(count)) => {
            let s: Spectrum = assemble_count(problem, count)?;
            s.first_n(count)
        }
        (None, None) => unreachable!("clap enforces one of --cutoff/--count"),
    })
}

fn interval_spectrum(problem: &IntervalProblem, extent: &Extent) -> Result<Vec<IntervalEigenpair>, Failure> {
    match (extent.cutoff, extent.count) {
        (Some(cutoff), _) => {
            if !cutoff.is_finite() {
                return Err(Failure::Usage("cutoff must be finite".into()));
            }
            let mut count = 4;
            loop {
                let pairs = solve_interval(problem, count)?;
                if pairs.last().is_some_and(|p| p.mu > cutoff) {
                    return Ok(pairs.into_iter().filter(|p| p.mu <= cutoff).collect());
                }
                count *= 2;
            }
        }
        (None, Some(count)) => Ok(solve_interval(problem, count)?),
        (None, None) => unreachable!("clap enforces one of --cutoff/--count"),
    }
}

fn emit_interval(alpha: f64, extent: &Extent, output: &OutputArgs) -> CmdResult {
    let problem = IntervalProblem::new(alpha)?;
    let pairs = interval_spectrum(&problem, extent)?;
    Ok(match output.format {
        Format::Json => to_json(&Output {
            schema_version: SCHEMA_VERSION,
            problem: interval_echo(&problem),
            records: pairs,
        }),
        Format::Csv => interval_records_csv(&pairs, output.digits),
    })
}

fn cmd_spectrum(args: &SpectrumArgs) -> CmdResult {
    let Some(dim) = args.domain.dim else {
        return emit_interval(args.alpha, &args.extent, &args.output);
    };
    let problem = BallProblem::new(dim, args.alpha)?;
    let records = ball_spectrum(&problem, &args.extent)?;
    Ok(match args.output.format {
        Format::Json => to_json(&Output {
            schema_version: SCHEMA_VERSION,
            problem: ball_echo(&problem),
            records,
        }),
        Format::Csv => ball_records_csv(&records, None, args.output.digits),
    })
}

fn table_csv(table: &Table) -> String {
    let d = table.digits;
    let mut out = String::from("row,l,nu");
    for a in &table.alphas {
        let _ = write!(out, ",alpha={a}");
    }
    out.push('\n');
    for row in &table.roots {
        let name = match row.kind {
            RootKind::Positive => "k",
            RootKind::Negative => "k_hat",
        };
        let nu = if row.dim == 2 { "0" } else { "1/2" };
        let _ = write!(out, "{name},{},{nu}", row.l);
        for v in &row.values {
            let _ = write!(out, ",{}", fixed(*v, d));
        }
        out.push('\n');
    }
    for row in &table.ratios {
        let _ = write!(out, "mu2/mu1 {}D,,", row.dim);
        for v in &row.values {
            let _ = write!(out, ",{}", fixed(*v, d));
        }
        out.push('\n');
    }
    out
}

fn cmd_table(name: &'static str, args: &TableArgs) -> CmdResult {
    let table = if name == "table1" {
        table1(args.output.digits)?
    } else {
        table2(args.output.digits)?
    };
    Ok(match args.output.format {
        Format::Json => to_json(&TableOutput {
            schema_version: SCHEMA_VERSION,
            table: name,
            body: &table,
        }),
        Format::Csv => table_csv(&table),
    })
}

fn report_text(report: &OracleReport) -> String {
    let mut out = String::new();
    let grids: Vec<String> = report.grids.iter().map(|g| g.to_string()).collect();
    let _ = writeln!(out, "grids: {}", grids.join(", "));
    let _ = writeln!(
        out,
        "{:>3} {:>3} {:>18} {:>18} {:>10} {:>7}  ok",
        "l", "m", "closed form", "discrete", "abs err", "order"
    );
    for e in &report.entries {
        let order = e.order.map_or("-".to_string(), |o| format!("{o:.3}"));
        let _ = writeln!(
            out,
            "{:>3} {:>3} {:>18.10} {:>18.10} {:>10.2e} {:>7}  {}",
            e.l,
            e.m,
            e.closed_form,
            e.per_grid.last().copied().unwrap_or(f64::NAN),
            e.abs_error,
            order,
            if e.within_guardrail { "yes" } else { "NO" }
        );
    }
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    let _ = writeln!(out, "max abs error: {:.3e}", report.max_abs_error);
    let _ = writeln!(
        out,
        "complete: {}, multiplicities: {}",
        report.complete, report.multiplicities_agree
    );
    let _ = writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" });
    out
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let (report, echo) = match args.domain.dim {
        Some(dim) => {
            let p = BallProblem::new(dim, args.alpha)?;
            (verify_spectrum(&p, args.cutoff, &args.grids)?, ball_echo(&p))
        }
        None => {
            let p = IntervalProblem::new(args.alpha)?;
            (verify_interval(&p, args.cutoff, &args.grids)?, interval_echo(&p))
        }
    };
    let text = if args.json {
        to_json(&VerifyOutput {
            schema_version: SCHEMA_VERSION,
            problem: echo,
            passed: report.passed(),
            report: &report,
        })
    } else {
        report_text(&report)
    };
    if report.passed() {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Mismatch)
    }
}

fn cmd_eigenfunction(args: &EigenfunctionArgs) -> CmdResult {
    let n = args.samples as usize;
    let d = args.digits;
    let points = (0..n).map(|i| i as f64 / (n - 1) as f64);
    let mut out = String::new();
    match args.domain.dim {
        Some(dim) => {
            let problem = BallProblem::new(dim, args.alpha)?;
            let record = branch_eigenvalue(&problem, args.l, args.m)?;
            let profile = RadialProfile::new(&problem, &record);
            out.push_str("r,v\n");
            for r in points {
                let v = if args.normalized {
                    profile.eval(r)?
                } else {
                    radial_eigenfunction(&problem, &record, r)?
                };
                let _ = writeln!(out, "{},{}", fixed(r, d), fixed(v, d));
            }
        }
        None => {
            let problem = IntervalProblem::new(args.alpha)?;
            let pairs = solve_interval(&problem, args.m as usize)?;
            let pair = pairs.last().expect("m >= 1");
            out.push_str("x,u\n");
            for x in points {
                let _ = writeln!(out, "{},{}", fixed(x, d), fixed(interval_eigenfunction(pair, x)?, d));
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eigen(a) => cmd_eigen(a),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Table1(a) => cmd_table("table1", a),
        Command::Table2(a) => cmd_table("table2", a),
        Command::Verify(a) => cmd_verify(a),
        Command::Eigenfunction(a) => cmd_eigenfunction(a),
        Command::Interval(a) => emit_interval(a.alpha, &a.extent, &a.output),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
