//! Command-line verifier for flat connections on rank-4 matrix
//! factorizations of x^m + y^n + z^2.

use clap::{ArgGroup, Args, CommandFactory, Parser, Subcommand, ValueEnum};
use lrlab::connections::{connection_matrices, lift_solver};
use lrlab::derivations::{standard_generators, Derivation};
use lrlab::matfac::{MatrixFactorization, RingMatrix};
use lrlab::poly::Poly;
use lrlab::ring::HypersurfaceRing;
use lrlab::verify::{default_degree_bound, run_grid, IndexSpec, VerifyOptions};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact verification of flat connections on matrix factorizations of
/// x^m + y^n + z^2 over the rationals.
#[derive(Parser)]
#[command(name = "lrlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full check suite over a parameter grid.
    Verify(VerifyArgs),
    /// Solve for a companion matrix of one derivation.
    Lift(LiftArgs),
    /// Print the factorization, generators, relations, and matrices.
    Show(ShowArgs),
}

const EXPONENT_RANGE: std::ops::RangeInclusive<u32> = 2..=12;

/// One exponent value or an inclusive range like `2..4`.
#[derive(Clone, Debug)]
struct ExponentRange(Vec<u32>);

fn parse_exponent_range(s: &str) -> Result<ExponentRange, String> {
    let parse_one = |part: &str| -> Result<u32, String> {
        let v: u32 = part
            .trim()
            .parse()
            .map_err(|_| format!("'{part}' is not an integer"))?;
        if !EXPONENT_RANGE.contains(&v) {
            return Err(format!(
                "{v} is outside the supported exponent range {}..={}",
                EXPONENT_RANGE.start(),
                EXPONENT_RANGE.end()
            ));
        }
        Ok(v)
    };
    match s.split_once("..") {
        None => Ok(ExponentRange(vec![parse_one(s)?])),
        Some((a, b)) => {
            let (lo, hi) = (parse_one(a)?, parse_one(b)?);
            if lo > hi {
                return Err(format!("empty range {lo}..{hi}"));
            }
            Ok(ExponentRange((lo..=hi).collect()))
        }
    }
}

/// `all` or one factorization index.
fn parse_index_spec(s: &str) -> Result<IndexSpec, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(IndexSpec::All);
    }
    let v: u32 = s
        .trim()
        .parse()
        .map_err(|_| format!("'{s}' is neither 'all' nor an integer"))?;
    if v < 1 || v > *EXPONENT_RANGE.end() {
        return Err(format!(
            "index {v} is outside 1..={}",
            EXPONENT_RANGE.end()
        ));
    }
    Ok(IndexSpec::One(v))
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Exponent of x: one value or an inclusive range like 2..4.
    #[arg(long, value_parser = parse_exponent_range)]
    m: ExponentRange,
    /// Exponent of y: one value or an inclusive range like 2..4.
    #[arg(long, value_parser = parse_exponent_range)]
    n: ExponentRange,
    /// Factorization index for x: 'all' or a single value.
    #[arg(long, default_value = "all", value_parser = parse_index_spec)]
    k: IndexSpec,
    /// Factorization index for y: 'all' or a single value.
    #[arg(long, default_value = "all", value_parser = parse_index_spec)]
    l: IndexSpec,
    /// Coefficient degree bound for solving; default 2(m+n) per instance.
    #[arg(long, env = "LRLAB_DEGREE_BOUND")]
    degree_bound: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads across (m, n) instances.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Record wall-clock timings per check (output is no longer
    /// byte-stable across runs).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("derivation").required(true).args(["delta", "values"])))]
struct LiftArgs {
    /// Exponent of x.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=12))]
    m: u32,
    /// Exponent of y.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=12))]
    n: u32,
    /// Factorization index for x (1..=m).
    #[arg(long)]
    k: u32,
    /// Factorization index for y (1..=n).
    #[arg(long)]
    l: u32,
    /// Lift one standard generator by number.
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=3))]
    delta: Option<u32>,
    /// Lift the derivation with these values on x, y, z, comma-separated:
    /// e.g. "-2*y, 2*x, 0".
    #[arg(long, allow_hyphen_values = true)]
    values: Option<String>,
    /// Coefficient degree bound for solving; default 2(m+n).
    #[arg(long, env = "LRLAB_DEGREE_BOUND")]
    degree_bound: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ShowArgs {
    /// Exponent of x.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=12))]
    m: u32,
    /// Exponent of y.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=12))]
    n: u32,
    /// Factorization index for x (1..=m).
    #[arg(long)]
    k: u32,
    /// Factorization index for y (1..=n).
    #[arg(long)]
    l: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exits with the clap usage error code (2) and a formatted message.
fn config_error(message: String) -> ! {
    let mut cmd = Cli::command();
    cmd.error(clap::error::ErrorKind::ValueValidation, message)
        .exit()
}

fn write_output(out: &Option<PathBuf>, content: &str) {
    match out {
        None => print!("{content}"),
        Some(path) => {
            if let Err(e) = std::fs::write(path, content) {
                config_error(format!("cannot write {}: {e}", path.display()));
            }
        }
    }
}

fn matrix_strings(mat: &RingMatrix) -> Vec<Vec<String>> {
    (0..mat.rows())
        .map(|r| (0..mat.cols()).map(|c| mat.entry(r, c).to_string()).collect())
        .collect()
}

fn matrix_block(mat: &RingMatrix, indent: &str) -> String {
    matrix_strings(mat)
        .iter()
        .map(|row| format!("{indent}[{}]\n", row.join(", ")))
        .collect()
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    // A fixed index must be valid for every requested exponent.
    if let IndexSpec::One(k) = args.k {
        if let Some(&m) = args.m.0.iter().find(|&&m| k > m) {
            config_error(format!(
                "k = {k} exceeds m = {m} in the requested range; use --k all or restrict --m"
            ));
        }
    }
    if let IndexSpec::One(l) = args.l {
        if let Some(&n) = args.n.0.iter().find(|&&n| l > n) {
            config_error(format!(
                "l = {l} exceeds n = {n} in the requested range; use --l all or restrict --n"
            ));
        }
    }
    if args.jobs == 0 {
        config_error("--jobs must be at least 1".to_string());
    }

    let opts = VerifyOptions {
        degree_bound: args.degree_bound,
        timings: args.timings,
    };
    let reports = run_grid(&args.m.0, &args.n.0, args.k, args.l, args.jobs, &opts);
    let all_ok = reports.iter().all(|r| r.verdict);

    let content = match args.format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&reports).expect("serializable reports");
            text.push('\n');
            text
        }
        Format::Text => {
            let mut text = String::new();
            for report in &reports {
                text.push_str(&report.render_text());
            }
            let failing = reports.iter().filter(|r| !r.verdict).count();
            text.push_str(&format!(
                "{} tuples verified, {} failing\n",
                reports.len(),
                failing
            ));
            text
        }
    };
    write_output(&args.out, &content);
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn build_factorization(m: u32, n: u32, k: u32, l: u32) -> MatrixFactorization {
    let ring = match HypersurfaceRing::new(m, n) {
        Ok(r) => r,
        Err(e) => config_error(e.to_string()),
    };
    match MatrixFactorization::new(ring, k, l) {
        Ok(mf) => mf,
        Err(e) => config_error(e.to_string()),
    }
}

fn parse_derivation(ring: HypersurfaceRing, values: &str) -> Derivation {
    let parts: Vec<&str> = values.split(',').collect();
    if parts.len() != 3 {
        config_error(format!(
            "--values needs three comma-separated polynomials, got {}",
            parts.len()
        ));
    }
    let polys: Vec<Poly> = parts
        .iter()
        .map(|part| match part.trim().parse() {
            Ok(p) => p,
            Err(e) => config_error(format!("cannot parse '{}': {e}", part.trim())),
        })
        .collect();
    let d = Derivation::new(ring, &polys[0], &polys[1], &polys[2]);
    if !d.is_derivation() {
        config_error(format!(
            "values {d} do not define a derivation: applied to f the result is not in (f)"
        ));
    }
    d
}

fn cmd_lift(args: LiftArgs) -> ExitCode {
    let mf = build_factorization(args.m, args.n, args.k, args.l);
    let ring = mf.ring();
    let d = match (args.delta, &args.values) {
        (Some(i), None) => standard_generators(ring).gens[i as usize].clone(),
        (None, Some(values)) => parse_derivation(ring, values),
        _ => unreachable!("clap group enforces exactly one source"),
    };
    let bound = args
        .degree_bound
        .unwrap_or_else(|| default_degree_bound(args.m, args.n));

    match lift_solver(&d, &mf, bound) {
        Ok(mat) => {
            let content = match args.format {
                Format::Json => {
                    let payload = json!({
                        "schema": "lrlab-lift/1",
                        "m": args.m,
                        "n": args.n,
                        "k": args.k,
                        "l": args.l,
                        "degree_bound": bound,
                        "derivation": [
                            d.value(lrlab::monomial::Var::X).to_string(),
                            d.value(lrlab::monomial::Var::Y).to_string(),
                            d.value(lrlab::monomial::Var::Z).to_string(),
                        ],
                        "matrix": matrix_strings(&mat),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&payload).unwrap())
                }
                Format::Text => format!(
                    "companion matrix for {} at (m, n, k, l) = ({}, {}, {}, {}), \
                     degree bound {}:\n{}",
                    d,
                    args.m,
                    args.n,
                    args.k,
                    args.l,
                    bound,
                    matrix_block(&mat, "  ")
                ),
            };
            write_output(&args.out, &content);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("lift failed: {e}");
            ExitCode::FAILURE
        }
    }
}

fn cmd_show(args: ShowArgs) -> ExitCode {
    let mf = build_factorization(args.m, args.n, args.k, args.l);
    let ring = mf.ring();
    let gens = standard_generators(ring);
    let connection = connection_matrices(ring, args.k, args.l);

    let content = match args.format {
        Format::Json => {
            let payload = json!({
                "schema": "lrlab-show/1",
                "m": args.m,
                "n": args.n,
                "k": args.k,
                "l": args.l,
                "f": ring.f().to_string(),
                "phi": matrix_strings(mf.phi()),
                "psi": matrix_strings(mf.psi()),
                "generators": gens.gens.iter().map(|d| {
                    vec![
                        d.value(lrlab::monomial::Var::X).to_string(),
                        d.value(lrlab::monomial::Var::Y).to_string(),
                        d.value(lrlab::monomial::Var::Z).to_string(),
                    ]
                }).collect::<Vec<_>>(),
                "relations": gens.syz.relations.iter().map(|rel| {
                    rel.iter().map(Poly::to_string).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
                "connection": match &connection {
                    Ok(mats) => json!(mats.iter().map(matrix_strings).collect::<Vec<_>>()),
                    Err(_) => json!(null),
                },
            });
            format!("{}\n", serde_json::to_string_pretty(&payload).unwrap())
        }
        Format::Text => {
            let mut text = format!(
                "f = {}  (m, n, k, l) = ({}, {}, {}, {})\n",
                ring.f(),
                args.m,
                args.n,
                args.k,
                args.l
            );
            text.push_str("phi =\n");
            text.push_str(&matrix_block(mf.phi(), "  "));
            text.push_str("psi =\n");
            text.push_str(&matrix_block(mf.psi(), "  "));
            text.push_str("generators:\n");
            for (i, d) in gens.gens.iter().enumerate() {
                text.push_str(&format!("  delta_{i} = {d}\n"));
            }
            text.push_str("relations:\n");
            for rel in &gens.syz.relations {
                let parts: Vec<String> = rel.iter().map(Poly::to_string).collect();
                text.push_str(&format!("  ({})\n", parts.join(", ")));
            }
            match &connection {
                Ok(mats) => {
                    text.push_str("connection matrices:\n");
                    for (i, mat) in mats.iter().enumerate() {
                        text.push_str(&format!("  A_{i} =\n"));
                        text.push_str(&matrix_block(mat, "    "));
                    }
                }
                Err(e) => {
                    text.push_str(&format!("connection matrices: unavailable ({e})\n"));
                }
            }
            text
        }
    };
    write_output(&args.out, &content);
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Lift(args) => cmd_lift(args),
        Command::Show(args) => cmd_show(args),
    }
}
