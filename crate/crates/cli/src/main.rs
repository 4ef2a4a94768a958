//! `coxpoly`: JSON/CSV front end over the `coxpoly` library.
//!
//! Exit codes: 0 success, 1 a verification suite found a counterexample,
//! 2 malformed input or any other error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use coxpoly::coxeter::{canonical_coxeter, extended_canonical_coxeter, q_poly, star_coxeter, tree_coxeter};
use coxpoly::graphs::{self, DynkinFamily};
use coxpoly::polyring::BigIntJson;
use coxpoly::spectra::{self, classify_self_reciprocal_with_tol, RootLocationReport};
use coxpoly::verify::{self, GridSpec, Suite, SweepReport, VerifyBounds};
use coxpoly::{chebyshev, cyclotomic, symmetry, BigRational, IntPoly, Multigraph, WeightType};

#[derive(Parser)]
#[command(name = "coxpoly", version, about = "Coxeter polynomials of star quivers and canonical algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial utilities; POLY is a JSON coefficient array or @FILE.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Coxeter polynomial of a weight type, with its root-location report.
    Coxeter(CoxeterArgs),
    /// Graph polynomials; GRAPH is `path N`, `star P1,P2,...`, `dynkin E8`,
    /// `kronecker S`, a JSON graph object or @FILE.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Run a bounded verification suite; exit 1 on a counterexample.
    Verify(VerifyArgs),
    /// Classify the extended canonical polynomial of every grid type.
    Sweep(SweepArgs),
}

#[derive(Subcommand)]
enum PolyCommand {
    Symmetrize {
        poly: String,
    },
    Desymmetrize {
        poly: String,
    },
    /// The cyclotomic polynomial phi_N.
    Cyclo {
        n: u64,
    },
    /// The normalized Chebyshev polynomial u_N.
    Chebyshev {
        n: usize,
    },
    /// Root-location report of a self-reciprocal polynomial.
    Classify {
        poly: String,
        #[arg(long)]
        tol: Option<String>,
    },
    /// Human-readable form, e.g. `T^3 - 2*T`.
    Pretty {
        poly: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CoxeterKind {
    Star,
    Canonical,
    Extended,
    Q,
}

impl CoxeterKind {
    fn name(self) -> &'static str {
        match self {
            CoxeterKind::Star => "star",
            CoxeterKind::Canonical => "canonical",
            CoxeterKind::Extended => "extended",
            CoxeterKind::Q => "q",
        }
    }
}

#[derive(Args)]
struct CoxeterArgs {
    kind: CoxeterKind,
    /// Weights, space or comma separated.
    #[arg(required = true, num_args = 1..)]
    weights: Vec<String>,
    #[arg(long)]
    tol: Option<String>,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Adjacency characteristic polynomial.
    Charpoly {
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
    },
    /// Coxeter polynomial of a tree.
    Coxeter {
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
    },
    /// Bracket `[lo_num, lo_den, hi_num, hi_den]` for the spectral radius.
    Radius {
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
        #[arg(long)]
        tol: Option<String>,
    },
    /// The graph in file form.
    Show {
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long)]
    max_sum: Option<u32>,
    #[arg(long)]
    max_t: Option<usize>,
    #[arg(long)]
    max_weight: Option<u32>,
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 12)]
    max_sum: u32,
    #[arg(long)]
    max_t: Option<usize>,
    #[arg(long)]
    max_weight: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Width of exact spectral-radius brackets: `a/b`, `0.001` or `1e-9`.
    #[arg(long)]
    tol: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Poly(cmd) => poly(cmd)?,
        Command::Coxeter(args) => coxeter(args)?,
        Command::Graph(cmd) => graph(cmd)?,
        Command::Verify(args) => return verify(args),
        Command::Sweep(args) => sweep(args)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn read_arg(arg: &str) -> anyhow::Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("cannot read {path}")),
        None => Ok(arg.to_string()),
    }
}

fn parse_poly(arg: &str) -> anyhow::Result<IntPoly> {
    let text = read_arg(arg)?;
    text.parse().with_context(|| format!("bad polynomial {:?}", text.trim()))
}

fn parse_tol(tol: Option<&str>) -> anyhow::Result<BigRational> {
    match tol {
        Some(s) => Ok(spectra::parse_tolerance(s)?),
        None => Ok(spectra::default_tolerance()),
    }
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn print_line(text: &str) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "{text}")?;
    Ok(())
}

fn poly(cmd: PolyCommand) -> anyhow::Result<()> {
    let text = match cmd {
        PolyCommand::Symmetrize { poly } => to_json(&symmetry::symmetrize(&parse_poly(&poly)?)?)?,
        PolyCommand::Desymmetrize { poly } => to_json(&symmetry::desymmetrize(&parse_poly(&poly)?)?)?,
        PolyCommand::Cyclo { n } => to_json(&cyclotomic::cyclo(n)?)?,
        PolyCommand::Chebyshev { n } => to_json(&chebyshev::u(n))?,
        PolyCommand::Classify { poly, tol } => {
            let tol = parse_tol(tol.as_deref())?;
            to_json(&classify_self_reciprocal_with_tol(&parse_poly(&poly)?, &tol)?)?
        }
        PolyCommand::Pretty { poly } => parse_poly(&poly)?.to_string(),
    };
    print_line(&text)
}

#[derive(Serialize)]
struct CoxeterOutput<'a> {
    kind: &'static str,
    weights: &'a WeightType,
    polynomial: IntPoly,
    /// For `q`, the report describes the extended canonical polynomial it
    /// represents.
    report: RootLocationReport,
}

fn coxeter(args: CoxeterArgs) -> anyhow::Result<()> {
    let w: WeightType = args.weights.join(" ").parse()?;
    let tol = parse_tol(args.tol.as_deref())?;
    let polynomial = match args.kind {
        CoxeterKind::Star => star_coxeter(&w),
        CoxeterKind::Canonical => canonical_coxeter(&w),
        CoxeterKind::Extended => extended_canonical_coxeter(&w),
        CoxeterKind::Q => q_poly(&w),
    };
    let classified = match args.kind {
        CoxeterKind::Q => extended_canonical_coxeter(&w),
        _ => polynomial.clone(),
    };
    let report = classify_self_reciprocal_with_tol(&classified, &tol)?;
    print_line(&to_json(&CoxeterOutput { kind: args.kind.name(), weights: &w, polynomial, report })?)
}

fn parse_graph(words: &[String]) -> anyhow::Result<Multigraph> {
    let rest = words[1..].join(" ");
    let number =
        |s: &str| -> anyhow::Result<usize> { s.trim().parse().with_context(|| format!("bad size {s:?}")) };
    let g = match words[0].as_str() {
        "path" => graphs::path(number(&rest)?),
        "star" => {
            let weights = rest
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<u32>().with_context(|| format!("bad weight {s:?}")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            graphs::star(&weights)?
        }
        "kronecker" => graphs::kronecker_graph(number(&rest)? as u32)?,
        "dynkin" => {
            let name: String = rest.split_whitespace().collect();
            let mut chars = name.chars();
            let family: DynkinFamily = match chars.next() {
                Some(c) => c.to_string().parse()?,
                None => bail!("dynkin needs a name such as E8"),
            };
            graphs::dynkin(family, number(chars.as_str())?)?
        }
        _ => {
            let text = read_arg(&words.join(" "))?;
            serde_json::from_str(&text).with_context(|| format!("bad graph {:?}", text.trim()))?
        }
    };
    Ok(g)
}

fn graph(cmd: GraphCommand) -> anyhow::Result<()> {
    let text = match cmd {
        GraphCommand::Charpoly { graph } => to_json(&graphs::charpoly(&parse_graph(&graph)?))?,
        GraphCommand::Coxeter { graph } => to_json(&tree_coxeter(&parse_graph(&graph)?)?)?,
        GraphCommand::Radius { graph, tol } => {
            let tol = parse_tol(tol.as_deref())?;
            let (lo, hi) = graphs::graph_spectral_radius(&parse_graph(&graph)?, &tol)?;
            to_json(&[lo.numer(), lo.denom(), hi.numer(), hi.denom()].map(BigIntJson))?
        }
        GraphCommand::Show { graph } => to_json(&parse_graph(&graph)?)?,
    };
    print_line(&text)
}

fn verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let mut bounds = VerifyBounds::default();
    if let Some(s) = args.max_sum {
        bounds.grid.max_sum = s;
    }
    if args.max_t.is_some() {
        bounds.grid.max_t = args.max_t;
    }
    if args.max_weight.is_some() {
        bounds.grid.max_weight = args.max_weight;
    }
    bounds.max_vertices = args.max_vertices.unwrap_or(bounds.max_vertices);
    bounds.max_n = args.max_n.unwrap_or(bounds.max_n);
    bounds.samples = args.samples.unwrap_or(bounds.samples);
    bounds.max_degree = args.max_degree.unwrap_or(bounds.max_degree);
    bounds.seed = args.seed.unwrap_or(bounds.seed);
    let outcome = verify::run_suite(args.suite, &bounds);
    print_line(&to_json(&outcome)?)?;
    if let Some(c) = &outcome.counterexample {
        eprintln!("counterexample: {c}");
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn sweep_csv(report: &SweepReport) -> anyhow::Result<String> {
    let join = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(" ");
    let mut writer = csv::WriterBuilder::new().delimiter(b';').from_writer(Vec::new());
    writer.write_record([
        "weights",
        "degree",
        "on_circle",
        "off_circle",
        "rho_is_one",
        "cyclotomic_indices",
    ])?;
    for row in &report.rows {
        let r = &row.report;
        writer.write_record([
            join(&mut row.weights.weights().iter().map(u32::to_string)),
            r.degree.to_string(),
            r.on_circle.to_string(),
            r.off_circle.to_string(),
            r.rho_is_one.to_string(),
            join(&mut r.cyclotomic_indices.iter().map(u64::to_string)),
        ])?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}

fn sweep(args: SweepArgs) -> anyhow::Result<()> {
    let spec = GridSpec { max_sum: args.max_sum, max_t: args.max_t, max_weight: args.max_weight };
    let tol = parse_tol(args.tol.as_deref())?;
    let report = verify::run_sweep(&spec, &tol)?;
    let text = match args.format {
        Format::Json => to_json(&report)? + "\n",
        Format::Csv => sweep_csv(&report)?,
    };
    match args.out {
        Some(path) => fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
