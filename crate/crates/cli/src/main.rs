//! `krsdet`: suite runner and small front end to the KRS toolkit.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use krs_core::ideals::{multidegrees_up_to, slice_of, FamilyKind, IdealFamily};
use krs_core::invariants::{
    alpha_monomial, gamma_delta_bitableau, gamma_delta_monomial, gamma_monomial, gamma_sequence, greene_alpha,
    greene_alpha_dual, lis, w_monomial, w_sequence, GreeneMode,
};
use krs_core::krs;
use krs_core::straighten::Straightener;
use krs_core::suites::{run_all, Format, RunConfig, SUITES};
use krs_core::{Bitableau, GridSize, Minor, Monomial, Shape, TwoRowArray};

const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "krsdet", version, about = "KRS correspondence, standard bitableaux and determinantal initial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a report.
    Run(RunArgs),
    /// List the suite names.
    Suites,
    /// KRS bijection between standard bitableaux and monomials.
    Krs {
        #[command(subcommand)]
        dir: KrsDir,
    },
    /// Evaluate an invariant on a shape, bitableau, sequence or monomial.
    Invariant(InvariantArgs),
    /// Standard representation of a product of minors.
    Straighten {
        /// Bitableau as JSON or text such as `[1,2|2,3]·[2|1]`; `-` reads stdin.
        input: String,
    },
    /// Initial monomials of an ideal family, slice by slice.
    Slices(SliceArgs),
}

#[derive(Subcommand)]
enum KrsDir {
    /// Bitableau → two-row array `{"u":[..],"v":[..]}`.
    Forward {
        input: String,
        /// Also print every deletion step.
        #[arg(long)]
        trace: bool,
    },
    /// Two-row array or monomial → bitableau.
    Inverse { input: String },
}

#[derive(Args)]
struct RunArgs {
    /// TOML file with any of the `RunConfig` fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Grid as MxN.
    #[arg(long)]
    grid: Option<GridSize>,
    #[arg(long)]
    degree_bound: Option<usize>,
    /// Suite to run; repeatable. Defaults to all suites.
    #[arg(long = "suite")]
    suites: Vec<String>,
    /// Node cap for facet searches.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    cross_check_limit: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Omit timestamps and wall-clock times.
    #[arg(long)]
    no_timestamp: bool,
    /// Keep one report entry per multidegree.
    #[arg(long)]
    per_slice: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantName {
    Lis,
    Gamma,
    Alpha,
    AlphaDual,
    W,
    GammaDelta,
}

#[derive(Args)]
struct InvariantArgs {
    #[arg(value_enum)]
    name: InvariantName,
    /// `{"shape":[..]}`, `{"sequence":[..]}`, bitableau or monomial JSON, or
    /// bitableau/monomial text.
    input: String,
    /// The `t` of γ_t and w_t, or the `k` of α_k and α_k*.
    #[arg(short, long, default_value_t = 1)]
    t: usize,
    /// The cogenerating minor of γ_δ.
    #[arg(long)]
    delta: Option<Minor>,
}

#[derive(Args)]
struct SliceArgs {
    /// Family JSON, e.g. `{"kind":"product-of-it","ts":[2,2]}`.
    family: String,
    #[arg(long, default_value = "3x3")]
    grid: GridSize,
    #[arg(long, default_value_t = 3)]
    degree_bound: usize,
}

enum Failure {
    Usage(anyhow::Error),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn read_input(input: &str) -> anyhow::Result<String> {
    if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(input.to_string())
    }
}

fn parse_bitableau(input: &str) -> anyhow::Result<Bitableau> {
    let s = read_input(input)?;
    let s = s.trim();
    if s.starts_with('{') {
        Ok(serde_json::from_str(s)?)
    } else {
        Ok(s.parse()?)
    }
}

enum Object {
    Shape(Shape),
    Sequence(Vec<usize>),
    Bitableau(Bitableau),
    Monomial(Monomial),
}

fn parse_object(input: &str) -> anyhow::Result<Object> {
    let s = read_input(input)?;
    let s = s.trim();
    if !s.starts_with('{') {
        if s.starts_with('[') {
            return Ok(Object::Bitableau(s.parse()?));
        }
        return Ok(Object::Monomial(s.parse()?));
    }
    let v: Value = serde_json::from_str(s)?;
    let has = |k: &str| v.get(k).is_some();
    Ok(if has("shape") {
        Object::Shape(serde_json::from_value(v["shape"].clone())?)
    } else if has("sequence") {
        Object::Sequence(serde_json::from_value(v["sequence"].clone())?)
    } else if has("factors") {
        Object::Bitableau(serde_json::from_value(v)?)
    } else if has("cells") {
        Object::Monomial(serde_json::from_value(v)?)
    } else if has("u") {
        Object::Monomial(serde_json::from_value::<TwoRowArray>(v)?.to_monomial())
    } else {
        bail!("expected an object with `shape`, `sequence`, `factors`, `cells` or `u`/`v`")
    })
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    match writeln!(out, "{}", text.trim_end_matches('\n')) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json(v: &impl serde::Serialize) -> anyhow::Result<()> {
    emit(&serde_json::to_string_pretty(v)?)
}

fn invariant(args: &InvariantArgs) -> anyhow::Result<Value> {
    use InvariantName::*;
    let obj = parse_object(&args.input)?;
    let t = args.t;
    if t == 0 && !matches!(args.name, Lis | GammaDelta) {
        bail!("-t must be at least 1");
    }
    let value = match (args.name, &obj) {
        (GammaDelta, _) => {
            let delta = args.delta.as_ref().ok_or_else(|| anyhow!("gamma-delta needs --delta"))?;
            match &obj {
                Object::Bitableau(b) => gamma_delta_bitableau(delta, b),
                Object::Monomial(m) => gamma_delta_monomial(delta, m),
                _ => bail!("gamma-delta takes a bitableau or a monomial"),
            }
        }
        (Lis, Object::Sequence(b)) => lis(b),
        (Lis, _) => bail!("lis takes a sequence"),
        (Gamma, Object::Shape(s)) => s.gamma(t),
        (Gamma, Object::Bitableau(b)) => b.shape().gamma(t),
        (Gamma, Object::Sequence(b)) => gamma_sequence(t, b),
        (Gamma, Object::Monomial(m)) => gamma_monomial(t, m),
        (Alpha, Object::Shape(s)) => s.alpha(t),
        (Alpha, Object::Bitableau(b)) => b.shape().alpha(t),
        (Alpha, Object::Sequence(b)) => greene_alpha(t, b, GreeneMode::BruteForce),
        (Alpha, Object::Monomial(m)) => alpha_monomial(t, m),
        (AlphaDual, Object::Shape(s)) => s.conjugate().alpha(t),
        (AlphaDual, Object::Sequence(b)) => greene_alpha_dual(t, b),
        (AlphaDual, _) => bail!("alpha-dual takes a shape or a sequence"),
        (W, Object::Sequence(b)) => w_sequence(t, b),
        (W, Object::Monomial(m)) => w_monomial(t, m),
        (W, _) => bail!("w takes a sequence or a monomial"),
    };
    let name = match args.name {
        Lis => "lis".to_string(),
        Gamma => format!("gamma_{t}"),
        Alpha => format!("alpha_{t}"),
        AlphaDual => format!("alpha*_{t}"),
        W => format!("w_{t}"),
        GammaDelta => format!("gamma_{}", args.delta.as_ref().expect("checked above")),
    };
    Ok(json!({"invariant": name, "value": value}))
}

fn load_config(args: &RunArgs) -> anyhow::Result<RunConfig> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        None => RunConfig::default(),
    };
    if let Some(g) = args.grid {
        cfg.grid = g;
    }
    if let Some(d) = args.degree_bound {
        cfg.degree_bound = d;
    }
    if !args.suites.is_empty() {
        cfg.suites = args.suites.clone();
    }
    if let Some(b) = args.budget {
        cfg.budget = b;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(c) = args.cross_check_limit {
        cfg.cross_check_limit = c;
    }
    if let Some(o) = &args.out {
        cfg.out = Some(o.clone());
    }
    if let Some(f) = args.format {
        cfg.format = match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        };
    }
    if args.no_timestamp {
        cfg.timestamp = false;
    }
    if args.per_slice {
        cfg.per_slice = true;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => emit(text),
    }
}

fn run(args: &RunArgs) -> Result<u8, Failure> {
    let cfg = load_config(args)?;
    let outcome = run_all(&cfg).map_err(|e| Failure::Other(e.into()))?;
    let text = outcome.render(cfg.format).map_err(|e| Failure::Other(e.into()))?;
    write_output(cfg.out.as_deref(), &text).map_err(Failure::Other)?;
    for r in &outcome.reports {
        let verdict = if r.budget_exceeded {
            "BUDGET"
        } else if r.explorer {
            "EXPLORED"
        } else if r.passed() {
            "PASS"
        } else {
            "FAIL"
        };
        eprintln!("{verdict:>8} {} ({} checked, {} counterexamples)", r.suite, r.summary.checked, r.summary.counterexamples);
    }
    Ok(outcome.exit_code() as u8)
}

fn slices(args: &SliceArgs) -> anyhow::Result<Value> {
    let kind: FamilyKind = serde_json::from_str(&read_input(&args.family)?)?;
    let fam = IdealFamily::new(kind, args.grid)?;
    let st = Straightener::new(args.grid);
    let mut out = Vec::new();
    for md in multidegrees_up_to(args.grid, args.degree_bound) {
        let slice = slice_of(&st, &fam, &md)?;
        if slice.rank() == 0 {
            continue;
        }
        out.push(json!({
            "multidegree": md.to_string(),
            "dimension": slice.rank(),
            "initial": slice.initial_monomials.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        }));
    }
    Ok(json!({"family": fam.name(), "grid": args.grid, "slices": out}))
}

fn dispatch(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Run(args) => return run(&args),
        Command::Suites => {
            emit(&SUITES.join("\n"))?;
        }
        Command::Krs { dir: KrsDir::Forward { input, trace } } => {
            let b = parse_bitableau(&input)?;
            let array = krs::forward(&b).map_err(anyhow::Error::from)?;
            if trace {
                let steps = krs::deletion_trace(&b).map_err(anyhow::Error::from)?;
                let steps: Vec<Value> = steps
                    .iter()
                    .map(|s| json!({"pair": [s.ell, s.r], "rest": s.rest.to_string(), "pivot_row": s.pivot_row, "push_outs": s.push_outs}))
                    .collect();
                print_json(&json!({"array": array, "monomial": array.to_monomial().to_string(), "steps": steps}))?;
            } else {
                print_json(&array)?;
            }
        }
        Command::Krs { dir: KrsDir::Inverse { input } } => {
            let m = match parse_object(&input)? {
                Object::Monomial(m) => m,
                _ => return Err(Failure::Usage(anyhow!("inverse takes a two-row array or a monomial"))),
            };
            let b = krs::inverse_monomial(&m).map_err(anyhow::Error::from)?;
            print_json(&b)?;
        }
        Command::Invariant(args) => print_json(&invariant(&args)?)?,
        Command::Straighten { input } => {
            let b = parse_bitableau(&input)?;
            let grid = GridSize::new(
                b.factors().iter().flat_map(|f| f.rows().iter().copied()).max().unwrap_or(1),
                b.factors().iter().flat_map(|f| f.cols().iter().copied()).max().unwrap_or(1),
            )
            .map_err(anyhow::Error::from)?;
            let rep = Straightener::new(grid).straighten_bitableau(&b).map_err(anyhow::Error::from)?;
            print_json(&rep)?;
        }
        Command::Slices(args) => print_json(&slices(&args)?)?,
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
