mod manifest;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use manifest::Run;
use shapedecomp::decompose::{extract_bosonic_numeric, extract_bosonic_symbolic, DecomposeError};
use shapedecomp::density::{density_grid_guarded, AxisRange, DensityError, DensityKind};
use shapedecomp::ecg::{block_amplitudes, EcgBasis, EcgError, OptimizeError, OptimizeOptions};
use shapedecomp::rng::seeded;
use shapedecomp::shapes::shapes;
use shapedecomp::Poly9;

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Identity(String),
    Numerical(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Identity(_) => 3,
            CliError::Numerical(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Identity(m) | CliError::Numerical(m) => m,
        }
    }
}

impl From<DecomposeError> for CliError {
    fn from(e: DecomposeError) -> Self {
        match e {
            DecomposeError::NotAlternating | DecomposeError::InvalidInput(_) => CliError::Validation(e.to_string()),
            DecomposeError::NotDivisible(_) => CliError::Identity(e.to_string()),
            DecomposeError::SingularPoint => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<EcgError> for CliError {
    fn from(e: EcgError) -> Self {
        match e {
            EcgError::InvalidBasis(_) => CliError::Validation(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<DensityError> for CliError {
    fn from(e: DensityError) -> Self {
        match e {
            DensityError::BudgetExhausted { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "shapedecomp", version, about = "Shape decomposition of three-fermion wave functions")]
struct Cli {
    /// Worker threads; SHAPEDECOMP_THREADS takes precedence.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Runs the identity checks and prints a pass/fail table.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Shape table utilities.
    Shapes {
        #[command(subcommand)]
        action: ShapesAction,
    },
    /// Symmetry group utilities.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Extracts the 36 bosonic functions of a polynomial wave function.
    Decompose(DecomposeArgs),
    /// Correlated-Gaussian solver.
    Ecg {
        #[command(subcommand)]
        action: EcgAction,
    },
    /// Samples ρ or a bosonic density on a grid.
    Density(DensityArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Shapes,
    Group,
    Decompose,
    All,
}

#[derive(Subcommand)]
enum ShapesAction {
    Verify,
    /// Emits the 36 expanded shapes.
    Dump {
        #[arg(long, value_enum, default_value = "json")]
        format: DumpFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum GroupAction {
    Verify,
}

#[derive(clap::Args)]
struct DecomposeArgs {
    #[command(subcommand)]
    action: Option<DecomposeAction>,
    /// Polynomial in JSON form: {"terms": [{"exp": [9 exponents], "num": "..", "den": ".."}]}.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "symbolic")]
    mode: Mode,
    /// Nine comma-separated coordinates x1,x2,x3,y1,y2,y3,z1,z2,z3 (numeric mode).
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum DecomposeAction {
    /// Symbolic round trips on random inputs.
    Selftest {
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Symbolic,
    Numeric,
}

#[derive(Subcommand)]
enum EcgAction {
    /// Stagewise basis optimization.
    Optimize {
        #[arg(long, value_delimiter = ',', default_values_t = [1usize, 2, 3, 4, 6, 9])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 3000)]
        max_sweeps: usize,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Shape-block amplitudes and weights as CSV.
    Weights {
        #[arg(long)]
        basis: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct DensityArgs {
    #[arg(long)]
    basis: PathBuf,
    /// rho, or D<i> for a bosonic density (D23, D26, D32, ...).
    #[arg(long)]
    kind: String,
    /// "min:max:count" for all axes, or three such ranges separated by commas.
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 20_000)]
    samples: usize,
    /// Coincidence guard on the Vandermonde magnitudes.
    #[arg(long, default_value_t = 1e-6)]
    eps: f64,
    #[arg(long)]
    out: PathBuf,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))
}

fn identity(ok: bool, what: &str) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Identity(format!("{what} failed")))
    }
}

fn run_verify(target: VerifyTarget, seed: u64) -> Result<(), CliError> {
    let mut ok = true;
    if matches!(target, VerifyTarget::Shapes | VerifyTarget::All) {
        ok &= verify::print_table("shapes", &verify::shapes_checks());
    }
    if matches!(target, VerifyTarget::Group | VerifyTarget::All) {
        ok &= verify::print_table("group", &verify::group_checks());
    }
    if matches!(target, VerifyTarget::Decompose | VerifyTarget::All) {
        ok &= verify::print_table("decompose", &verify::decompose_checks(seed));
    }
    identity(ok, "verification")
}

fn dump_shapes(format: DumpFormat, out: Option<PathBuf>) -> Result<(), CliError> {
    let set = shapes();
    let text = match format {
        DumpFormat::Json => {
            let items: Vec<_> = set
                .shapes
                .iter()
                .enumerate()
                .map(|(i, s)| json!({ "index": i, "block": set.block_of(i), "poly": s.to_json_value() }))
                .collect();
            serde_json::to_string_pretty(&json!({ "shapes": items })).expect("serializable") + "\n"
        }
        DumpFormat::Text => set.shapes.iter().enumerate().map(|(i, s)| format!("S{i} = {s}\n")).collect(),
    };
    let name = if matches!(format, DumpFormat::Json) { "json" } else { "text" };
    emit(&Run::new("shapes dump", json!({ "format": name })), out, &text)
}

/// Writes to `out` with a manifest, or to stdout.
fn emit(run: &Run, out: Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => run.write_artifact(&p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_point(s: &str) -> Result<[f64; 9], CliError> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| CliError::Validation(format!("bad coordinate {t:?}"))))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| CliError::Validation("a point needs nine coordinates".into()))
}

fn run_decompose(args: DecomposeArgs) -> Result<(), CliError> {
    if let Some(DecomposeAction::Selftest { count, seed }) = args.action {
        let (ok, detail) = verify::round_trips(&mut seeded(seed), count);
        verify::print_table("decompose selftest", &[verify::Check { name: "symbolic round trips".into(), passed: ok, detail }]);
        return identity(ok, "selftest");
    }
    let input = args.input.ok_or_else(|| CliError::Validation("--input is required".into()))?;
    let psi = Poly9::from_json(&read(&input)?).map_err(|e| CliError::Validation(e.to_string()))?;
    if !psi.is_alternating() {
        return Err(DecomposeError::NotAlternating.into());
    }
    let input_hash = input.display().to_string();
    let (text, config) = match args.mode {
        Mode::Symbolic => (extract_bosonic_symbolic(&psi)?.to_json(), json!({ "input": input_hash, "mode": "symbolic" })),
        Mode::Numeric => {
            let pt = parse_point(args.point.as_deref().ok_or_else(|| CliError::Validation("numeric mode needs --point".into()))?)?;
            let phi = extract_bosonic_numeric(|v| psi.evaluate_f64(v), &pt)?;
            (phi.to_json(&pt), json!({ "input": input_hash, "mode": "numeric", "point": pt.to_vec() }))
        }
    };
    let run = Run::new("decompose", config);
    emit(&run, args.out, &run.tag_json(&text))
}

fn run_ecg(action: EcgAction) -> Result<(), CliError> {
    match action {
        EcgAction::Optimize { sizes, seed, max_sweeps, tolerance, out } => {
            let opts = OptimizeOptions { sizes: sizes.clone(), seed, max_sweeps, tolerance, ..Default::default() };
            let run = Run::new(
                "ecg optimize",
                json!({ "sizes": sizes, "seed": seed, "max_sweeps": max_sweeps, "trials": opts.trials, "tolerance": tolerance }),
            );
            let stages = shapedecomp::ecg::optimize_basis(&opts).map_err(|e| match e {
                OptimizeError::BadSchedule => CliError::Validation(e.to_string()),
                OptimizeError::Ecg(e) => e.into(),
            })?;
            for s in &stages {
                println!("N={:<4} E={:.10} sweeps={}{}", s.basis.size(), s.basis.energy.unwrap_or(f64::NAN), s.sweeps, if s.stalled { " (stalled)" } else { "" });
            }
            let last = &stages.last().expect("at least one stage").basis;
            run.write_artifact(&out, &run.tag_json(&last.to_json()))
        }
        EcgAction::Weights { basis, out } => {
            let text = read(&basis)?;
            let b = EcgBasis::from_json(&text)?;
            let w = block_amplitudes(&b)?;
            let run = Run::new("ecg weights", json!({ "basis": basis.display().to_string(), "basis_sha256": manifest_sha(&text) }));
            emit(&run, out, &w.to_csv())
        }
    }
}

fn manifest_sha(text: &str) -> String {
    use sha2::{Digest, Sha256};
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn parse_grid(s: &str) -> Result<[AxisRange; 3], CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [one] => {
            let r = AxisRange::parse(one)?;
            Ok([r, r, r])
        }
        [x, y, z] => Ok([AxisRange::parse(x)?, AxisRange::parse(y)?, AxisRange::parse(z)?]),
        _ => Err(CliError::Validation(format!("bad grid {s:?}"))),
    }
}

fn run_density(a: DensityArgs) -> Result<(), CliError> {
    let text = read(&a.basis)?;
    let basis = EcgBasis::from_json(&text)?;
    let kind = DensityKind::parse(&a.kind)?;
    let axes = parse_grid(&a.grid)?;
    if !(a.eps > 0.0) || a.samples < 2 {
        return Err(CliError::Validation("need eps > 0 and at least two samples".into()));
    }
    let run = Run::new(
        "density",
        json!({
            "basis": a.basis.display().to_string(), "basis_sha256": manifest_sha(&text), "kind": kind.label(),
            "grid": a.grid, "seed": a.seed, "samples": a.samples, "eps": a.eps,
        }),
    );
    let grid = density_grid_guarded(&basis, kind, axes, a.samples, a.seed, a.eps)?;
    let body = grid.to_text();
    let (head, rest) = body.split_once('\n').expect("grid text has a header");
    run.write_artifact(&a.out, &format!("{head}\n# config {}\n{rest}", run.hash))
}

fn configure_threads(flag: Option<usize>) {
    let env = std::env::var("SHAPEDECOMP_THREADS").ok().and_then(|v| v.parse().ok());
    if let Some(n) = env.or(flag).filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    let r = match cli.command {
        Command::Verify { target, seed } => run_verify(target, seed),
        Command::Shapes { action: ShapesAction::Verify } => run_verify(VerifyTarget::Shapes, 1),
        Command::Shapes { action: ShapesAction::Dump { format, out } } => dump_shapes(format, out),
        Command::Group { action: GroupAction::Verify } => run_verify(VerifyTarget::Group, 1),
        Command::Decompose(args) => run_decompose(args),
        Command::Ecg { action } => run_ecg(action),
        Command::Density(args) => run_density(args),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
