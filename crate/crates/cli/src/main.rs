//! `rindler`: energy scans, zero tables, amplitude traces and mirror-path
//! queries for Rindler mirror arrays, written as CSV or JSON.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rindler_core::models::ModelKind;

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "rindler", version, about = "Spectra of Dirac fermions with Rindler mirror arrays")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a grid of energies (continuum, discrete candidate, gap)
    #[command(args_override_self = true)]
    Scan(Opts),
    /// Zeros of Hardy's Z (or Z_chi) with the matching boundary phases
    #[command(args_override_self = true)]
    Zeros(Opts),
    /// |A_k|^2 from exact propagation and from the semiclassical amplitude
    #[command(args_override_self = true)]
    AmpTrace(Opts),
    /// Bounce paths returning after tau = log n
    #[command(args_override_self = true)]
    MirrorPaths(Opts),
    /// Single-boundary spectrum with the counting formula
    #[command(args_override_self = true)]
    XpSpectrum(Opts),
    /// Boundary phase at each zero
    #[command(args_override_self = true)]
    ThetaOfZero(Opts),
    /// Partial sums of mu(n) n^{-z} on a log-spaced x grid
    #[command(args_override_self = true)]
    Perron(Opts),
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// harmonic, harmonic-damped, polylog, riemann or dirichlet
    #[arg(long, default_value = "riemann")]
    pub model: ModelKind,
    #[arg(long, default_value_t = 0.25, allow_negative_numbers = true)]
    pub epsilon: f64,
    /// Exponent of the power-law arrays; real part of z for `perron`
    #[arg(long, default_value_t = 0.5)]
    pub sigma: f64,
    #[arg(long, default_value_t = 0.0)]
    pub lambda: f64,
    /// Dirichlet character modulus
    #[arg(long, default_value_t = 4)]
    pub modulus: u64,
    #[arg(long, default_value_t = 1)]
    pub char_index: u64,
    /// Boundary phase; defaults to the tuned phase when --zero-index is set, else 0
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub emin: Option<f64>,
    #[arg(long)]
    pub emax: Option<f64>,
    /// Point count (scan, perron) or step (xp-spectrum)
    #[arg(long)]
    pub grid: Option<f64>,
    #[arg(long)]
    pub kmin: Option<u64>,
    #[arg(long)]
    pub kmax: Option<u64>,
    /// Energy for amp-trace, imaginary part of z for perron
    #[arg(long, allow_negative_numbers = true)]
    pub energy: Option<f64>,
    /// Use the n-th zero as the energy and its tuned phase as theta
    #[arg(long)]
    pub zero_index: Option<i64>,
    /// Number of zeros (theta-of-zero)
    #[arg(long)]
    pub count: Option<usize>,
    /// Target n (mirror-paths)
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long, default_value_t = 3)]
    pub depth: u32,
    #[arg(long)]
    pub max_mirror: Option<u64>,
    /// m * l_1 (xp-spectrum)
    #[arg(long, default_value_t = 2.0 * std::f64::consts::PI)]
    pub mell: f64,
    #[arg(long)]
    pub xmin: Option<u64>,
    #[arg(long)]
    pub xmax: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub jobs: Option<usize>,
    /// key = value file; flags given on the command line take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numerical(String),
}

impl From<rindler_core::Error> for CliError {
    fn from(e: rindler_core::Error) -> Self {
        CliError::Numerical(e.to_string())
    }
}

fn main() -> ExitCode {
    let argv = match config::merge_argv(std::env::args().collect()) {
        Ok(a) => a,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let cli = Cli::parse_from(argv);
    let run = match cli.command {
        Command::Scan(o) => commands::scan(&o).map(|t| (t, o)),
        Command::Zeros(o) => commands::zeros(&o).map(|t| (t, o)),
        Command::AmpTrace(o) => commands::amp_trace(&o).map(|t| (t, o)),
        Command::MirrorPaths(o) => commands::mirror_paths(&o).map(|t| (t, o)),
        Command::XpSpectrum(o) => commands::xp_spectrum(&o).map(|t| (t, o)),
        Command::ThetaOfZero(o) => commands::theta_of_zero(&o).map(|t| (t, o)),
        Command::Perron(o) => commands::perron(&o).map(|t| (t, o)),
    };
    let (table, opts) = match run {
        Ok(x) => x,
        Err(CliError::Config(msg)) => {
            eprintln!("config error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("numerical error: {msg}");
            return ExitCode::from(3);
        }
    };
    let written = match &opts.out {
        Some(path) => std::fs::File::create(path)
            .and_then(|f| table.write(opts.format, std::io::BufWriter::new(f))),
        None => table.write(opts.format, std::io::stdout().lock()),
    };
    if let Err(e) = written {
        eprintln!("config error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
