//! `tv`: Turaev-Viro invariants of closed 3-manifold triangulations.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tv_core::triangulation::{parse_triangulation, Triangulation};
use tv_core::Error;

#[derive(Parser)]
#[command(name = "tv", version, about = "Turaev-Viro invariants of 3-manifold triangulations")]
struct Cli {
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute TV_{r,q} exactly.
    Compute(ComputeArgs),
    /// List admissible colourings, or count them.
    Enumerate(EnumerateArgs),
    /// Report upper bounds on the number of admissible colourings.
    Bounds(BoundsArgs),
    /// Write the census of closed triangulations as gluing-table files.
    Census(CensusArgs),
    /// Cross-check the algorithms against each other on one input.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Auto,
    Naive,
    Tv4,
    OddFast,
}

#[derive(Args)]
pub struct InputArgs {
    /// Gluing-table file.
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long)]
    pub r: u32,
}

#[derive(Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
    pub algorithm: Algorithm,
    /// Restrict to a cohomology class, given by its β₁ coordinates, e.g. 01.
    #[arg(long)]
    pub class: Option<String>,
    #[arg(long)]
    pub json: bool,
    /// Digits after the decimal point in the approximation (1 to 15).
    #[arg(long, default_value_t = 12)]
    pub digits: usize,
    /// Include wall time in the output.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub count_only: bool,
    /// Integer colours only.
    #[arg(long)]
    pub integer_only: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct CensusArgs {
    /// Largest number of tetrahedra.
    #[arg(long)]
    pub tets: usize,
    #[arg(long)]
    pub one_vertex: bool,
    /// Only Z₂-homology spheres.
    #[arg(long)]
    pub z2hs: bool,
    #[arg(long, default_value = "census")]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 1)]
    pub q: u32,
}

/// Failure modes, each with its own exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    InvalidInput(String),
    Verification(usize),
    Runtime(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::InvalidInput(_) => 3,
            Failure::Verification(_) | Failure::Runtime(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::NonInvolutive { .. }
            | Error::SelfGluedFace { .. }
            | Error::TetOutOfRange { .. }
            | Error::InvalidPermutation(_)
            | Error::InvalidTriangulation(_)
            | Error::Disconnected => Failure::InvalidInput(e.to_string()),
            Error::InvalidField { .. }
            | Error::ClassLength { .. }
            | Error::CensusTooLarge { .. }
            | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

pub fn load(args: &InputArgs) -> Result<Triangulation, Failure> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| Failure::InvalidInput(format!("{}: {e}", args.file.display())))?;
    parse_triangulation(&text).map_err(|e| Failure::InvalidInput(format!("{}: {e}", args.file.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Failure::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    match cli.command {
        Command::Compute(a) => commands::compute(&a),
        Command::Enumerate(a) => commands::enumerate(&a),
        Command::Bounds(a) => commands::bounds(&a),
        Command::Census(a) => commands::census(&a),
        Command::Verify(a) => commands::verify(&a),
    }
}

fn main() -> ExitCode {
    // Die quietly when the reader of a pipe goes away, as other filters do.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::InvalidInput(m) | Failure::Runtime(m) => eprintln!("tv: {m}"),
                Failure::Verification(n) => eprintln!("tv: {n} check(s) failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
