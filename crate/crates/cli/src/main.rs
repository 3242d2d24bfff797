//! `pht`: persistent homology transforms of polygons from the command line.

mod commands;
mod error;
mod io;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "pht",
    version,
    about = "Degree-0 persistent homology transform of planar polygons"
)]
pub struct Cli {
    #[command(flatten)]
    pub shared: Shared,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone, Copy)]
pub struct Shared {
    /// Tolerance for diagram comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Extra samples per arc between critical angles.
    #[arg(long, global = true, default_value_t = 0)]
    pub refine: usize,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for per-direction work (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Report star-shapedness, kernel, center, general position and simplicity.
    Check {
        shape: PathBuf,
        #[arg(long)]
        require_star: bool,
        #[arg(long)]
        require_general_position: bool,
        #[arg(long)]
        require_simple: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Diagrams at every planned direction.
    Pht {
        shape: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also draw the shape, its sectors and the diagram tracks.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Compare the shape's reduced diagrams with the union of its sectors'.
    Decompose {
        shape: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build sections of the diagram bundle and decide monodromy.
    Monodromy {
        shape: PathBuf,
        /// Vines CSV.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Verdict JSON.
        #[arg(long)]
        verdict: Option<PathBuf>,
    },
    /// Write a generated shape.
    Generate {
        kind: Kind,
        /// Vertex count (regular_ngon).
        #[arg(long)]
        n: Option<usize>,
        /// Vertex count (random_star, convex, spiral).
        #[arg(long)]
        k: Option<usize>,
        /// Number of turns (spiral).
        #[arg(long, default_value_t = 1.5)]
        turns: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Kind {
    RegularNgon,
    RandomStar,
    Spiral,
    Convex,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.shared.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
