mod commands;
mod output;
mod weights;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use scn_core::Limits;

use crate::commands::{CliError, Method, Moves, VerifyCheck};
use crate::output::Format;

/// Exact verification of super Catalan number identities.
#[derive(Debug, Parser)]
#[command(name = "scn", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Lift the enumeration, matching and cube-dimension caps.
    #[arg(long, global = true)]
    max_cap_override: bool,

    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute S(m,n) by one method, or by all of them with --verify-all.
    Scn {
        m: u32,
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        /// Compute by every method and fail unless they agree.
        #[arg(long)]
        verify_all: bool,
    },
    /// Check an identity over all (m,n) with m+n <= --max.
    Verify {
        #[arg(value_enum)]
        what: VerifyCheck,
        #[arg(long = "max", default_value_t = 10)]
        max: u32,
        /// Only pairs with this m.
        #[arg(long)]
        m: Option<u32>,
        /// Only pairs with this n.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Krawtchouk table K_j^d(x) for one d, or a single value.
    Krawtchouk { d: u32, j: Option<u32>, x: Option<u32> },
    /// Height histogram and signed sum over the lattice paths of (m,n).
    Paths {
        m: u32,
        n: u32,
        /// List every path with its height and sign.
        #[arg(long)]
        list: bool,
    },
    /// Certified spectrum of the distance-N graph of the 2N-cube.
    Spectrum { n: u32 },
    /// Search for a sign-reversing injection under a move relation.
    Involution {
        m: u32,
        n: u32,
        #[arg(long, value_enum, default_value_t = Moves::BoundarySwap)]
        moves: Moves,
        /// Distance bound for --moves hamming.
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Apply the MacWilliams transform to a weight-distribution file.
    Macwilliams {
        file: PathBuf,
        /// Code size |C|; overrides the file's "size" field.
        #[arg(long)]
        size: Option<String>,
    },
}

fn run(cli: Cli) -> Result<output::Output, CliError> {
    let limits = if cli.max_cap_override {
        Limits::unbounded()
    } else {
        Limits::default()
    };
    match cli.command {
        Command::Scn { m, n, method, verify_all } => commands::scn(m, n, method, verify_all, &limits),
        Command::Verify { what, max, m, n } => commands::verify(what, max, m, n, &limits),
        Command::Krawtchouk { d, j, x } => commands::krawtchouk(d, j, x),
        Command::Paths { m, n, list } => commands::paths(m, n, list, &limits),
        Command::Spectrum { n } => commands::spectrum(n, &limits),
        Command::Involution { m, n, moves, k } => commands::involution(m, n, moves, k, &limits),
        Command::Macwilliams { file, size } => commands::macwilliams(&file, size.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.render(format).as_bytes());
            match out.failure {
                None => ExitCode::SUCCESS,
                Some(msg) => {
                    eprintln!("FAIL: {msg}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

