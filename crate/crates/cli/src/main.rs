mod commands;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use config::{RunConfig, UsageError};

#[derive(Parser, Debug)]
#[command(name = "nstl", version, about = "Kazhdan-Lusztig bases, Specht modules and nonstandard Temperley-Lieb irreducibles")]
struct Cli {
    /// Directory for cached KL tables (kl-r{r}.json).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Recorded in verify-all output; the computations themselves are deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Progress and timings on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    /// Allow ranks above 6.
    #[arg(long, global = true)]
    allow_large_r: bool,
    /// Specialization point(s) a or a/b; defaults to 7/3, 11/5, 13/7.
    #[arg(long = "u0", global = true)]
    u0: Vec<String>,
    /// Print an aligned text rendering instead of JSON where one exists.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Canonical basis elements expanded in the standard basis.
    KlBasis {
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Side::Lower)]
        basis: Side,
        /// A single permutation in one-line notation.
        #[arg(long)]
        w: Option<String>,
    },
    /// Right cells of the regular representation, labeled by insertion tableaux.
    Cells {
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Side::Lower)]
        basis: Side,
    },
    /// W-graph of a Specht module with descent sets and μ edges.
    Wgraph {
        #[arg(long)]
        shape: String,
    },
    /// Dual equivalence graph with labeled edges.
    DeGraph {
        #[arg(long)]
        shape: String,
    },
    /// Action matrices of a Specht module.
    Specht {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = Side::Lower)]
        basis: Side,
    },
    /// Lower-to-upper transition matrix.
    Transition {
        #[arg(long)]
        shape: String,
    },
    /// Irreducible summands of M_lhs ⊗ M_rhs.
    Decompose {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Restriction of an irreducible to the next smaller rank.
    Restrict {
        /// "+3,2", "-3,2", "4,1|3,2" or "eps+".
        #[arg(long, allow_hyphen_values = true)]
        label: String,
        /// Rank, needed only for eps+.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Label grid of the seminormal bijection at one level.
    Seminormal {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// Defaults to the rank.
        #[arg(long)]
        level: Option<usize>,
        /// Also compute the basis vectors at the first specialization point.
        #[arg(long)]
        vectors: bool,
    },
    /// Closed-form dimension against the spanning oracle.
    DimCheck {
        #[arg(long)]
        r: usize,
    },
    /// Run every acceptance check.
    VerifyAll {
        /// Defaults to 5.
        #[arg(long)]
        r: Option<usize>,
    },
}

pub enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

/// Output of a subcommand: the rendered text and whether its checks passed.
pub struct Output {
    pub body: String,
    pub ok: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let cfg = RunConfig::new(&cli.u0, cli.out.clone(), cli.verbose, cli.seed, cli.allow_large_r)?;
    nstl::hecke::set_cache_dir(cli.cache_dir.clone());
    let start = std::time::Instant::now();
    let out = commands::dispatch(&cli.command, &cfg, cli.text)?;
    if cfg.verbosity > 0 {
        eprintln!("finished in {:.2}s", start.elapsed().as_secs_f64());
    }
    let mut body = out.body;
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cfg.out {
        Some(path) => std::fs::write(path, body).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?,
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| Failure::Runtime(e.to_string()))?,
    }
    Ok(out.ok)
}
