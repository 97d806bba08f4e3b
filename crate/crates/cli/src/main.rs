mod dualnum;
mod hh;
mod ideals;
mod input;
mod orbit;
mod output;
mod selftest;

use clap::{Args, Parser, Subcommand};
use output::{Format, Output};
use std::path::PathBuf;
use std::process::ExitCode;

/// Külshammer ideals and graded centers over prime fields.
#[derive(Parser)]
#[command(name = "kulideal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    format: FormatFlags,
}

#[derive(Args)]
struct FormatFlags {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "tsv")]
    json: bool,
    /// Emit tab-separated rows.
    #[arg(long, global = true)]
    tsv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// The chain Z ⊇ K_1 ⊇ … ⊇ R of an algebra.
    Ideals {
        /// Algebra JSON, or `builtin:<name>`.
        algebra: String,
        /// Largest r; defaults to 1 + ⌈log_p(dim)⌉.
        #[arg(long)]
        r_max: Option<usize>,
    },
    /// Dimensions of HH^l from the bar complex.
    Hh {
        algebra: String,
        #[arg(long, default_value_t = 4)]
        l_max: usize,
        /// Largest differential, in matrix entries, the bar complex may build.
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Compares the ideal-chain fingerprints of two algebras.
    Fingerprint { a: String, b: String },
    /// Tables for the perfect complexes over k[x]/x².
    Dualnum {
        /// Characteristic of the base field.
        #[arg(long, default_value_t = 3)]
        p: u64,
        /// Objects are intervals [m,n] with |m|,|n| and n-m at most this; cells the window cannot certify are flagged.
        #[arg(long, default_value_t = 6)]
        window: i32,
        #[arg(long, value_enum, default_value_t = dualnum::Report::All)]
        report: dualnum::Report,
        /// Smallest s in the K_(r,s) and HK tables.
        #[arg(long, default_value_t = -4, allow_hyphen_values = true)]
        s_min: i32,
        /// Largest s in the K_(r,s) and HK tables.
        #[arg(long, default_value_t = 4)]
        s_max: i32,
        /// Largest center (or Hochschild) degree in the ideal tables.
        #[arg(long, default_value_t = 4)]
        t_max: i32,
    },
    /// Orbit category of a finite category under an automorphism.
    Orbit {
        /// Category JSON with optional automorphisms and trace.
        category: PathBuf,
        /// Automorphism name from the input, or `id`.
        #[arg(long, default_value = "id")]
        sigma: String,
        /// Degree window.
        #[arg(short = 'D', long = "degree-window", default_value_t = 4)]
        window: i32,
        #[arg(long, value_enum, default_value_t = orbit::Report::Center)]
        report: orbit::Report,
        /// Largest r in the ideal reports.
        #[arg(long, default_value_t = 2)]
        r_max: usize,
    },
    /// Runs the built-in property checks.
    Selftest {
        /// Seed for the random elements.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Random trials per fixture.
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

/// Failures a command can report; they map to distinct exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CmdError {
    #[error("input error: {0}")]
    Input(String),
    #[error("check failed: {0}")]
    Check(String),
}

impl CmdError {
    fn exit_code(&self) -> u8 {
        match self {
            CmdError::Input(_) => 2,
            CmdError::Check(_) => 1,
        }
    }
}

/// Errors during computation are failed checks; loading errors are tagged as input errors by the loaders.
impl From<kulideal::Error> for CmdError {
    fn from(e: kulideal::Error) -> Self {
        CmdError::Check(e.to_string())
    }
}

fn configure_threads() {
    let threads = std::env::var("KUL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0);
    if let Some(n) = threads {
        // only fails if a pool was already installed, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn run(cli: Cli) -> Result<Output, CmdError> {
    match cli.command {
        Command::Ideals { algebra, r_max } => ideals::ideals(&input::algebra(&algebra)?, r_max),
        Command::Hh { algebra, l_max, budget } => hh::hh(&input::algebra(&algebra)?, l_max, budget),
        Command::Fingerprint { a, b } => ideals::fingerprint(&input::algebra(&a)?, &input::algebra(&b)?),
        Command::Dualnum { p, window, report, s_min, s_max, t_max } => {
            dualnum::dualnum(&dualnum::Config::new(p, window, report, s_min..=s_max, t_max)?)
        }
        Command::Orbit { category, sigma, window, report, r_max } => orbit::orbit(&input::orbit(&category)?, &sigma, window, report, r_max),
        Command::Selftest { seed, trials } => selftest::selftest(seed, trials),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let format = match (cli.format.json, cli.format.tsv) {
        (true, _) => Format::Json,
        (_, true) => Format::Tsv,
        _ => Format::Text,
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.render(format));
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("kulideal: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
