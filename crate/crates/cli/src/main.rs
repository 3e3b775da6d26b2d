mod commands;
mod error;
mod input;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use error::CliError;

/// Derive, verify and evaluate integration-by-parts identities for the
/// Riemann zeta function.
#[derive(Parser, Debug)]
#[command(name = "zetacont", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derive identities and optionally write them as JSON.
    Derive {
        /// Depth or depth range: `5`, `1..12`, `2,4,6`.
        #[arg(long, default_value = "1..12")]
        p: String,
        /// Number of stored series coefficients.
        #[arg(long = "kmax", default_value_t = 64)]
        k_max: u32,
        /// Output file for the JSON records.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-derive every identity and check it against the built-in tables and
    /// known values.
    Verify {
        /// Check identities from this JSON file instead of re-deriving.
        #[arg(long)]
        identities: Option<PathBuf>,
        /// Run only these checks (comma separated).
        #[arg(long, value_delimiter = ',', value_enum)]
        only: Vec<verify::Check>,
        #[arg(long, env = "ZETA_DIGITS", default_value_t = 40)]
        digits: u32,
    },
    /// Evaluate ζ(s) at one point.
    Eval {
        /// Complex literal: `a`, `a+bi` or `a-bi`.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Identity depth; defaults to the smallest depth whose half-plane
        /// contains `Re s`.
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, env = "ZETA_DIGITS", default_value_t = 40)]
        digits: u32,
        #[arg(long = "kmax", default_value_t = 64)]
        k_max: u32,
        /// Load identities from this JSON file.
        #[arg(long)]
        identities: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate ζ(s) over a rectangular grid.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        re_min: String,
        #[arg(long, allow_hyphen_values = true)]
        re_max: String,
        #[arg(long, default_value = "1")]
        re_step: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        im_min: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        im_max: String,
        #[arg(long, default_value = "1")]
        im_step: String,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, env = "ZETA_DIGITS", default_value_t = 40)]
        digits: u32,
        #[arg(long = "kmax", default_value_t = 64)]
        k_max: u32,
        #[arg(long)]
        identities: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Named special-value checks.
    Special {
        #[arg(long, value_enum)]
        check: commands::SpecialCheck,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, env = "ZETA_DIGITS", default_value_t = 40)]
        digits: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Derive { p, k_max, out } => commands::derive(&p, k_max, out.as_deref()),
        Command::Verify { identities, only, digits } => verify::run(identities.as_deref(), &only, digits),
        Command::Eval { s, p, digits, k_max, identities, format } => {
            commands::eval(&s, p, digits, k_max, identities.as_deref(), format)
        }
        Command::Table {
            re_min,
            re_max,
            re_step,
            im_min,
            im_max,
            im_step,
            p,
            digits,
            k_max,
            identities,
            format,
            out,
        } => {
            let grid = input::Grid::parse([&re_min, &re_max, &re_step], [&im_min, &im_max, &im_step])?;
            commands::table(&grid, p, digits, k_max, identities.as_deref(), format, out.as_deref())
        }
        Command::Special { check, p, digits } => commands::special(check, p, digits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
