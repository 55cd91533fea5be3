//! `genus`: tables and verdicts from the genus-core library.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "genus", version, about = "Symmetric functions, Bott maps and E2/E4 lifting obstructions for MU")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Largest topological degree to tabulate (even).
    #[arg(long, default_value_t = 40, global = true)]
    pub max_degree: u32,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The Newton polynomial q_m with p_m = q_m(e_1, ..., e_m).
    Newton {
        #[arg(long)]
        m: u32,
    },
    /// The power sum s_m in H_*(BU).
    Powersum {
        #[arg(long)]
        m: u32,
    },
    /// Bott pushforward of b_m or of a homogeneous polynomial in H_*(BU).
    Bott {
        #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
        m: Option<u32>,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, default_value_t = 1)]
        iterate: u32,
    },
    /// Images of c_{m+1} under H^{*+2}(BSU) -> H^*(BU(1)).
    BsuMap {
        #[arg(long)]
        max_m: Option<u32>,
    },
    /// Images of the generators y_{m+2} under H^{*+4}(BU<6>) -> H^*(BU(1)).
    Bu6Map {
        #[arg(long)]
        max_m: Option<u32>,
    },
    /// Ranks of a cohomology model by degree.
    Ranks {
        /// One of H_BU_homology, H_BU_cohomology, H_BU1, H_BSU, H_BU6.
        #[arg(long)]
        space: String,
    },
    /// Factors of pi_0 of E_n ring maps MU -> R for even R.
    Pi0 {
        #[arg(long)]
        n: u32,
        /// Builtin name (MU, sl1MU, Z_even_shift(d)) or a coefficient file.
        #[arg(long)]
        coeffs: String,
    },
    /// Restriction indices of H^{2m+n}(B^n BU) -> H^{2m}(BU(1)).
    IndexTable {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        max_m: Option<u32>,
    },
    /// Leading-order lifting verdicts for a coordinate.
    Obstruct {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        coeffs: String,
        /// File with one `m v1 ... v_rank` record per line.
        #[arg(long)]
        coordinate: std::path::PathBuf,
    },
    /// Run the reproduction checks.
    Selftest,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.render().to_string();
            eprint!("{text}");
            if !text.contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            return ExitCode::from(1);
        }
    };
    match commands::run(&cli.command, &cli.global) {
        Ok((rendered, passed)) => {
            let text = match cli.global.format {
                Format::Table => rendered.table(),
                Format::Json => rendered.json(),
            };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(commands::Failure::Invalid(msg)) => {
            eprintln!("error: {msg}\n");
            eprint!("{}", Cli::command().render_usage());
            eprintln!();
            ExitCode::from(1)
        }
        Err(commands::Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
