mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bncells::{CellSide, MonomialOrder};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Kazhdan-Lusztig cells, cell modules and Specht modules in type B_n.
#[derive(Parser, Debug)]
#[command(name = "bncells", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the left, right or two-sided cells of W_n.
    Cells {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "left", value_parser = parse_side)]
        side: CellSide,
    },
    /// Generator matrices of the left cell module containing an element.
    Cellmod {
        #[command(flatten)]
        common: Common,
        /// Element as a word ("s2 t") or a window ("[-1,3,2]").
        #[arg(long)]
        cell_of: String,
        /// Comma-separated basis order; must list the whole cell.
        #[arg(long)]
        basis: Option<String>,
    },
    /// The matrix G_lambda or the Specht module matrices.
    Specht {
        #[command(flatten)]
        common: Common,
        /// Bipartition such as "1|2" or "2.1|-".
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "g")]
        emit: Emit,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Allow n = 4.
        #[arg(long)]
        deep: bool,
    },
    /// Robinson-Schensted bitableaux of an element.
    Rs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    n: usize,
    /// asymptotic, revlex or weighted:x,y
    #[arg(long, default_value = "asymptotic", value_parser = parse_order)]
    order: MonomialOrder,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Directory for cached KL tables.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Lift the default rank bound of 5.
    #[arg(long)]
    force: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Emit {
    G,
    Matrices,
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse().map_err(|e: bncells::Error| e.to_string())
}

fn parse_side(s: &str) -> Result<CellSide, String> {
    s.parse().map_err(|e: bncells::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            // a closed pipe is not an error for a report
            let _ = std::io::stdout().write_all(out.text.as_bytes());
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
