//! `kostant`: build and verify Kostant sections for the unitary Lie algebra.
//!
//! All results are JSON on stdout; diagnostics go to stderr. Exit status is
//! 0 on pass, 1 on a domain error or failed check, 2 on a usage error.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(outcome) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&outcome.output).expect("serializable")
            );
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Domain(e)) => {
            let obj = serde_json::json!({ "error": e.code(), "message": e.to_string() });
            println!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
