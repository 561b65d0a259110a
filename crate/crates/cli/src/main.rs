//! `poisson-cli`: verify catalog identities, evaluate special functions and
//! print exact tables from the shell.

mod args;
mod commands;
mod error;
mod fmt;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = commands::dispatch(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(code), Ok(())) => ExitCode::from(code),
        (Err(e), _) => {
            eprintln!("error: {e}");
            if let error::CliError::Core(poisson::Error::UnknownIdentity(_)) = e {
                let ids: Vec<&str> = poisson::catalog::list_identities().iter().map(|r| r.id).collect();
                eprintln!("known identities: {}", ids.join(", "));
            }
            ExitCode::from(e.exit_code())
        }
        (Ok(_), Err(e)) => {
            eprintln!("error: cannot write output: {e}");
            ExitCode::from(1)
        }
    }
}
