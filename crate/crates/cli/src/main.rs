mod cli;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use padovan::IndexCap;

use crate::cli::{Cli, Format};
use crate::output::{render, Meta};

const CAP_ENV: &str = "PADOVAN_INDEX_CAP";

fn index_cap(cli: &Cli) -> Result<IndexCap, String> {
    if let Some(cap) = cli.cap {
        return Ok(IndexCap::new(cap));
    }
    match std::env::var(CAP_ENV) {
        Ok(text) => text.trim().parse().map(IndexCap::new).map_err(|e| format!("{CAP_ENV}={text:?}: {e}")),
        Err(_) => Ok(IndexCap::default()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = match index_cap(&cli) {
        Ok(cap) => cap,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };

    let outcome = match commands::dispatch(&cli.command, cap) {
        Ok(outcome) => outcome,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            return ExitCode::from(failure.code as u8);
        }
    };

    let meta = Meta { command: cli.command.name(), deterministic: cli.deterministic };
    let text = render(&outcome.output, cli.format, &meta);
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(1);
    }
    if cli.format != Format::Json {
        for note in &outcome.output.notes {
            eprintln!("{note}");
        }
    }
    ExitCode::from(outcome.code as u8)
}
