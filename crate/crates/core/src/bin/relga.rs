use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::Parser;
use relga::cli::{execute, execute_standalone, Cli, CliError};

fn fail(err: &CliError) -> ExitCode {
    eprintln!("relga: {err}");
    ExitCode::from(err.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return fail(&CliError::Malformed(
            "--tol must be a finite nonnegative number".into(),
        ));
    }
    if !cli.command.reads_input() {
        return match execute_standalone(&cli.command) {
            Ok(v) => {
                let _ = writeln!(out, "{v}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        };
    }
    for line in io::stdin().lock().lines() {
        let line = match line {
            Ok(l) => l,
            Err(e) => return fail(&CliError::Malformed(format!("reading stdin: {e}"))),
        };
        if line.trim().is_empty() {
            continue;
        }
        match execute(&cli.command, cli.tol, &line) {
            Ok(v) => {
                if writeln!(out, "{v}").is_err() {
                    return ExitCode::from(1);
                }
            }
            Err(e) => {
                let _ = out.flush();
                return fail(&e);
            }
        }
    }
    ExitCode::SUCCESS
}
