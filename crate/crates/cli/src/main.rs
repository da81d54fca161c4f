mod args;
mod error;
mod input;
mod output;
mod run;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::args::{BatchLine, Cli, Command, Format};
use crate::error::CliError;
use crate::output::ErrorResponse;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    match cli.jobs {
        Some(0) => {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
        Some(n) => builder = builder.num_threads(n),
        None => {}
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start worker threads: {e}");
            return ExitCode::from(1);
        }
    };
    let code = pool.install(|| match &cli.command {
        Command::Batch => batch(cli.emit_tables),
        command => single(command, cli.format, cli.emit_tables),
    });
    ExitCode::from(code)
}

fn single(command: &Command, format: Format, emit_tables: bool) -> u8 {
    match run::execute(command, emit_tables) {
        Ok(response) => {
            let text = match format {
                Format::Json => response.json() + "\n",
                Format::Text => response.text(),
            };
            if io::stdout().write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Answers every line, then exits with the largest failure code seen.
fn batch(emit_default: bool) -> u8 {
    let stdin = io::stdin();
    let mut stdout = io::stdout().lock();
    let mut worst = 0;
    for line in stdin.lock().lines() {
        let line = match line {
            Ok(line) => line,
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        let reply = match answer(&line, emit_default) {
            Ok(json) => json,
            Err((command, e)) => {
                worst = worst.max(e.exit_code());
                serde_json::to_string(&ErrorResponse {
                    command,
                    error: e.to_string(),
                    exit_code: e.exit_code(),
                })
                .expect("error replies always serialize")
            }
        };
        if writeln!(stdout, "{reply}").is_err() {
            return 1;
        }
    }
    worst
}

fn answer(line: &str, emit_default: bool) -> Result<String, (Option<String>, CliError)> {
    let command_name = serde_json::from_str::<serde_json::Value>(line)
        .ok()
        .and_then(|v| v.get("command")?.as_str().map(str::to_owned));
    let request: BatchLine =
        serde_json::from_str(line).map_err(|e| (command_name.clone(), CliError::from(e)))?;
    run::execute(&request.command, emit_default || request.emit_tables)
        .map(|r| r.json())
        .map_err(|e| (command_name, e))
}
