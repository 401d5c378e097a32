use std::process::ExitCode;

use clap::Parser;
use stickygap_cli::{run, Cli, M_MAX_ENV};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("stickygap: {}", one_line(&e.to_string()));
            return ExitCode::from(2);
        }
    };
    let env = std::env::var(M_MAX_ENV).ok();
    let mut stdout = std::io::stdout().lock();
    match run(cli, env.as_deref(), &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("stickygap: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

/// Folds clap's multi-line report into one line, dropping the usage and
/// help hints.
fn one_line(msg: &str) -> String {
    msg.lines()
        .map(str::trim)
        .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
        .filter(|l| !l.is_empty())
        .map(|l| l.trim_start_matches("error: "))
        .collect::<Vec<_>>()
        .join(" ")
}
