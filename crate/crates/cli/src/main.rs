use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use cornerk_cli::{log_level, run, Cli, CliError};

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{e}");
    ExitCode::from(e.code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            return fail(&CliError::parse("cli", "parse", first));
        }
    };
    let level = match log_level(std::env::var("CORNERK_LOG").ok().as_deref()) {
        Ok(level) => level,
        Err(e) => return fail(&e),
    };
    env_logger::Builder::new()
        .filter_level(level)
        .format_timestamp(None)
        .target(env_logger::Target::Stderr)
        .init();

    let rendered = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    for w in &rendered.warnings {
        eprintln!("warning: {w}");
    }
    let written = match &cli.command.output().out {
        Some(path) => std::fs::write(path, &rendered.body).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(rendered.body.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        return fail(&CliError::domain("cli", "output", msg));
    }
    match &rendered.error {
        Some(e) => fail(e),
        None => ExitCode::SUCCESS,
    }
}
