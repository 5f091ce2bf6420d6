//! `orbiquint`: command-line access to the library.

mod args;
mod commands;
mod error;

use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, OutputFormat};
use error::CliError;

fn dispatch(command: &Command, format: OutputFormat) -> Result<(String, bool), CliError> {
    let ok = |s: String| Ok((s, true));
    match command {
        Command::Table1 => ok(commands::table1_cmd(format)?),
        Command::BoundaryGraphs { d } => ok(commands::boundary_graphs(*d, format)?),
        Command::Resolve { r, q } => ok(commands::resolve_cmd(*r, *q, format)?),
        Command::Coarse { r, a } => ok(commands::coarse_cmd(*r, a, format)?),
        Command::Diagrams { item } => ok(commands::diagrams_cmd(*item, format)?),
        Command::Recillas { mon } => ok(commands::recillas_cmd(mon, format)?),
        Command::Parity { pieces, worked_example } => {
            ok(commands::parity_cmd(pieces.as_deref(), *worked_example, format)?)
        }
        Command::Classify { kind, models, table } => ok(commands::classify_cmd(*kind, *models, *table, format)?),
        Command::Genus { hirzebruch, sing, rh } => {
            ok(commands::genus_cmd(hirzebruch.as_deref(), sing, rh.as_deref(), format)?)
        }
        Command::VerifyGolden { dir } => commands::verify_golden_cmd(dir.as_deref(), format),
    }
}

fn report(err: &CliError, json: bool) -> ExitCode {
    if json {
        eprintln!("{}", err.to_json());
    } else {
        eprintln!("{}", err);
    }
    ExitCode::from(err.exit_code() as u8)
}

fn wants_json(argv: &[String]) -> bool {
    argv.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || argv.iter().any(|a| a == "--format=json")
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) || !wants_json(&argv) {
                e.exit();
            }
            let msg = e.kind().to_string();
            return report(&CliError::usage("usage", msg), true);
        }
    };
    let supported = cli.command.formats();
    let format = cli.global.format.unwrap_or(supported[0]);
    let json = format == OutputFormat::Json;
    if !supported.contains(&format) {
        let names: Vec<String> = supported.iter().map(|f| f.to_string()).collect();
        let err = CliError::usage(
            "unsupported_format",
            format!("{} supports --format {}", cli.command.name(), names.join("|")),
        );
        return report(&err, json);
    }
    let (text, clean) = match dispatch(&cli.command, format) {
        Ok(x) => x,
        Err(e) => return report(&e, json),
    };
    let written = match &cli.global.out {
        Some(path) => fs::write(path, &text).map_err(|e| CliError::domain("io", format!("{}: {}", path.display(), e))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::domain("io", e.to_string())),
    };
    if let Err(e) = written {
        return report(&e, json);
    }
    if clean {
        ExitCode::SUCCESS
    } else {
        report(
            &CliError::domain("golden_mismatch", "golden data differs from recomputation"),
            json,
        )
    }
}
