//! Command-line front end for `gasylv-core`.
//!
//! The binary is a thin wrapper over [`main_with`]; the pieces are public so
//! tests can drive them without spawning processes.

pub mod bench;
pub mod commands;
pub mod config;
pub mod error;
pub mod literal;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use crate::config::{Cli, Format};
use crate::error::CliError;

/// Parses `args`, runs the command and writes to stdout/stderr.
/// Returns the process exit code.
pub fn main_with<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    let format = commands::format_of(&cli.command);
    let mut stdout = std::io::stdout().lock();
    match commands::run(&cli.command) {
        Ok(report) => {
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            let out = report.render(format);
            if !out.is_empty() {
                let _ = writeln!(stdout, "{out}");
            }
            0
        }
        Err(err) => {
            report_error(&err, format, &mut stdout);
            err.exit_code()
        }
    }
}

fn report_error(err: &CliError, format: Format, stdout: &mut impl Write) {
    match format {
        Format::Json => {
            let body = serde_json::to_string_pretty(&err.to_json()).expect("serializable");
            let _ = writeln!(stdout, "{body}");
        }
        Format::Text => eprintln!("error: {err}"),
    }
}
