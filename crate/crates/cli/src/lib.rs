//! Command-line front end: JSON documents in, verdict reports out.
//!
//! Exit status is 0 when the verdict is pass, 1 when it is fail and 2 for usage,
//! input or engine errors.

pub mod commands;
pub mod document;
mod error;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use commands::{run, Cli, Command, Outcome};
pub use document::{parse_field, AlgebraDocument, FieldSpec, SCHEMA_VERSION};
pub use error::{CliError, CliResult};
pub use report::{Format, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Parses `args` (program name first), runs the command and writes its output.
/// Returns the exit status.
pub fn execute<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match run(&cli).and_then(|o| deliver(&cli, o, stdout)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn deliver(cli: &Cli, outcome: Outcome, stdout: &mut dyn Write) -> CliResult<i32> {
    let io = |path: &str, source| CliError::Io {
        path: path.to_string(),
        source,
    };
    let rendered = outcome.report.render(cli.format);
    match (&outcome.document, &cli.out) {
        (Some(doc), _) => stdout
            .write_all(doc.as_bytes())
            .map_err(|e| io("<stdout>", e))?,
        (None, Some(path)) if !matches!(cli.command, Command::ZooBuild { .. }) => {
            std::fs::write(path, rendered).map_err(|e| io(&path.display().to_string(), e))?
        }
        _ => stdout
            .write_all(rendered.as_bytes())
            .map_err(|e| io("<stdout>", e))?,
    }
    Ok(outcome.report.exit_code())
}
