//! Command-line front end for `pathcoalg`: the `.qcf` description language,
//! group tables in CSV, and JSON reports.

pub mod commands;
pub mod dsl;
pub mod groupcsv;
pub mod resolve;

use std::path::Path;

pub use commands::{run, Command, CommandError, Options};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    Input(dsl::Diagnostic),
    Command(CommandError),
}

impl RunError {
    /// `source:line:col: …` for document errors, `source: error: …` otherwise.
    pub fn render(&self, source: &str) -> String {
        match self {
            RunError::Input(d) => format!("{source}:{d}"),
            RunError::Command(e) => format!("{source}: error: {e}"),
        }
    }
}

/// Parses, resolves and runs one command on a document, returning the
/// report as pretty-printed JSON with a trailing newline.
pub fn run_text(
    cmd: Command,
    text: &str,
    base: &Path,
    targets: &[String],
    opts: &Options,
) -> Result<String, RunError> {
    let doc = dsl::parse(text).map_err(RunError::Input)?;
    let resolved = resolve::resolve(&doc, base).map_err(RunError::Input)?;
    let report = run(cmd, &resolved, targets, opts).map_err(RunError::Command)?;
    let mut out = serde_json::to_string_pretty(&report).expect("JSON values serialize");
    out.push('\n');
    Ok(out)
}
