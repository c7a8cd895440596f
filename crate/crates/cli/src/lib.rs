//! Command-line front end for `slkkm-core`.
//!
//! [`run`] does all the work and returns what `main` should print, so tests
//! can drive the tool in process.

pub mod args;
mod commands;
pub mod document;

use std::ffi::OsString;
use std::fs;
use std::path::Path;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use args::{Cli, Command, Format};
use commands::{Failure, Outcome};

pub const EXIT_OK: i32 = 0;
/// The input was read but found invalid, or a document failed to parse.
pub const EXIT_INVALID: i32 = 1;
/// An internal consistency check failed.
pub const EXIT_DEFECT: i32 = 2;
/// Unknown flags or bad flag values.
pub const EXIT_USAGE: i32 = 64;

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Timing {
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a str,
    args: &'a [String],
    inputs_digest: String,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing: Option<Timing>,
}

/// SHA-256 over the command line and the bytes of the input document.
fn digest(args: &[String], input: Option<&str>) -> String {
    let mut h = Sha256::new();
    for a in args {
        h.update(a.as_bytes());
        h.update([0u8]);
    }
    h.update([0xffu8]);
    if let Some(text) = input {
        h.update(text.as_bytes());
    }
    hex::encode(h.finalize())
}

fn dispatch(cmd: &Command, input: Option<&str>) -> Result<Outcome, Failure> {
    match cmd {
        Command::Validate(_) => commands::validate(input.expect("validate reads --in")),
        Command::Construct(a) => commands::construct(a),
        Command::Bounds(a) => commands::bounds(a),
        Command::Search(a) => commands::search(a, input),
        Command::Verify(a) => commands::verify(a, input),
        Command::Pipeline(a) => commands::pipeline(a, input),
        Command::Sperner(a) => commands::sperner(a, input.expect("sperner reads --in")),
        Command::Extremal(a) => commands::extremal(a),
        Command::Curve(a) => commands::curve(a, input),
    }
}

fn failure(code: i32, message: String) -> Output {
    Output {
        code,
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
    }
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let args: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let cmd = &cli.command;
    let input = match cmd.input() {
        Some(path) => match fs::read_to_string(path) {
            Ok(text) => Some(text),
            Err(e) => return failure(EXIT_INVALID, format!("cannot read {}: {e}", path.display())),
        },
        None => None,
    };

    let start = Instant::now();
    let outcome = match dispatch(cmd, input.as_deref()) {
        Ok(o) => o,
        Err(Failure::Usage(m)) => return failure(EXIT_USAGE, m),
        Err(Failure::Input(e)) => return failure(EXIT_INVALID, e.to_string()),
        Err(Failure::Rejected(m)) => return failure(EXIT_INVALID, m),
        Err(Failure::Defect(m)) => return failure(EXIT_DEFECT, format!("internal check failed: {m}")),
    };
    let output = cmd.output();
    let report = RunReport {
        command: cmd.name(),
        args: &args,
        inputs_digest: digest(&args, input.as_deref()),
        result: outcome.result,
        timing: output.timing.then(|| Timing {
            elapsed_ms: start.elapsed().as_millis() as u64,
        }),
    };
    let mut json = serde_json::to_string_pretty(&report).expect("reports serialize");
    json.push('\n');

    if let Some(path) = &output.out {
        let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
        let body = match (&outcome.artifact, &outcome.csv, is_csv) {
            (_, Some(csv), true) => csv.clone(),
            (_, None, true) => {
                return failure(EXIT_USAGE, format!("{} has no table output for CSV", cmd.name()));
            }
            (Some(artifact), _, false) => artifact.clone(),
            (None, _, false) => json.clone(),
        };
        if let Err(e) = write_file(path, &body) {
            return failure(EXIT_INVALID, e);
        }
    }
    let mut stdout = match output.format {
        Format::Json => json,
        Format::Text => outcome.text,
    };
    if output.format == Format::Text && output.timing {
        stdout.push_str(&format!("elapsed: {} ms\n", start.elapsed().as_millis()));
    }
    Output {
        code: outcome.exit,
        stdout,
        stderr: String::new(),
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), String> {
    fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))
}
