//! Command-line front end: argument parsing, dispatch, and the JSON response
//! envelope shared by every subcommand.

pub mod args;
mod commands;
mod error;
pub mod response;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use rayon::prelude::*;
use serde_json::{json, Value};

pub use args::{Cli, Command};
pub use commands::Determination;
pub use error::CliError;
pub use response::{Response, Support, Verdict, OPEN_QUESTION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;

/// Exit code plus the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation; `argv` includes the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() };
        }
        Err(e) => {
            let args: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
            return usage_failure(json!({ "argv": args }), e.to_string());
        }
    };
    match (&cli.batch, &cli.command) {
        (Some(path), _) => run_batch_file(path),
        (None, Some(cmd)) => {
            let (code, resp) = answer(cmd);
            finish(code, &resp)
        }
        (None, None) => usage_failure(json!({}), "a subcommand or --batch FILE is required".to_string()),
    }
}

fn usage_failure(query: Value, message: String) -> Outcome {
    let resp = Response::failure(query, "input", message.trim_end().to_string());
    Outcome {
        code: EXIT_INPUT,
        stdout: pretty(&resp),
        stderr: message,
    }
}

fn pretty<T: serde::Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("responses serialize");
    s.push('\n');
    s
}

fn finish(code: i32, resp: &Response) -> Outcome {
    let stderr = resp.error.as_ref().map(|e| format!("error: {}\n", e.message)).unwrap_or_default();
    Outcome { code, stdout: pretty(resp), stderr }
}

/// Answers one parsed query.
pub fn answer(cmd: &Command) -> (i32, Response) {
    let query = response::to_value(cmd);
    let mut resp = Response::new(query.clone());
    match commands::execute(cmd, &mut resp) {
        Ok(Determination::Determined) => (EXIT_OK, resp),
        Ok(Determination::Undetermined) => (EXIT_UNDETERMINED, resp),
        Err(e) => {
            let code = if e.kind() == "input" { EXIT_INPUT } else { EXIT_IO };
            (code, Response::failure(query, e.kind(), e.to_string()))
        }
    }
}

/// Answers one batch line, given without the program name.
pub fn answer_line(line: &str) -> (i32, Response) {
    let Some(words) = shlex::split(line) else {
        return (EXIT_INPUT, Response::failure(json!({ "line": line }), "input", "unbalanced quotes".into()));
    };
    let argv = std::iter::once("painleve".to_string()).chain(words);
    match Cli::try_parse_from(argv) {
        Ok(Cli { command: Some(cmd), batch: None, .. }) => answer(&cmd),
        Ok(_) => (
            EXIT_INPUT,
            Response::failure(json!({ "line": line }), "input", "each batch line must be a single subcommand".into()),
        ),
        Err(e) => (
            EXIT_INPUT,
            Response::failure(json!({ "line": line }), "input", e.to_string().trim_end().to_string()),
        ),
    }
}

/// Answers every non-blank, non-`#` line in parallel, preserving order.
pub fn run_batch(text: &str) -> (i32, Vec<Response>) {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let answers: Vec<(i32, Response)> = lines.par_iter().map(|l| answer_line(l)).collect();
    let codes: Vec<i32> = answers.iter().map(|a| a.0).collect();
    let code = [EXIT_INPUT, EXIT_IO, EXIT_UNDETERMINED]
        .into_iter()
        .find(|c| codes.contains(c))
        .unwrap_or(EXIT_OK);
    (code, answers.into_iter().map(|a| a.1).collect())
}

fn run_batch_file(path: &std::path::Path) -> Outcome {
    match std::fs::read_to_string(path) {
        Ok(text) => {
            let (code, responses) = run_batch(&text);
            Outcome { code, stdout: pretty(&responses), stderr: String::new() }
        }
        Err(e) => {
            let message = format!("cannot read {}: {e}", path.display());
            let resp = Response::failure(json!({ "batch": path }), "io", message.clone());
            Outcome { code: EXIT_IO, stdout: pretty(&resp), stderr: format!("error: {message}\n") }
        }
    }
}
