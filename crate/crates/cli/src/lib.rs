//! Command-line front end for `ml-fraccalc`.
//!
//! | module | role |
//! |--------|------|
//! | [`parse`] | complex, grid, operand and operator literals |
//! | [`job`] | flags and the validated [`job::JobSpec`] |
//! | [`suites`] | identity suites run by `verify` |
//! | [`output`] | JSON and CSV emission |
//!
//! JSON output has the shape `{"job": ..., "results": [...], "meta":
//! {"version", "seed", "tolerances"}}`; CSV output starts with a header row
//! and writes complex numbers as `re,im` column pairs.
//!
//! | exit code | meaning |
//! |-----------|---------|
//! | `0` | success |
//! | `1` | a verify block failed |
//! | `2` | malformed or inconsistent flags |

pub mod job;
pub mod output;
pub mod parse;
pub mod suites;

use job::{JobError, JobSpec, Task};
use std::ffi::OsString;

/// Exit status and the text destined for standard output and error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: message }
    }
}

/// Parses `argv` (program name first), runs the job and renders its output.
/// With `--out` the output goes to that file and `stdout` stays empty.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let job = match JobSpec::from_args(argv) {
        Ok(j) => j,
        Err(JobError::Flags(e)) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome::usage(text),
            };
        }
        Err(JobError::Value(e)) => return Outcome::usage(format!("error: {e}\n")),
    };
    let rendered = match output::render(&job) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let code = if matches!(job.task, Task::Verify { .. }) && !rendered.pass { 1 } else { 0 };
    match &job.out {
        Some(path) => match std::fs::write(path, &rendered.text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome::usage(format!("error: cannot write {}: {e}\n", path.display())),
        },
        None => Outcome { code, stdout: rendered.text, stderr: String::new() },
    }
}
