//! Command-line front end for `dispersia-core`.
//!
//! [`run`] parses arguments, evaluates one subcommand and writes its report.
//! Output is produced only after the whole computation has succeeded.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod scene_file;

pub use error::{CliError, EXIT_INVALID, EXIT_NONCONVERGENCE};

/// Environment variable limiting the number of worker threads.
pub const THREADS_ENV: &str = "DISPERSIA_THREADS";

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => {
                return Err(CliError::invalid(format!(
                    "{THREADS_ENV} must be a positive integer, got {v:?}"
                )))
            }
        },
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::invalid(format!("cannot start worker threads: {e}")))
}

fn execute(cli: &args::Cli) -> Result<String, CliError> {
    let report = thread_pool()?.install(|| commands::dispatch(&cli.command, &cli.common))?;
    Ok(report.render(cli.common.format))
}

/// Runs the program and returns its exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    let text = match execute(&cli) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    let written = match &cli.common.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => 0,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INVALID
        }
    }
}
