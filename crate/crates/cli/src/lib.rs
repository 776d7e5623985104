//! The `egomap` command line: ingest, detect, map, synth and eval.
//!
//! Exit status is 0 on success, 1 for bad input (usage errors, unreadable
//! or malformed files, invalid parameters) and 2 for internal failures.

mod args;
mod cache;
mod commands;
mod failure;
mod manifest;

use std::ffi::OsString;
use std::panic::{self, AssertUnwindSafe};

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command};
pub use cache::{content_hash, GraphCache};
pub use failure::Failure;
pub use manifest::RunManifest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .try_init();

    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
        }
    };

    match panic::catch_unwind(AssertUnwindSafe(|| commands::dispatch(cli))) {
        Ok(Ok(())) => EXIT_OK,
        Ok(Err(failure)) => {
            eprintln!("error: {failure:#}");
            failure.exit_code()
        }
        Err(_) => EXIT_INTERNAL,
    }
}
