//! `oxbar` — worst-case loss analysis for passive optical crossbars on
//! chip.
//!
//! Exit codes: 0 success, 1 invalid arguments, 2 model errors (invalid
//! pairing, uncalibrated crossing point in strict mode, bad values),
//! 3 verification mismatch.

mod cli;
mod render;
mod run;

use clap::error::ErrorKind;
use clap::Parser;

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let parsed = match cli::Cli::try_parse() {
        Ok(parsed) => parsed,
        Err(err) => {
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return 0;
            }
            eprint!("{err}");
            return 1;
        }
    };
    match run::execute(parsed.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    }
}
