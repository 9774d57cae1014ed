use std::process::ExitCode;

use clap::Parser;
use hamweave::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hamweave: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
