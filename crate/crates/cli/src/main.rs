use std::process::ExitCode;

use basem_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, basem_cli::CliError::ExampleFailed) {
                eprintln!("basem: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
