use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dynkin_cli::args::Cli;
use dynkin_cli::{commands, EXIT_FAILURE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(EXIT_FAILURE as u8);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(EXIT_FAILURE as u8)
            }
        }
        Err(e) => {
            eprintln!("dynkin: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
