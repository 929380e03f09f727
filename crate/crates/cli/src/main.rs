use std::process::ExitCode;

use clap::Parser;
use legch::commands::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out.body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", out.body),
    }
    ExitCode::from(out.code as u8)
}
