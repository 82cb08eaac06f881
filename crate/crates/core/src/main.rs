use std::io::Write;
use std::panic;
use std::process::ExitCode;

use clap::Parser;
use swcert::cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::from(Cli::parse());
    // a panic is an input we failed to reject; report it as an input error
    let code = match panic::catch_unwind(|| run(&cfg)) {
        Ok(Ok(outcome)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.json.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            outcome.exit_code() as u8
        }
        Ok(Err(err)) => {
            eprintln!("error: {err:#}");
            2
        }
        Err(_) => 2,
    };
    ExitCode::from(code)
}
