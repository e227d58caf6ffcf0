use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lozenge_cli::{execute, Cli};

fn main() -> ExitCode {
    // clap reports malformed arguments itself, with status 2
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.render(cli.format).as_bytes());
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
