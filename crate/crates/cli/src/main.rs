use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hh_cli::{render::render, run, tolerance_from_env, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = tolerance_from_env().and_then(|cfg| run(&cli, &cfg));
    match outcome {
        Ok(report) => {
            let text = render(&report, cli.pretty);
            if std::io::stdout().write_all(text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
