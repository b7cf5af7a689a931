use affcat::cli::{run, Cli};
use clap::Parser;
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::FAILURE,
        Err(e) => {
            // stderr may already be closed when output is piped into a pager
            let _ = writeln!(std::io::stderr(), "error: {}", e);
            ExitCode::from(2)
        }
    }
}
