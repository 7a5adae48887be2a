use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hookkron_cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    };
    if out.flush().is_err() {
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(code)
}
