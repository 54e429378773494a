use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use refinemask_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("refinemask: {err}");
            err.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
