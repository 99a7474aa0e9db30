use std::process::ExitCode;

use clap::Parser;
use nchilbert::RunConfig;

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let outcome = nchilbert::run(&cfg);
    print!("{}", outcome.report.render(cfg.format));
    if let Err(e) = &outcome.status {
        eprintln!("error: {e}");
    }
    ExitCode::from(outcome.exit_code() as u8)
}
