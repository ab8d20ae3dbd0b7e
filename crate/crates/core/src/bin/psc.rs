use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use psc_core::cli::{run_file, JobKind};

/// Runs one verification job from a JSON config.
#[derive(Parser)]
#[command(name = "psc", version)]
struct Args {
    job: JobKind,
    #[arg(long)]
    config: PathBuf,
    /// Where to write the JSON report; stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let to_file = args.out.is_some();
    match run_file(args.job, &args.config, args.out, args.seed) {
        Ok(outcome) => {
            if to_file {
                println!("{}", outcome.report.summary());
            } else {
                eprintln!("{}", outcome.report.summary());
                match outcome.to_json() {
                    Ok(j) => println!("{j}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                }
            }
            ExitCode::from(outcome.report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
