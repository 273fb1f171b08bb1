use std::process::ExitCode;

use clap::Parser;

use apriori_bench::cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("apriori-bench: {e}");
            e.exit_code()
        }
    }
}
