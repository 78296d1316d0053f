use std::io::Write;
use std::process::ExitCode;

use braidknot::cli::{run_args, EXIT_USAGE};

fn main() -> ExitCode {
    let code = match run_args(std::env::args_os()) {
        Ok(outcome) => {
            let written = match &outcome.out {
                Some(path) => std::fs::write(path, &outcome.output),
                None => std::io::stdout().write_all(outcome.output.as_bytes()),
            };
            match written {
                Ok(()) => outcome.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            eprintln!("{}", e.to_string().trim_end());
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
