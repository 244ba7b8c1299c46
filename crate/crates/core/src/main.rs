use std::process::ExitCode;

fn main() -> ExitCode {
    match jacobsthal::cli::run(std::env::args_os()) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
