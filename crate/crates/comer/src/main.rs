use std::process::ExitCode;

fn main() -> ExitCode {
    comer::cli::run()
}
