use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(ovals::cli::run(std::env::args_os()))
}
