use std::process::ExitCode;

fn main() -> ExitCode {
    eppo::cli::main_with_args(std::env::args_os())
}
