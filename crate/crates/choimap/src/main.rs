use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(choimap::run(std::env::args_os()))
}
