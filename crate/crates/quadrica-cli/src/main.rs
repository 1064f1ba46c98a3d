use std::process::ExitCode;

fn main() -> ExitCode {
    let code = quadrica_cli::run(std::env::args());
    ExitCode::from(code as u8)
}
