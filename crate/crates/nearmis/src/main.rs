use std::process::ExitCode;

fn main() -> ExitCode {
    let (stdout, stderr, code) = nearmis::cli::run(std::env::args_os());
    if !stdout.is_empty() {
        println!("{stdout}");
    }
    if !stderr.is_empty() {
        eprintln!("{stderr}");
    }
    ExitCode::from(code as u8)
}
