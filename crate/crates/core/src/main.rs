use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = tropbasis::cli::run_cli(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(out.status as u8)
}
