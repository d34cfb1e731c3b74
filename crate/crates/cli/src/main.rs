use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = quadbracket_cli::run(std::env::args_os(), &mut io::stdin().lock());
    io::stdout().write_all(out.stdout.as_bytes()).ok();
    io::stderr().write_all(out.stderr.as_bytes()).ok();
    ExitCode::from(out.code)
}
