use std::io;
use std::process::ExitCode;

use neutrosophic::cli::{run, Streams};

fn main() -> ExitCode {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run(
        std::env::args_os(),
        Streams {
            stdin: &mut stdin.lock(),
            stdout: &mut stdout.lock(),
            stderr: &mut stderr.lock(),
        },
    );
    ExitCode::from(code as u8)
}
