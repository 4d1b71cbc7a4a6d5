use std::io::{self, Write};
use std::process::ExitCode;

use primroots_cli::{run, Settings};

fn main() -> ExitCode {
    let settings = match Settings::from_env() {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let stderr = io::stderr();
    let mut err = stderr.lock();
    let code = run(std::env::args_os(), &settings, &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code)
}
