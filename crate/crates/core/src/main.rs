use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|info| {
        eprintln!("internal error: {info}");
    }));
    let outcome = std::panic::catch_unwind(|| fitting_decomp::cli::execute(std::env::args_os()))
        .unwrap_or_else(|_| fitting_decomp::cli::Outcome {
            code: 2,
            stdout: String::new(),
            stderr: String::new(),
        });
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
