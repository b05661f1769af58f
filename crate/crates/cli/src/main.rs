use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let start = Instant::now();
    let (code, text) = cli::run_args(std::env::args_os());
    if code == cli::EXIT_PASS || code == cli::EXIT_FAIL {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    let _ = std::io::stdout().flush();
    eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    ExitCode::from(code)
}
