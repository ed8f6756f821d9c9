use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let (code, out) = skewperm::cli::run(&args);
    let stream = if code == 0 || code == skewperm::cli::EXIT_REFUTED {
        std::io::stdout().write_all(out.as_bytes())
    } else {
        std::io::stderr().write_all(out.as_bytes())
    };
    if stream.is_err() {
        return ExitCode::from(74);
    }
    ExitCode::from(code)
}
