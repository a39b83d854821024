use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = biplanarity_cli::run(std::env::args_os());
    let _ = if outcome.code == 2 {
        writeln!(std::io::stderr(), "{}", outcome.output)
    } else {
        writeln!(std::io::stdout(), "{}", outcome.output)
    };
    ExitCode::from(outcome.code as u8)
}
