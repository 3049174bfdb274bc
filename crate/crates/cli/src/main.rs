use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env_seed = std::env::var(crosskit_cli::SEED_ENV).ok();
    let outcome = crosskit_cli::run(std::env::args_os(), env_seed.as_deref());
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    // write errors (a closed pipe) are not worth a panic
    let _ = match &outcome.output {
        Some(out) => {
            let _ = writeln!(stderr, "{}", outcome.summary);
            writeln!(stdout, "{}", out.trim_end())
        }
        None if outcome.code == 2 => writeln!(stderr, "{}", outcome.summary.trim_end()),
        None => writeln!(stdout, "{}", outcome.summary.trim_end()),
    };
    ExitCode::from(outcome.code as u8)
}
