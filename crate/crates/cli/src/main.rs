use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let seed_env = std::env::var(tsglab_cli::SEED_ENV).ok();
    let progress = |line: String| eprintln!("{line}");
    let outcome = tsglab_cli::run(std::env::args_os(), seed_env.as_deref(), &progress);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.status)
}
