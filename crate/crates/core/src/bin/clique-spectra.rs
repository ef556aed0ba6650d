use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = clique_spectra::cli::dispatch(std::env::args_os(), &mut std::io::stdin().lock());
    print!("{}", outcome.stdout);
    std::io::stdout().flush().ok();
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
