use std::io::Write;
use std::process::ExitCode;

use forgetsize::{parse_args, run, Command, USAGE};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let config = match parse_args(&args) {
        Ok(Command::Run(config)) => config,
        Ok(Command::Help) => {
            println!("{USAGE}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("minimize: {e}\n(try -help)");
            return ExitCode::from(e.exit_code());
        }
    };
    let outcome = run(&config);
    let mut stdout = std::io::stdout().lock();
    // a closed pipe is not worth a second error
    let _ = stdout.write_all(outcome.report.render(config.format).as_bytes());
    let _ = stdout.flush();
    if let Some(e) = &outcome.error {
        eprintln!("minimize: {e}");
    }
    ExitCode::from(outcome.exit_code())
}
