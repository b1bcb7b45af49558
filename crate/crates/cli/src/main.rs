use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use pseudoeuclid_cli::{run, tolerance_from, Cli, CliError, Report, EPS_VAR};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn execute(cli: &Cli) -> Result<u8, CliError> {
    let eps = std::env::var(EPS_VAR).ok();
    let tol = tolerance_from(eps.as_deref())?;
    let report = run(&cli.command, &tol)?;
    let text = report.render(cli.format);
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    if let Report::Check(check) = &report {
        for f in check.failures() {
            eprintln!(
                "identity {} violated: max residual {:e} > {:e}",
                f.name, f.max_residual, f.tolerance
            );
        }
        if !check.pass {
            return Ok(1);
        }
    }
    Ok(0)
}
