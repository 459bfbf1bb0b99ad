use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use glmn::Exec;
use glmn_cli::{execute, seed_check, Cli, THREADS_VAR};

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let exec = Exec::default();

    let Some(command) = cli.command else {
        let mut stdout = std::io::stdout().lock();
        let passed = seed_check(exec, |line| {
            let _ = writeln!(stdout, "{line}");
            let _ = stdout.flush();
        });
        return ExitCode::from(if passed { 0 } else { 1 });
    };

    let (output, status) = match execute(&command, exec) {
        Ok(out) => {
            let status = if out.passed { 0 } else { 1 };
            (out.text, status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &command.module().output {
        Some(path) => std::fs::write(path, &output).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(output.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if status == 1 {
        eprintln!("verification failed; see the report");
    }
    ExitCode::from(status)
}
