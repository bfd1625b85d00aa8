mod args;
mod commands;
mod error;
mod input;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version go to stdout and are not failures
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    // enumeration can be huge and cannot fail once started, so it streams;
    // everything else is buffered and discarded on error
    let result = if matches!(cli.command, Command::Enumerate(_)) {
        let mut w = io::BufWriter::new(&mut lock);
        let r = commands::run(cli.command, &mut w);
        let _ = w.flush();
        r
    } else {
        let mut buf = Vec::new();
        commands::run(cli.command, &mut buf).inspect(|_| {
            let _ = lock.write_all(&buf);
        })
    };
    let _ = lock.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
