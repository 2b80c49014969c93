use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod render;

use args::Cli;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Usage = 1,
    Mismatch = 2,
    Budget = 3,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s as u8)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let status = if err.use_stderr() {
                Status::Usage
            } else {
                Status::Ok
            };
            let _ = err.print();
            return status.into();
        }
    };
    match commands::run(cli) {
        Ok(status) => status.into(),
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_budget() {
                Status::Budget.into()
            } else {
                Status::Usage.into()
            }
        }
    }
}
