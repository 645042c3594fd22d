mod cli;
mod decompose;
mod error;
mod render;
mod seq;
mod verify;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};
use error::CliError;
use seq::SequenceQuery;

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Seq(args) => {
            let query = SequenceQuery::from_args(&args)?;
            let rows = query.rows()?;
            render::write_rows(out, &query, &rows)?;
            if rows.iter().any(|r| r.matches == Some(false)) {
                let bad: Vec<String> =
                    rows.iter().filter(|r| r.matches == Some(false)).map(|r| r.n.to_string()).collect();
                return Err(CliError::Failed(format!("formula and oracle differ at n = {}", bad.join(", "))));
            }
        }
        Command::Decompose(args) => {
            let dec = decompose::compute(&args)?;
            decompose::write(out, &dec, args.format)?;
            if !dec.agree() {
                return Err(CliError::Failed("decomposition routes disagree".into()));
            }
        }
        Command::Verify(args) => {
            let failures = verify::run(out, &args)?;
            if failures > 0 {
                return Err(CliError::Failed(format!("{failures} failed checks")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(CliError::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("polynum: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
