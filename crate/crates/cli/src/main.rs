use clap::Parser;
use quotient_cli::{render, run, Cli, CliError};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|doc| {
        if let Some(path) = &cli.json {
            std::fs::write(path, doc.to_json())
                .map_err(|e| CliError::Invalid(format!("cannot write {}: {}", path.display(), e)))?;
        }
        Ok(doc)
    });
    match result {
        Ok(doc) => {
            print!("{}", render::render(&doc));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}
