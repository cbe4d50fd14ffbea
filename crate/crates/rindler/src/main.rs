use std::io::Write;
use std::process::ExitCode;

use rindler::cli::{parse_args, run_sweep, write_csv, write_json, OutputFormat};
use rindler::Error;

fn run() -> Result<(), Error> {
    let cfg = parse_args(std::env::args_os())?;
    let rows = run_sweep(&cfg)?;
    match &cfg.output_path {
        Some(path) => {
            let file = std::fs::File::create(path)?;
            let mut writer = std::io::BufWriter::new(file);
            match cfg.format {
                OutputFormat::Csv => write_csv(&rows, &mut writer)?,
                OutputFormat::Json => write_json(&rows, &mut writer)?,
            }
            writer.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            match cfg.format {
                OutputFormat::Csv => write_csv(&rows, &mut lock)?,
                OutputFormat::Json => write_json(&rows, &mut lock)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
