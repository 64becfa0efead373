use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use jacsyz_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("JACSYZ_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let outcome = run(&cli);
    let to_stdout = cli.json_path().is_some_and(|p| p.as_os_str() == "-");
    if outcome.code != 0 && outcome.json.is_none() {
        eprint!("{}", outcome.summary);
    } else if !to_stdout {
        print!("{}", outcome.summary);
    }
    if let (Some(path), Some(text)) = (cli.json_path(), outcome.json_text()) {
        if to_stdout {
            let _ = std::io::stdout().write_all(text.as_bytes());
        } else if let Err(e) = std::fs::write(path, text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    ExitCode::from(outcome.code as u8)
}
