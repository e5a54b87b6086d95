use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use qborel::random::selfcheck;
use qborel::session::{execute, parse_session, render, render_parse_error, Config, Format};

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

/// Run a session script of Q-Borel computations.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    /// Session file; `-` or nothing reads standard input.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Default degree for truncation, verification and Koszul Betti tables.
    #[arg(long)]
    degree_bound: Option<u32>,
    /// Node limit for closures and truncated resolutions.
    #[arg(long)]
    limit_nodes: Option<usize>,
    /// Run the randomized self-check with this seed instead of a session.
    #[arg(long)]
    seed: Option<u64>,
    /// Instances per check for `--seed`.
    #[arg(long, default_value_t = 25)]
    rounds: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    if let Some(seed) = cli.seed {
        let checks = selfcheck(seed, cli.rounds);
        for c in &checks {
            println!("{:<18} {}/{}", c.name, c.passed, c.total);
        }
        return if checks.iter().all(|c| c.ok()) { ExitCode::SUCCESS } else { ExitCode::from(1) };
    }
    let text = match cli.file.as_deref() {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read input: {e}");
            return ExitCode::from(2);
        }
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(e) => {
            match format {
                Format::Text => eprint!("{}", render_parse_error(&e, format)),
                Format::Json => print!("{}", render_parse_error(&e, format)),
            }
            return ExitCode::from(2);
        }
    };
    let config = Config { degree_bound: cli.degree_bound, node_limit: cli.limit_nodes };
    let exec = execute(&session, &config);
    print!("{}", render(&exec, format));
    if exec.error.is_some() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
