use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use siegel::cli::{
    compute_dims, cone_text, dims_json, dims_text, lemma_report, n_cap_from_env, parse_domain_spec, parse_lemma_params,
    verify_report, VerifyTarget,
};
use siegel::report::Report;

#[derive(Parser)]
#[command(name = "siegel", version, about = "Exact automorphism-algebra dimensions of Siegel domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Graded dimensions of the domain described by a JSON spec file.
    Dims {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// dim g(Ω) and a basis for a named cone.
    Cone {
        #[arg(long)]
        name: String,
    },
    /// One lemma check: rowreduce-i, rowreduce-ii, centralizer, omega5-boundary,
    /// exceptional-form, eigen-pairs, transitivity or all.
    Lemma {
        #[arg(long)]
        id: String,
        #[arg(long)]
        params: Option<PathBuf>,
    },
    /// Case analyses, classification table, lemma checks.
    Verify {
        #[arg(long, value_parser = |s: &str| s.parse::<VerifyTarget>())]
        target: VerifyTarget,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn read(path: &PathBuf) -> Result<String, ExitCode> {
    fs::read_to_string(path).map_err(|e| usage_error(format!("{}: {e}", path.display())))
}

fn emit(report: &Report, format: Option<Format>) -> ExitCode {
    match format {
        Some(Format::Json) => println!("{}", report.to_json()),
        Some(Format::Md) => print!("{}", report.to_markdown()),
        None => report.summary_lines().iter().for_each(|l| println!("{l}")),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Dims { spec, json } => {
            let spec = parse_domain_spec(&read(&spec)?).map_err(|e| usage_error(format!("[{}] {e}", e.code())))?;
            let dims = compute_dims(&spec);
            println!("{}", if json { dims_json(&dims) } else { dims_text(&dims) });
            Ok(ExitCode::SUCCESS)
        }
        Command::Cone { name } => {
            let text = cone_text(&name).map_err(|e| usage_error(format!("[{}] {e}", e.code())))?;
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Lemma { id, params } => {
            let params = match params {
                Some(p) => Some(parse_lemma_params(&read(&p)?).map_err(|e| usage_error(format!("[{}] {e}", e.code())))?),
                None => None,
            };
            let report = lemma_report(&id, params.as_ref()).map_err(usage_error)?;
            Ok(emit(&report, None))
        }
        Command::Verify { target, format } => Ok(emit(&verify_report(target, n_cap_from_env()), format)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    run(cli).unwrap_or_else(|code| code)
}
