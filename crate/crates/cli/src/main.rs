//! Command-line interface: construct the sporadic-SIC families, verify
//! them into certificates, and export their artifacts.
//!
//! Exit statuses: 0 all checks passed, 1 a check failed, 2 usage error,
//! 3 I/O error. Output is deterministic for a fixed configuration; the
//! only environment override is `SPORADIC_SEED` for the search seed.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use sporadic_core::report::{
    bounds_document, entropy_search_document, export_artifact, incidence_document, label_document,
    render_bounds, render_entropy_search, render_incidence, render_label, render_report,
    render_verify, report_all, verify_document, Family, OutputFormat, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "sporadic",
    about = "Construct and verify the sporadic SICs (d = 2, 3, 8) and their companion structures",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Algebraic tolerance for floating-point checks
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,

    /// Seed for entropy searches (SPORADIC_SEED overrides the default)
    #[arg(long)]
    seed: Option<u64>,

    /// Random restarts for entropy searches
    #[arg(long, default_value_t = 64)]
    restarts: usize,

    /// Output format: json, csv or text
    #[arg(long, default_value = "text")]
    format: String,

    /// Write output to this path instead of stdout
    #[arg(long)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family and write its canonical JSON artifact
    Build {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Build one family and run its full check suite
    Verify {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run every family and emit one combined certificate document
    ReportAll {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Minimize Shannon entropy over pure states for a SIC family
    EntropySearch {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print incidence counts and matrices (mub-dual, twin-incidence, fano-28)
    Incidence {
        #[arg(long)]
        family: String,
        /// Inspect one six-bit Pauli label (bit string, e.g. 110000)
        #[arg(long)]
        label: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print the Gerzon/Welch/zero-count bound table
    Bounds {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Export a family artifact as JSON or CSV
    Export {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        common: CommonArgs,
    },
}

enum CliError {
    Usage(String),
    Io(String),
}

fn resolve_seed(arg: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = arg {
        return Ok(s);
    }
    match std::env::var("SPORADIC_SEED") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| CliError::Usage(format!("SPORADIC_SEED is not an integer: {:?}", v))),
        Err(_) => Ok(0),
    }
}

fn parse_family(name: &str) -> Result<Family, CliError> {
    Family::from_str(name).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_format(name: &str) -> Result<OutputFormat, CliError> {
    OutputFormat::from_str(name).map_err(|e| CliError::Usage(e.to_string()))
}

fn build_config(common: &CommonArgs, family: Option<Family>) -> Result<RunConfig, CliError> {
    let config = RunConfig {
        family,
        tolerance: common.tolerance,
        seed: resolve_seed(common.seed)?,
        restarts: common.restarts,
    };
    config
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(config)
}

fn emit(common: &CommonArgs, content: &str) -> Result<(), CliError> {
    match &common.output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {}", path, e))),
        None => {
            print!("{}", content);
            Ok(())
        }
    }
}

/// Returns whether all checks passed (drives the 0/1 exit split).
fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Build { family, common } => {
            let family = parse_family(&family)?;
            let config = build_config(&common, Some(family))?;
            let artifact = export_artifact(family, &config, OutputFormat::Json)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            emit(&common, &artifact)?;
            Ok(true)
        }
        Command::Verify { family, common } => {
            let family = parse_family(&family)?;
            let format = parse_format(&common.format)?;
            let config = build_config(&common, Some(family))?;
            let doc = verify_document(family, &config);
            emit(&common, &render_verify(&doc, format))?;
            Ok(doc.overall)
        }
        Command::ReportAll { common } => {
            let format = parse_format(&common.format)?;
            let config = build_config(&common, None)?;
            let doc = report_all(&config);
            emit(&common, &render_report(&doc, format))?;
            Ok(doc.overall)
        }
        Command::EntropySearch { family, common } => {
            let family = parse_family(&family)?;
            let format = parse_format(&common.format)?;
            let config = build_config(&common, Some(family))?;
            let doc = entropy_search_document(family, &config)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            emit(&common, &render_entropy_search(&doc, format))?;
            Ok(doc.overall)
        }
        Command::Incidence {
            family,
            label,
            common,
        } => {
            let family = parse_family(&family)?;
            let format = parse_format(&common.format)?;
            let config = build_config(&common, Some(family))?;
            if let Some(text) = label {
                let label = text
                    .parse::<sporadic_core::pauli::PauliLabel>()
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                let doc = label_document(label);
                emit(&common, &render_label(&doc, format))?;
                return Ok(true);
            }
            let doc =
                incidence_document(family, &config).map_err(|e| CliError::Usage(e.to_string()))?;
            emit(&common, &render_incidence(&doc, format))?;
            Ok(true)
        }
        Command::Bounds { common } => {
            let format = parse_format(&common.format)?;
            build_config(&common, None)?;
            let doc = bounds_document();
            emit(&common, &render_bounds(&doc, format))?;
            Ok(true)
        }
        Command::Export { family, common } => {
            let family = parse_family(&family)?;
            let format = parse_format(&common.format)?;
            let config = build_config(&common, Some(family))?;
            let artifact = export_artifact(family, &config, format)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            emit(&common, &artifact)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {}", msg);
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("i/o error: {}", msg);
            ExitCode::from(3)
        }
    }
}
