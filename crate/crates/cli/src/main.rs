mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qgarnier::catalog::GarnierName;
use qgarnier::derive::FlowConvention;
use qgarnier::verify::CheckKind;

#[derive(Parser, Debug)]
#[command(name = "qgarnier", version, about = "Quantum Garnier Hamiltonians from holomorphy conditions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derive H1 and H2 from the holomorphy conditions and compare them with
    /// the printed references.
    Derive(DeriveArgs),
    /// Run the transformation, Hamiltonian and algebra checks.
    Verify(VerifyArgs),
    /// Show the transcribed transformations, references and errata.
    Catalog(CatalogArgs),
    /// Write the catalog or the derived Hamiltonians as JSON or LaTeX.
    Export(ExportArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
    Markdown,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Hamiltonians,
    Catalog,
    All,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Systems, e.g. G11111,G5 (default: all seven).
    #[arg(long = "system", value_delimiter = ',', value_parser = parse_system)]
    systems: Vec<GarnierName>,
    /// Write the artifact here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
}

impl Common {
    fn systems(&self) -> Vec<GarnierName> {
        if self.systems.is_empty() {
            GarnierName::ALL.to_vec()
        } else {
            let mut s = self.systems.clone();
            s.sort();
            s.dedup();
            s
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct DeriveArgs {
    #[command(flatten)]
    common: Common,
    /// Flow index, 1 or 2 (default: both).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    flow: Option<u8>,
    #[arg(long = "flow-convention", value_parser = parse_convention, default_value_t = FlowConvention::default())]
    convention: FlowConvention,
    /// text, json or latex.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Checks to run (default: all).
    #[arg(long, value_delimiter = ',', value_parser = parse_check)]
    checks: Vec<CheckKind>,
    #[arg(long = "flow-convention", value_parser = parse_convention, default_value_t = FlowConvention::default())]
    convention: FlowConvention,
    /// Seed of the random algebra samples.
    #[arg(long, default_value_t = qgarnier::verify::sample::DEFAULT_SEED)]
    seed: u64,
    /// Random samples per algebra check.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// text, json or markdown.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct CatalogArgs {
    #[command(flatten)]
    common: Common,
    /// text or json.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct ExportArgs {
    #[command(flatten)]
    common: Common,
    /// json or latex.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, value_enum, default_value_t = What::Hamiltonians)]
    what: What,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    flow: Option<u8>,
    #[arg(long = "flow-convention", value_parser = parse_convention, default_value_t = FlowConvention::default())]
    convention: FlowConvention,
}

fn parse_system(s: &str) -> Result<GarnierName, String> {
    s.parse().map_err(|e: qgarnier::catalog::CatalogError| e.to_string())
}

fn parse_convention(s: &str) -> Result<FlowConvention, String> {
    s.parse().map_err(|e: qgarnier::derive::DeriveError| e.to_string())
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    s.parse().map_err(|e: qgarnier::verify::SuiteError| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let jobs = match &cli.command {
        Command::Derive(a) => a.common.jobs,
        Command::Verify(a) => a.common.jobs,
        Command::Catalog(a) => a.common.jobs,
        Command::Export(a) => a.common.jobs,
    };
    if let Some(n) = jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Derive(a) => commands::derive(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Catalog(a) => commands::catalog(&a),
        Command::Export(a) => commands::export(&a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
