//! Command-line front end for the nodal quartic toolkit.

pub mod commands;
pub mod parse;
pub mod report;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use parse::ParseError;
pub use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable input or malformed text.
    Invalid(String),
    Parse(ParseError),
    /// A module rejected the input or a computation failed.
    Compute(nodal_core::Error),
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Parse(_) => EXIT_INVALID,
            CliError::Compute(_) | CliError::Output(_) => EXIT_COMPUTE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Parse(e) => write!(f, "parse error: {e}"),
            CliError::Compute(e) => write!(f, "computation failed: {e}"),
            CliError::Output(m) => write!(f, "cannot write report: {m}"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<nodal_core::Error> for CliError {
    fn from(e: nodal_core::Error) -> Self {
        CliError::Compute(e)
    }
}

#[derive(Parser, Debug)]
#[command(name = "nodal", version, about = "Defects, separating cubics and nodes of quartic threefolds")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Add the generation time to the report.
    #[arg(long, global = true)]
    pub timestamps: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank and defect of the conditions a point set imposes on forms.
    Defect(DefectArgs),
    /// A cubic through all points but the excluded one.
    Separator(SeparatorArgs),
    /// Almost-general-position check with incidence witnesses.
    Agp(AgpArgs),
    /// Assemble a quartic family and list its designed nodes.
    Family(FamilyArgs),
    /// Enumerate singular points over a prime field.
    Scan(ScanArgs),
    /// Classify one point of a quartic.
    Classify(ClassifyArgs),
    /// Hodge numbers and Euler characteristic from nodes and defect.
    Invariants(InvariantsArgs),
    /// Factoriality and rationality verdicts.
    Verdict(VerdictArgs),
}

#[derive(Args, Debug)]
pub struct DefectArgs {
    #[arg(long, value_name = "PATH")]
    pub points: PathBuf,
    #[arg(long, default_value_t = 3)]
    pub degree: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Constructive,
    Oracle,
}

#[derive(Args, Debug)]
pub struct SeparatorArgs {
    #[arg(long, value_name = "PATH")]
    pub points: PathBuf,
    /// Index (from 0) of the point to avoid; the others form the set.
    #[arg(long)]
    pub exclude: usize,
    #[arg(long, value_enum, default_value_t = Method::Constructive)]
    pub method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Conics {
    Inclusive,
    Smooth,
}

#[derive(Args, Debug)]
pub struct AgpArgs {
    #[arg(long, value_name = "PATH")]
    pub points: PathBuf,
    #[arg(long, default_value_t = 3)]
    pub max_line: usize,
    #[arg(long, default_value_t = 6)]
    pub max_conic: usize,
    #[arg(long, default_value_t = 8)]
    pub max_plane: usize,
    #[arg(long, value_enum, default_value_t = Conics::Inclusive)]
    pub conics: Conics,
}

/// Where a quartic comes from: a spec file, a tag with constituents, or a
/// custom equation.
#[derive(Args, Debug, Default)]
pub struct SpecArgs {
    #[arg(long, value_name = "PATH")]
    pub spec: Option<PathBuf>,
    /// plane, quadric, delpezzo, burkhardt or custom
    #[arg(long)]
    pub tag: Option<String>,
    /// The quartic itself, for `--tag custom`.
    #[arg(long, value_name = "POLY")]
    pub equation: Option<String>,
    #[arg(long, value_name = "POLY")]
    pub h3: Option<String>,
    #[arg(long, value_name = "POLY")]
    pub g3: Option<String>,
    #[arg(long, value_name = "POLY")]
    pub a2: Option<String>,
    #[arg(long, value_name = "POLY")]
    pub b2: Option<String>,
    #[arg(long, value_name = "POLY")]
    pub b3: Option<String>,
    #[arg(long, value_name = "POLY")]
    pub h2: Option<String>,
    #[arg(long, value_name = "POLY")]
    pub g2: Option<String>,
    #[arg(long, value_name = "POLY")]
    pub g1: Option<String>,
    /// Linear factors of a constituent, as `name=l1;l2;...`. Repeatable.
    #[arg(long, value_name = "NAME=LINEARS")]
    pub factors: Vec<String>,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub source: SpecArgs,
    /// Also write the designed nodes as a point-set file.
    #[arg(long, value_name = "PATH")]
    pub nodes_out: Option<PathBuf>,
    /// Also write the assembled spec file.
    #[arg(long, value_name = "PATH")]
    pub spec_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub source: SpecArgs,
    #[arg(long)]
    pub prime: u64,
    /// Worker threads, 0 for the default pool.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub source: SpecArgs,
    #[arg(long, value_name = "A:B:C:D:E")]
    pub point: String,
    /// Work over F_p instead of Q.
    #[arg(long)]
    pub prime: Option<u64>,
}

#[derive(Args, Debug)]
pub struct InvariantsArgs {
    #[arg(long)]
    pub nodes: usize,
    #[arg(long)]
    pub defect: usize,
    /// Treat the quartic as carrying a standard del Pezzo fibration.
    #[arg(long)]
    pub standard: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Bound,
    Valera,
    Shokurov,
}

#[derive(Args, Debug)]
pub struct VerdictArgs {
    #[arg(long, value_enum)]
    pub rule: Rule,
    #[arg(long)]
    pub degree: Option<u32>,
    #[arg(long)]
    pub nodes: Option<usize>,
    #[arg(long)]
    pub defect: Option<usize>,
    /// The hypersurface contains a plane.
    #[arg(long)]
    pub plane: bool,
    /// The hypersurface contains a quadric surface.
    #[arg(long)]
    pub quadric: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub chi: Option<i64>,
    #[arg(long)]
    pub standard: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub k2l: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k2s: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<i64>,
}

/// Result of one invocation: exit code plus what goes to each stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the tool on `argv` (program name first) without touching the
/// process streams.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let mut report = commands::dispatch(&cli.command)?;
    if cli.timestamps {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        report.input("timestamp", secs);
    }
    let body = if cli.json {
        report.render_json()
    } else {
        report.render_text()
    };
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(body),
    }
}
