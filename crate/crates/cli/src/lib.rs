//! Command-line front end: ring-spec ingestion, classification and
//! verification commands, and deterministic JSON report emission.

pub mod commands;
pub mod report;
pub mod spec;

use clap::{Args, Parser, Subcommand};
use std::time::Instant;

use commands::{cmd_build, cmd_classify, cmd_verify, reverify_groebner, CommandOutcome, Suite};
use report::{exit_code_for, ReportEnvelope};
use spec::{build_ring, parse_spec_args};

/// Errors carrying their exit code class: schema problems exit 2,
/// parameter violations exit 3, inapplicable suites exit 5.
#[derive(Debug)]
pub enum CliError {
    Schema(String),
    Parameter(String),
    Inapplicable(String),
    Internal(String),
}

impl CliError {
    /// Classifies an engine error: parameter complaints keep their class,
    /// anything else is an internal failure.
    pub fn engine(e: canonica_core::AlgebraError) -> CliError {
        match e {
            canonica_core::AlgebraError::Parameter(msg) => CliError::Parameter(msg),
            other => CliError::Internal(other.to_string()),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Parameter(_) => 3,
            CliError::Inapplicable(_) => 5,
            CliError::Internal(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Schema(m)
            | CliError::Parameter(m)
            | CliError::Inapplicable(m)
            | CliError::Internal(m) => m,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let class = match self {
            CliError::Schema(_) => "spec error",
            CliError::Parameter(_) => "parameter error",
            CliError::Inapplicable(_) => "inapplicable",
            CliError::Internal(_) => "error",
        };
        write!(f, "{class}: {}", self.message())
    }
}

#[derive(Parser)]
#[command(
    name = "canonica",
    version,
    about = "Builds determinantal and chain rings and verifies their semidualizing-module classification with exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct CommonArgs {
    /// Ring spec: inline tokens (`det 3 2 1`, `chain [triv 2]`) or a path
    /// to a JSON spec file.
    #[arg(required = true, num_args = 1..)]
    pub spec: Vec<String>,
    /// Coefficient field F_p for inline specs (default 32003).
    #[arg(long, value_name = "PRIME")]
    pub field_p: Option<u64>,
    /// Write the full JSON report to this path.
    #[arg(long, value_name = "PATH")]
    pub json: Option<std::path::PathBuf>,
    /// Worker-thread cap; results are identical for every value.
    #[arg(long, value_name = "N")]
    pub threads: Option<usize>,
    /// Re-verify completed Groebner bases with the Buchberger criterion.
    #[arg(long)]
    pub verify_gb: bool,
}

#[derive(Subcommand)]
pub enum Command {
    /// Construct the ring and print its numerical profile.
    Build {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Scan divisor classes (or chain branches) for semidualizing modules
    /// and compare with the predicted classification.
    Classify {
        #[command(flatten)]
        common: CommonArgs,
        /// Scan window: classes c with |c| <= scan.
        #[arg(long, value_name = "N")]
        scan: Option<u32>,
        /// Highest self-extension index required to vanish.
        #[arg(long, value_name = "B")]
        ext_bound: Option<usize>,
    },
    /// Run one named verification suite against the ring.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Which suite to run.
        #[arg(long, value_enum)]
        suite: Suite,
        /// Highest Ext index checked by suites that scan extensions.
        #[arg(long, value_name = "B")]
        ext_bound: Option<usize>,
    },
}

/// Canonical command rendering for the report envelope: the subcommand,
/// the normalized spec, and the semantic flags in a fixed order. Output
/// plumbing (`--json`) and scheduling (`--threads`) are omitted so that
/// equivalent runs produce identical report bytes.
fn command_string(
    subcommand: &str,
    spec: &spec::RingSpecFile,
    action: &Action,
    verify_gb: bool,
) -> String {
    let mut s = format!("{subcommand} {}", spec.describe());
    match action {
        Action::Build => {}
        Action::Classify { scan, ext_bound } => {
            if let Some(n) = scan {
                s.push_str(&format!(" --scan {n}"));
            }
            if let Some(b) = ext_bound {
                s.push_str(&format!(" --ext-bound {b}"));
            }
        }
        Action::Verify { suite, ext_bound } => {
            s.push_str(&format!(" --suite {}", suite.name()));
            if let Some(b) = ext_bound {
                s.push_str(&format!(" --ext-bound {b}"));
            }
        }
    }
    if verify_gb {
        s.push_str(" --verify-gb");
    }
    s
}

fn install_thread_pool(threads: Option<usize>) -> Result<(), CliError> {
    if let Some(n) = threads {
        if n == 0 {
            return Err(CliError::Parameter("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Internal(format!("thread pool: {e}")))?;
    }
    Ok(())
}

enum Action {
    Build,
    Classify {
        scan: Option<u32>,
        ext_bound: Option<usize>,
    },
    Verify {
        suite: Suite,
        ext_bound: Option<usize>,
    },
}

/// Parses argv, runs the selected command, prints the human summary, and
/// writes the JSON envelope when requested. Returns the process exit code.
pub fn run(argv: &[String]) -> i32 {
    let started = Instant::now();
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // Let clap print its rendered help/usage; version/help requests
            // exit 0, argument errors exit 2.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (common, action) = match cli.command {
        Command::Build { common } => (common, Action::Build),
        Command::Classify {
            common,
            scan,
            ext_bound,
        } => (common, Action::Classify { scan, ext_bound }),
        Command::Verify {
            common,
            suite,
            ext_bound,
        } => (common, Action::Verify { suite, ext_bound }),
    };
    let subcommand = match &action {
        Action::Build => "build",
        Action::Classify { .. } => "classify",
        Action::Verify { .. } => "verify",
    };
    match execute(&common, action, subcommand, started) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn execute(
    common: &CommonArgs,
    action: Action,
    subcommand: &str,
    started: Instant,
) -> Result<i32, CliError> {
    install_thread_pool(common.threads)?;
    let spec = parse_spec_args(&common.spec, common.field_p)?;
    let built = build_ring(&spec)?;
    if common.verify_gb {
        reverify_groebner(built.quotient_ring())?;
    }
    let command = command_string(subcommand, &spec, &action, common.verify_gb);
    let outcome = match action {
        Action::Build => cmd_build(&spec, &built)?,
        Action::Classify { scan, ext_bound } => cmd_classify(&spec, &built, scan, ext_bound)?,
        Action::Verify { suite, ext_bound } => cmd_verify(&spec, &built, suite, ext_bound)?,
    };
    print_outcome(&outcome);
    if let Some(path) = &common.json {
        let envelope = ReportEnvelope::new(
            command,
            spec.fingerprint(),
            outcome.verdict.clone(),
            outcome.summary.clone(),
            common.verify_gb,
            started.elapsed().as_millis(),
            outcome.payload,
        );
        std::fs::write(path, envelope.to_json())
            .map_err(|e| CliError::Internal(format!("cannot write report: {e}")))?;
    }
    Ok(exit_code_for(&outcome.verdict))
}

fn print_outcome(outcome: &CommandOutcome) {
    for line in &outcome.human_lines {
        println!("{line}");
    }
    println!("{}", outcome.summary);
}
