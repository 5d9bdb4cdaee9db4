//! `nrt`: command-line front end for NRT-metric code computations.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use nrt_core::code::Limits;

#[derive(Parser, Debug)]
#[command(
    name = "nrt",
    version,
    about = "Exact computations for codes in the NRT metric"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum number of codewords to enumerate (overrides NRT_MAX_ENUM).
    #[arg(long, global = true, value_parser = positive_u128)]
    max_enum: Option<u128>,

    /// Maximum number of isometries to enumerate.
    #[arg(long, global = true, value_parser = positive_u128)]
    max_isometries: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shape enumerator of a code.
    ShapeEnum {
        #[arg(long)]
        code: PathBuf,
    },
    /// NRT dual of a code, in code-file format.
    Dual {
        #[arg(long)]
        code: PathBuf,
        /// Also write the dual to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// MacWilliams transform of a code's enumerator, or of a given enumerator.
    Macwilliams(MacwilliamsArgs),
    /// The MacWilliams matrix Θ and, for q = 2, its checked properties.
    Theta {
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        verify: bool,
    },
    /// Molien series of a named group, or of the self-dual group for row width s.
    Molien(GroupChoice),
    /// Reynolds operator applied to a polynomial.
    Reynolds {
        #[arg(long, value_enum)]
        group: GroupName,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Mode::Average)]
        mode: Mode,
    },
    /// Basis of the degree-d invariants of a named group.
    InvariantBasis {
        #[arg(long, value_enum)]
        group: GroupName,
        #[arg(long)]
        degree: u32,
    },
    /// Jacobian test for algebraic independence.
    Jacobian {
        /// Polynomial (repeat the flag for each).
        #[arg(long = "poly", required = true)]
        polys: Vec<String>,
        /// Number of variables z0..z{vars-1}; defaults to the number of polynomials.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Two-dimensional self-dual codes with ns = 4.
    Classify {
        #[arg(long)]
        q: u32,
        /// Check every self-dual code against the emitted list.
        #[arg(long)]
        completeness: bool,
        /// Write each distinct emitted code to this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Build a self-orthogonal or self-dual code.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        /// Input code file (repeat for several inputs).
        #[arg(long = "code")]
        codes: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether two codes are NRT-isometric.
    Equivalent {
        #[arg(long = "code", num_args = 1, required = true)]
        codes: Vec<PathBuf>,
    },
    /// The stored primary/secondary invariant bases.
    KnownBases {
        #[arg(long, value_enum)]
        name: Option<GroupName>,
        /// Express this invariant in the basis given by --name.
        #[arg(long, requires = "name")]
        express: Option<String>,
        /// Check the free-module decomposition up to this degree.
        #[arg(long)]
        verify: Option<u32>,
    },
}

#[derive(Args, Debug)]
struct MacwilliamsArgs {
    #[arg(long, conflicts_with_all = ["enumerator", "s", "q", "size"])]
    code: Option<PathBuf>,
    #[arg(long, requires_all = ["s", "q", "size"])]
    enumerator: Option<String>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    q: Option<u32>,
    /// Number of codewords of the code with this enumerator.
    #[arg(long)]
    size: Option<String>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("which").required(true).args(["group", "s"])))]
struct GroupChoice {
    #[arg(long, value_enum)]
    group: Option<GroupName>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, default_value_t = 8)]
    degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GroupName {
    G1,
    G2,
    G3,
}

impl GroupName {
    fn as_str(self) -> &'static str {
        match self {
            GroupName::G1 => "g1",
            GroupName::G2 => "g2",
            GroupName::G3 => "g3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Sum,
    Average,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    Co,
    Cort,
    Cn,
    Interleave,
    PaddedConcat,
    ExtendedHamming,
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Failure kinds mapped to exit codes 1 and 2.
#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<nrt_core::Error> for Failure {
    fn from(e: nrt_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn limits(cli: &Cli) -> Result<Limits, Failure> {
    let mut lim = Limits::default();
    if let Ok(v) = std::env::var("NRT_MAX_ENUM") {
        lim.max_enum =
            positive_u128(&v).map_err(|e| Failure::Usage(format!("NRT_MAX_ENUM: {e}")))?;
    }
    if let Some(v) = cli.max_enum {
        lim.max_enum = v;
    }
    if let Some(v) = cli.max_isometries {
        lim.max_isometries = v;
    }
    Ok(lim)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = limits(&cli).and_then(|lim| commands::run(&cli.command, &lim));
    match result {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("serializable")
                );
            } else {
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
