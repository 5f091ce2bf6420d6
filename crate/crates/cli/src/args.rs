//! Command-line grammar.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "orbiquint",
    version,
    about = "Boundary of the plane-quintic locus in genus 6"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format; each subcommand lists the formats it accepts.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Md,
    Json,
    Tsv,
    Dot,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Md => "md",
            OutputFormat::Json => "json",
            OutputFormat::Tsv => "tsv",
            OutputFormat::Dot => "dot",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    #[value(name = "1-5")]
    OneToFive,
    #[value(name = "6")]
    Six,
    #[value(name = "7")]
    Seven,
    #[value(name = "8")]
    Eight,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelsArg {
    C1,
    C2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The sixteen type-(1)–(5) rows [md, tsv, json].
    Table1,
    /// Boundary dual-graph families for covers of degree 6d [md, json, dot].
    BoundaryGraphs {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=10))]
        d: u32,
    },
    /// Hirzebruch–Jung chain of 1/r(1,q) [md, json].
    Resolve {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        q: i64,
    },
    /// Coarse singularities of F_a over an orbifold point of order r [md, json].
    Coarse {
        #[arg(long)]
        r: i64,
        /// Twist, e.g. 1/3.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Resolution–contraction diagrams, all or one item [md, json, dot].
    Diagrams {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=13))]
        item: Option<u32>,
    },
    /// Character check and trigonal correspondence of S4 monodromy [md, json].
    Recillas {
        /// A permutation of 1..4 in cycle notation; repeatable. Defaults to all of S4.
        #[arg(long = "mon")]
        mon: Vec<String>,
    },
    /// Parity of a glued section from its pieces [md, json].
    Parity {
        /// Comma-separated self-intersections, e.g. 1/2,-1/2,1.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "worked_example")]
        pieces: Option<String>,
        /// The worked type-(7) example at parameter p.
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=3))]
        worked_example: Option<u32>,
    },
    /// Boundary divisors by graph type, local models or tables [md, json, tsv].
    Classify {
        #[arg(long = "type", value_enum, default_value = "all")]
        kind: TypeArg,
        /// Local models of the short (c1) or long (c2) ends instead.
        #[arg(long, value_enum, conflicts_with = "table")]
        models: Option<ModelsArg>,
        /// One of the printed tables instead.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        table: Option<u8>,
    },
    /// Geometric genus on a Hirzebruch surface, or by Riemann–Hurwitz [md, json].
    Genus {
        /// A curve nσ+mF on F_l, given as l,n,m.
        #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
        hirzebruch: Option<Vec<i64>>,
        /// Singularities A_k by k; repeatable.
        #[arg(long = "sing", allow_hyphen_values = true)]
        sing: Vec<i64>,
        /// Riemann–Hurwitz data as deg,base_genus,ramification.
        #[arg(
            long,
            value_delimiter = ',',
            num_args = 1,
            conflicts_with = "hirzebruch",
            allow_hyphen_values = true
        )]
        rh: Option<Vec<i64>>,
    },
    /// Recompute every golden artifact and compare [md, json].
    VerifyGolden {
        /// Golden directory; overrides ORBIQUINT_GOLDEN.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Table1 => "table1",
            Command::BoundaryGraphs { .. } => "boundary-graphs",
            Command::Resolve { .. } => "resolve",
            Command::Coarse { .. } => "coarse",
            Command::Diagrams { .. } => "diagrams",
            Command::Recillas { .. } => "recillas",
            Command::Parity { .. } => "parity",
            Command::Classify { .. } => "classify",
            Command::Genus { .. } => "genus",
            Command::VerifyGolden { .. } => "verify-golden",
        }
    }

    /// Accepted formats; the first is the default.
    pub fn formats(&self) -> &'static [OutputFormat] {
        use OutputFormat::*;
        match self {
            Command::Table1 => &[Md, Tsv, Json],
            Command::BoundaryGraphs { .. } | Command::Diagrams { .. } => &[Md, Json, Dot],
            Command::Classify { .. } => &[Md, Json, Tsv],
            _ => &[Md, Json],
        }
    }
}
