use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "crosskit",
    version,
    about = "Crossing numbers of complete multipartite graphs: drawings, certificates, bounds"
)]
pub struct Cli {
    /// Base seed for random drawings; overrides CROSSKIT_SEED
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Print the machine-readable JSON body instead of the summary
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a drawing
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Check the good-drawing axioms and planarity of a drawing file
    Validate {
        /// Drawing file (.crdraw.json)
        file: PathBuf,
    },
    /// Count crossings, in total or within and between edge classes
    Count {
        /// Drawing file (.crdraw.json)
        file: PathBuf,
        /// Edge class `U:W` (comma-separated vertex labels on each side); give one or more
        #[arg(long = "class", value_name = "U:W")]
        classes: Vec<String>,
    },
    /// Seven-term decomposition of the crossings of a K_{1,1,m,n} drawing
    Ledger {
        /// Drawing file (.crdraw.json)
        file: PathBuf,
    },
    /// Split a vertex of a drawing and certify the crossing counts
    Transform(TransformArgs),
    /// Run certified constructions over drawings and report every equality
    Verify(VerifyArgs),
    /// Lower and upper bounds on cr(K_{1,1,m,n}) over a grid
    Bounds(BoundsArgs),
    /// Exact crossing number of a small graph by exhaustive search
    Exact(ExactArgs),
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Zarankiewicz drawing of K_{m,n}
    Zarankiewicz {
        m: usize,
        n: usize,
        /// Output drawing (stdout when absent)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cylinder drawing of K_{1,1,m,n}
    Cylinder {
        m: usize,
        n: usize,
        /// Output drawing (stdout when absent)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Straight-line drawing of a graph spec at random lattice points
    Random {
        /// Graph spec such as K=1,1,3,3
        spec: String,
        /// Output drawing (stdout when absent)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    #[value(name = "lemma1-d1")]
    Lemma1D1,
    #[value(name = "lemma1-d2")]
    Lemma1D2,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// Which construction to run
    pub kind: TransformKind,
    /// Input drawing (.crdraw.json)
    pub file: PathBuf,
    /// Vertex to split
    #[arg(long)]
    pub vertex: String,
    /// Comma-separated neighbors forming U (an even number)
    #[arg(long)]
    pub part: String,
    /// Index k in 0..|U|
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Label of the new vertex
    #[arg(long, default_value = "x")]
    pub x_label: String,
    /// Label of its twin (lemma1-d2)
    #[arg(long, default_value = "y")]
    pub y_label: String,
    /// Output drawing (stdout when absent)
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Write the certificate here
    #[arg(long)]
    pub cert: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Thm1,
    Thm2,
    Thm3,
    Lemma1,
    Lemma2,
    Lemma3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Cylinder,
    Random,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Assume {
    Zc,
    Hc2mn,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Construction or identity to check
    pub target: VerifyTarget,
    /// Size of the third part of K_{1,1,m,n}
    #[arg(long)]
    pub m: Option<usize>,
    /// Size of the fourth part of K_{1,1,m,n}
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of random drawings (seeds base, base+1, ...)
    #[arg(long, default_value_t = 25)]
    pub seeds: u64,
    /// Which drawings to check
    #[arg(long, value_enum, default_value_t = Source::All)]
    pub source: Source,
    /// Graph spec for lemma1 (defaults to K=1,1,m,n)
    #[arg(long)]
    pub graph: Option<String>,
    /// Conjectures the bound may use
    #[arg(long, value_enum)]
    pub assume: Vec<Assume>,
    /// Worker threads
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Write all certificates or reports here as JSON
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Values of m: `a..b`, `a..=b` (both inclusive) or a single value
    #[arg(long)]
    pub m_range: String,
    /// Values of n, in the same syntax
    #[arg(long)]
    pub n_range: String,
    /// Conjectures the lower bounds may use
    #[arg(long, value_enum)]
    pub assume: Vec<Assume>,
    /// Table format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (stdout when absent)
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    /// Graph spec such as K=3,3
    pub spec: String,
    /// Largest crossing count searched
    #[arg(long, default_value_t = 4)]
    pub max_k: usize,
    /// Worker threads
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Write the witness here
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Write the drawing rebuilt from the witness here
    #[arg(long)]
    pub drawing: Option<PathBuf>,
    /// Re-check a witness file instead of searching
    #[arg(long, value_name = "WITNESS")]
    pub check: Option<PathBuf>,
}
