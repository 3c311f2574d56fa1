use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fortress::forcing::DEFAULT_MAX_EXACT;

#[derive(Debug, Parser)]
#[command(
    name = "fortress",
    version,
    about = "Zero forcing, forts, failed zero forcing and well-failed graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: Z, F, minimal forts, well-failed and well-forced status
    Classify(GraphArgs),
    /// List the minimal forts
    Forts(GraphArgs),
    /// List the minimal zero forcing sets
    Zfs {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = ZfsMethodArg::Direct)]
        method: ZfsMethodArg,
    },
    /// Fort-, zero-forcing- and failed-zero-forcing-irrelevant vertices
    Irrelevant {
        #[command(flatten)]
        graph: GraphArgs,
        /// Report only one kind
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Star centers, shape and structural rules of a tree
    Tree(GraphArgs),
    /// Build an explicit minimal fort (or fort-spanning path) on a tree
    Construct {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        kind: ConstructKind,
        /// Two leaves, comma separated (two-leg, leaf-to-leaf)
        #[arg(long, value_delimiter = ',')]
        leaves: Vec<usize>,
        /// Which path endpoint is labelled first (path)
        #[arg(long, value_enum, default_value_t = EndArg::Low)]
        end: EndArg,
        /// Fort members, comma separated (spanning-path)
        #[arg(long, value_delimiter = ',')]
        fort: Vec<usize>,
        /// Vertex the path must pass through (spanning-path)
        #[arg(long)]
        through: Option<usize>,
    },
    /// Run the verification suites over generated corpora
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct SourceArgs {
    /// Graph in graph6 format
    #[arg(long)]
    pub g6: Option<String>,
    /// Edge-list file: header "n m", then one "u v" line per edge
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Named family (parameters via --n, --m, --legs, --legs2)
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, requires = "family")]
    pub n: Option<usize>,
    #[arg(long, requires = "family")]
    pub m: Option<usize>,
    /// Leg lengths, comma separated
    #[arg(long, value_delimiter = ',', requires = "family")]
    pub legs: Vec<usize>,
    /// Leg lengths at the second center
    #[arg(long, value_delimiter = ',', requires = "family")]
    pub legs2: Vec<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, conflicts_with = "dot")]
    pub json: bool,
    /// Print the graph in DOT, highlighting the command's main vertex set
    #[arg(long)]
    pub dot: bool,
    /// Largest order for exponential searches
    #[arg(long, env = "FORTRESS_MAX_EXACT", default_value_t = DEFAULT_MAX_EXACT)]
    pub max_exact: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 9)]
    pub trees_max: usize,
    #[arg(long, default_value_t = 500)]
    pub random_trees: usize,
    #[arg(long, default_value_t = 14)]
    pub random_tree_max: usize,
    #[arg(long, default_value_t = 200)]
    pub random_graphs: usize,
    #[arg(long, default_value_t = 7)]
    pub random_graph_max: usize,
    /// Random instances per fort construction
    #[arg(long, default_value_t = 200)]
    pub constructions: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: one per core)
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Run only these suites (repeatable or comma separated)
    #[arg(long = "suite", value_delimiter = ',')]
    pub suites: Vec<String>,
    #[arg(long)]
    pub json: bool,
    #[arg(long, env = "FORTRESS_MAX_EXACT", default_value_t = DEFAULT_MAX_EXACT)]
    pub max_exact: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    GeneralizedStar,
    DoubleGeneralizedStar,
    Star222,
    Petersen,
    LayeredStarTree,
    LeafyTriangle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ZfsMethodArg {
    Direct,
    Cover,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Fort,
    ZeroForcing,
    FailedZeroForcing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Path,
    TwoLeg,
    Adjusted,
    AdjustedPgs,
    LeafToLeaf,
    SpanningPath,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EndArg {
    Low,
    High,
}
