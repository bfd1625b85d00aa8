use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "strongclique",
    version,
    about = "Exact strong clique numbers with certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute SC(G) with a witness for every input graph.
    Sc(ScArgs),
    /// Line-graph distance between two edges.
    Distance(DistanceArgs),
    /// Check C_l-freeness for the given lengths.
    Free(FreeArgs),
    /// Emit graphs of a named family as graph6 lines.
    Generate(GenerateArgs),
    /// Check bounds on SC(G) against input, generated or enumerated graphs.
    Verify(VerifyArgs),
    /// Run one of the witness constructions.
    Witness(WitnessArgs),
    /// Emit every graph on n vertices as graph6 lines.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// Input file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    pub format: Format,
    /// Print a JSON document instead of text.
    #[arg(long)]
    #[serde(skip)]
    pub json: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ScArgs {
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct DistanceArgs {
    #[command(flatten)]
    pub common: Common,
    /// The two edge ids, e.g. `1,4`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub edges: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct FreeArgs {
    #[command(flatten)]
    pub common: Common,
    /// Cycle lengths, e.g. `4,6`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub lengths: Vec<usize>,
}

/// Family parameters shared by `generate` and `verify`.
#[derive(Debug, Clone, Default, Args, Serialize)]
pub struct FamilyArgs {
    /// Family name, e.g. `c5_blowup` or `bipartite-pendant-extremal`.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Edge probability for the random families.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prob: Option<f64>,
    /// Number of graphs; random families use seeds `seed, seed+1, ...`.
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    /// JSON file with one generator spec or an array of them.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub job: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Parameter `k` of the families that take one.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Bound identifiers (THM19, CONJ15, ...), or `theorems` / `all`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub spec: Vec<String>,
    /// Values of k; out-of-domain values are skipped when several are given.
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Directory for counterexample graph6 and report files.
    #[arg(long)]
    pub evidence_dir: Option<PathBuf>,
    /// Include every per-graph report, not only counterexamples.
    #[arg(long)]
    pub reports: bool,
    /// Record wall time per graph (output is then not reproducible).
    #[arg(long)]
    pub timing: bool,
    /// Also audit the matching decomposition of each graph.
    #[arg(long)]
    pub audit: bool,
    /// Generate graphs of a family instead of reading input.
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Verify every graph on this many vertices instead of reading input.
    #[arg(long, conflicts_with = "family")]
    pub enumerate: Option<usize>,
    /// With `--enumerate`, one graph per isomorphism class.
    #[arg(long)]
    pub dedup: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Construction {
    /// A path on 2m vertices through a strong-clique matching.
    #[value(name = "lemma21-path")]
    #[serde(rename = "lemma21-path")]
    Lemma21Path,
    /// A cycle on 2m-2 vertices using at least m-2 matching edges.
    #[value(name = "lemma21-cycle")]
    #[serde(rename = "lemma21-cycle")]
    Lemma21Cycle,
    /// Reduce to an S-minimal subgraph and check its properties.
    #[value(name = "s-minimal")]
    #[serde(rename = "s-minimal")]
    SMinimal,
    /// An (x, M)-path of a given length.
    #[value(name = "xm-path")]
    #[serde(rename = "xm-path")]
    XmPath,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(value_enum)]
    pub construction: Construction,
    #[command(flatten)]
    pub common: Common,
    /// Matching (or, for `s-minimal`, the strong clique S) as edge ids.
    /// Defaults to a maximum matching of the maximum strong clique found
    /// (for `s-minimal`, the clique itself).
    #[arg(long, value_delimiter = ',')]
    pub edges: Option<Vec<usize>>,
    /// Start vertex for `xm-path`.
    #[arg(long)]
    pub x: Option<usize>,
    /// Path length for `xm-path`.
    #[arg(long)]
    pub length: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub dedup: bool,
    #[arg(long)]
    pub json: bool,
}
