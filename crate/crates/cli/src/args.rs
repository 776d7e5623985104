use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use egomap_core::interest::Detector;
use egomap_core::io::ExportFormat;

#[derive(Debug, Parser)]
#[command(
    name = "egomap",
    version,
    about = "Interest maps from social ego networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a follow graph and store it in the cache.
    Ingest(GraphInput),
    /// Run a community detector and print the partition and its modularity.
    Detect(DetectArgs),
    /// Build a labeled interest map for one account.
    Map(MapArgs),
    /// Write a planted-partition graph and its ground truth.
    Synth(SynthArgs),
    /// Compare a detected partition with ground truth.
    Eval(EvalArgs),
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// CSV edge list with header `source,target`.
    #[arg(long)]
    pub edges: PathBuf,
    /// JSONL profile metadata, one object per line.
    #[arg(long)]
    pub meta: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, default_value = "louvain")]
    pub detector: Detector,
    /// Number of communities (girvan-newman only; default: best modularity).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = egomap_core::community::DEFAULT_WALK_LENGTH)]
    pub walk_length: usize,
    /// Restrict detection to the accounts this one follows.
    #[arg(long)]
    pub ego: Option<String>,
    /// Also write the partition as JSON.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long)]
    pub ego: String,
    #[arg(long, default_value = "louvain")]
    pub detector: Detector,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = egomap_core::community::DEFAULT_WALK_LENGTH)]
    pub walk_length: usize,
    #[arg(long, default_value_t = 3)]
    pub min_size: usize,
    #[arg(long, default_value_t = 5)]
    pub top_k: usize,
    /// Output file (default: stdout). A run manifest is written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    pub format: ExportFormat,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long)]
    pub blocks: usize,
    #[arg(long)]
    pub block_size: usize,
    #[arg(long)]
    pub p_in: f64,
    #[arg(long)]
    pub p_out: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge list output.
    #[arg(long)]
    pub out: PathBuf,
    /// Ground-truth partition output.
    #[arg(long)]
    pub truth: PathBuf,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Detected partition (JSON, as written by `detect --out`).
    #[arg(long)]
    pub pred: PathBuf,
    /// Ground-truth partition (JSON, as written by `synth --truth`).
    #[arg(long)]
    pub truth: PathBuf,
}
