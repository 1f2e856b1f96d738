//! `lzdist` command-line tool.
//!
//! Exit codes: 0 success, 2 usage or configuration error, 3 invalid input
//! data, 4 I/O error, 5 network or model endpoint failure.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lzdist::baselines::MetricName;
use lzdist::distance::DistanceMode;
use lzdist::eval::Normalization;
use lzdist::llm::{EditScenario, LlmError};

#[derive(Parser, Debug)]
#[command(name = "lzdist", version, about = "Compression-based edit distance and evaluation toolkit")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Global {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Worker threads for per-record computation (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Apply Unicode NFC normalization to texts before measuring them.
    #[arg(long, global = true)]
    nfc: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compression distance between two files.
    Dist {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        /// Extra dictionary text placed after the source.
        #[arg(long)]
        context: Option<PathBuf>,
        #[arg(long, default_value = "none", value_parser = parse_normalization)]
        normalize: Normalization,
    },
    /// LZ77 phrases of a file, one per line.
    Factorize {
        input: PathBuf,
    },
    /// Correlate metrics with editing effort and write CSV reports.
    Eval {
        /// JSONL dataset, or CSV when the name ends in `.csv`.
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "compression,levenshtein,bleu,rouge_l,ter", value_parser = parse_metric)]
        metrics: Vec<MetricName>,
        /// `plain`, `with_context`, or both separated by a comma.
        #[arg(long, value_delimiter = ',', default_value = "plain", value_parser = parse_condition)]
        condition: Vec<DistanceMode>,
        #[arg(long, default_value_t = 5)]
        knn_k: usize,
        #[arg(long, default_value_t = 0.8)]
        train_fraction: f64,
        #[arg(long, default_value = "none", value_parser = parse_normalization)]
        normalize: Normalization,
    },
    /// Generate scenario edits through a chat-completion endpoint
    /// configured by LZDIST_API_BASE, LZDIST_API_KEY and LZDIST_MODEL.
    Synth {
        /// JSONL with `id`, `question`, `knowledge` and optional `initial_answer`.
        #[arg(long)]
        questions: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "normal,similar,fast", value_parser = parse_scenario)]
        scenarios: Vec<EditScenario>,
        /// Directory with replacement prompt templates.
        #[arg(long)]
        prompts: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        concurrency: usize,
        #[arg(long, default_value_t = 3)]
        max_retries: u32,
        #[arg(long, default_value_t = 120.0)]
        timeout: f64,
    },
    /// Write a simulated dataset with known editing effort.
    Simulate {
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        sigma: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time the distance on random texts of growing size.
    Bench {
        /// Total bytes of source plus target, ascending.
        #[arg(long, value_delimiter = ',', default_value = "1048576,2097152")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// CSV destination (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regress similar and fast scenario distances on normal ones.
    ScenarioCompare {
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "plain", value_parser = parse_condition)]
        condition: DistanceMode,
        #[arg(long, default_value = "none", value_parser = parse_normalization)]
        normalize: Normalization,
    },
}

fn parse_metric(s: &str) -> Result<MetricName, String> {
    s.parse().map_err(|e: lzdist::Error| e.to_string())
}

fn parse_condition(s: &str) -> Result<DistanceMode, String> {
    s.parse().map_err(|e: lzdist::Error| e.to_string())
}

fn parse_normalization(s: &str) -> Result<Normalization, String> {
    s.parse().map_err(|e: lzdist::Error| e.to_string())
}

fn parse_scenario(s: &str) -> Result<EditScenario, String> {
    s.parse().map_err(|e: lzdist::Error| e.to_string())
}

const EXIT_USAGE: u8 = 2;
const EXIT_DATA: u8 = 3;
const EXIT_IO: u8 = 4;
const EXIT_REMOTE: u8 = 5;

fn exit_code(e: &lzdist::Error) -> u8 {
    use lzdist::Error::*;
    match e {
        InvalidConfig(_) => EXIT_USAGE,
        InvalidInput(_) | Degenerate(_) | Validation(_) => EXIT_DATA,
        Io { .. } | Csv(_) => EXIT_IO,
        Llm(LlmError::Config(_)) => EXIT_USAGE,
        Llm(LlmError::Job(_)) => EXIT_DATA,
        Llm(_) => EXIT_REMOTE,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.global.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool is configured once");
    }
    match commands::run(cli.command, cli.global) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
