use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use apriori_core::io::{
    generate_synthetic, parse_transactions, write_result, write_transactions, Popularity,
    ResultFormat, SyntheticSpec, TransactionFormat,
};
use apriori_core::{
    mine_bruteforce, mine_classical_with, mine_prefixed_with, MineOptions, MiningMetrics,
    SupportThreshold, TransactionDatabase,
};

use crate::error::CliError;
use crate::sweep::{size_sweep, support_sweep, write_rows, SweepConfig};

/// Environment variable capping the support-counting workers.
pub const THREADS_ENV: &str = "MINE_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "apriori-bench",
    version,
    about = "Frequent-itemset mining and Apriori benchmarks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mine one dataset and write the frequent itemsets.
    Mine(MineArgs),
    /// Fixed dataset, varying minimum support.
    BenchSupport(BenchSupportArgs),
    /// Fixed percentage support, varying dataset size.
    BenchSize(BenchSizeArgs),
    /// Write a synthetic FIMI dataset.
    Gen(GenArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum InputFormat {
    Fimi,
    Csv,
}

impl From<InputFormat> for TransactionFormat {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Fimi => TransactionFormat::Fimi,
            InputFormat::Csv => TransactionFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl From<OutputFormat> for ResultFormat {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => ResultFormat::Json,
            OutputFormat::Csv => ResultFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Classical,
    Prefix,
    Oracle,
}

#[derive(Debug, Args)]
pub struct MineArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "fimi")]
    pub format: InputFormat,
    /// Absolute count, or a percentage of transactions with a trailing `%`.
    #[arg(long)]
    pub min_sup: String,
    #[arg(long, value_enum, default_value = "prefix")]
    pub algo: Algo,
    #[arg(long)]
    pub max_k: Option<usize>,
    /// Defaults to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub out_format: OutputFormat,
    /// Include per-pass counters (in the JSON document, or on stderr for CSV).
    #[arg(long)]
    pub metrics: bool,
}

#[derive(Debug, Args)]
pub struct DataSource {
    #[arg(
        long,
        conflicts_with = "synthetic",
        required_unless_present = "synthetic"
    )]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "fimi")]
    pub format: InputFormat,
    /// e.g. `n=10000,items=100,mean=8,dist=zipf:1.0,seed=42`
    #[arg(long)]
    pub synthetic: Option<String>,
}

#[derive(Debug, Args)]
pub struct BenchSupportArgs {
    #[command(flatten)]
    pub source: DataSource,
    /// Comma-separated thresholds; each is a count or a percentage.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sup_list: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchSizeArgs {
    #[command(flatten)]
    pub source: DataSource,
    /// Comma-separated transaction counts; each run uses that many leading transactions.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long)]
    pub min_sup_pct: f64,
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub items: usize,
    #[arg(long)]
    pub mean_len: f64,
    /// `uniform` or `zipf:S`.
    #[arg(long, default_value = "uniform")]
    pub dist: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let threads = threads_from_env()?;
    match cli.command {
        Command::Mine(args) => cmd_mine(&args, threads),
        Command::BenchSupport(args) => cmd_bench_support(&args, threads),
        Command::BenchSize(args) => cmd_bench_size(&args, threads),
        Command::Gen(args) => cmd_gen(&args),
    }
}

fn threads_from_env() -> Result<usize, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load(path: &Path, format: InputFormat) -> Result<TransactionDatabase, CliError> {
    let file = File::open(path)?;
    Ok(parse_transactions(io::BufReader::new(file), format.into())?)
}

fn load_source(source: &DataSource) -> Result<TransactionDatabase, CliError> {
    match (&source.input, &source.synthetic) {
        (Some(path), _) => load(path, source.format),
        (None, Some(spec)) => {
            let spec: SyntheticSpec = spec
                .parse()
                .map_err(|e: apriori_core::Error| CliError::Usage(e.to_string()))?;
            Ok(generate_synthetic(&spec)?)
        }
        (None, None) => Err(CliError::Usage(
            "either --input or --synthetic is required".into(),
        )),
    }
}

fn parse_threshold(text: &str, n_transactions: usize) -> Result<SupportThreshold, CliError> {
    SupportThreshold::parse(text, n_transactions).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn cmd_mine(args: &MineArgs, threads: usize) -> Result<(), CliError> {
    if args.max_k == Some(0) {
        return Err(CliError::Usage("--max-k must be at least 1".into()));
    }
    let db = load(&args.input, args.format)?;
    let threshold = parse_threshold(&args.min_sup, db.len())?;
    let options = MineOptions {
        max_k: args.max_k,
        threads,
    };
    let mut result = match args.algo {
        Algo::Classical => mine_classical_with(&db, threshold, &options),
        Algo::Prefix => mine_prefixed_with(&db, threshold, &options),
        Algo::Oracle => {
            let max_k = args.max_k.unwrap_or(db.dictionary().len()).max(1);
            mine_bruteforce(&db, threshold, max_k)?
        }
    };
    if args.metrics && matches!(args.out_format, OutputFormat::Csv) {
        let mut err = io::stderr().lock();
        writeln!(err, "k,join_item_comparisons,prune_subset_lookups,containment_tests,db_scans,candidates_generated,candidates_after_prune,wall_time_ms")?;
        for m in &result.metrics.levels {
            writeln!(
                err,
                "{},{},{},{},{},{},{},{:.3}",
                m.k,
                m.join_item_comparisons,
                m.prune_subset_lookups,
                m.containment_tests,
                m.db_scans,
                m.candidates_generated,
                m.candidates_after_prune,
                m.wall_time_ms
            )?;
        }
    }
    if !args.metrics {
        result.metrics = MiningMetrics::default();
    }
    let mut out = sink(args.out.as_deref())?;
    write_result(&result, db.dictionary(), args.out_format.into(), &mut out)?;
    out.flush()?;
    Ok(())
}

pub fn cmd_bench_support(args: &BenchSupportArgs, threads: usize) -> Result<(), CliError> {
    let db = load_source(&args.source)?;
    let thresholds = args
        .sup_list
        .iter()
        .map(|s| Ok((s.trim().to_string(), parse_threshold(s, db.len())?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let config = SweepConfig {
        repeats: args.repeats.max(1),
        threads,
    };
    let rows = support_sweep(&db, &thresholds, &config)?;
    write_rows(&rows, sink(args.out.as_deref())?)
}

pub fn cmd_bench_size(args: &BenchSizeArgs, threads: usize) -> Result<(), CliError> {
    let db = load_source(&args.source)?;
    let config = SweepConfig {
        repeats: args.repeats.max(1),
        threads,
    };
    let rows = size_sweep(&db, &args.sizes, args.min_sup_pct, &config)?;
    write_rows(&rows, sink(args.out.as_deref())?)
}

pub fn cmd_gen(args: &GenArgs) -> Result<(), CliError> {
    let popularity: Popularity = args
        .dist
        .parse()
        .map_err(|e: apriori_core::Error| CliError::Usage(e.to_string()))?;
    let spec = SyntheticSpec {
        n_transactions: args.n,
        n_items: args.items,
        mean_length: args.mean_len,
        popularity,
        seed: args.seed,
    };
    spec.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let db = generate_synthetic(&spec)?;
    let mut out = sink(args.out.as_deref())?;
    write_transactions(&db, TransactionFormat::Fimi, &mut out)?;
    out.flush()?;
    Ok(())
}
