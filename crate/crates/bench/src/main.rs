use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use basem_bench::{run_suite, to_csv, to_markdown, BenchConfig};
use clap::Parser;

/// Measure native and big-integer baseline throughput across moduli and
/// input sizes. Defaults reproduce the standard grid.
#[derive(Debug, Parser)]
#[command(name = "basem-bench", version)]
struct Args {
    #[arg(long, value_delimiter = ',')]
    moduli: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    oracle_moduli: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Skip the UTF-8 text workloads.
    #[arg(long)]
    no_text: bool,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 100)]
    warm_up_ms: u64,
    #[arg(long, default_value_t = 200)]
    measure_ms: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Spread cells over all cores.
    #[arg(long)]
    parallel: bool,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    markdown: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let defaults = BenchConfig::default();
    let config = BenchConfig {
        moduli: args.moduli.unwrap_or(defaults.moduli),
        oracle_moduli: args.oracle_moduli.unwrap_or(defaults.oracle_moduli),
        sizes: args.sizes.unwrap_or(defaults.sizes),
        text_modulus: if args.no_text { None } else { defaults.text_modulus },
        text_sizes: defaults.text_sizes,
        samples: args.samples,
        warm_up: Duration::from_millis(args.warm_up_ms),
        measurement: Duration::from_millis(args.measure_ms),
        seed: args.seed.unwrap_or(defaults.seed),
        parallel: args.parallel,
    };
    eprintln!("seed {:#x}, {} cells", config.seed, config.cells().len());
    let records = match run_suite(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("basem-bench: {e}");
            return ExitCode::from(2);
        }
    };
    let markdown = to_markdown(&records);
    let write = |path: &PathBuf, body: &str| {
        std::fs::write(path, body).map_err(|e| eprintln!("basem-bench: {}: {e}", path.display()))
    };
    if let Some(path) = &args.csv {
        if write(path, &to_csv(&records)).is_err() {
            return ExitCode::FAILURE;
        }
    }
    if let Some(path) = &args.markdown {
        if write(path, &markdown).is_err() {
            return ExitCode::FAILURE;
        }
    }
    print!("{markdown}");
    ExitCode::SUCCESS
}
