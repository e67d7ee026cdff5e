//! Throughput harness for the streaming codec and the big-integer baseline.
//!
//! Each cell (workload × codec × modulus × size) is first checked for a
//! correct roundtrip, then warmed up and timed: the measurement window is
//! split into `samples` batches of equal iteration count and the median
//! batch throughput is reported in MiB/s. Inputs are uniform pseudo-random
//! bytes from a fixed seed (text workloads use a mixed UTF-8 generator from
//! the same seed), so two runs with the same config time the same data.

pub mod input;
pub mod report;

use std::hint::black_box;
use std::time::{Duration, Instant};

use basem_core::{
    decode, decode_text, derive_params, encode, encode_text, oracle_decode, oracle_encode,
    CodecParams, OracleCodec, ORACLE_MAX_MODULUS,
};
use rayon::prelude::*;
use thiserror::Error;

pub use report::{to_csv, to_markdown, CSV_HEADER};

pub const MIB: f64 = 1024.0 * 1024.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Workload {
    Encode,
    Decode,
    EncodeText,
    DecodeText,
}

impl Workload {
    pub fn as_str(self) -> &'static str {
        match self {
            Workload::Encode => "encode",
            Workload::Decode => "decode",
            Workload::EncodeText => "encode-text",
            Workload::DecodeText => "decode-text",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Codec {
    Native,
    Oracle,
}

impl Codec {
    pub fn as_str(self) -> &'static str {
        match self {
            Codec::Native => "native",
            Codec::Oracle => "oracle",
        }
    }
}

/// One measured cell.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub workload: Workload,
    pub codec: Codec,
    pub m: u64,
    pub size: usize,
    /// Median over samples.
    pub mib_per_s: f64,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    /// Moduli for the native byte workloads.
    pub moduli: Vec<u64>,
    /// Moduli for the oracle byte workloads; each must be at most 256.
    pub oracle_moduli: Vec<u64>,
    pub sizes: Vec<usize>,
    /// Modulus for the UTF-8 workloads; `None` skips them.
    pub text_modulus: Option<u64>,
    pub text_sizes: Vec<usize>,
    pub samples: usize,
    pub warm_up: Duration,
    pub measurement: Duration,
    pub seed: u64,
    /// Run cells on the rayon pool. Each measurement stays on one thread.
    pub parallel: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            moduli: vec![2, 3, 13, 65, 251, 257],
            oracle_moduli: vec![2, 3, 13, 65, 251],
            sizes: vec![32, 1024, 65536],
            text_modulus: Some(65),
            text_sizes: vec![1024, 65536],
            samples: 10,
            warm_up: Duration::from_millis(100),
            measurement: Duration::from_millis(200),
            seed: 0x5EED_BA5E_0000_0001,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("modulus {0} is not supported by the codec")]
    UnsupportedModulus(u64),
    #[error("the oracle only handles moduli up to {ORACLE_MAX_MODULUS}, got {0}")]
    OracleModulus(u64),
    #[error("input sizes must be positive")]
    ZeroSize,
    #[error("at least one sample is required")]
    NoSamples,
}

/// A single benchmark cell before measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub workload: Workload,
    pub codec: Codec,
    pub m: u64,
    pub size: usize,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for &m in self.moduli.iter().chain(&self.text_modulus) {
            derive_params(m).map_err(|_| ConfigError::UnsupportedModulus(m))?;
        }
        for &m in &self.oracle_moduli {
            if m > ORACLE_MAX_MODULUS {
                return Err(ConfigError::OracleModulus(m));
            }
            OracleCodec::new(m).map_err(|_| ConfigError::UnsupportedModulus(m))?;
        }
        if self.sizes.iter().chain(&self.text_sizes).any(|&s| s == 0) {
            return Err(ConfigError::ZeroSize);
        }
        if self.samples == 0 {
            return Err(ConfigError::NoSamples);
        }
        Ok(())
    }

    /// Cells in report order: native byte workloads, oracle byte workloads,
    /// then text workloads.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        let byte_workloads = [Workload::Encode, Workload::Decode];
        for (codec, moduli) in [
            (Codec::Native, &self.moduli),
            (Codec::Oracle, &self.oracle_moduli),
        ] {
            for workload in byte_workloads {
                for &m in moduli {
                    for &size in &self.sizes {
                        cells.push(Cell {
                            workload,
                            codec,
                            m,
                            size,
                        });
                    }
                }
            }
        }
        if let Some(m) = self.text_modulus {
            for workload in [Workload::EncodeText, Workload::DecodeText] {
                for &size in &self.text_sizes {
                    cells.push(Cell {
                        workload,
                        codec: Codec::Native,
                        m,
                        size,
                    });
                }
            }
        }
        cells
    }
}

/// Runs every cell of `config` and returns one record per cell, in
/// [`BenchConfig::cells`] order.
pub fn run_suite(config: &BenchConfig) -> Result<Vec<BenchRecord>, ConfigError> {
    config.validate()?;
    let cells = config.cells();
    let records = if config.parallel {
        cells.par_iter().map(|c| run_cell(config, c)).collect()
    } else {
        cells.iter().map(|c| run_cell(config, c)).collect()
    };
    Ok(records)
}

/// Measures one cell. Panics if the codec fails to roundtrip its input.
pub fn run_cell(config: &BenchConfig, cell: &Cell) -> BenchRecord {
    let mib_per_s = match (cell.workload, cell.codec) {
        (Workload::Encode | Workload::Decode, Codec::Native) => {
            let params = derive_params(cell.m).expect("validated");
            let input = input::random_bytes(config.seed, cell.size);
            measure_bytes(config, cell, &input, NativeCodec(params))
        }
        (Workload::Encode | Workload::Decode, Codec::Oracle) => {
            let codec = OracleCodec::new(cell.m).expect("validated");
            let input = input::random_bytes(config.seed, cell.size);
            measure_bytes(config, cell, &input, codec)
        }
        (Workload::EncodeText | Workload::DecodeText, _) => {
            let params = derive_params(cell.m).expect("validated");
            let text = input::mixed_utf8(config.seed, cell.size);
            measure_text(config, cell, &text, &params)
        }
    };
    BenchRecord {
        workload: cell.workload,
        codec: cell.codec,
        m: cell.m,
        size: cell.size,
        mib_per_s,
        samples: config.samples,
        seed: config.seed,
    }
}

trait ByteCodec {
    fn encode(&self, bytes: &[u8]) -> Vec<u64>;
    fn decode(&self, digits: &[u64]) -> Vec<u8>;
}

struct NativeCodec(CodecParams);

impl ByteCodec for NativeCodec {
    fn encode(&self, bytes: &[u8]) -> Vec<u64> {
        encode(bytes, &self.0).into_digits()
    }

    fn decode(&self, digits: &[u64]) -> Vec<u8> {
        decode(digits, &self.0, None).expect("valid stream")
    }
}

impl ByteCodec for OracleCodec {
    fn encode(&self, bytes: &[u8]) -> Vec<u64> {
        oracle_encode(bytes, self).into_digits()
    }

    fn decode(&self, digits: &[u64]) -> Vec<u8> {
        oracle_decode(digits, self, None).expect("valid stream")
    }
}

fn measure_bytes(config: &BenchConfig, cell: &Cell, input: &[u8], codec: impl ByteCodec) -> f64 {
    let encoded = codec.encode(input);
    assert_eq!(
        codec.decode(&encoded),
        input,
        "{:?} roundtrip failed before timing",
        cell
    );
    match cell.workload {
        Workload::Encode => time_throughput(config, cell.size, || {
            black_box(codec.encode(black_box(input)));
        }),
        _ => time_throughput(config, cell.size, || {
            black_box(codec.decode(black_box(&encoded)));
        }),
    }
}

fn measure_text(config: &BenchConfig, cell: &Cell, text: &str, params: &CodecParams) -> f64 {
    let encoded = encode_text(text, params).into_digits();
    assert_eq!(
        decode_text(&encoded, params, None).as_deref(),
        Ok(text),
        "{:?} roundtrip failed before timing",
        cell
    );
    match cell.workload {
        Workload::EncodeText => time_throughput(config, cell.size, || {
            black_box(encode_text(black_box(text), params));
        }),
        _ => time_throughput(config, cell.size, || {
            black_box(decode_text(black_box(&encoded), params, None).unwrap());
        }),
    }
}

/// Warm up for `config.warm_up`, then take `config.samples` timed batches
/// spread over `config.measurement`; returns the median MiB/s.
fn time_throughput(config: &BenchConfig, bytes_per_iter: usize, mut routine: impl FnMut()) -> f64 {
    let warm_start = Instant::now();
    let mut warm_iters = 0u64;
    while warm_iters == 0 || warm_start.elapsed() < config.warm_up {
        routine();
        warm_iters += 1;
    }
    let per_iter = warm_start.elapsed().as_secs_f64() / warm_iters as f64;
    let per_sample = config.measurement.as_secs_f64() / config.samples as f64;
    let iters = ((per_sample / per_iter).floor() as u64).max(1);

    let mut rates: Vec<f64> = (0..config.samples)
        .map(|_| {
            let start = Instant::now();
            for _ in 0..iters {
                routine();
            }
            let secs = start.elapsed().as_secs_f64().max(1e-9);
            (bytes_per_iter as f64 * iters as f64) / secs / MIB
        })
        .collect();
    median(&mut rates)
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}

/// Looks up the record for one cell.
pub fn find(
    records: &[BenchRecord],
    workload: Workload,
    codec: Codec,
    m: u64,
    size: usize,
) -> Option<&BenchRecord> {
    records
        .iter()
        .find(|r| r.workload == workload && r.codec == codec && r.m == m && r.size == size)
}
