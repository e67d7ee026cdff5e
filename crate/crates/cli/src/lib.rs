//! The `basem` command-line tool.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | I/O failure |
//! | 2 | usage error or unsupported modulus |
//! | 3 | digit out of range |
//! | 4 | truncated length prefix, state prefix or payload |
//! | 5 | declared length exceeds the cap |
//! | 6 | state header outside the normalization window |
//! | 7 | invalid UTF-8 (text mode) |
//! | 8 | malformed stream file |
//! | 9 | declared length or oracle payload value overflows |

pub mod format;

use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::path::PathBuf;

use basem_core::{
    cost_report, decode, derive_params, encode, oracle_decode, oracle_encode, CodecParams,
    DecodeError, DecodeErrorKind, OracleCodec, ParamsError, DEFAULT_DECODE_CAP,
};
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::format::{read_stream, write_stream, FormatError, StreamFileFormat};

pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const DIGIT_OUT_OF_RANGE: i32 = 3;
    pub const TRUNCATED: i32 = 4;
    pub const CAP_EXCEEDED: i32 = 5;
    pub const STATE_OUT_OF_WINDOW: i32 = 6;
    pub const INVALID_UTF8: i32 = 7;
    pub const MALFORMED: i32 = 8;
    pub const OVERFLOW: i32 = 9;
}

/// The worked example: "Hi" at m = 50.
pub const EXAMPLE_INPUT: [u8; 2] = [72, 105];
pub const EXAMPLE_MODULUS: u64 = 50;
pub const EXAMPLE_STREAM: [u64; 26] = [
    2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 12, 8, 11, 36, 6, 32, 19, 0, 38, 1, 49, 1, 1, 48,
];

#[derive(Debug, Parser)]
#[command(name = "basem", version, about = "Byte to residue-stream codec (base-m with length header)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Show the derived parameters and expansion cost of a modulus.
    Params {
        #[arg(long, short)]
        modulus: u64,
    },
    /// Encode bytes (or UTF-8 text) into a residue stream.
    Encode {
        #[arg(long, short)]
        modulus: u64,
        #[command(flatten)]
        io: IoArgs,
        /// Require the input to be valid UTF-8.
        #[arg(long)]
        text: bool,
    },
    /// Decode a residue stream back into bytes.
    Decode {
        /// Required for `dec`; checked against the file for `json` and `bin`.
        #[arg(long, short)]
        modulus: Option<u64>,
        #[command(flatten)]
        io: IoArgs,
        /// Refuse streams declaring more than this many bytes.
        #[arg(long, default_value_t = DEFAULT_DECODE_CAP)]
        max_decoded_len: u64,
        /// Require the decoded bytes to be valid UTF-8.
        #[arg(long)]
        text: bool,
    },
    /// Encode and decode the "Hi" example at m = 50 and compare with the
    /// reference stream.
    Example,
}

#[derive(Debug, Args)]
pub struct IoArgs {
    #[arg(long, short, value_enum, default_value_t = StreamFileFormat::Dec)]
    pub format: StreamFileFormat,
    /// Input file; standard input when omitted.
    #[arg(long = "in", short = 'i')]
    pub input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long = "out", short = 'o')]
    pub output: Option<PathBuf>,
    /// Use the big-integer radix conversion codec (m ≤ 256) instead.
    #[arg(long)]
    pub oracle: bool,
    /// Write binary output even when standard output is a terminal.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error("{0}")]
    InvalidUtf8(String),
    #[error("example mismatch")]
    ExampleFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::ExampleFailed => exit::IO,
            CliError::Usage(_) | CliError::Params(_) => exit::USAGE,
            CliError::Format(e) => match e {
                FormatError::DigitOutOfRange { .. } => exit::DIGIT_OUT_OF_RANGE,
                FormatError::MissingModulus | FormatError::ModulusMismatch { .. } => exit::USAGE,
                FormatError::Malformed { .. } => exit::MALFORMED,
            },
            CliError::Decode(e) => decode_exit_code(e.kind()),
            CliError::InvalidUtf8(_) => exit::INVALID_UTF8,
        }
    }
}

pub fn decode_exit_code(kind: DecodeErrorKind) -> i32 {
    match kind {
        DecodeErrorKind::DigitOutOfRange => exit::DIGIT_OUT_OF_RANGE,
        DecodeErrorKind::TruncatedLengthPrefix
        | DecodeErrorKind::TruncatedStatePrefix
        | DecodeErrorKind::PayloadExhausted => exit::TRUNCATED,
        DecodeErrorKind::LengthCapExceeded => exit::CAP_EXCEEDED,
        DecodeErrorKind::StateOutOfWindow => exit::STATE_OUT_OF_WINDOW,
        DecodeErrorKind::LengthOverflow | DecodeErrorKind::ValueOverflow => exit::OVERFLOW,
    }
}

/// Runs one command against the process's standard streams.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    match cli.command {
        Command::Params { modulus } => cmd_params(modulus, &mut stdout.lock()),
        Command::Example => {
            let report = run_example(&EXAMPLE_STREAM);
            print!("{report}");
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::ExampleFailed)
            }
        }
        Command::Encode { modulus, io, text } => {
            refuse_binary_tty(&io)?;
            let input = read_input(&io)?;
            let (m, digits) = cmd_encode(modulus, io.oracle, text, &input)?;
            write_output(&io, m, &digits)
        }
        Command::Decode {
            modulus,
            io,
            max_decoded_len,
            text,
        } => {
            let input = read_input(&io)?;
            let bytes = cmd_decode(modulus, io.format, io.oracle, text, max_decoded_len, &input)?;
            match &io.output {
                Some(path) => fs::write(path, &bytes)?,
                None => {
                    let mut out = stdout.lock();
                    out.write_all(&bytes)?;
                    out.flush()?;
                }
            }
            Ok(())
        }
    }
}

pub fn cmd_params(m: u64, out: &mut impl Write) -> Result<(), CliError> {
    let params = derive_params(m)?;
    let cost = cost_report(m)?;
    writeln!(out, "modulus m:                {m}")?;
    writeln!(out, "supported:                yes")?;
    writeln!(out, "prefix width k:           {}", params.prefix_width())?;
    writeln!(out, "header digits 2k:         {}", cost.header_digits)?;
    writeln!(out, "decoder lower bound L:    {}", params.lower_bound())?;
    writeln!(out, "encoder threshold T:      {}", params.threshold())?;
    writeln!(out, "payload rate log_m(256):  {:.4}", cost.payload_rate)?;
    Ok(())
}

/// Returns the modulus and digits of the encoded stream.
pub fn cmd_encode(
    m: u64,
    oracle: bool,
    text: bool,
    input: &[u8],
) -> Result<(u64, Vec<u64>), CliError> {
    if text {
        std::str::from_utf8(input).map_err(|e| {
            CliError::InvalidUtf8(format!(
                "input is not valid UTF-8 at byte {}",
                e.valid_up_to()
            ))
        })?;
    }
    let stream = if oracle {
        oracle_encode(input, &OracleCodec::new(m)?)
    } else {
        encode(input, &derive_params(m)?)
    };
    Ok((m, stream.into_digits()))
}

pub fn cmd_decode(
    modulus: Option<u64>,
    format: StreamFileFormat,
    oracle: bool,
    text: bool,
    cap: u64,
    input: &[u8],
) -> Result<Vec<u8>, CliError> {
    if modulus.is_none() && !format.carries_modulus() {
        return Err(CliError::Usage(
            "--modulus is required for the dec format".into(),
        ));
    }
    let file = read_stream(input, format, modulus)?;
    let bytes = if oracle {
        oracle_decode(&file.digits, &OracleCodec::new(file.m)?, Some(cap))?
    } else {
        let params: CodecParams = derive_params(file.m)?;
        decode(&file.digits, &params, Some(cap))?
    };
    if text {
        if let Err(e) = std::str::from_utf8(&bytes) {
            return Err(CliError::InvalidUtf8(format!(
                "decoded bytes are not valid UTF-8 at offset {}",
                e.valid_up_to()
            )));
        }
    }
    Ok(bytes)
}

fn refuse_binary_tty(io: &IoArgs) -> Result<(), CliError> {
    if io.format == StreamFileFormat::Bin
        && io.output.is_none()
        && !io.force
        && io::stdout().is_terminal()
    {
        return Err(CliError::Usage(
            "refusing to write binary output to a terminal (use --out or --force)".into(),
        ));
    }
    Ok(())
}

fn read_input(io: &IoArgs) -> Result<Vec<u8>, CliError> {
    Ok(match &io.input {
        Some(path) => fs::read(path)?,
        None => {
            let mut buf = Vec::new();
            io::stdin().lock().read_to_end(&mut buf)?;
            buf
        }
    })
}

fn write_output(io: &IoArgs, m: u64, digits: &[u64]) -> Result<(), CliError> {
    match &io.output {
        Some(path) => {
            let mut file = io::BufWriter::new(fs::File::create(path)?);
            write_stream(&mut file, io.format, m, digits)?;
            file.flush()?;
        }
        None => {
            let mut out = io::BufWriter::new(io::stdout().lock());
            write_stream(&mut out, io.format, m, digits)?;
            out.flush()?;
        }
    }
    Ok(())
}

/// Outcome of the built-in worked-example check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleReport {
    pub encoded: Vec<u64>,
    pub expected: Vec<u64>,
    pub decoded: Result<Vec<u8>, DecodeError>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.encoded == self.expected
            && self.decoded.as_deref() == Ok(&EXAMPLE_INPUT[..])
    }
}

impl std::fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |d: &[u64]| {
            d.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(f, "input:    {:?} (\"Hi\"), m = {EXAMPLE_MODULUS}", EXAMPLE_INPUT)?;
        writeln!(f, "encoded:  [{}]", join(&self.encoded))?;
        writeln!(f, "expected: [{}]", join(&self.expected))?;
        match &self.decoded {
            Ok(bytes) => writeln!(f, "decoded:  {bytes:?}")?,
            Err(e) => writeln!(f, "decoded:  error: {e}")?,
        }
        writeln!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Encodes the example, compares with `expected`, and decodes `expected`
/// back.
pub fn run_example(expected: &[u64]) -> ExampleReport {
    let params = derive_params(EXAMPLE_MODULUS).expect("50 is supported");
    let encoded = encode(&EXAMPLE_INPUT, &params).into_digits();
    let decoded = decode(expected, &params, None);
    ExampleReport {
        encoded,
        expected: expected.to_vec(),
        decoded,
    }
}
