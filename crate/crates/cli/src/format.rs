//! On-disk representations of residue streams.
//!
//! * `dec`: decimal digits separated by whitespace and/or commas. Carries no
//!   modulus; the caller supplies it.
//! * `json`: `{"m": <modulus>, "digits": [...]}`.
//! * `bin`: `"BML1"`, `m` as u64 LE, digit count as u64 LE, then each digit
//!   as `w(m)` little-endian bytes, where `w(m)` is the least `w ≥ 1` with
//!   `256^w ≥ m`.
//!
//! Every reader checks each digit against the modulus.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const BIN_MAGIC: &[u8; 4] = b"BML1";
const BIN_HEADER_LEN: usize = 4 + 8 + 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum StreamFileFormat {
    #[default]
    Dec,
    Json,
    Bin,
}

impl StreamFileFormat {
    pub fn carries_modulus(self) -> bool {
        !matches!(self, StreamFileFormat::Dec)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("malformed {format} stream: {reason}")]
    Malformed {
        format: &'static str,
        reason: String,
    },
    #[error("a modulus is required to read a dec stream")]
    MissingModulus,
    #[error("stream file declares modulus {found} but {expected} was requested")]
    ModulusMismatch { expected: u64, found: u64 },
    #[error("digit {value} at position {position} is not below the modulus {modulus}")]
    DigitOutOfRange {
        position: usize,
        value: u64,
        modulus: u64,
    },
}

/// A deserialized stream: modulus plus digits, all below it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreamFile {
    pub m: u64,
    pub digits: Vec<u64>,
}

/// Bytes per digit in the `bin` layout.
pub fn digit_width(m: u64) -> usize {
    let mut width = 1;
    while width < 8 && (1u128 << (8 * width)) < u128::from(m) {
        width += 1;
    }
    width
}

pub fn write_stream(
    out: &mut impl Write,
    format: StreamFileFormat,
    m: u64,
    digits: &[u64],
) -> io::Result<()> {
    match format {
        StreamFileFormat::Dec => {
            let mut line = String::with_capacity(digits.len() * 4);
            for (i, d) in digits.iter().enumerate() {
                if i > 0 {
                    line.push(' ');
                }
                line.push_str(&d.to_string());
            }
            line.push('\n');
            out.write_all(line.as_bytes())
        }
        StreamFileFormat::Json => {
            let file = StreamFileRef { m, digits };
            serde_json::to_writer(&mut *out, &file)?;
            out.write_all(b"\n")
        }
        StreamFileFormat::Bin => out.write_all(&to_bin(m, digits)),
    }
}

#[derive(Serialize)]
struct StreamFileRef<'a> {
    m: u64,
    digits: &'a [u64],
}

pub fn to_bin(m: u64, digits: &[u64]) -> Vec<u8> {
    let width = digit_width(m);
    let mut buf = Vec::with_capacity(BIN_HEADER_LEN + width * digits.len());
    buf.extend_from_slice(BIN_MAGIC);
    buf.extend_from_slice(&m.to_le_bytes());
    buf.extend_from_slice(&(digits.len() as u64).to_le_bytes());
    for d in digits {
        buf.extend_from_slice(&d.to_le_bytes()[..width]);
    }
    buf
}

/// Parses `input` in `format`. `modulus` is required for `dec`; for the
/// self-describing formats it must match the file when given.
pub fn read_stream(
    input: &[u8],
    format: StreamFileFormat,
    modulus: Option<u64>,
) -> Result<StreamFile, FormatError> {
    let file = match format {
        StreamFileFormat::Dec => {
            let m = modulus.ok_or(FormatError::MissingModulus)?;
            StreamFile {
                m,
                digits: parse_dec(input)?,
            }
        }
        StreamFileFormat::Json => {
            serde_json::from_slice::<StreamFile>(input).map_err(|e| FormatError::Malformed {
                format: "json",
                reason: e.to_string(),
            })?
        }
        StreamFileFormat::Bin => parse_bin(input)?,
    };
    if let Some(expected) = modulus {
        if expected != file.m {
            return Err(FormatError::ModulusMismatch {
                expected,
                found: file.m,
            });
        }
    }
    if let Some(position) = file.digits.iter().position(|&d| d >= file.m) {
        return Err(FormatError::DigitOutOfRange {
            position,
            value: file.digits[position],
            modulus: file.m,
        });
    }
    Ok(file)
}

fn parse_dec(input: &[u8]) -> Result<Vec<u64>, FormatError> {
    let malformed = |reason: String| FormatError::Malformed {
        format: "dec",
        reason,
    };
    let text = std::str::from_utf8(input).map_err(|e| malformed(e.to_string()))?;
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|e| malformed(format!("token `{tok}`: {e}")))
        })
        .collect()
}

fn parse_bin(input: &[u8]) -> Result<StreamFile, FormatError> {
    let malformed = |reason: String| FormatError::Malformed {
        format: "bin",
        reason,
    };
    if input.len() < BIN_HEADER_LEN {
        return Err(malformed(format!("{} bytes is shorter than the header", input.len())));
    }
    if &input[..4] != BIN_MAGIC {
        return Err(malformed("bad magic".into()));
    }
    let m = u64::from_le_bytes(input[4..12].try_into().unwrap());
    let count = u64::from_le_bytes(input[12..20].try_into().unwrap());
    let width = digit_width(m);
    let body = &input[BIN_HEADER_LEN..];
    let expected = u128::from(count) * width as u128;
    if expected != body.len() as u128 {
        return Err(malformed(format!(
            "{count} digits of {width} bytes need {expected} body bytes, found {}",
            body.len()
        )));
    }
    let digits = body
        .chunks_exact(width)
        .map(|chunk| {
            let mut le = [0u8; 8];
            le[..width].copy_from_slice(chunk);
            u64::from_le_bytes(le)
        })
        .collect();
    Ok(StreamFile { m, digits })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_widths() {
        assert_eq!(digit_width(2), 1);
        assert_eq!(digit_width(256), 1);
        assert_eq!(digit_width(257), 2);
        assert_eq!(digit_width(65536), 2);
        assert_eq!(digit_width(65537), 3);
        assert_eq!(digit_width(72057594037927935), 7);
    }

    #[test]
    fn dec_accepts_commas_and_whitespace() {
        let f = read_stream(b" 1,2\n3 ,, 4\t5\n", StreamFileFormat::Dec, Some(10)).unwrap();
        assert_eq!(f.digits, vec![1, 2, 3, 4, 5]);
        assert_eq!(
            read_stream(b"", StreamFileFormat::Dec, Some(10)).unwrap().digits,
            Vec::<u64>::new()
        );
    }

    #[test]
    fn dec_errors() {
        assert_eq!(
            read_stream(b"1 2", StreamFileFormat::Dec, None),
            Err(FormatError::MissingModulus)
        );
        assert!(matches!(
            read_stream(b"1 x", StreamFileFormat::Dec, Some(10)),
            Err(FormatError::Malformed { .. })
        ));
        assert!(matches!(
            read_stream(b"-1", StreamFileFormat::Dec, Some(10)),
            Err(FormatError::Malformed { .. })
        ));
        assert_eq!(
            read_stream(b"1 10", StreamFileFormat::Dec, Some(10)),
            Err(FormatError::DigitOutOfRange {
                position: 1,
                value: 10,
                modulus: 10
            })
        );
    }

    #[test]
    fn json_shape() {
        let mut out = Vec::new();
        write_stream(&mut out, StreamFileFormat::Json, 50, &[1, 48]).unwrap();
        assert_eq!(out, b"{\"m\":50,\"digits\":[1,48]}\n");
        let f = read_stream(&out, StreamFileFormat::Json, None).unwrap();
        assert_eq!(f, StreamFile { m: 50, digits: vec![1, 48] });
        assert_eq!(
            read_stream(&out, StreamFileFormat::Json, Some(51)),
            Err(FormatError::ModulusMismatch {
                expected: 51,
                found: 50
            })
        );
    }

    #[test]
    fn bin_layout() {
        let b = to_bin(257, &[256, 1]);
        let mut want = b"BML1".to_vec();
        want.extend_from_slice(&257u64.to_le_bytes());
        want.extend_from_slice(&2u64.to_le_bytes());
        want.extend_from_slice(&[0x00, 0x01, 0x01, 0x00]);
        assert_eq!(b, want);
        assert_eq!(
            read_stream(&b, StreamFileFormat::Bin, None).unwrap().digits,
            vec![256, 1]
        );
    }

    #[test]
    fn bin_rejects_bad_input() {
        let good = to_bin(50, &[1, 2, 3]);
        assert!(matches!(
            read_stream(&good[..10], StreamFileFormat::Bin, None),
            Err(FormatError::Malformed { .. })
        ));
        let mut bad_magic = good.clone();
        bad_magic[0] = b'X';
        assert!(read_stream(&bad_magic, StreamFileFormat::Bin, None).is_err());
        let mut extra = good.clone();
        extra.push(0);
        assert!(read_stream(&extra, StreamFileFormat::Bin, None).is_err());
        assert!(read_stream(&good[..good.len() - 1], StreamFileFormat::Bin, None).is_err());
        let mut huge_count = good.clone();
        huge_count[12..20].copy_from_slice(&u64::MAX.to_le_bytes());
        assert!(read_stream(&huge_count, StreamFileFormat::Bin, None).is_err());
        let out_of_range = to_bin(50, &[1, 50]);
        assert!(matches!(
            read_stream(&out_of_range, StreamFileFormat::Bin, None),
            Err(FormatError::DigitOutOfRange { position: 1, .. })
        ));
    }
}
