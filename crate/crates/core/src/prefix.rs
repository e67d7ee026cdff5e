//! Fixed-width little-endian base-m headers.
//!
//! Every value below 2^64 is written as exactly `k` digits, least significant
//! first. Because `m^k` can exceed 2^64, some digit strings decode to values
//! in `[2^64, m^k)`; those are rejected.

use thiserror::Error;

use crate::params::CodecParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PrefixError {
    #[error("prefix needs {needed} digits, {available} available")]
    Truncated { needed: usize, available: usize },
    #[error("digit {value} at position {position} is not below the modulus")]
    DigitOutOfRange { position: usize, value: u64 },
    #[error("prefix value {value} does not fit in 64 bits")]
    ValueOverflow { value: u128 },
}

/// Exactly `k` base-m digits, least significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrefixDigits(Vec<u64>);

impl PrefixDigits {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl AsRef<[u64]> for PrefixDigits {
    fn as_ref(&self) -> &[u64] {
        &self.0
    }
}

pub fn encode_prefix(x: u64, params: &CodecParams) -> PrefixDigits {
    let mut digits = Vec::with_capacity(params.prefix_width());
    encode_prefix_into(x, params, &mut digits);
    PrefixDigits(digits)
}

/// Appends the `k` header digits of `x` to `out`.
pub(crate) fn encode_prefix_into(mut x: u64, params: &CodecParams, out: &mut Vec<u64>) {
    let m = params.m();
    for _ in 0..params.prefix_width() {
        out.push(x % m);
        x /= m;
    }
    debug_assert_eq!(x, 0);
}

/// Reads the first `k` digits of `digits` as a header value.
///
/// Digits past the first `k` are never looked at.
pub fn decode_prefix(digits: &[u64], params: &CodecParams) -> Result<u64, PrefixError> {
    let value = decode_prefix_wide(digits, params)?;
    u64::try_from(value).map_err(|_| PrefixError::ValueOverflow { value })
}

/// Like [`decode_prefix`] but returns values up to `m^k − 1` without the
/// 64-bit check. `m^k < 2^64 · m < 2^128`, so the result always fits.
pub(crate) fn decode_prefix_wide(digits: &[u64], params: &CodecParams) -> Result<u128, PrefixError> {
    let k = params.prefix_width();
    let head = digits.get(..k).ok_or(PrefixError::Truncated {
        needed: k,
        available: digits.len(),
    })?;
    let m = params.m();
    if let Some(position) = head.iter().position(|&d| d >= m) {
        return Err(PrefixError::DigitOutOfRange {
            position,
            value: head[position],
        });
    }
    let m = u128::from(m);
    Ok(head
        .iter()
        .rev()
        .fold(0u128, |acc, &d| acc * m + u128::from(d)))
}
