//! The uniform base-m payload transducer.
//!
//! The encoder walks the bytes from last to first. Before each byte it emits
//! base-m digits (low digit first) while the state is at or above the
//! threshold `T`, then applies `x ← 256·x + b`. Starting from `x = L`, this
//! keeps every post-update state in `[L, L·m)` and every post-renormalization
//! state in `[L/256, T)`. The emitted digits are reversed once at the end so
//! the decoder reads them front to back.
//!
//! The decoder runs the same machine backwards: output `x mod 256`, divide by
//! 256, then pull digits with `x ← x·m + d` while `x < L`. It renormalizes
//! after every byte, including the last, so a full decode ends with `x = L`
//! having consumed exactly the encoder's digits.

use crate::error::DecodeError;
use crate::params::CodecParams;

/// Why a [`DigitSource`] could not produce a digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReadError {
    Exhausted { position: usize },
    OutOfRange { position: usize, value: u64 },
}

/// A sequential supply of base-m digits.
pub trait DigitSource {
    fn next_digit(&mut self) -> Result<u64, ReadError>;
}

/// Reads digits from a slice, checking each one against the modulus as it is
/// consumed. Unread digits are never inspected.
#[derive(Debug, Clone)]
pub struct DigitCursor<'a> {
    digits: &'a [u64],
    pos: usize,
    offset: usize,
    modulus: u64,
}

impl<'a> DigitCursor<'a> {
    pub fn new(digits: &'a [u64], modulus: u64) -> Self {
        Self::with_offset(digits, modulus, 0)
    }

    /// `offset` is added to reported positions, for cursors over the tail of
    /// a longer stream.
    pub fn with_offset(digits: &'a [u64], modulus: u64, offset: usize) -> Self {
        DigitCursor {
            digits,
            pos: 0,
            offset,
            modulus,
        }
    }

    /// Digits consumed so far.
    pub fn consumed(&self) -> usize {
        self.pos
    }

    /// Absolute position of the next digit.
    pub fn position(&self) -> usize {
        self.offset + self.pos
    }

    pub fn remaining(&self) -> &'a [u64] {
        &self.digits[self.pos..]
    }
}

impl DigitSource for DigitCursor<'_> {
    #[inline]
    fn next_digit(&mut self) -> Result<u64, ReadError> {
        let position = self.offset + self.pos;
        let &value = self
            .digits
            .get(self.pos)
            .ok_or(ReadError::Exhausted { position })?;
        if value >= self.modulus {
            return Err(ReadError::OutOfRange { position, value });
        }
        self.pos += 1;
        Ok(value)
    }
}

/// Final encoder state and the payload digits in FIFO order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PayloadResult {
    pub state: u64,
    pub payload: Vec<u64>,
}

/// Emits `x mod m` and divides while `x ≥ T`; returns the reduced state.
#[inline]
pub fn renorm_encode(mut x: u64, params: &CodecParams, mut sink: impl FnMut(u64)) -> u64 {
    let m = params.m();
    let threshold = params.threshold();
    while x >= threshold {
        sink(x % m);
        x /= m;
    }
    x
}

/// Pulls digits with `x ← x·m + d` while `x < L`.
///
/// Only multiplies when `x < L`, and `L·m ≤ 2^64 − 1`, so this cannot
/// overflow for any starting `x`.
#[inline]
pub fn renorm_decode(
    mut x: u64,
    reader: &mut impl DigitSource,
    params: &CodecParams,
) -> Result<u64, ReadError> {
    let m = params.m();
    let lower = params.lower_bound();
    while x < lower {
        let d = reader.next_digit()?;
        x = x * m + d;
    }
    Ok(x)
}

pub fn encode_payload(bytes: &[u8], params: &CodecParams) -> PayloadResult {
    let mut payload = Vec::with_capacity(payload_capacity_hint(bytes.len(), params.m()));
    let mut x = params.lower_bound();
    for &b in bytes.iter().rev() {
        x = renorm_encode(x, params, |d| payload.push(d));
        debug_assert!(x >= params.lower_bound() / 256 && x < params.threshold());
        // x < T gives 256·x + b ≤ L·m − 1.
        x = 256 * x + u64::from(b);
        debug_assert!(params.in_window(u128::from(x)));
    }
    payload.reverse();
    PayloadResult { state: x, payload }
}

fn payload_capacity_hint(len: usize, m: u64) -> usize {
    let rate = 8.0 / (m as f64).log2();
    (len as f64 * rate) as usize + 2
}

/// Rebuilds `count` bytes from `state`, reading payload digits from `reader`.
///
/// Digits beyond those needed are left in the reader.
pub fn decode_payload(
    state: u64,
    reader: &mut impl DigitSource,
    count: u64,
    params: &CodecParams,
) -> Result<Vec<u8>, DecodeError> {
    let mut out = Vec::new();
    decode_payload_into(state, reader, count, params, &mut out)?;
    Ok(out)
}

/// Appends `count` decoded bytes to `out` and returns the decoder's final
/// internal state, which is `L` for any well-formed stream.
pub fn decode_payload_into(
    state: u64,
    reader: &mut impl DigitSource,
    count: u64,
    params: &CodecParams,
    out: &mut Vec<u8>,
) -> Result<u64, DecodeError> {
    if !params.in_window(u128::from(state)) {
        return Err(DecodeError::StateOutOfWindow {
            state: u128::from(state),
        });
    }
    let mut x = state;
    for produced in 0..count {
        out.push(x as u8);
        x = renorm_decode(x >> 8, reader, params).map_err(|e| match e {
            ReadError::Exhausted { position } => DecodeError::PayloadExhausted {
                position,
                decoded: produced,
                declared: count,
            },
            ReadError::OutOfRange { position, value } => {
                DecodeError::DigitOutOfRange { position, value }
            }
        })?;
        debug_assert!(params.in_window(u128::from(x)));
    }
    Ok(x)
}
