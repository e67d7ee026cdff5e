//! The end-to-end wire format `len ‖ state ‖ payload`.

use crate::error::DecodeError;
use crate::params::{CodecParams, Modulus};
use crate::payload::{decode_payload_into, encode_payload, DigitCursor};
use crate::prefix::{decode_prefix_wide, encode_prefix_into, PrefixError};

/// Cap applied by callers that handle untrusted input and have no better
/// bound (1 GiB).
pub const DEFAULT_DECODE_CAP: u64 = 1 << 30;

/// A sequence of digits, each below its modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueStream {
    modulus: Modulus,
    digits: Vec<u64>,
}

impl ResidueStream {
    /// Wraps `digits` after checking every one against `modulus`.
    pub fn new(modulus: Modulus, digits: Vec<u64>) -> Result<Self, DecodeError> {
        if let Some(position) = digits.iter().position(|&d| d >= modulus.get()) {
            return Err(DecodeError::DigitOutOfRange {
                position,
                value: digits[position],
            });
        }
        Ok(ResidueStream { modulus, digits })
    }

    pub(crate) fn from_trusted(modulus: Modulus, digits: Vec<u64>) -> Self {
        debug_assert!(digits.iter().all(|&d| d < modulus.get()));
        ResidueStream { modulus, digits }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn into_digits(self) -> Vec<u64> {
        self.digits
    }
}

impl AsRef<[u64]> for ResidueStream {
    fn as_ref(&self) -> &[u64] {
        &self.digits
    }
}

/// Checks raw numbers against `m`, reporting the first offender.
pub fn validate_digits(raw: Vec<u64>, m: Modulus) -> Result<ResidueStream, DecodeError> {
    ResidueStream::new(m, raw)
}

/// Encodes `bytes` as `len ‖ state ‖ payload`.
///
/// The output has exactly `2k + |payload|` digits. A `&[u8]` is always
/// shorter than 2^64 bytes, so every slice is admissible.
pub fn encode(bytes: &[u8], params: &CodecParams) -> ResidueStream {
    let payload = encode_payload(bytes, params);
    let mut digits = Vec::with_capacity(params.header_digits() + payload.payload.len());
    encode_prefix_into(bytes.len() as u64, params, &mut digits);
    encode_prefix_into(payload.state, params, &mut digits);
    digits.extend_from_slice(&payload.payload);
    ResidueStream::from_trusted(params.modulus(), digits)
}

/// A successful decode together with how much of the input it used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub bytes: Vec<u8>,
    /// Digits read from the front of the input. Everything after is untouched.
    pub consumed: usize,
    /// Digits this stream occupies in canonical form. Equal to `consumed`
    /// except on the zero-length path, where the decoder stops after the
    /// length header but the encoder also wrote a `k`-digit state header.
    /// Slicing at `extent` splits concatenated streams.
    pub extent: usize,
    /// Payload decoder state after the last byte; `L` for well-formed
    /// streams, `None` on the zero-length path, which never reads a state.
    pub final_state: Option<u64>,
}

/// Decodes one stream from the front of `digits`, ignoring any trailing
/// digits.
///
/// `cap` bounds the declared length before any payload work starts; `None`
/// lets the declared length govern.
pub fn decode(
    digits: &[u64],
    params: &CodecParams,
    cap: Option<u64>,
) -> Result<Vec<u8>, DecodeError> {
    decode_partial(digits, params, cap).map(|d| d.bytes)
}

/// Like [`decode`] but also reports the number of digits consumed, so
/// concatenated streams can be split.
pub fn decode_partial(
    digits: &[u64],
    params: &CodecParams,
    cap: Option<u64>,
) -> Result<Decoded, DecodeError> {
    let k = params.prefix_width();

    let declared = decode_prefix_wide(digits, params).map_err(|e| match e {
        PrefixError::Truncated { needed, available } => {
            DecodeError::TruncatedLengthPrefix { needed, available }
        }
        PrefixError::DigitOutOfRange { position, value } => {
            DecodeError::DigitOutOfRange { position, value }
        }
        PrefixError::ValueOverflow { .. } => unreachable!("wide decode does not range-check"),
    })?;
    let declared =
        u64::try_from(declared).map_err(|_| DecodeError::LengthOverflow { declared })?;
    if let Some(cap) = cap {
        if declared > cap {
            return Err(DecodeError::LengthCapExceeded { declared, cap });
        }
    }
    if declared == 0 {
        return Ok(Decoded {
            bytes: Vec::new(),
            consumed: k,
            extent: digits.len().min(2 * k),
            final_state: None,
        });
    }

    let rest = &digits[k..];
    let state = decode_prefix_wide(rest, params).map_err(|e| match e {
        PrefixError::Truncated { needed, available } => {
            DecodeError::TruncatedStatePrefix { needed, available }
        }
        PrefixError::DigitOutOfRange { position, value } => DecodeError::DigitOutOfRange {
            position: position + k,
            value,
        },
        PrefixError::ValueOverflow { .. } => unreachable!("wide decode does not range-check"),
    })?;
    if !params.in_window(state) {
        return Err(DecodeError::StateOutOfWindow { state });
    }
    let state = state as u64;

    let payload = &digits[2 * k..];
    let mut cursor = DigitCursor::with_offset(payload, params.m(), 2 * k);
    // The decoder emits at most a handful of bytes per consumed digit, so the
    // remaining input bounds a sensible reservation even without a cap.
    let reserve = declared.min(payload.len() as u64 * 8 + 16);
    let mut bytes = Vec::with_capacity(reserve as usize);
    let final_state = decode_payload_into(state, &mut cursor, declared, params, &mut bytes)?;
    let consumed = 2 * k + cursor.consumed();
    Ok(Decoded {
        bytes,
        consumed,
        extent: consumed,
        final_state: Some(final_state),
    })
}
