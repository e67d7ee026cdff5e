//! Whole-payload big-integer radix conversion.
//!
//! This is the exact baseline the streaming codec is checked and measured
//! against. The bytes are read as one big-endian integer `B < 256^n` and
//! written as exactly `d(n)` little-endian base-m digits, where `d(n)` is the
//! least `d` with `m^d ≥ 256^n`. A length header in the same fixed-width
//! format as the main codec comes first, so leading zero bytes survive.
//!
//! Conversion time is quadratic in the input length. Only moduli up to 256
//! are accepted.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{DecodeError, ParamsError};
use crate::params::{derive_params, CodecParams};
use crate::prefix::{decode_prefix_wide, encode_prefix_into, PrefixError};
use crate::stream::ResidueStream;

pub const ORACLE_MAX_MODULUS: u64 = 256;

/// Parameters for the oracle codec: a supported modulus no larger than 256.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCodec {
    params: CodecParams,
}

impl OracleCodec {
    pub fn new(m: u64) -> Result<Self, ParamsError> {
        if m > ORACLE_MAX_MODULUS {
            return Err(ParamsError::UnsupportedModulus(m));
        }
        Ok(OracleCodec {
            params: derive_params(m)?,
        })
    }

    pub fn params(&self) -> &CodecParams {
        &self.params
    }

    pub fn m(&self) -> u64 {
        self.params.m()
    }
}

/// `d(n)`: the least `d` with `m^d ≥ 256^n`, for `2 ≤ m ≤ 256`.
pub fn oracle_payload_width(n: u64, m: u64) -> u64 {
    assert!((2..=ORACLE_MAX_MODULUS).contains(&m));
    if n == 0 {
        return 0;
    }
    let bits = 8 * u128::from(n);
    if m.is_power_of_two() {
        let per_digit = u128::from(m.trailing_zeros());
        return bits.div_ceil(per_digit) as u64;
    }
    // log2(m) is irrational here, so bits / log2(m) is never an integer and
    // the ceiling of the float estimate is right unless the estimate sits
    // within rounding error of an integer. Settle that case exactly.
    let estimate = bits as f64 / (m as f64).log2();
    let nearest = estimate.round();
    if (estimate - nearest).abs() > estimate * 1e-12 + 1e-9 {
        return estimate.ceil() as u64;
    }
    let candidate = nearest as u64;
    // m^candidate is odd-factored, never a power of two, so ≥ 2^bits iff it
    // has more than `bits` bits.
    if BigUint::from(m).pow(candidate as u32).bits() > bits as u64 {
        candidate
    } else {
        candidate + 1
    }
}

pub fn oracle_encode(bytes: &[u8], codec: &OracleCodec) -> ResidueStream {
    let params = codec.params();
    let m = params.m();
    let n = bytes.len() as u64;
    let width = oracle_payload_width(n, m) as usize;
    let mut digits = Vec::with_capacity(params.prefix_width() + width);
    encode_prefix_into(n, params, &mut digits);
    if n > 0 {
        let value = BigUint::from_bytes_be(bytes);
        let body = value.to_radix_le(m as u32);
        let start = digits.len();
        digits.extend(body.into_iter().map(u64::from));
        // to_radix_le yields [0] for zero; trim that before padding.
        if value.is_zero() {
            digits.truncate(start);
        }
        debug_assert!(digits.len() - start <= width);
        digits.resize(start + width, 0);
    }
    ResidueStream::new(params.modulus(), digits).expect("radix digits are below the modulus")
}

pub fn oracle_decode(
    digits: &[u64],
    codec: &OracleCodec,
    cap: Option<u64>,
) -> Result<Vec<u8>, DecodeError> {
    let params = codec.params();
    let m = params.m();
    let k = params.prefix_width();

    let declared = decode_prefix_wide(digits, params).map_err(|e| match e {
        PrefixError::Truncated { needed, available } => {
            DecodeError::TruncatedLengthPrefix { needed, available }
        }
        PrefixError::DigitOutOfRange { position, value } => {
            DecodeError::DigitOutOfRange { position, value }
        }
        PrefixError::ValueOverflow { .. } => unreachable!(),
    })?;
    let declared =
        u64::try_from(declared).map_err(|_| DecodeError::LengthOverflow { declared })?;
    if let Some(cap) = cap {
        if declared > cap {
            return Err(DecodeError::LengthCapExceeded { declared, cap });
        }
    }
    if declared == 0 {
        return Ok(Vec::new());
    }

    let body = &digits[k..];
    let exhausted = DecodeError::PayloadExhausted {
        position: digits.len(),
        decoded: 0,
        declared,
    };
    // With m ≤ 256 every byte needs at least one digit.
    if declared > body.len() as u64 {
        return Err(exhausted);
    }
    let width = oracle_payload_width(declared, m) as usize;
    let body = body.get(..width).ok_or(exhausted)?;
    if let Some(i) = body.iter().position(|&d| d >= m) {
        return Err(DecodeError::DigitOutOfRange {
            position: k + i,
            value: body[i],
        });
    }
    let radix_digits: Vec<u8> = body.iter().map(|&d| d as u8).collect();
    let value = BigUint::from_radix_le(&radix_digits, m as u32).expect("digits checked against m");
    if value.bits() > 8 * declared {
        return Err(DecodeError::ValueOverflow { declared });
    }
    let n = declared as usize;
    let mut out = Vec::with_capacity(n);
    if !value.is_zero() {
        let be = value.to_bytes_be();
        out.resize(n - be.len(), 0);
        out.extend_from_slice(&be);
    } else {
        out.resize(n, 0);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codec(m: u64) -> OracleCodec {
        OracleCodec::new(m).unwrap()
    }

    #[test]
    fn rejects_large_and_tiny_moduli() {
        assert_eq!(OracleCodec::new(257), Err(ParamsError::UnsupportedModulus(257)));
        assert_eq!(OracleCodec::new(1), Err(ParamsError::UnsupportedModulus(1)));
        assert!(OracleCodec::new(256).is_ok());
    }

    #[test]
    fn empty_is_prefix_only() {
        let c = codec(13);
        let s = oracle_encode(&[], &c);
        assert_eq!(s.len(), c.params().prefix_width());
        assert!(s.digits().iter().all(|&d| d == 0));
        assert_eq!(oracle_decode(s.digits(), &c, None), Ok(vec![]));
    }

    #[test]
    fn hi_in_binary() {
        let c = codec(2);
        let s = oracle_encode(&[72, 105], &c);
        let k = c.params().prefix_width();
        let mut want = vec![0u64; k];
        want[1] = 1;
        // 72·256 + 105 = 18537, 16 bits, least significant first.
        want.extend((0..16).map(|i| (18537u64 >> i) & 1));
        assert_eq!(s.digits(), want.as_slice());
        assert_eq!(oracle_decode(s.digits(), &c, None), Ok(vec![72, 105]));
    }

    #[test]
    fn leading_zero_bytes_survive() {
        let c = codec(13);
        let s = oracle_encode(&[0, 0], &c);
        let k = c.params().prefix_width();
        assert_eq!(s.len(), k + oracle_payload_width(2, 13) as usize);
        assert!(s.digits()[k..].iter().all(|&d| d == 0));
        assert_eq!(oracle_decode(s.digits(), &c, None), Ok(vec![0, 0]));
        let s = oracle_encode(&[0, 0, 1], &c);
        assert_eq!(oracle_decode(s.digits(), &c, None), Ok(vec![0, 0, 1]));
    }

    #[test]
    fn prefix_only_with_nonzero_length_is_exhausted() {
        let c = codec(13);
        let mut digits = vec![0u64; c.params().prefix_width()];
        digits[0] = 1;
        assert!(matches!(
            oracle_decode(&digits, &c, None),
            Err(DecodeError::PayloadExhausted { declared: 1, .. })
        ));
    }

    #[test]
    fn value_overflow() {
        // d(1) at m = 3 is 6 digits (3^6 = 729 ≥ 256); all-2s is 728 > 255.
        let c = codec(3);
        let k = c.params().prefix_width();
        let mut digits = vec![0u64; k];
        digits[0] = 1;
        digits.extend([2; 6]);
        assert_eq!(
            oracle_decode(&digits, &c, None),
            Err(DecodeError::ValueOverflow { declared: 1 })
        );
    }

    #[test]
    fn cap_and_range_checks() {
        let c = codec(65);
        let s = oracle_encode(b"abc", &c);
        assert_eq!(
            oracle_decode(s.digits(), &c, Some(2)),
            Err(DecodeError::LengthCapExceeded {
                declared: 3,
                cap: 2
            })
        );
        let mut bad = s.digits().to_vec();
        let last = bad.len() - 1;
        bad[last] = 65;
        assert_eq!(
            oracle_decode(&bad, &c, None),
            Err(DecodeError::DigitOutOfRange {
                position: last,
                value: 65
            })
        );
    }

    #[test]
    fn width_small_cases() {
        assert_eq!(oracle_payload_width(0, 7), 0);
        assert_eq!(oracle_payload_width(1, 2), 8);
        assert_eq!(oracle_payload_width(1, 256), 1);
        assert_eq!(oracle_payload_width(3, 16), 6);
        assert_eq!(oracle_payload_width(1, 3), 6);
        assert_eq!(oracle_payload_width(2, 13), 5);
        assert_eq!(oracle_payload_width(1, 255), 2);
    }
}
