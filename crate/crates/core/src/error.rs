use thiserror::Error;

/// Rejection of a modulus that cannot carry the codec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("unsupported modulus {0}")]
    UnsupportedModulus(u64),
}

/// Failure while turning a residue stream back into bytes.
///
/// Positions are absolute offsets into the digit sequence handed to the
/// decoder.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("length prefix truncated: need {needed} digits, {available} available")]
    TruncatedLengthPrefix { needed: usize, available: usize },
    #[error("state prefix truncated: need {needed} digits, {available} available")]
    TruncatedStatePrefix { needed: usize, available: usize },
    #[error("payload exhausted at digit {position} after {decoded} of {declared} bytes")]
    PayloadExhausted {
        position: usize,
        decoded: u64,
        declared: u64,
    },
    #[error("digit {value} at position {position} is not below the modulus")]
    DigitOutOfRange { position: usize, value: u64 },
    #[error("declared length {declared} does not fit in 64 bits")]
    LengthOverflow { declared: u128 },
    #[error("declared length {declared} exceeds the cap of {cap} bytes")]
    LengthCapExceeded { declared: u64, cap: u64 },
    #[error("state header {state} lies outside the normalization window")]
    StateOutOfWindow { state: u128 },
    #[error("payload value does not fit in {declared} bytes")]
    ValueOverflow { declared: u64 },
}

/// Fieldless discriminant of [`DecodeError`], handy for matching and for
/// mapping to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecodeErrorKind {
    TruncatedLengthPrefix,
    TruncatedStatePrefix,
    PayloadExhausted,
    DigitOutOfRange,
    LengthOverflow,
    LengthCapExceeded,
    StateOutOfWindow,
    ValueOverflow,
}

impl DecodeError {
    pub fn kind(&self) -> DecodeErrorKind {
        match self {
            DecodeError::TruncatedLengthPrefix { .. } => DecodeErrorKind::TruncatedLengthPrefix,
            DecodeError::TruncatedStatePrefix { .. } => DecodeErrorKind::TruncatedStatePrefix,
            DecodeError::PayloadExhausted { .. } => DecodeErrorKind::PayloadExhausted,
            DecodeError::DigitOutOfRange { .. } => DecodeErrorKind::DigitOutOfRange,
            DecodeError::LengthOverflow { .. } => DecodeErrorKind::LengthOverflow,
            DecodeError::LengthCapExceeded { .. } => DecodeErrorKind::LengthCapExceeded,
            DecodeError::StateOutOfWindow { .. } => DecodeErrorKind::StateOutOfWindow,
            DecodeError::ValueOverflow { .. } => DecodeErrorKind::ValueOverflow,
        }
    }
}
