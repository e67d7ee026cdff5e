//! UTF-8 text on top of the byte codec. No normalization is applied; the
//! exact UTF-8 bytes roundtrip.

use thiserror::Error;

use crate::error::DecodeError;
use crate::params::CodecParams;
use crate::stream::{decode, encode, ResidueStream};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextDecodeError {
    #[error(transparent)]
    Decode(#[from] DecodeError),
    /// The residue layer succeeded but the bytes are not UTF-8.
    #[error("decoded bytes are not valid UTF-8 (first bad byte at offset {offset})")]
    InvalidUtf8 { offset: usize },
}

pub fn encode_text(text: &str, params: &CodecParams) -> ResidueStream {
    encode(text.as_bytes(), params)
}

pub fn decode_text(
    digits: &[u64],
    params: &CodecParams,
    cap: Option<u64>,
) -> Result<String, TextDecodeError> {
    let bytes = decode(digits, params, cap)?;
    String::from_utf8(bytes).map_err(|e| TextDecodeError::InvalidUtf8 {
        offset: e.utf8_error().valid_up_to(),
    })
}
