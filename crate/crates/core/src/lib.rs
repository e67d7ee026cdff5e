//! Base-m-len: a canonical, self-delimiting map between byte strings and
//! streams of residues modulo `m`.
//!
//! The wire format is `len ‖ state ‖ payload`:
//!
//! * `len` is the byte length written as exactly `k` little-endian base-`m`
//!   digits, where `k` is the least exponent with `m^k ≥ 2^64`;
//! * `state` is the final state of the payload transducer, written the same way;
//! * `payload` is the FIFO digit stream emitted by an rANS-style transducer
//!   that applies the uniform byte update `x ← 256·x + b`.
//!
//! Decoding reads the two headers, then consumes exactly the digits needed to
//! rebuild the declared number of bytes. Anything after that is left unread,
//! so encoded streams can be concatenated and padded.
//!
//! ```
//! use basem_core::{decode, encode, CodecParams};
//!
//! let params = CodecParams::for_modulus(50).unwrap();
//! let stream = encode(b"Hi", &params);
//! assert_eq!(
//!     stream.digits(),
//!     &[2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
//!       12, 8, 11, 36, 6, 32, 19, 0, 38, 1, 49, 1,
//!       1, 48]
//! );
//! assert_eq!(decode(stream.digits(), &params, None).unwrap(), b"Hi");
//! ```

mod error;
pub mod oracle;
pub mod params;
pub mod payload;
pub mod prefix;
pub mod stream;
pub mod textcodec;

pub use error::{DecodeError, DecodeErrorKind, ParamsError};
pub use oracle::{oracle_decode, oracle_encode, oracle_payload_width, OracleCodec, ORACLE_MAX_MODULUS};
pub use params::{cost_report, derive_params, prefix_width, CodecParams, CostReport, Modulus};
pub use payload::{DigitCursor, DigitSource, PayloadResult};
pub use prefix::{decode_prefix, encode_prefix, PrefixDigits};
pub use stream::{
    decode, decode_partial, encode, validate_digits, Decoded, ResidueStream, DEFAULT_DECODE_CAP,
};
pub use textcodec::{decode_text, encode_text, TextDecodeError};
