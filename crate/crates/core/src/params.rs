//! Per-modulus codec constants.
//!
//! For a modulus `m` the codec needs three numbers:
//!
//! * `k`, the prefix width: the least `j` with `m^j ≥ 2^64`;
//! * `L`, the decoder lower bound: `256 · ⌊(2^64 − 1) / (256·m)⌋`;
//! * `T`, the encoder threshold: `(L / 256) · m`.
//!
//! `L` is a multiple of 256, so `T` is exact and `T · 256 = L · m`. The
//! normalization window is `[L, L·m)` and `L·m ≤ 2^64 − 1`, so every payload
//! state fits in a `u64`. A modulus is supported exactly when `m ≥ 2` and
//! `L ≥ 256`, i.e. `2 ≤ m ≤ ⌊(2^64 − 1) / 256⌋`.

use crate::error::ParamsError;

const TWO_POW_64: u128 = 1 << 64;

/// A residue alphabet size, `m ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u64);

impl Modulus {
    /// Largest modulus with a decoder lower bound of at least 256.
    pub const MAX_SUPPORTED: u64 = (u64::MAX) / 256;

    pub fn new(m: u64) -> Result<Self, ParamsError> {
        if m < 2 {
            return Err(ParamsError::UnsupportedModulus(m));
        }
        Ok(Modulus(m))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Modulus {
    type Error = ParamsError;

    fn try_from(m: u64) -> Result<Self, Self::Error> {
        Modulus::new(m)
    }
}

impl std::fmt::Display for Modulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Derived constants for one supported modulus.
///
/// Construction goes through [`derive_params`] (or
/// [`CodecParams::for_modulus`]), so every value of this type satisfies:
/// `m^k ≥ 2^64 > m^(k−1)`, `256 | L`, `L ≥ 256`, `L·m ≤ 2^64 − 1` and
/// `T·256 = L·m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodecParams {
    modulus: Modulus,
    prefix_width: usize,
    lower_bound: u64,
    threshold: u64,
}

impl CodecParams {
    pub fn new(modulus: Modulus) -> Result<Self, ParamsError> {
        let m = modulus.get();
        let lower_bound = decoder_lower_bound(m);
        if lower_bound < 256 {
            return Err(ParamsError::UnsupportedModulus(m));
        }
        let threshold = (lower_bound / 256) * m;
        Ok(CodecParams {
            modulus,
            prefix_width: prefix_width(modulus),
            lower_bound,
            threshold,
        })
    }

    pub fn for_modulus(m: u64) -> Result<Self, ParamsError> {
        derive_params(m)
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn m(&self) -> u64 {
        self.modulus.0
    }

    /// Digits per header (`k`).
    #[inline]
    pub fn prefix_width(&self) -> usize {
        self.prefix_width
    }

    /// Total header digits, `2k`.
    #[inline]
    pub fn header_digits(&self) -> usize {
        2 * self.prefix_width
    }

    /// `L`: bottom of the normalization window and the encoder's initial state.
    #[inline]
    pub fn lower_bound(&self) -> u64 {
        self.lower_bound
    }

    /// `T`: the encoder renormalizes until the state is below this.
    #[inline]
    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    /// `L·m`, the exclusive top of the normalization window.
    #[inline]
    pub fn window_end(&self) -> u64 {
        // L·m ≤ 2^64 − 1 by construction of L.
        self.lower_bound * self.modulus.0
    }

    /// Whether `x` lies in `[L, L·m)`.
    #[inline]
    pub fn in_window(&self, x: u128) -> bool {
        x >= u128::from(self.lower_bound) && x < u128::from(self.window_end())
    }
}

/// Checks `m` and derives its [`CodecParams`].
pub fn derive_params(m: u64) -> Result<CodecParams, ParamsError> {
    CodecParams::new(Modulus::new(m)?)
}

fn decoder_lower_bound(m: u64) -> u64 {
    let step = 256 * u128::from(m);
    // The quotient is at most (2^64 − 1) / 512, so the product stays below 2^64.
    (256 * (u128::from(u64::MAX) / step)) as u64
}

/// Least `j` with `m^j ≥ 2^64`, by exact integer search.
pub fn prefix_width(m: Modulus) -> usize {
    let m = u128::from(m.get());
    let mut power: u128 = 1;
    let mut width = 0;
    // power < 2^64 and m < 2^64 keep power·m below 2^128.
    while power < TWO_POW_64 {
        power *= m;
        width += 1;
    }
    width
}

/// Expansion cost of a modulus: asymptotic payload digits per byte and the
/// fixed header size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostReport {
    /// `log_m 256`. Informational only; nothing in the codec depends on it.
    pub payload_rate: f64,
    pub header_digits: usize,
}

pub fn cost_report(m: u64) -> Result<CostReport, ParamsError> {
    let params = derive_params(m)?;
    Ok(CostReport {
        payload_rate: 256f64.ln() / (m as f64).ln(),
        header_digits: params.header_digits(),
    })
}
