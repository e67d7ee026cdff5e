//! Deterministic benchmark inputs.

use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

/// `len` uniform bytes from `seed`. Equal seeds give equal prefixes, so all
/// moduli at one size see the same data.
pub fn random_bytes(seed: u64, len: usize) -> Vec<u8> {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut buf = vec![0u8; len];
    rng.fill_bytes(&mut buf);
    buf
}

// One sample pool per UTF-8 sequence length.
const ASCII: &str = "The quick brown fox jumps over the lazy dog 0123456789,.;:!?\n";
const TWO_BYTE: &str = "éèàçñöüßøåæœÀÉÎÕÜЖЗИЙКЛМНОПРСТУФХЦЧШЩαβγδεζηθ";
const THREE_BYTE: &str = "漢字かなカナ한국어中文日本語€₴№∑∞≈≠≤≥";
const FOUR_BYTE: &str = "🦀😀🚀🎉🌍𝔘𝔫𝔦𝔠𝔬𝔡𝔢𐍈";

/// Mixed-script UTF-8 text of exactly `len` bytes: mostly ASCII with a
/// spread of 2-, 3- and 4-byte scalars.
pub fn mixed_utf8(seed: u64, len: usize) -> String {
    let pools: [Vec<char>; 4] = [
        ASCII.chars().collect(),
        TWO_BYTE.chars().collect(),
        THREE_BYTE.chars().collect(),
        FOUR_BYTE.chars().collect(),
    ];
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed ^ 0x7E47);
    let mut out = String::with_capacity(len);
    while out.len() < len {
        let pool = match rng.gen_range(0..100) {
            0..=54 => &pools[0],
            55..=74 => &pools[1],
            75..=91 => &pools[2],
            _ => &pools[3],
        };
        let mut c = pool[rng.gen_range(0..pool.len())];
        if out.len() + c.len_utf8() > len {
            c = pools[0][rng.gen_range(0..pools[0].len())];
        }
        out.push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_are_exact() {
        for len in [0, 1, 3, 32, 1024, 65536] {
            assert_eq!(random_bytes(7, len).len(), len);
            assert_eq!(mixed_utf8(7, len).len(), len);
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_bytes(1, 100), random_bytes(1, 100));
        assert_ne!(random_bytes(1, 100), random_bytes(2, 100));
        assert_eq!(mixed_utf8(9, 4096), mixed_utf8(9, 4096));
    }

    #[test]
    fn text_is_actually_mixed() {
        let s = mixed_utf8(3, 4096);
        let mut by_len = [0usize; 5];
        for c in s.chars() {
            by_len[c.len_utf8()] += 1;
        }
        assert!(by_len[1..].iter().all(|&n| n > 0), "{by_len:?}");
    }
}
