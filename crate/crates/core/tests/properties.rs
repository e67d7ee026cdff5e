use basem_core::payload::{
    decode_payload_into, encode_payload, renorm_decode, renorm_encode, DigitCursor,
};
use basem_core::{
    decode, decode_partial, decode_prefix, decode_text, derive_params, encode, encode_prefix,
    encode_text, oracle_decode, oracle_encode, oracle_payload_width, CodecParams, Modulus,
    OracleCodec,
};
use num_bigint::BigUint;
use proptest::prelude::*;

const MODULI: [u64; 9] = [2, 3, 13, 50, 65, 251, 257, 65537, 72057594037927935];

fn any_params() -> impl Strategy<Value = CodecParams> {
    prop_oneof![
        prop::sample::select(MODULI.to_vec()),
        2u64..=4096,
        2u64..=Modulus::MAX_SUPPORTED,
    ]
    .prop_map(|m| derive_params(m).unwrap())
}

fn bytes() -> impl Strategy<Value = Vec<u8>> {
    prop_oneof![
        prop::collection::vec(any::<u8>(), 0..64),
        prop::collection::vec(any::<u8>(), 0..2048),
        prop::collection::vec(prop::sample::select(vec![0u8, 255]), 0..256),
    ]
}

fn valid_suffix(m: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..m, 0..=64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn stream_roundtrip(p in any_params(), b in bytes()) {
        let s = encode(&b, &p);
        prop_assert!(s.digits().iter().all(|&d| d < p.m()));
        let payload = encode_payload(&b, &p);
        prop_assert_eq!(s.len(), p.header_digits() + payload.payload.len());
        let d = decode_partial(s.digits(), &p, None).unwrap();
        prop_assert_eq!(&d.bytes, &b);
        prop_assert_eq!(d.extent, s.len());
        if b.is_empty() {
            prop_assert_eq!(d.consumed, p.prefix_width());
        } else {
            prop_assert_eq!(d.consumed, s.len());
            prop_assert_eq!(d.final_state, Some(p.lower_bound()));
        }
    }

    #[test]
    fn suffix_tolerance((p, suffix) in any_params().prop_flat_map(|p| (Just(p), valid_suffix(p.m()))), b in bytes()) {
        let mut digits = encode(&b, &p).into_digits();
        digits.extend(suffix);
        prop_assert_eq!(decode(&digits, &p, None), Ok(b));
    }

    #[test]
    fn streams_are_self_delimiting(p in any_params(), a in bytes(), b in bytes()) {
        let mut digits = encode(&a, &p).into_digits();
        let first_len = digits.len();
        digits.extend(encode(&b, &p).into_digits());
        let first = decode_partial(&digits, &p, None).unwrap();
        prop_assert_eq!(first.bytes, a);
        prop_assert_eq!(first.extent, first_len);
        prop_assert_eq!(decode(&digits[first.extent..], &p, None), Ok(b));
    }

    #[test]
    fn state_window(p in any_params(), b in bytes()) {
        let r = encode_payload(&b, &p);
        if b.is_empty() {
            prop_assert_eq!(r.state, p.lower_bound());
            prop_assert!(r.payload.is_empty());
        } else {
            prop_assert!(r.state >= p.lower_bound());
            prop_assert!(u128::from(r.state) < u128::from(p.lower_bound()) * u128::from(p.m()));
        }
        prop_assert!(r.payload.iter().all(|&d| d < p.m()));
    }

    #[test]
    fn payload_decoder_ends_at_lower_bound(p in any_params(), b in prop::collection::vec(any::<u8>(), 1..512)) {
        let r = encode_payload(&b, &p);
        let mut cursor = DigitCursor::new(&r.payload, p.m());
        let mut out = Vec::new();
        let fin = decode_payload_into(r.state, &mut cursor, b.len() as u64, &p, &mut out).unwrap();
        prop_assert_eq!(out, b);
        prop_assert_eq!(fin, p.lower_bound());
        prop_assert_eq!(cursor.consumed(), r.payload.len());
    }

    #[test]
    fn prefix_roundtrip(p in any_params(), x in any::<u64>(), tail in prop::collection::vec(any::<u64>(), 0..8)) {
        let mut digits = encode_prefix(x, &p).into_vec();
        prop_assert_eq!(digits.len(), p.prefix_width());
        prop_assert!(digits.iter().all(|&d| d < p.m()));
        digits.extend(tail);
        prop_assert_eq!(decode_prefix(&digits, &p), Ok(x));
    }

    #[test]
    fn one_byte_cycle_inverts(p in any_params(), seed in any::<u64>(), b in any::<u8>()) {
        let l = p.lower_bound();
        let x = l + seed % (p.window_end() - l);
        let mut emitted = Vec::new();
        let reduced = renorm_encode(x, &p, |d| emitted.push(d));
        let updated = 256 * reduced + u64::from(b);
        prop_assert!(p.in_window(u128::from(updated)));

        prop_assert_eq!((updated % 256) as u8, b);
        emitted.reverse();
        let mut cursor = DigitCursor::new(&emitted, p.m());
        prop_assert_eq!(renorm_decode(updated / 256, &mut cursor, &p), Ok(x));
        prop_assert_eq!(cursor.consumed(), emitted.len());
    }

    #[test]
    fn text_roundtrip(p in any_params(), s in "\\PC*|[\\u{0}-\\u{10FFFF}]{0,64}") {
        let stream = encode_text(&s, &p);
        prop_assert_eq!(decode_text(stream.digits(), &p, None), Ok(s));
    }

    #[test]
    fn oracle_roundtrip_and_agreement(m in prop::sample::select(vec![2u64, 3, 13, 65, 251, 256]), b in prop::collection::vec(any::<u8>(), 0..300)) {
        let c = OracleCodec::new(m).unwrap();
        let s = oracle_encode(&b, &c);
        prop_assert_eq!(s.len(), c.params().prefix_width() + oracle_payload_width(b.len() as u64, m) as usize);
        let via_oracle = oracle_decode(s.digits(), &c, None).unwrap();
        let p = c.params();
        let via_native = decode(encode(&b, p).digits(), p, None).unwrap();
        prop_assert_eq!(&via_oracle, &b);
        prop_assert_eq!(via_native, via_oracle);
    }

    #[test]
    fn oracle_width_is_minimal(m in 2u64..=256, n in 1u64..2000) {
        let d = oracle_payload_width(n, m);
        let bytes_bound = BigUint::from(1u8) << (8 * n);
        let mb = BigUint::from(m);
        prop_assert!(mb.pow(d as u32) >= bytes_bound);
        prop_assert!(mb.pow(d as u32 - 1) < bytes_bound);
    }

    #[test]
    fn decode_never_panics(p in any_params(), raw in prop::collection::vec(any::<u64>(), 0..64), cap in prop::option::of(0u64..64)) {
        let _ = decode(&raw, &p, cap);
        let digits: Vec<u64> = raw.iter().map(|d| d % p.m()).collect();
        if let Ok(b) = decode(&digits, &p, cap) {
            if let Some(cap) = cap {
                prop_assert!(b.len() as u64 <= cap);
            }
        }
    }
}

#[test]
fn zero_length_ignores_everything_after_length() {
    for &m in &MODULI {
        let p = derive_params(m).unwrap();
        let mut digits = vec![0u64; p.prefix_width()];
        assert_eq!(decode(&digits, &p, None), Ok(vec![]));
        digits.push(u64::MAX);
        assert_eq!(decode(&digits, &p, None), Ok(vec![]));
    }
}

#[test]
fn large_inputs_roundtrip_at_every_modulus() {
    let data: Vec<u8> = (0..65536u32).map(|i| (i.wrapping_mul(2654435761) >> 13) as u8).collect();
    for &m in &MODULI {
        let p = derive_params(m).unwrap();
        let s = encode(&data, &p);
        assert_eq!(decode(s.digits(), &p, None).unwrap(), data, "m={m}");
    }
}
