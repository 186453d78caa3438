#![no_main]

use foursq::certify::{isqrt, may_be_square, perfect_square_root};
use foursq::Int;
use libfuzzer_sys::fuzz_target;
use num_bigint::Sign;

fuzz_target!(|data: &[u8]| {
    let v = Int::from_bytes_be(Sign::Plus, data);
    let r = isqrt(&v).unwrap();
    assert!(&r * &r <= v && (&r + 1u32) * (&r + 1u32) > v);
    let exact = &r * &r == v;
    assert_eq!(perfect_square_root(&v), exact.then(|| r.clone()));
    if exact {
        assert!(may_be_square(&v));
    }
    assert!(isqrt(&-(&v + 1u32)).is_err());
});
