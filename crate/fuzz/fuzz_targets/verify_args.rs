#![no_main]

use foursq::certify::{verify_four, VerifyOutcome};
use foursq::record::parse_int;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let args: Vec<&str> = s.split_whitespace().collect();
    let [a, b, c] = args.as_slice() else { return };
    let (Ok(a), Ok(b), Ok(c)) = (parse_int(a), parse_int(b), parse_int(c)) else { return };
    if a.bits() > 512 || b.bits() > 512 || c.bits() > 512 {
        return;
    }
    match verify_four(&a, &b, &c) {
        Ok(VerifyOutcome::Ok(cert)) => assert!(cert.witnesses(&a, &b, &c)),
        Ok(VerifyOutcome::Failed { .. }) => {}
        Err(_) => assert!(a.sign() != num_bigint::Sign::Plus
            || b.sign() != num_bigint::Sign::Plus
            || c.sign() != num_bigint::Sign::Plus),
    }
});
