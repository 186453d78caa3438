#![no_main]

use foursq::certify::verify_four;
use foursq::record::decode_triples;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(triples) = decode_triples(s) else { return };
    for t in triples.iter().take(16) {
        if t.a.bits() <= 256 && t.b.bits() <= 256 && t.c.bits() <= 256 {
            let _ = verify_four(&t.a, &t.b, &t.c);
        }
    }
});
