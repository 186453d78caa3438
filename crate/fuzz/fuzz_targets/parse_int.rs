#![no_main]

use foursq::record::parse_int;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_int(s) {
        // canonical rendering parses back to the same value
        assert_eq!(parse_int(&v.to_string()).unwrap(), v);
    }
});
