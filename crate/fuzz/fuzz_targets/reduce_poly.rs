#![no_main]

use foursq::sequences::conic_point;
use foursq::symbolic::{reduce, BiPoly};
use foursq::Rat;
use libfuzzer_sys::fuzz_target;

// Each 4-byte chunk is one term: x exponent, y exponent, numerator, denominator.
fuzz_target!(|data: &[u8]| {
    let mut p = BiPoly::zero();
    for t in data.chunks_exact(4).take(32) {
        let (i, j) = (u32::from(t[0] % 12), u32::from(t[1] % 12));
        let den = i64::from(t[3] % 7) + 1;
        p.add_term((i, j), Rat::new(i64::from(t[2] as i8).into(), den.into()));
    }
    let nf = reduce(&p);
    assert_eq!(reduce(&nf.lift()), nf);
    for n in [-3, 0, 2] {
        let pt = conic_point(n);
        assert_eq!(p.eval(pt.x(), pt.y()), nf.eval(pt.x(), pt.y()));
    }
});
