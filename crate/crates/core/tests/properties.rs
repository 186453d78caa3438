use foursq::certify::{isqrt, perfect_square_root, verify_four, Condition, VerifyOutcome};
use foursq::family::{make_companion, make_main, poly_b, poly_c, poly_r, recurrence_r};
use foursq::sequences::{binet_exact, conic_point, pell_p, seq_a, seq_r, SeqCache, Sequence};
use foursq::symbolic::{reduce, BiPoly};
use foursq::{Int, Rat};
use num_bigint::RandBigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed};
use proptest::prelude::*;
use rand::SeedableRng;

fn int(v: i64) -> Int {
    Int::from(v)
}

#[test]
fn recurrences_hold_both_directions() {
    for (seq, k) in [(Sequence::P, 0), (Sequence::A, 0), (Sequence::R, 1)] {
        let mut cache = SeqCache::new(seq);
        for n in -50..=50i64 {
            let (prev, cur, next) = (cache.get(n - 1).clone(), cache.get(n).clone(), cache.get(n + 1).clone());
            assert_eq!(next, 4 * &cur - &prev + k, "{seq} at n={n}");
        }
    }
}

#[test]
fn p_is_odd() {
    for n in 0..=50 {
        assert_eq!(pell_p(-n), -pell_p(n));
    }
}

#[test]
fn binet_matches_recurrence() {
    for n in -50..=50 {
        let b = binet_exact(n);
        assert_eq!(b.v, pell_p(n), "n={n}");
        assert!(b.norm().is_one(), "n={n}");
    }
}

#[test]
fn conic_and_linear_forms() {
    for n in -50..=50i64 {
        let pt = conic_point(n);
        let (x, y) = (pt.x().clone(), pt.y().clone());
        let form: Int = &x * &x - 4 * &x * &y + &y * &y;
        assert!(form.is_one());
        assert_eq!(seq_a(n), &x + 2 * &y);
        assert_eq!(2 * seq_r(n), 5 * &x - 3 * &y - 1);
        assert_eq!(seq_a(n + 1), 6 * &x - &y);
        assert_eq!(seq_a(n - 1), 9 * &y - 2 * &x);
        assert_eq!(2 * seq_r(n - 1), 3 * &x - 7 * &y - 1);
        assert_ne!(x.is_even(), y.is_even(), "parity at n={n}");
    }
}

#[test]
fn main_family_invariants() {
    for n in -8..=8 {
        let t = make_main(n);
        assert!(t.check_invariants(), "n={n}");
        let pt = conic_point(n);
        let (b, c, r) = (poly_b(&pt).unwrap(), poly_c(&pt).unwrap(), poly_r(&pt).unwrap());
        assert_eq!(&c - &b, &t.a + 2 * &r);
        assert_eq!(&t.a * &b, &r * &r - 1);
        if t.admissible {
            let outcome = verify_four(&t.a, &t.b, &t.c).unwrap();
            assert_eq!(outcome.certificate().unwrap().r_abc, *t.s.as_ref().unwrap());
        }
    }
    for n in 0..=8 {
        assert_eq!(poly_r(&conic_point(n)).unwrap(), recurrence_r(n), "n={n}");
    }
}

#[test]
fn companion_family_is_square_on_sampled_range() {
    for n in 1..=6 {
        let t = make_companion(n).unwrap();
        assert!(t.admissible && t.s.is_some() && t.check_invariants(), "n={n}");
    }
    for n in -8..=0 {
        // divisibility holds on the negative side as well
        assert!(make_companion(n).unwrap().check_invariants(), "n={n}");
    }
}

#[test]
fn isqrt_on_random_256_bit_values() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let v: Int = rng.gen_biguint(256).into();
        let r = isqrt(&v).unwrap();
        assert!(&r * &r <= v && (&r + 1) * (&r + 1) > v);
        // independent path
        assert_eq!(r, v.sqrt());
        let sq = &v * &v;
        assert_eq!(perfect_square_root(&sq), Some(v.clone()));
        if v.is_positive() {
            assert_eq!(perfect_square_root(&(sq + 1)), None);
        }
    }
}

/// Four conditions without masks, via the library's generic integer root.
fn reference_verify(a: u64, b: u64, c: u64) -> Option<Condition> {
    let sq = |v: u128| v.sqrt() * v.sqrt() == v;
    let (a, b, c) = (a as u128, b as u128, c as u128);
    [
        (Condition::Ab, a * b + 1),
        (Condition::Ac, a * c + 1),
        (Condition::Bc, b * c + 1),
        (Condition::Abc, a * b * c + 1),
    ]
    .into_iter()
    .find(|(_, v)| !sq(*v))
    .map(|(k, _)| k)
}

fn arb_poly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec((0u32..=4, 0u32..=4, -9i64..=9), 0..8).prop_map(|terms| {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            if i + j <= 4 {
                p.add_term((i, j), Rat::from_integer(c.into()));
            }
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn verify_agrees_with_reference(a in 1u64..3000, b in 1u64..3000, c in 1u64..3000) {
        let got = verify_four(&int(a as i64), &int(b as i64), &int(c as i64)).unwrap();
        let want = reference_verify(a, b, c);
        match got {
            VerifyOutcome::Ok(cert) => {
                prop_assert_eq!(want, None);
                prop_assert!(cert.witnesses(&int(a as i64), &int(b as i64), &int(c as i64)));
            }
            VerifyOutcome::Failed { condition, .. } => prop_assert_eq!(want, Some(condition)),
        }
    }

    #[test]
    fn verify_agrees_on_regular_triples(a in 1u64..2000, k in 1u64..2000) {
        // ab+1 square by construction: b = a*k^2 + 2k
        let b = a * k * k + 2 * k;
        let (c, _) = foursq::family::regular_complete(&int(a as i64), &int(b as i64)).unwrap();
        let c = u64::try_from(c).unwrap();
        let got = verify_four(&int(a as i64), &int(b as i64), &int(c as i64)).unwrap();
        let want = reference_verify(a, b, c);
        prop_assert_eq!(got.is_ok(), want.is_none());
        if let VerifyOutcome::Failed { condition, .. } = got {
            prop_assert_eq!(Some(condition), want);
        }
    }

    #[test]
    fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!((&p * &q) * &r, &p * (&q * &r));
        prop_assert_eq!(&p * (&q + &r), &p * &q + &p * &r);
        prop_assert_eq!((&p + &q) + &r, &p + (&q + &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn reduce_is_idempotent(p in arb_poly()) {
        let nf = reduce(&p);
        prop_assert_eq!(reduce(&nf.lift()), nf);
    }

    #[test]
    fn reduce_is_a_homomorphism(p in arb_poly(), q in arb_poly()) {
        let lhs = reduce(&(&p * &q));
        let rhs = reduce(&(reduce(&p).lift() * reduce(&q).lift()));
        prop_assert_eq!(lhs, rhs);
        let sum = reduce(&(&p + &q));
        prop_assert_eq!(sum, reduce(&(reduce(&p).lift() + reduce(&q).lift())));
    }

    #[test]
    fn reduce_preserves_values_on_the_conic(p in arb_poly(), n in -6i64..=6) {
        let pt = conic_point(n);
        prop_assert_eq!(p.eval(pt.x(), pt.y()), reduce(&p).eval(pt.x(), pt.y()));
    }

    #[test]
    fn sequence_cache_matches_fresh_evaluation(ns in proptest::collection::vec(-200i64..200, 1..20)) {
        let mut cache = SeqCache::new(Sequence::A);
        for n in ns {
            prop_assert_eq!(cache.get(n).clone(), seq_a(n));
        }
    }
}

#[test]
fn fifth_power_of_the_form() {
    let hom = foursq::symbolic::conic_form();
    let p = hom.pow(5);
    assert_eq!(p.total_degree(), Some(10));
    assert!(p.coeff(10, 0).is_one());
    assert!(p.is_homogeneous());
    // multinomial oracle: coefficient of x^i y^(10-i) in (x^2 - 4xy + y^2)^5
    let fact = |n: i64| (1..=n).product::<i64>();
    let mut expansion_terms = 0;
    for i in 0..=10i64 {
        let mut want = 0i64;
        for k1 in 0..=5i64 {
            for k2 in 0..=5 - k1 {
                let k3 = 5 - k1 - k2;
                if 2 * k1 + k2 == i {
                    expansion_terms += 1;
                    let m = fact(5) / (fact(k1) * fact(k2) * fact(k3));
                    want += m * (-4i64).pow(k2 as u32);
                }
            }
        }
        let got = p.coeff(i as u32, (10 - i) as u32);
        assert_eq!(got, Rat::from_integer(want.into()), "x^{i}");
    }
    // 21 multinomial terms collect onto the 11 monomials of degree 10
    assert_eq!(expansion_terms, 21);
    assert_eq!(p.len(), 11);
}
