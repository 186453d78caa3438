//! Exact square testing and the four-condition check.

use std::fmt;

use num_bigint::Sign;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::record::decimal;
use crate::{Error, Int, Result};

const fn residue_mask(m: u32) -> u128 {
    let mut mask = 0u128;
    let mut i = 0;
    while i < m {
        mask |= 1u128 << ((i * i) % m);
        i += 1;
    }
    mask
}

/// Quadratic residues mod 64, 63, 65 and 11 as bitsets (bit `k` set iff `k` is a square).
pub const QR_MODULI: [u32; 4] = [64, 63, 65, 11];
pub const QR_MASKS: [u128; 4] =
    [residue_mask(64), residue_mask(63), residue_mask(65), residue_mask(11)];

// 63 * 65 * 11
const QR_COMBINED: u32 = 45045;

#[inline]
fn residues_pass(low64: u32, r45045: u32) -> bool {
    QR_MASKS[0] >> low64 & 1 == 1
        && QR_MASKS[1] >> (r45045 % 63) & 1 == 1
        && QR_MASKS[2] >> (r45045 % 65) & 1 == 1
        && QR_MASKS[3] >> (r45045 % 11) & 1 == 1
}

/// `false` only if `v` is certainly not a perfect square.
#[inline]
pub fn may_be_square_u128(v: u128) -> bool {
    residues_pass((v & 63) as u32, (v % QR_COMBINED as u128) as u32)
}

/// `false` only if the nonnegative `v` is certainly not a perfect square.
pub fn may_be_square(v: &Int) -> bool {
    let low = v.iter_u64_digits().next().unwrap_or(0);
    let r = (v % QR_COMBINED).to_u32().unwrap_or(0);
    residues_pass((low & 63) as u32, r)
}

/// `⌊√v⌋` by Newton's iteration, starting from a power of two above the root.
pub fn isqrt(v: &Int) -> Result<Int> {
    if v.is_negative() {
        return Err(Error::Domain(format!("isqrt of negative value {v}")));
    }
    if v.is_zero() {
        return Ok(Int::zero());
    }
    // 2^ceil(bits/2) >= sqrt(v)
    let mut x = Int::one() << v.bits().div_ceil(2);
    loop {
        let next = (&x + v / &x) >> 1;
        if next >= x {
            break;
        }
        x = next;
    }
    while &x * &x > *v {
        x -= 1;
    }
    debug_assert!(&x * &x <= *v && (&x + 1u32) * (&x + 1u32) > *v);
    Ok(x)
}

/// `⌊√v⌋` for machine integers, used on the search hot path.
#[inline]
pub fn isqrt_u128(v: u128) -> u128 {
    v.isqrt()
}

/// The root of `v` if it is a perfect square; negative inputs have none.
pub fn perfect_square_root(v: &Int) -> Option<Int> {
    if v.sign() == Sign::Minus || !may_be_square(v) {
        return None;
    }
    let r = isqrt(v).ok()?;
    (&r * &r == *v).then_some(r)
}

#[inline]
pub fn perfect_square_root_u128(v: u128) -> Option<u128> {
    if !may_be_square_u128(v) {
        return None;
    }
    let r = isqrt_u128(v);
    (r * r == v).then_some(r)
}

/// Nonnegative square roots of `ab+1`, `ac+1`, `bc+1` and `abc+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(with = "decimal")]
    pub r_ab: Int,
    #[serde(with = "decimal")]
    pub r_ac: Int,
    #[serde(with = "decimal")]
    pub r_bc: Int,
    #[serde(with = "decimal")]
    pub r_abc: Int,
}

impl Certificate {
    /// Re-checks the four root equations.
    pub fn witnesses(&self, a: &Int, b: &Int, c: &Int) -> bool {
        let sq = |r: &Int| r * r;
        !self.r_ab.is_negative()
            && !self.r_ac.is_negative()
            && !self.r_bc.is_negative()
            && !self.r_abc.is_negative()
            && sq(&self.r_ab) == a * b + 1u32
            && sq(&self.r_ac) == a * c + 1u32
            && sq(&self.r_bc) == b * c + 1u32
            && sq(&self.r_abc) == a * b * c + 1u32
    }
}

/// Which of the four conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    Ab,
    Ac,
    Bc,
    Abc,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Ab => "ab",
            Condition::Ac => "ac",
            Condition::Bc => "bc",
            Condition::Abc => "abc",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Ok(Certificate),
    /// First failing condition in the order ab, ac, bc, abc, with the non-square value.
    Failed { condition: Condition, value: Int },
}

impl VerifyOutcome {
    pub fn is_ok(&self) -> bool {
        matches!(self, VerifyOutcome::Ok(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            VerifyOutcome::Ok(c) => Some(c),
            VerifyOutcome::Failed { .. } => None,
        }
    }
}

/// Checks that `ab+1`, `ac+1`, `bc+1` and `abc+1` are all squares.
pub fn verify_four(a: &Int, b: &Int, c: &Int) -> Result<VerifyOutcome> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        if !v.is_positive() {
            return Err(Error::Domain(format!("{name} must be positive, got {v}")));
        }
    }
    let checks = [
        (Condition::Ab, a * b + 1u32),
        (Condition::Ac, a * c + 1u32),
        (Condition::Bc, b * c + 1u32),
        (Condition::Abc, a * b * c + 1u32),
    ];
    let mut roots = Vec::with_capacity(4);
    for (condition, value) in checks {
        match perfect_square_root(&value) {
            Some(r) => roots.push(r),
            None => return Ok(VerifyOutcome::Failed { condition, value }),
        }
    }
    let [r_ab, r_ac, r_bc, r_abc]: [Int; 4] = roots.try_into().expect("four roots");
    Ok(VerifyOutcome::Ok(Certificate { r_ab, r_ac, r_bc, r_abc }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&int(361)).unwrap(), int(19));
        assert_eq!(isqrt(&int(0)).unwrap(), int(0));
        assert_eq!(isqrt(&int(32760)).unwrap(), int(180));
        assert_eq!(isqrt(&int(1)).unwrap(), int(1));
        assert_eq!(isqrt(&int(3)).unwrap(), int(1));
        assert!(matches!(isqrt(&int(-4)), Err(Error::Domain(_))));
    }

    #[test]
    fn isqrt_exhaustive_small() {
        for v in 0..20_000i64 {
            let r = isqrt(&int(v)).unwrap();
            assert!(&r * &r <= int(v) && (&r + 1) * (&r + 1) > int(v), "v={v}");
        }
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(perfect_square_root(&int(841)), Some(int(29)));
        assert_eq!(perfect_square_root(&int(7)), None);
        assert_eq!(perfect_square_root(&int(1)), Some(int(1)));
        assert_eq!(perfect_square_root(&int(0)), Some(int(0)));
        assert_eq!(perfect_square_root(&int(-9)), None);
    }

    #[test]
    fn masks_accept_every_residue_of_a_square() {
        for (m, mask) in QR_MODULI.iter().zip(QR_MASKS) {
            for t in 0..*m {
                assert_eq!(mask >> ((t * t) % m) & 1, 1, "mod {m}, root {t}");
            }
        }
        // every square hits the combined filter
        for t in 0..5_000u128 {
            assert!(may_be_square_u128(t * t));
            assert!(may_be_square(&Int::from(t * t)));
        }
    }

    #[test]
    fn masks_reject_most_non_squares() {
        let rejected = (0..100_000u128).filter(|v| !may_be_square_u128(*v)).count();
        let squares = 317;
        assert!(rejected as f64 / (100_000 - squares) as f64 > 0.98, "rejected {rejected}");
    }

    #[test]
    fn u128_path_matches_bigint_path() {
        for v in (0..50_000u128).chain([u64::MAX as u128, (1u128 << 100) - 1, 1u128 << 100]) {
            let small = perfect_square_root_u128(v).map(Int::from);
            assert_eq!(small, perfect_square_root(&Int::from(v)), "v={v}");
        }
    }

    #[test]
    fn verify_examples() {
        let ok = verify_four(&int(5), &int(7), &int(24)).unwrap();
        assert_eq!(
            ok,
            VerifyOutcome::Ok(Certificate { r_ab: int(6), r_ac: int(11), r_bc: int(13), r_abc: int(29) })
        );
        let ok = verify_four(&int(8), &int(45), &int(91)).unwrap();
        assert_eq!(
            ok.certificate().unwrap(),
            &Certificate { r_ab: int(19), r_ac: int(27), r_bc: int(64), r_abc: int(181) }
        );
        assert_eq!(
            verify_four(&int(2), &int(3), &int(5)).unwrap(),
            VerifyOutcome::Failed { condition: Condition::Ab, value: int(7) }
        );
        assert!(matches!(verify_four(&int(0), &int(1), &int(2)), Err(Error::Domain(_))));
    }

    #[test]
    fn verify_reports_first_failure_in_order() {
        // 1*3+1 = 4, 1*8+1 = 9, 3*8+1 = 25, 1*3*8+1 = 25: all pass
        assert!(verify_four(&int(1), &int(3), &int(8)).unwrap().is_ok());
        // ab ok (4), ac = 1*5+1 = 6 fails
        assert_eq!(
            verify_four(&int(1), &int(3), &int(5)).unwrap(),
            VerifyOutcome::Failed { condition: Condition::Ac, value: int(6) }
        );
        // Fermat's {1,3,8,120}: 3*120+1 = 361, 1*3*120+1 = 361, 1*120+1 = 121
        assert!(verify_four(&int(1), &int(3), &int(120)).unwrap().is_ok());
        // {1,8,15}: bc = 121, abc = 121 ok; {2,4,12}: ab=9, ac=25, bc=49, abc=97 fails at abc
        assert_eq!(
            verify_four(&int(2), &int(4), &int(12)).unwrap(),
            VerifyOutcome::Failed { condition: Condition::Abc, value: int(97) }
        );
    }
}
