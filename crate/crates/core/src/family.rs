//! Closed-form triples.
//!
//! The main family evaluates the transcribed polynomials `a, r, b, c, s` at a
//! conic point; the companion family builds `r` from the sequences and
//! completes it regularly; the degenerate family covers `a = 1`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::certify::{perfect_square_root, verify_four, Certificate, VerifyOutcome};
use crate::sequences::{conic_point, ConicPoint, SeqCache, SeqIndex, Sequence};
use crate::symbolic::transcription::{self, Transcription};
use crate::symbolic::BiPoly;
use crate::{Error, Int, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Main,
    Companion,
    External,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Main => "main",
            Variant::Companion => "companion",
            Variant::External => "external",
        })
    }
}

/// A constructed triple with every intermediate value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleCandidate {
    pub n: SeqIndex,
    pub variant: Variant,
    pub x: Int,
    pub y: Int,
    pub a: Int,
    pub r: Int,
    pub b: Int,
    pub c: Int,
    /// Nonnegative root of `abc + 1`, when it is a square.
    pub s: Option<Int>,
    /// Entries pairwise distinct and all greater than one.
    pub admissible: bool,
}

impl TripleCandidate {
    /// `(a, b, c)` with `ab+1 = r²` and `c = a + b + 2r`.
    fn regular(n: SeqIndex, variant: Variant, x: Int, y: Int, a: Int, r: Int, b: Int) -> Self {
        let c = &a + &b + 2 * &r;
        let admissible = is_admissible(&a, &b, &c);
        TripleCandidate { n, variant, x, y, a, r, b, c, s: None, admissible }
    }

    /// Roots of the four conditions, when all entries are positive and all four hold.
    pub fn certificate(&self) -> Option<Certificate> {
        match verify_four(&self.a, &self.b, &self.c) {
            Ok(VerifyOutcome::Ok(cert)) => Some(cert),
            _ => None,
        }
    }

    /// Re-derives the regular-triple relations from the stored values.
    pub fn check_invariants(&self) -> bool {
        let (a, b, c, r) = (&self.a, &self.b, &self.c, &self.r);
        let regular = a * b + 1u32 == r * r
            && *c == a + b + 2 * r
            && a * c + 1u32 == (a + r) * (a + r)
            && b * c + 1u32 == (b + r) * (b + r);
        let root = match &self.s {
            Some(s) => !s.is_negative() && a * b * c + 1u32 == s * s,
            None => true,
        };
        regular && root && self.admissible == is_admissible(a, b, c)
    }
}

/// All entries greater than one and pairwise distinct.
pub fn is_admissible(a: &Int, b: &Int, c: &Int) -> bool {
    let one = Int::one();
    *a > one && *b > one && *c > one && a != b && a != c && b != c
}

fn eval_integral(poly: &BiPoly, name: &'static str, pt: &ConicPoint) -> Result<Int> {
    let v = poly.eval(pt.x(), pt.y());
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegral { poly: name, x: pt.x().clone(), y: pt.y().clone() })
    }
}

fn inconsistent(pt: &ConicPoint, detail: impl Into<String>) -> Error {
    Error::Inconsistent { x: pt.x().clone(), y: pt.y().clone(), detail: detail.into() }
}

/// Evaluates the family polynomials of one [`Transcription`].
#[derive(Debug, Clone, Copy)]
pub struct Family<'t> {
    tables: &'t Transcription,
}

impl Default for Family<'static> {
    fn default() -> Self {
        Family { tables: transcription::standard() }
    }
}

impl<'t> Family<'t> {
    pub fn new(tables: &'t Transcription) -> Self {
        Family { tables }
    }

    /// `5x² − 12xy + 8y²`.
    pub fn a(&self, pt: &ConicPoint) -> Result<Int> {
        eval_integral(&self.tables.a, "a", pt)
    }

    pub fn r(&self, pt: &ConicPoint) -> Result<Int> {
        eval_integral(&self.tables.r, "r", pt)
    }

    /// Also checks `b = (r² − 1)/a`.
    pub fn b(&self, pt: &ConicPoint) -> Result<Int> {
        let b = eval_integral(&self.tables.b, "b", pt)?;
        let (a, r) = (self.a(pt)?, self.r(pt)?);
        if &a * &b != &r * &r - 1u32 {
            return Err(inconsistent(pt, format!("a*b = {} but r^2-1 = {}", &a * &b, &r * &r - 1u32)));
        }
        Ok(b)
    }

    /// Also checks `c = a + b + 2r`.
    pub fn c(&self, pt: &ConicPoint) -> Result<Int> {
        let c = eval_integral(&self.tables.c, "c", pt)?;
        let (a, r, b) = (self.a(pt)?, self.r(pt)?, self.b(pt)?);
        if c != &a + &b + 2 * &r {
            return Err(inconsistent(pt, format!("c = {c} but a+b+2r = {}", &a + &b + 2 * &r)));
        }
        Ok(c)
    }

    /// Nonnegative `s` with `s² = abc + 1`.
    pub fn s(&self, pt: &ConicPoint) -> Result<Int> {
        Ok(eval_integral(&self.tables.s(), "s", pt)?.abs())
    }

    /// Main-family member at `conic_point(n)`.
    pub fn make(&self, n: SeqIndex) -> Result<TripleCandidate> {
        let pt = conic_point(n);
        let (a, r, b, c, s) = (self.a(&pt)?, self.r(&pt)?, self.b(&pt)?, self.c(&pt)?, self.s(&pt)?);
        let (x, y) = pt.into_parts();
        let mut t = TripleCandidate::regular(n, Variant::Main, x, y, a, r, b);
        if t.c != c {
            return Err(Error::Inconsistent { x: t.x, y: t.y, detail: "c".into() });
        }
        t.s = Some(s);
        if !t.check_invariants() {
            return Err(Error::Inconsistent { x: t.x, y: t.y, detail: "abc+1 != s^2".into() });
        }
        Ok(t)
    }
}

pub fn poly_a(pt: &ConicPoint) -> Int {
    Family::default().a(pt).expect("a is integral on the conic")
}

pub fn poly_r(pt: &ConicPoint) -> Result<Int> {
    Family::default().r(pt)
}

pub fn poly_b(pt: &ConicPoint) -> Result<Int> {
    Family::default().b(pt)
}

pub fn poly_c(pt: &ConicPoint) -> Result<Int> {
    Family::default().c(pt)
}

pub fn poly_s(pt: &ConicPoint) -> Result<Int> {
    Family::default().s(pt)
}

/// Main-family member at index `n`. Inadmissible members are returned flagged.
pub fn make_main(n: SeqIndex) -> TripleCandidate {
    Family::default()
        .make(n)
        .unwrap_or_else(|e| panic!("standard family tables are inconsistent at n={n}: {e}"))
}

/// `A_n² R_n + A_{n+1} − 2`.
pub fn recurrence_r(n: SeqIndex) -> Int {
    let mut a = SeqCache::new(Sequence::A);
    let an = a.get(n).clone();
    let an1 = a.get(n + 1).clone();
    let rn = SeqCache::new(Sequence::R).get(n).clone();
    &an * &an * rn + an1 - 2
}

/// Companion member: `r = A_n² R_{n-1} − A_{n-1} − 2`, `a = A_n² + 4`, completed regularly.
///
/// `abc + 1` is tested numerically; `s` is left empty when it is not a square.
pub fn make_companion(n: SeqIndex) -> Result<TripleCandidate> {
    let mut seq_a = SeqCache::new(Sequence::A);
    let an = seq_a.get(n).clone();
    let an_prev = seq_a.get(n - 1).clone();
    let rn_prev = SeqCache::new(Sequence::R).get(n - 1).clone();
    let a = &an * &an + 4u32;
    let r: Int = &an * &an * rn_prev - an_prev - 2;
    let (b, rem): (Int, Int) = (&r * &r - 1u32).div_rem(&a);
    if !rem.is_zero() {
        return Err(Error::CompanionDivisibility { n, a });
    }
    let (x, y) = conic_point(n).into_parts();
    let mut t = TripleCandidate::regular(n, Variant::Companion, x, y, a, r, b);
    if !t.a.is_negative() && !t.b.is_negative() && !t.c.is_negative() {
        t.s = perfect_square_root(&(&t.a * &t.b * &t.c + 1u32));
    }
    Ok(t)
}

/// `c = a + b + 2r` where `r = √(ab+1)`.
pub fn regular_complete(a: &Int, b: &Int) -> Result<(Int, Int)> {
    if *a < Int::one() || *b < Int::one() {
        return Err(Error::Domain(format!("regular completion needs a, b >= 1, got ({a}, {b})")));
    }
    let r = perfect_square_root(&(a * b + 1u32))
        .ok_or_else(|| Error::NotDiophantinePair { a: a.clone(), b: b.clone() })?;
    let c = a + b + 2 * &r;
    Ok((c, r))
}

/// `(k² − 1, (k+1)² − 1)`, which together with 1 form a Diophantine triple.
pub fn degenerate_family(k: &Int) -> Result<(Int, Int)> {
    if *k < Int::from(2) {
        return Err(Error::Domain(format!("degenerate family needs k >= 2, got {k}")));
    }
    let b = k * k - 1u32;
    let k1 = k + 1u32;
    let c = &k1 * &k1 - 1u32;
    Ok((b, c))
}
