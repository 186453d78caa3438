//! Exact polynomial identities behind the main family.
//!
//! Every identity is checked by reducing the difference of its two sides
//! modulo `x² − 4xy + y² − 1` and comparing with zero. Since the reduction
//! has a unique normal form, a zero residue is a proof that the identity
//! holds at every integer point of the conic, i.e. for every family member.

mod poly;
mod reduce;
pub mod transcription;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use poly::{BiPoly, Monomial};
pub use reduce::{conic_form, reduce, NormalForm};
pub use transcription::{Table, Transcription};

use crate::family::make_companion;
use crate::sequences::conic_point;
use crate::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityKind {
    /// Ring identity in the quotient; part of the proof.
    Core,
    /// Checked for exact polynomial equality before falling back to reduction.
    Probe,
    /// Numeric agreement at a handful of indices only.
    Numeric,
}

/// How an identity held.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    /// The difference is the zero polynomial.
    Exact,
    /// The difference is nonzero but reduces to zero on the conic.
    Quotient,
    /// Values agree at every sampled index.
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub id: String,
    pub statement: String,
    pub kind: IdentityKind,
    pub pass: bool,
    pub level: Option<Level>,
    /// Normal form of the difference when it did not vanish.
    pub residual: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofReport {
    pub items: Vec<IdentityResult>,
}

impl ProofReport {
    /// `true` iff every core identity (I1–I8) reduced to zero.
    pub fn core_passed(&self) -> bool {
        self.items.iter().filter(|i| i.kind == IdentityKind::Core).all(|i| i.pass)
    }

    pub fn core_counts(&self) -> (usize, usize) {
        let core: Vec<_> = self.items.iter().filter(|i| i.kind == IdentityKind::Core).collect();
        (core.iter().filter(|i| i.pass).count(), core.len())
    }

    pub fn get(&self, id: &str) -> Option<&IdentityResult> {
        self.items.iter().find(|i| i.id == id)
    }
}

fn int(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

fn lin(cx: i64, cy: i64, c0: i64) -> BiPoly {
    BiPoly::from_table(&[(1, 0, cx, 1), (0, 1, cy, 1), (0, 0, c0, 1)])
}

/// `x + 2y`, the closed form of `A_n`.
fn a_seq() -> BiPoly {
    lin(1, 2, 0)
}

/// Right-hand side of `2r = A_n²(2R_n) + 2A_{n+1} − 4`.
pub fn main_r_from_sequences() -> BiPoly {
    let a2 = a_seq().pow(2);
    &a2 * &lin(5, -3, -1) + lin(6, -1, 0).scale(&int(2)) - BiPoly::int(4)
}

/// Right-hand side of `2r = A_n²(2R_{n-1}) − 2A_{n-1} − 4` for the companion family.
pub fn companion_r_from_sequences() -> BiPoly {
    let a2 = a_seq().pow(2);
    &a2 * &lin(3, -7, -1) - lin(-2, 9, 0).scale(&int(2)) - BiPoly::int(4)
}

struct Claim {
    id: &'static str,
    statement: &'static str,
    kind: IdentityKind,
    diff: BiPoly,
}

fn check_ring(claim: Claim) -> IdentityResult {
    let (pass, level, residual) = if claim.diff.is_zero() {
        (true, Some(Level::Exact), None)
    } else {
        let nf = reduce(&claim.diff);
        if nf.is_zero() {
            (true, Some(Level::Quotient), None)
        } else {
            (false, None, Some(nf.to_string()))
        }
    };
    IdentityResult {
        id: claim.id.to_string(),
        statement: claim.statement.to_string(),
        kind: claim.kind,
        pass,
        level,
        residual,
    }
}

/// Indices at which the companion closed form is compared numerically.
pub const COMPANION_SAMPLE: std::ops::RangeInclusive<i64> = 0..=6;

fn check_companion() -> IdentityResult {
    let rhs = companion_r_from_sequences();
    let mut mismatch = None;
    for n in COMPANION_SAMPLE {
        let pt = conic_point(n);
        let closed = rhs.eval(pt.x(), pt.y()) / int(2);
        let built = make_companion(n).map(|t| Rat::from_integer(t.r));
        if built.as_ref().ok() != Some(&closed) {
            mismatch = Some(format!("n={n}: closed form {closed}, construction {built:?}"));
            break;
        }
    }
    IdentityResult {
        id: "I10".to_string(),
        statement: "2r' = (x+2y)^2 (3x-7y-1) - 2(9y-2x) - 4 at n = 0..6".to_string(),
        kind: IdentityKind::Numeric,
        pass: mismatch.is_none(),
        level: mismatch.is_none().then_some(Level::Sampled),
        residual: mismatch,
    }
}

/// Checks I1–I10 against the given tables. Items are reported in fixed order.
pub fn prove_identities_with(t: &Transcription) -> ProofReport {
    let (a, r, b, c) = (&t.a, &t.r, &t.b, &t.c);
    let s = t.s();
    let one = BiPoly::one();
    let two = int(2);
    let abc = a * b * c;
    let factored = t.abc_factored();

    let claims = vec![
        Claim {
            id: "I1",
            statement: "ab + 1 = r^2",
            kind: IdentityKind::Core,
            diff: a * b + &one - r.pow(2),
        },
        Claim {
            id: "I2",
            statement: "ac + 1 = (a + r)^2",
            kind: IdentityKind::Core,
            diff: a * c + &one - (a + r).pow(2),
        },
        Claim {
            id: "I3",
            statement: "bc + 1 = (b + r)^2",
            kind: IdentityKind::Core,
            diff: b * c + &one - (b + r).pow(2),
        },
        Claim {
            id: "I4",
            statement: "c = a + b + 2r",
            kind: IdentityKind::Core,
            diff: c - a - b - r.scale(&two),
        },
        Claim {
            id: "I5",
            statement: "a = (x + 2y)^2 + 4",
            kind: IdentityKind::Core,
            diff: a - a_seq().pow(2) - BiPoly::int(4),
        },
        Claim {
            id: "I6",
            statement: "2r = (x+2y)^2 (5x-3y-1) + 2(6x-y) - 4",
            kind: IdentityKind::Core,
            diff: r.scale(&two) - main_r_from_sequences(),
        },
        Claim {
            id: "I7",
            statement: "abc + 1 = s^2",
            kind: IdentityKind::Core,
            diff: &abc + &one - s.pow(2),
        },
        Claim {
            id: "I8",
            statement: "abc = 1/4 (3y+8x)(5x^2-12xy+8y^2)(2y^3-2xy^2-2x^2y+3x^3)(10y^4-22xy^3+50x^2y^2-39x^3y+28x^4)",
            kind: IdentityKind::Core,
            diff: &abc - &factored,
        },
        Claim {
            id: "I9",
            statement: "1/4 (3y+8x)(...)(...)(...) + (x^2-4xy+y^2)^5 = s^2",
            kind: IdentityKind::Probe,
            diff: &factored + &conic_form().pow(5) - s.pow(2),
        },
    ];

    let mut items: Vec<IdentityResult> = claims.into_par_iter().map(check_ring).collect();
    items.push(check_companion());
    ProofReport { items }
}

/// Checks I1–I10 against the standard tables.
pub fn prove_identities() -> ProofReport {
    prove_identities_with(transcription::standard())
}
