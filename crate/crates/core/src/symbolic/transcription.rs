//! Coefficient tables of the closed-form family.
//!
//! Rows are `(x-exponent, y-exponent, numerator, denominator)`. Each table is
//! a literal copy of the displayed formula on its comment line; nothing here
//! is derived, so a typo breaks exactly the identities that use the table.

use std::sync::LazyLock;

use super::poly::BiPoly;
use crate::Rat;

// a = 5x^2 - 12xy + 8y^2
pub const A: &[(u32, u32, i64, i64)] = &[(2, 0, 5, 1), (1, 1, -12, 1), (0, 2, 8, 1)];

// r = 17/2 x^3 - 33/2 x^2 y - 5/2 x^2 + 14 x y^2 + 6 x y - 7 y^3 - 4 y^2
pub const R: &[(u32, u32, i64, i64)] = &[
    (3, 0, 17, 2),
    (2, 1, -33, 2),
    (2, 0, -5, 2),
    (1, 2, 14, 1),
    (1, 1, 6, 1),
    (0, 3, -7, 1),
    (0, 2, -4, 1),
];

// b = 31/2 x^4 - 55/2 x^3 y + 75/2 x^2 y^2 - 25 x y^3 + 8 y^4
//     - 17/2 x^3 + 33/2 x^2 y - 14 x y^2 + 7 y^3
pub const B: &[(u32, u32, i64, i64)] = &[
    (4, 0, 31, 2),
    (3, 1, -55, 2),
    (2, 2, 75, 2),
    (1, 3, -25, 1),
    (0, 4, 8, 1),
    (3, 0, -17, 2),
    (2, 1, 33, 2),
    (1, 2, -14, 1),
    (0, 3, 7, 1),
];

// c = 31/2 x^4 - 55/2 x^3 y + 75/2 x^2 y^2 - 25 x y^3 + 8 y^4
//     + 17/2 x^3 - 33/2 x^2 y + 14 x y^2 - 7 y^3
pub const C: &[(u32, u32, i64, i64)] = &[
    (4, 0, 31, 2),
    (3, 1, -55, 2),
    (2, 2, 75, 2),
    (1, 3, -25, 1),
    (0, 4, 8, 1),
    (3, 0, 17, 2),
    (2, 1, -33, 2),
    (1, 2, 14, 1),
    (0, 3, -7, 1),
];

// abc + 1 = 1/4 (22y^5 - 24xy^4 - 8x^2y^3 + 84x^3y^2 - 119x^4y + 58x^5)^2, so s = (...)/2
pub const S_INNER: &[(u32, u32, i64, i64)] = &[
    (0, 5, 22, 1),
    (1, 4, -24, 1),
    (2, 3, -8, 1),
    (3, 2, 84, 1),
    (4, 1, -119, 1),
    (5, 0, 58, 1),
];
pub const S_SCALE: (i64, i64) = (1, 2);

// abc = 1/4 (3y + 8x)(5x^2 - 12xy + 8y^2)(2y^3 - 2xy^2 - 2x^2y + 3x^3)
//           (10y^4 - 22xy^3 + 50x^2y^2 - 39x^3y + 28x^4)
pub const ABC_FACTOR_1: &[(u32, u32, i64, i64)] = &[(0, 1, 3, 1), (1, 0, 8, 1)];
pub const ABC_FACTOR_2: &[(u32, u32, i64, i64)] = &[(2, 0, 5, 1), (1, 1, -12, 1), (0, 2, 8, 1)];
pub const ABC_FACTOR_3: &[(u32, u32, i64, i64)] =
    &[(0, 3, 2, 1), (1, 2, -2, 1), (2, 1, -2, 1), (3, 0, 3, 1)];
pub const ABC_FACTOR_4: &[(u32, u32, i64, i64)] =
    &[(0, 4, 10, 1), (1, 3, -22, 1), (2, 2, 50, 1), (3, 1, -39, 1), (4, 0, 28, 1)];
pub const ABC_SCALE: (i64, i64) = (1, 4);

/// Which transcribed table a perturbation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table {
    A,
    R,
    B,
    C,
    SInner,
    AbcFactor(usize),
}

impl std::str::FromStr for Table {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(match s {
            "a" => Table::A,
            "r" => Table::R,
            "b" => Table::B,
            "c" => Table::C,
            "s" => Table::SInner,
            "f1" => Table::AbcFactor(0),
            "f2" => Table::AbcFactor(1),
            "f3" => Table::AbcFactor(2),
            "f4" => Table::AbcFactor(3),
            other => {
                return Err(crate::Error::Parse(format!(
                    "unknown table `{other}` (expected a, r, b, c, s, f1..f4)"
                )))
            }
        })
    }
}

/// The family polynomials as [`BiPoly`] values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcription {
    pub a: BiPoly,
    pub r: BiPoly,
    pub b: BiPoly,
    pub c: BiPoly,
    pub s_inner: BiPoly,
    pub s_scale: Rat,
    pub abc_factors: [BiPoly; 4],
    pub abc_scale: Rat,
}

fn rat((n, d): (i64, i64)) -> Rat {
    Rat::new(n.into(), d.into())
}

impl Transcription {
    pub fn standard() -> Self {
        Transcription {
            a: BiPoly::from_table(A),
            r: BiPoly::from_table(R),
            b: BiPoly::from_table(B),
            c: BiPoly::from_table(C),
            s_inner: BiPoly::from_table(S_INNER),
            s_scale: rat(S_SCALE),
            abc_factors: [
                BiPoly::from_table(ABC_FACTOR_1),
                BiPoly::from_table(ABC_FACTOR_2),
                BiPoly::from_table(ABC_FACTOR_3),
                BiPoly::from_table(ABC_FACTOR_4),
            ],
            abc_scale: rat(ABC_SCALE),
        }
    }

    /// `s` with `abc + 1 = s²`.
    pub fn s(&self) -> BiPoly {
        self.s_inner.scale(&self.s_scale)
    }

    /// The factored form of `abc`.
    pub fn abc_factored(&self) -> BiPoly {
        let prod = self.abc_factors.iter().fold(BiPoly::one(), |acc, f| &acc * f);
        prod.scale(&self.abc_scale)
    }

    /// A copy with `delta` added to the coefficient of `x^i y^j` in one table.
    pub fn perturbed(&self, table: Table, i: u32, j: u32, delta: Rat) -> Self {
        let mut t = self.clone();
        let target = match table {
            Table::A => &mut t.a,
            Table::R => &mut t.r,
            Table::B => &mut t.b,
            Table::C => &mut t.c,
            Table::SInner => &mut t.s_inner,
            Table::AbcFactor(k) => &mut t.abc_factors[k.min(3)],
        };
        target.add_term((i, j), delta);
        t
    }
}

static STANDARD: LazyLock<Transcription> = LazyLock::new(Transcription::standard);

/// Shared instance of the unmodified tables.
pub fn standard() -> &'static Transcription {
    &STANDARD
}
