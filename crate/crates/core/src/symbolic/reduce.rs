use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::poly::BiPoly;
use crate::{Int, Rat};

/// Residue `c0(y) + c1(y)·x` of a polynomial modulo `x² − 4xy + y² − 1`.
///
/// The relation is monic of degree two in `x`, so every class has exactly one
/// representative of `x`-degree at most one.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NormalForm {
    /// Coefficients of `y^j` in `c0`, zero entries omitted.
    pub c0: BTreeMap<u32, Rat>,
    /// Coefficients of `y^j` in `c1`, zero entries omitted.
    pub c1: BTreeMap<u32, Rat>,
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        self.c0.is_empty() && self.c1.is_empty()
    }

    /// Back to a polynomial of `x`-degree at most one.
    pub fn lift(&self) -> BiPoly {
        let mut p = BiPoly::zero();
        for (j, c) in &self.c0 {
            p.add_term((0, *j), c.clone());
        }
        for (j, c) in &self.c1 {
            p.add_term((1, *j), c.clone());
        }
        p
    }

    pub fn eval(&self, x: &Int, y: &Int) -> Rat {
        self.lift().eval(x, y)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lift().fmt(f)
    }
}

/// Rewrites `x² → 4xy − y² + 1` until no power of `x` above one remains.
pub fn reduce(p: &BiPoly) -> NormalForm {
    let mut terms = p.clone().into_terms();
    // Keys order by x-degree first, so the last entry has the highest power of x.
    while let Some(entry) = terms.last_entry() {
        let (i, j) = *entry.key();
        if i < 2 {
            break;
        }
        let c = entry.remove();
        let mut bump = |m: (u32, u32), v: Rat| {
            let slot = terms.entry(m).or_insert_with(Rat::zero);
            *slot += v;
            if slot.is_zero() {
                terms.remove(&m);
            }
        };
        bump((i - 1, j + 1), &c * Rat::from_integer(Int::from(4)));
        bump((i - 2, j + 2), -c.clone());
        bump((i - 2, j), c);
    }
    let mut nf = NormalForm::default();
    for ((i, j), c) in terms {
        match i {
            0 => nf.c0.insert(j, c),
            1 => nf.c1.insert(j, c),
            _ => unreachable!("x-degree above one survived reduction"),
        };
    }
    nf
}

/// `x² − 4xy + y²`, which equals one on the conic.
pub fn conic_form() -> BiPoly {
    BiPoly::from_table(&[(2, 0, 1, 1), (1, 1, -4, 1), (0, 2, 1, 1)])
}
