//! Two-sided integer recurrences of characteristic polynomial `t² − 4t + 1`.
//!
//! `P` (`0, 1, 4, 15, …`) is the fundamental one; `A_n = P_{n+1} + 2P_n` and
//! `R_n = (5P_{n+1} − 3P_n − 1)/2` are expressed through it. Values at negative
//! indices are signed: `A_{-1} = -2`, `A_{-2} = -9`, …

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::{Error, Int, Result};

/// Index into a two-sided sequence.
pub type SeqIndex = i64;

/// One of the three sequences of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    /// `P_0 = 0, P_1 = 1, P_n = 4P_{n-1} − P_{n-2}`.
    P,
    /// `A_0 = 1, A_1 = 6, A_{n+1} = 4A_n − A_{n-1}`.
    A,
    /// `R_0 = 2, R_1 = 8, R_n = 4R_{n-1} − R_{n-2} + 1`.
    R,
}

impl Sequence {
    fn seeds(self) -> (i64, i64) {
        match self {
            Sequence::P => (0, 1),
            Sequence::A => (1, 6),
            Sequence::R => (2, 8),
        }
    }

    /// Constant added at every step of the recurrence.
    fn offset(self) -> i64 {
        match self {
            Sequence::R => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sequence::P => "P",
            Sequence::A => "A",
            Sequence::R => "R",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Sequence::P),
            "A" | "a" => Ok(Sequence::A),
            "R" | "r" => Ok(Sequence::R),
            other => Err(Error::Parse(format!("unknown sequence `{other}` (expected P, A or R)"))),
        }
    }
}

/// Memoized evaluation of one sequence, grown on demand in both directions.
///
/// `forward[k]` holds the value at index `k`, `backward[k]` the value at
/// index `-(k+1)`.
#[derive(Debug, Clone)]
pub struct SeqCache {
    seq: Sequence,
    forward: Vec<Int>,
    backward: Vec<Int>,
}

impl SeqCache {
    pub fn new(seq: Sequence) -> Self {
        let (s0, s1) = seq.seeds();
        SeqCache { seq, forward: vec![Int::from(s0), Int::from(s1)], backward: Vec::new() }
    }

    pub fn sequence(&self) -> Sequence {
        self.seq
    }

    /// Value at index `n`, extending the memo as needed.
    pub fn get(&mut self, n: SeqIndex) -> &Int {
        let k = self.seq.offset();
        if n >= 0 {
            let n = n as usize;
            while self.forward.len() <= n {
                let len = self.forward.len();
                let next = 4 * &self.forward[len - 1] - &self.forward[len - 2] + k;
                self.forward.push(next);
            }
            &self.forward[n]
        } else {
            let m = (-(n + 1)) as usize;
            while self.backward.len() <= m {
                // u_{j-1} = 4u_j − u_{j+1} + k
                let len = self.backward.len();
                let (cur, ahead) = match len {
                    0 => (&self.forward[0], &self.forward[1]),
                    1 => (&self.backward[0], &self.forward[0]),
                    _ => (&self.backward[len - 1], &self.backward[len - 2]),
                };
                let next = 4 * cur - ahead + k;
                self.backward.push(next);
            }
            &self.backward[m]
        }
    }

    /// Values at every index of `from..=to`, in order.
    pub fn range(&mut self, from: SeqIndex, to: SeqIndex) -> Vec<Int> {
        (from..=to).map(|n| self.get(n).clone()).collect()
    }
}

/// `P_n`.
pub fn pell_p(n: SeqIndex) -> Int {
    SeqCache::new(Sequence::P).get(n).clone()
}

/// `A_n`.
pub fn seq_a(n: SeqIndex) -> Int {
    SeqCache::new(Sequence::A).get(n).clone()
}

/// `R_n`.
pub fn seq_r(n: SeqIndex) -> Int {
    SeqCache::new(Sequence::R).get(n).clone()
}

/// An integer point on the conic `x² − 4xy + y² = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConicPoint {
    x: Int,
    y: Int,
}

impl ConicPoint {
    /// Checks the conic relation.
    pub fn new(x: Int, y: Int) -> Result<Self> {
        if conic_form(&x, &y).is_one() {
            Ok(ConicPoint { x, y })
        } else {
            Err(Error::Domain(format!("({x}, {y}) is not on x^2-4xy+y^2=1")))
        }
    }

    pub fn x(&self) -> &Int {
        &self.x
    }

    pub fn y(&self) -> &Int {
        &self.y
    }

    pub fn into_parts(self) -> (Int, Int) {
        (self.x, self.y)
    }
}

impl fmt::Display for ConicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn conic_form(x: &Int, y: &Int) -> Int {
    x * x - 4 * x * y + y * y
}

/// `(P_{n+1}, P_n)`.
pub fn conic_point(n: SeqIndex) -> ConicPoint {
    let mut p = SeqCache::new(Sequence::P);
    let y = p.get(n).clone();
    let x = p.get(n + 1).clone();
    debug_assert!(conic_form(&x, &y).is_one());
    ConicPoint { x, y }
}

/// An element `u + v√3` of `Z[√3]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellNumber {
    pub u: Int,
    pub v: Int,
}

impl PellNumber {
    pub fn one() -> Self {
        PellNumber { u: Int::one(), v: Int::zero() }
    }

    /// `u² − 3v²`.
    pub fn norm(&self) -> Int {
        &self.u * &self.u - 3 * &self.v * &self.v
    }

    pub fn mul(&self, other: &PellNumber) -> PellNumber {
        PellNumber {
            u: &self.u * &other.u + 3 * &self.v * &other.v,
            v: &self.u * &other.v + &self.v * &other.u,
        }
    }

    /// `self^e` by square-and-multiply.
    pub fn pow(&self, mut e: u64) -> PellNumber {
        let mut base = self.clone();
        let mut acc = PellNumber::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// `(2+√3)^n` computed exactly; for negative `n` the inverse `2−√3` is powered.
///
/// The `√3` component equals `P_n`, which gives an evaluation path for `P`
/// independent of the recurrence.
pub fn binet_exact(n: SeqIndex) -> PellNumber {
    let sign = if n < 0 { -1 } else { 1 };
    let unit = PellNumber { u: Int::from(2), v: Int::from(sign) };
    unit.pow(n.unsigned_abs())
}

/// `|v|` as used when comparing negative-index values against tables of magnitudes.
pub fn magnitude(v: &Int) -> Int {
    v.abs()
}
