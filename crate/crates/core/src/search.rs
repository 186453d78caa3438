//! Exhaustive census of admissible four-square triples below a bound.
//!
//! Pairs `(a, b)` with `ab + 1 = r²` are produced by walking `r` and splitting
//! `r² − 1 = (r − 1)(r + 1)` into divisor pairs with a smallest-prime-factor
//! table. For each pair the third entry `c` must satisfy `ac + 1 = s²`, so `s`
//! only ranges over the square roots of 1 modulo `a`; each such `c` is then
//! tested for `bc + 1` and `abc + 1`.

use std::time::{Duration, Instant};

use num_integer::{Integer, Roots};
use rayon::prelude::*;

use crate::certify::{isqrt_u128, perfect_square_root_u128, Certificate};
use crate::{Error, Int, Result};

/// Largest accepted bound: keeps the sieve in `u32` and `abc + 1` in `u128`.
pub const MAX_SEARCH_BOUND: u64 = (1 << 32) - 2;

/// Largest bound the brute-force oracle accepts.
pub const MAX_ORACLE_BOUND: u64 = 2000;

/// `r` values handled per work unit. Fixed so that statistics do not depend on `jobs`.
const CHUNK: u64 = 4096;

/// `(a, b, r)` with `2 ≤ a < b` and `ab + 1 = r²`.
pub type Pair = (u64, u64, u64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundTriple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub certificate: Certificate,
}

impl FoundTriple {
    pub fn key(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub pairs_scanned: u64,
    pub candidates_tested: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub bound: u64,
    /// Sorted by `(c, b, a)`, no duplicates.
    pub triples: Vec<FoundTriple>,
    pub stats: SearchStats,
}

impl SearchResult {
    pub fn keys(&self) -> Vec<(u64, u64, u64)> {
        self.triples.iter().map(FoundTriple::key).collect()
    }

    pub fn contains(&self, a: u64, b: u64, c: u64) -> bool {
        self.triples.iter().any(|t| t.key() == (a, b, c))
    }
}

/// Smallest prime factor of every integer up to a limit.
#[derive(Debug, Clone)]
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    pub fn new(limit: u64) -> Self {
        let n = limit as usize + 1;
        let mut spf = vec![0u32; n.max(2)];
        for i in 2..n {
            if spf[i] == 0 {
                let mut j = i;
                while j < n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        SpfSieve { spf }
    }

    pub fn limit(&self) -> u64 {
        self.spf.len() as u64 - 1
    }

    /// Prime factorization as `(p, e)` with increasing `p`.
    pub fn factor(&self, mut n: u64) -> Vec<(u64, u32)> {
        assert!(n >= 1 && n <= self.limit(), "{n} outside sieve range");
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            n /= p;
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Pairs `(a, b, r)` for one `r`, with `a` ascending and `b ≤ bound`.
    pub fn pairs_for_r(&self, r: u64, bound: u64) -> Vec<Pair> {
        let n = r * r - 1;
        let divisors = divisors(&merge(self.factor(r - 1), self.factor(r + 1)));
        let mut out: Vec<Pair> = divisors
            .into_iter()
            .filter(|&a| a >= 2 && (a as u128) * (a as u128) < n as u128)
            .map(|a| (a, n / a, r))
            .filter(|&(_, b, _)| b <= bound)
            .collect();
        out.sort_unstable();
        out
    }

    /// Solutions of `s² ≡ 1 (mod a)` in `[0, a)`, ascending.
    pub fn unit_square_roots(&self, a: u64) -> Vec<u64> {
        let mut roots = vec![0u64];
        let mut modulus = 1u64;
        for (p, e) in self.factor(a) {
            let pk = p.pow(e);
            let local: Vec<u64> = if p == 2 {
                match e {
                    1 => vec![1],
                    2 => vec![1, 3],
                    _ => vec![1, pk / 2 - 1, pk / 2 + 1, pk - 1],
                }
            } else {
                vec![1, pk - 1]
            };
            roots = crt_combine(&roots, modulus, &local, pk);
            modulus *= pk;
        }
        roots.sort_unstable();
        roots
    }
}

fn merge(mut f: Vec<(u64, u32)>, g: Vec<(u64, u32)>) -> Vec<(u64, u32)> {
    for (p, e) in g {
        match f.iter_mut().find(|(q, _)| *q == p) {
            Some((_, k)) => *k += e,
            None => f.push((p, e)),
        }
    }
    f
}

fn divisors(factors: &[(u64, u32)]) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in factors {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for k in 0..len {
                out.push(out[k] * pk);
            }
        }
    }
    out
}

/// All `x mod m1·m2` with `x ≡ r1 (mod m1)`, `x ≡ r2 (mod m2)` for `r1 ∈ left`, `r2 ∈ right`.
fn crt_combine(left: &[u64], m1: u64, right: &[u64], m2: u64) -> Vec<u64> {
    let m = m1 as i128 * m2 as i128;
    // m1 * inv ≡ 1 (mod m2)
    let inv = (m1 as i128).extended_gcd(&(m2 as i128)).x.rem_euclid(m2 as i128);
    let mut out = Vec::with_capacity(left.len() * right.len());
    for &r1 in left {
        for &r2 in right {
            let t = ((r2 as i128 - r1 as i128) * inv).rem_euclid(m2 as i128);
            out.push(((r1 as i128 + m1 as i128 * t).rem_euclid(m)) as u64);
        }
    }
    out
}

fn check_bound(bound: u64) -> Result<()> {
    if bound < 3 {
        return Err(Error::Domain(format!("bound must be at least 3, got {bound}")));
    }
    if bound > MAX_SEARCH_BOUND {
        return Err(Error::Domain(format!("bound must be at most {MAX_SEARCH_BOUND}, got {bound}")));
    }
    Ok(())
}

/// Every pair `2 ≤ a < b ≤ bound` with `ab + 1` a square, ordered by `r` then `a`.
pub fn find_pairs(bound: u64) -> Result<impl Iterator<Item = Pair>> {
    check_bound(bound)?;
    let sieve = SpfSieve::new(bound + 1);
    // ab ≤ (bound-1)·bound forces r ≤ bound-1
    Ok((3..bound).flat_map(move |r| sieve.pairs_for_r(r, bound)))
}

#[derive(Default)]
struct ChunkOutput {
    triples: Vec<FoundTriple>,
    pairs: u64,
    candidates: u64,
}

fn certificate(r_ab: u128, r_ac: u128, r_bc: u128, r_abc: u128) -> Certificate {
    Certificate { r_ab: Int::from(r_ab), r_ac: Int::from(r_ac), r_bc: Int::from(r_bc), r_abc: Int::from(r_abc) }
}

fn scan_chunk(sieve: &SpfSieve, bound: u64, r_lo: u64, r_hi: u64) -> ChunkOutput {
    let mut out = ChunkOutput::default();
    for r in r_lo..r_hi {
        for (a, b, _) in sieve.pairs_for_r(r, bound) {
            out.pairs += 1;
            if b >= bound {
                continue;
            }
            let (a128, b128) = (a as u128, b as u128);
            // c > b  <=>  s > r;  c ≤ bound  <=>  s² ≤ a·bound + 1
            let s_lo = r as u128 + 1;
            let s_hi = isqrt_u128(a128 * bound as u128 + 1);
            if s_lo > s_hi {
                continue;
            }
            for t in sieve.unit_square_roots(a) {
                let t = t as u128;
                let mut s = s_lo + (t + a128 - s_lo % a128) % a128;
                while s <= s_hi {
                    let c = (s * s - 1) / a128;
                    out.candidates += 1;
                    if let Some(r_bc) = perfect_square_root_u128(b128 * c + 1) {
                        if let Some(r_abc) = perfect_square_root_u128(a128 * b128 * c + 1) {
                            out.triples.push(FoundTriple {
                                a,
                                b,
                                c: c as u64,
                                certificate: certificate(r as u128, s, r_bc, r_abc),
                            });
                        }
                    }
                    s += a128;
                }
            }
        }
    }
    out
}

fn finish(bound: u64, mut parts: Vec<ChunkOutput>, started: Instant) -> SearchResult {
    let mut triples: Vec<FoundTriple> = parts.iter_mut().flat_map(|p| p.triples.drain(..)).collect();
    triples.sort_unstable_by_key(|t| (t.c, t.b, t.a));
    triples.dedup_by_key(|t| t.key());
    let stats = SearchStats {
        pairs_scanned: parts.iter().map(|p| p.pairs).sum(),
        candidates_tested: parts.iter().map(|p| p.candidates).sum(),
        elapsed: started.elapsed(),
    };
    SearchResult { bound, triples, stats }
}

/// Options for [`search_triples_with`].
pub struct SearchOptions<'a> {
    pub jobs: usize,
    /// Called after each finished chunk with `(chunks_done, chunks_total)`.
    pub progress: Option<&'a (dyn Fn(usize, usize) + Sync)>,
}

impl Default for SearchOptions<'_> {
    fn default() -> Self {
        SearchOptions { jobs: 1, progress: None }
    }
}

/// All admissible triples `1 < a < b < c ≤ bound`. Output does not depend on `jobs`.
pub fn search_triples(bound: u64, jobs: usize) -> Result<SearchResult> {
    search_triples_with(bound, &SearchOptions { jobs, progress: None })
}

pub fn search_triples_with(bound: u64, opts: &SearchOptions<'_>) -> Result<SearchResult> {
    check_bound(bound)?;
    if opts.jobs == 0 {
        return Err(Error::Domain("jobs must be at least 1".into()));
    }
    let started = Instant::now();
    let sieve = SpfSieve::new(bound + 1);
    let chunks: Vec<(u64, u64)> =
        (3..bound).step_by(CHUNK as usize).map(|lo| (lo, (lo + CHUNK).min(bound))).collect();
    let total = chunks.len();
    let done = std::sync::atomic::AtomicUsize::new(0);
    let run = |&(lo, hi): &(u64, u64)| {
        let out = scan_chunk(&sieve, bound, lo, hi);
        if let Some(report) = opts.progress {
            let k = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
            report(k, total);
        }
        out
    };
    let parts: Vec<ChunkOutput> = if opts.jobs == 1 {
        chunks.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Domain(format!("cannot start {} workers: {e}", opts.jobs)))?;
        pool.install(|| chunks.par_iter().map(run).collect())
    };
    Ok(finish(bound, parts, started))
}

fn oracle_root(v: u128) -> Option<u128> {
    let r = v.sqrt();
    (r * r == v).then_some(r)
}

/// Reference census: double loop over pairs, then every `c`. No sieving, no masks.
pub fn brute_oracle(bound: u64) -> Result<SearchResult> {
    if bound > MAX_ORACLE_BOUND {
        return Err(Error::OracleCap { bound, cap: MAX_ORACLE_BOUND });
    }
    let started = Instant::now();
    let mut out = ChunkOutput::default();
    for a in 2..=bound as u128 {
        for b in a + 1..=bound as u128 {
            let Some(r_ab) = oracle_root(a * b + 1) else { continue };
            out.pairs += 1;
            for c in b + 1..=bound as u128 {
                out.candidates += 1;
                let roots = (oracle_root(a * c + 1), oracle_root(b * c + 1), oracle_root(a * b * c + 1));
                if let (Some(r_ac), Some(r_bc), Some(r_abc)) = roots {
                    out.triples.push(FoundTriple {
                        a: a as u64,
                        b: b as u64,
                        c: c as u64,
                        certificate: certificate(r_ab, r_ac, r_bc, r_abc),
                    });
                }
            }
        }
    }
    Ok(finish(bound, vec![out], started))
}
