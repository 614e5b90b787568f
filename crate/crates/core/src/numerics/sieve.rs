//! Odds-only segmented sieve of Eratosthenes.

use rayon::prelude::*;

use crate::error::{domain, Result};

pub const DEFAULT_SEGMENT_SIZE: u64 = 1 << 20;
/// Largest accepted limit; the base-prime table for it stays below a few MB.
pub const MAX_SIEVE_LIMIT: u64 = 1 << 44;

/// The primes in `[lo, hi)`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveSegment {
    pub lo: u64,
    pub hi: u64,
    pub primes: Vec<u64>,
}

/// Primes below `limit` by a plain bit-per-integer sieve; used for the base
/// primes and as a test oracle.
fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Iterator over consecutive segments covering `[2, limit)`.
#[derive(Debug, Clone)]
pub struct SegmentedSieve {
    limit: u64,
    segment_size: u64,
    next_lo: u64,
    /// Odd base primes up to `√limit`.
    base: Vec<u64>,
}

impl SegmentedSieve {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Segment bounds, in order, without sieving them.
    pub fn bounds(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        let mut lo = 2;
        while lo < self.limit {
            let hi = lo.saturating_add(self.segment_size).min(self.limit);
            out.push((lo, hi));
            lo = hi;
        }
        out
    }

    /// Sieve one segment `[lo, hi)` with `hi ≤ limit`. Independent of every
    /// other segment, so segments may be processed concurrently.
    pub fn segment(&self, lo: u64, hi: u64) -> SieveSegment {
        let mut primes = Vec::new();
        if lo <= 2 && hi > 2 {
            primes.push(2);
        }
        // odd candidates lo_odd, lo_odd + 2, ...
        let lo_odd = (lo.max(3)) | 1;
        if lo_odd < hi {
            let count = ((hi - lo_odd + 1) / 2) as usize;
            let mut composite = vec![false; count];
            for &p in &self.base {
                let p2 = p * p;
                if p2 >= hi {
                    break;
                }
                let mut start = if p2 >= lo_odd {
                    p2
                } else {
                    let m = lo_odd.div_ceil(p) * p;
                    if m % 2 == 0 {
                        m + p
                    } else {
                        m
                    }
                };
                while start < hi {
                    composite[((start - lo_odd) / 2) as usize] = true;
                    start += 2 * p;
                }
            }
            primes.extend(
                composite
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| !c)
                    .map(|(i, _)| lo_odd + 2 * i as u64),
            );
        }
        SieveSegment { lo, hi, primes }
    }
}

impl Iterator for SegmentedSieve {
    type Item = SieveSegment;

    fn next(&mut self) -> Option<SieveSegment> {
        if self.next_lo >= self.limit {
            return None;
        }
        let lo = self.next_lo;
        let hi = lo.saturating_add(self.segment_size).min(self.limit);
        self.next_lo = hi;
        Some(self.segment(lo, hi))
    }
}

/// Stream the primes below `limit` in ascending segments of `segment_size`
/// integers. `limit < 2` gives an empty stream; a limit above
/// [`MAX_SIEVE_LIMIT`] or a zero segment size is rejected.
pub fn sieve_primes(limit: u64, segment_size: u64) -> Result<SegmentedSieve> {
    if limit > MAX_SIEVE_LIMIT {
        return Err(domain("sieve_primes", format!("limit {limit} exceeds {MAX_SIEVE_LIMIT}")));
    }
    if segment_size == 0 {
        return Err(domain("sieve_primes", "segment size must be positive"));
    }
    let base = simple_sieve(isqrt(limit) + 1).into_iter().filter(|&p| p > 2).collect();
    Ok(SegmentedSieve {
        limit,
        segment_size,
        next_lo: 2,
        base,
    })
}

/// All primes below `limit`.
pub fn primes_below(limit: u64) -> Result<Vec<u64>> {
    Ok(sieve_primes(limit, DEFAULT_SEGMENT_SIZE)?.flat_map(|s| s.primes).collect())
}

/// Sieve segments in parallel and map each with `f`; results are returned in
/// ascending segment order.
pub fn par_map_segments<T, F>(limit: u64, segment_size: u64, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&SieveSegment) -> T + Sync + Send,
{
    let sieve = sieve_primes(limit, segment_size)?;
    Ok(sieve
        .bounds()
        .into_par_iter()
        .map(|(lo, hi)| f(&sieve.segment(lo, hi)))
        .collect())
}
