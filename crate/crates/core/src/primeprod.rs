//! Truncated Euler products over primes in residue classes.
//!
//! A minus-type residue `r` contributes `Π_{p ≡ r} (p^s − 1)/(p^s + 1)`, a
//! plus-type residue the reciprocal. Products are accumulated as sums of
//! `ln(1 − p^{−s}) − ln(1 + p^{−s})` per sieve segment and reduced in
//! segment order.

use serde::{Deserialize, Serialize};

use crate::characters::character_table;
use crate::error::{domain, Result};
use crate::lfunctions::l_value;
use crate::numerics::{compensated_sum, par_map_segments, CompensatedSum, DEFAULT_SEGMENT_SIZE};
use crate::zeta::hurwitz_zeta;

/// Smallest accepted sieve limit.
pub const MIN_LIMIT: u64 = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidueProductSpec {
    pub modulus: u64,
    /// Residues with factor `(p^s − 1)/(p^s + 1)`.
    pub minus: Vec<u64>,
    /// Residues with factor `(p^s + 1)/(p^s − 1)`.
    pub plus: Vec<u64>,
    pub s: f64,
    /// Primes `p < limit` are used.
    pub limit: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl ResidueProductSpec {
    pub fn new(modulus: u64, minus: &[u64], plus: &[u64], s: f64, limit: u64) -> Self {
        ResidueProductSpec {
            modulus,
            minus: minus.to_vec(),
            plus: plus.to_vec(),
            s,
            limit,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.s > 1.0) || !self.s.is_finite() {
            return Err(domain("residue_product", format!("s = {} must exceed 1", self.s)));
        }
        if self.modulus < 2 {
            return Err(domain("residue_product", "modulus must be at least 2"));
        }
        if self.limit < MIN_LIMIT {
            return Err(domain("residue_product", format!("limit must be at least {MIN_LIMIT}")));
        }
        let mut seen = vec![false; self.modulus as usize];
        for &r in self.minus.iter().chain(&self.plus) {
            if r >= self.modulus || gcd(r, self.modulus) != 1 {
                return Err(domain(
                    "residue_product",
                    format!("residue {r} is not a unit mod {}", self.modulus),
                ));
            }
            if std::mem::replace(&mut seen[r as usize], true) {
                return Err(domain("residue_product", format!("residue {r} listed twice")));
            }
        }
        Ok(())
    }

    /// Sign of the log-factor for residue `r`: −1 minus, +1 plus, 0 unused.
    fn orientation(&self) -> Vec<i8> {
        let mut o = vec![0i8; self.modulus as usize];
        for &r in &self.minus {
            o[r as usize] = -1;
        }
        for &r in &self.plus {
            o[r as usize] = 1;
        }
        o
    }
}

/// Upper bound for `Σ_{p ≥ L} p^{−s}` (`s > 1`, `L ≥ 17`) from
/// `x/ln x ≤ π(x) ≤ x/ln x·(1 + 1.2762/ln x)`:
/// `L^{1−s}/ln L·[s(1 + 1.2762/ln L)/(s − 1) − 1] + L^{−s}`.
pub fn prime_zeta_tail(s: f64, limit: u64) -> f64 {
    let l = limit as f64;
    let ln = l.ln();
    l.powf(1.0 - s) / ln * (s * (1.0 + 1.2762 / ln) / (s - 1.0) - 1.0) + l.powf(-s)
}

/// Bound on `Σ_{p ≥ L} |ln((p^s − 1)/(p^s + 1))|`, counting every prime
/// beyond the limit regardless of residue class.
pub fn log_tail_bound(s: f64, limit: u64) -> f64 {
    let x = (limit as f64).powf(-s);
    2.0 * prime_zeta_tail(s, limit) / (1.0 - x * x)
}

/// `(value, log_tail_bound)`: the truncated product and a bound on
/// `|ln(full product) − ln(value)|`.
pub fn residue_product(spec: &ResidueProductSpec) -> Result<(f64, f64)> {
    spec.validate()?;
    let o = spec.orientation();
    let m = spec.modulus;
    let s = spec.s;
    let parts = par_map_segments(spec.limit, DEFAULT_SEGMENT_SIZE, |seg| {
        let mut acc = CompensatedSum::new();
        for &p in &seg.primes {
            let sign = o[(p % m) as usize];
            if sign != 0 {
                let x = (p as f64).powf(-s);
                // ln(1 + x) − ln(1 − x) for plus-type, negated for minus-type
                acc.add(f64::from(sign) * (x.ln_1p() - (-x).ln_1p()));
            }
        }
        acc.value()
    })?;
    Ok((compensated_sum(parts).exp(), log_tail_bound(s, spec.limit)))
}

/// Residues `r mod |D|` with `(D/r) = −1`; the primes in these classes are
/// the inert primes of `Q(√D)`.
pub fn inert_residues(d: i64) -> Result<Vec<u64>> {
    let t = character_table(d)?;
    Ok(t.support().filter(|&(_, c)| c < 0).map(|(r, _)| r).collect())
}

/// Closed-form value of `Π_{(D/p) = −1} (p^s − 1)/(p^s + 1)`:
/// `L_D(s) / (ζ(s) Π_{p | D} (1 − p^{−s}))`.
pub fn euler_product_ratio(d: i64, s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(domain("euler_product_ratio", format!("s = {s} must exceed 1")));
    }
    let l = l_value(d, s)?.value;
    let z = hurwitz_zeta(s, 1.0)?;
    let mut ramified = 1.0;
    let mut n = d.unsigned_abs();
    let mut p = 2;
    while n > 1 {
        if n % p == 0 {
            ramified *= 1.0 - (p as f64).powf(-s);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    Ok(l / (z * ramified))
}

/// Spec for the inert-prime product of `D` with every class minus-type.
pub fn inert_product_spec(d: i64, s: f64, limit: u64) -> Result<ResidueProductSpec> {
    Ok(ResidueProductSpec::new(
        d.unsigned_abs(),
        &inert_residues(d)?,
        &[],
        s,
        limit,
    ))
}
