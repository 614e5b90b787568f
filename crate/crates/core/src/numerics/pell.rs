//! Fundamental units of real quadratic orders `Z[(D + √D)/2]`.

use crate::error::{Error, Result};

use super::arith::is_fundamental_discriminant;

/// Fundamental unit `ε = (x + y√D)/2` with `x² − D y² = ±4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PellUnit {
    pub d: i64,
    pub x: i128,
    pub y: i128,
    /// `x² − D y²`, either 4 or −4.
    pub norm: i8,
    pub unit_value: f64,
}

impl PellUnit {
    /// Exact check of the norm condition.
    pub fn satisfies_norm(&self) -> bool {
        let lhs = self
            .x
            .checked_mul(self.x)
            .zip(self.y.checked_mul(self.y).and_then(|y2| y2.checked_mul(self.d as i128)))
            .and_then(|(a, b)| a.checked_sub(b));
        (self.norm == 4 || self.norm == -4) && lhs == Some(self.norm as i128)
    }

    /// `ln ε`, the regulator.
    pub fn regulator(&self) -> f64 {
        self.unit_value.ln()
    }
}

fn isqrt_i128(n: i128) -> i128 {
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Convergents `(p, q)` of the continued fraction of `ω = (b + √D)/2`,
/// `b = D mod 2`, in order. Stops after `max_terms` or on overflow.
pub(crate) fn omega_convergents(d: i64, max_terms: usize) -> Result<Vec<(i128, i128)>> {
    let dd = d as i128;
    let s = isqrt_i128(dd);
    let b = dd.rem_euclid(2);
    let (mut p, mut q) = (b, 2i128);
    let (mut a_prev, mut a_cur) = (0i128, 1i128); // A_{-2}, A_{-1}
    let (mut b_prev, mut b_cur) = (1i128, 0i128);
    let mut out = Vec::with_capacity(max_terms);
    let ovf = || Error::Overflow("pell_fundamental");
    for _ in 0..max_terms {
        // floor((p + √D)/q), exact because √D is irrational
        let a = if q > 0 {
            (p + s).div_euclid(q)
        } else {
            -((p + s).div_euclid(-q)) - 1
        };
        let a_next = a.checked_mul(a_cur).and_then(|v| v.checked_add(a_prev)).ok_or_else(ovf)?;
        let b_next = a.checked_mul(b_cur).and_then(|v| v.checked_add(b_prev)).ok_or_else(ovf)?;
        a_prev = a_cur;
        a_cur = a_next;
        b_prev = b_cur;
        b_cur = b_next;
        out.push((a_cur, b_cur));
        let p_next = a * q - p;
        q = (dd - p_next * p_next) / q;
        p = p_next;
    }
    Ok(out)
}

/// Smallest unit `> 1` of the maximal order of `Q(√D)`, read off the first
/// convergent of `(b + √D)/2` whose norm is ±4 in the half-integer convention.
pub fn pell_fundamental(d: i64) -> Result<PellUnit> {
    if d <= 1 || !is_fundamental_discriminant(d) {
        return Err(Error::NotFundamental(d));
    }
    let dd = d as i128;
    let b = dd.rem_euclid(2);
    let mut terms = 16usize;
    loop {
        for (p, q) in omega_convergents(d, terms)? {
            let x = p
                .checked_mul(2)
                .and_then(|v| v.checked_sub(b * q))
                .ok_or(Error::Overflow("pell_fundamental"))?;
            let y = q;
            if x <= 0 || y <= 0 {
                continue;
            }
            let n = x
                .checked_mul(x)
                .zip(y.checked_mul(y).and_then(|v| v.checked_mul(dd)))
                .and_then(|(a, c)| a.checked_sub(c))
                .ok_or(Error::Overflow("pell_fundamental"))?;
            if n == 4 || n == -4 {
                let unit_value = (x as f64 + y as f64 * (d as f64).sqrt()) / 2.0;
                return Ok(PellUnit {
                    d,
                    x,
                    y,
                    norm: n as i8,
                    unit_value,
                });
            }
        }
        // the period of the expansion is O(√D log D); grow until found or overflow
        terms *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest `y ≥ 1` with `D y² ± 4` a perfect square, if below `cap`.
    fn brute(d: i64, cap: i128) -> Option<(i128, i128)> {
        let dd = d as i128;
        for y in 1i128..cap {
            for sgn in [-4i128, 4] {
                let t = dd * y * y + sgn;
                if t > 0 {
                    let x = isqrt_i128(t);
                    if x * x == t {
                        return Some((x, y));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn small_examples() {
        let u = pell_fundamental(5).unwrap();
        assert_eq!((u.x, u.y, u.norm), (1, 1, -4));
        assert!((u.unit_value - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);
        let u = pell_fundamental(8).unwrap();
        assert!((u.unit_value - (1.0 + 2f64.sqrt())).abs() < 1e-15);
        let u = pell_fundamental(12).unwrap();
        assert!((u.unit_value - (2.0 + 3f64.sqrt())).abs() < 1e-15);
        assert_eq!(u.norm, 4);
    }

    #[test]
    fn rejects_bad_input() {
        for d in [4, 9, 20, 1, 0, -3] {
            assert!(pell_fundamental(d).is_err(), "{d}");
        }
    }

    #[test]
    fn matches_brute_force() {
        for d in (2..400).filter(|&d| is_fundamental_discriminant(d)) {
            let u = pell_fundamental(d).unwrap();
            if let Some((bx, by)) = brute(d, 200_000) {
                assert_eq!((u.x, u.y), (bx, by), "D={d}");
            } else {
                assert!(u.y >= 200_000, "D={d}");
            }
            assert!(u.satisfies_norm());
            assert!(u.unit_value > 1.0);
        }
    }

    #[test]
    fn no_earlier_convergent_is_a_unit() {
        for d in [13i64, 29, 61, 109, 157] {
            let u = pell_fundamental(d).unwrap();
            let b = (d % 2) as i128;
            for (p, q) in omega_convergents(d, 40).unwrap() {
                if q >= u.y {
                    break;
                }
                let x = 2 * p - b * q;
                let n = x * x - d as i128 * q * q;
                assert!(n.abs() != 4 || x <= 0, "D={d} q={q}");
            }
        }
    }

    #[test]
    fn long_period() {
        // ε = 16266196520 + 1153080099·√199
        let u = pell_fundamental(796).unwrap();
        assert!(u.satisfies_norm());
        assert_eq!((u.x, u.y, u.norm), (32_532_393_040, 1_153_080_099, 4));
        let u = pell_fundamental(61).unwrap();
        assert_eq!((u.x, u.y, u.norm), (39, 5, -4));
    }
}
