//! Kronecker symbol, real primitive character tables and class numbers of
//! imaginary quadratic fields.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::lfunctions::l_value;
use crate::numerics::{pell_fundamental, PellUnit};

pub use crate::numerics::is_fundamental_discriminant as is_fundamental;

/// Jacobi symbol `(a/m)` for odd `m > 0`.
fn jacobi(a: i64, m: i64) -> i8 {
    debug_assert!(m > 0 && m % 2 == 1);
    let mut a = a.rem_euclid(m);
    let mut m = m;
    let mut t = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = m % 8;
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            t = -t;
        }
        a %= m;
    }
    if m == 1 {
        t
    } else {
        0
    }
}

/// Kronecker symbol without validating `d`.
pub(crate) fn kronecker_unchecked(d: i64, n: u64) -> i8 {
    let mut n = n;
    let mut result = 1i8;
    while n % 2 == 0 {
        // (d/2) = 0 for even d, else +1 for d ≡ ±1 and −1 for d ≡ ±3 (mod 8)
        match d.rem_euclid(8) {
            0 | 2 | 4 | 6 => return 0,
            1 | 7 => {}
            _ => result = -result,
        }
        n /= 2;
    }
    if n == 1 {
        return result;
    }
    result * jacobi(d, n as i64)
}

/// Kronecker symbol `(D/n)` for a fundamental discriminant `D` (or `±1`) and
/// `n ≥ 1`.
pub fn kronecker_symbol(d: i64, n: u64) -> Result<i8> {
    if !(d == 1 || d == -1 || is_fundamental(d)) {
        return Err(Error::NotFundamental(d));
    }
    if n == 0 {
        return Err(domain("kronecker_symbol", "n must be positive"));
    }
    Ok(kronecker_unchecked(d, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Values `χ_D(1), …, χ_D(|D|)` of the real primitive character of
/// discriminant `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub d: i64,
    pub modulus: u64,
    pub values: Vec<i8>,
    pub parity: Parity,
}

/// Largest modulus accepted by [`character_table`].
pub const MAX_TABLE_MODULUS: u64 = 1_000_000;

impl CharacterTable {
    /// `χ(n)` for any `n ≥ 0`, by periodicity.
    pub fn chi(&self, n: u64) -> i8 {
        let r = n % self.modulus;
        if r == 0 {
            self.values[self.values.len() - 1]
        } else {
            self.values[(r - 1) as usize]
        }
    }

    /// `(m, χ(m))` for `1 ≤ m ≤ |D|` with `χ(m) ≠ 0`.
    pub fn support(&self) -> impl Iterator<Item = (u64, i8)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i as u64 + 1, v))
    }

    fn verify(&self) -> Result<()> {
        let fail = |what: &str| domain("character_table", format!("D = {}: {what}", self.d));
        if self.d != 1 && self.values.iter().map(|&v| i64::from(v)).sum::<i64>() != 0 {
            return Err(fail("values do not sum to zero"));
        }
        let grid = self.modulus.min(60);
        for m in 1..=grid {
            for n in 1..=grid {
                if self.chi(m * n) != self.chi(m) * self.chi(n) {
                    return Err(fail("not completely multiplicative"));
                }
            }
        }
        if self.modulus > 2 && (self.chi(self.modulus - 1) == -1) != (self.d < 0) {
            return Err(fail("parity disagrees with the sign of D"));
        }
        Ok(())
    }
}

/// Build and verify the character table for a fundamental `D` (or `D = 1`).
pub fn character_table(d: i64) -> Result<CharacterTable> {
    if !(d == 1 || is_fundamental(d)) {
        return Err(Error::NotFundamental(d));
    }
    let modulus = d.unsigned_abs();
    if modulus > MAX_TABLE_MODULUS {
        return Err(domain("character_table", format!("|D| = {modulus} > {MAX_TABLE_MODULUS}")));
    }
    let values = (1..=modulus).map(|n| kronecker_unchecked(d, n)).collect();
    let table = CharacterTable {
        d,
        modulus,
        values,
        parity: if d < 0 { Parity::Odd } else { Parity::Even },
    };
    table.verify()?;
    Ok(table)
}

/// Class number data of `Q(√D)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadraticFieldData {
    pub d: i64,
    pub h: u64,
    /// Number of roots of unity.
    pub w: u32,
    #[serde(skip)]
    pub unit: Option<PellUnit>,
    /// `L_D(1)`.
    pub l1: f64,
    /// Distance of the class-number-formula value from the integer `h`.
    pub rounding_distance: f64,
}

/// Roots of unity in `Q(√D)`.
pub fn units_count(d: i64) -> u32 {
    match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// `h(D)` for `−10^4 < D < 0` from `h = w √|D| L_D(1)/(2π)`.
pub fn class_number(d: i64) -> Result<QuadraticFieldData> {
    if !(d < 0 && d > -10_000) {
        return Err(domain("class_number", format!("D = {d} outside (−10^4, 0)")));
    }
    if !is_fundamental(d) {
        return Err(Error::NotFundamental(d));
    }
    let l1 = l_value(d, 1.0)?.value;
    let w = units_count(d);
    let raw = f64::from(w) * (d.unsigned_abs() as f64).sqrt() * l1 / (2.0 * std::f64::consts::PI);
    let h = raw.round();
    let distance = (raw - h).abs();
    if distance > 0.01 || h < 1.0 {
        return Err(Error::ClassNumberRounding { d, raw, distance });
    }
    Ok(QuadraticFieldData {
        d,
        h: h as u64,
        w,
        unit: None,
        l1,
        rounding_distance: distance,
    })
}

/// `h(D)` for `D < 0` by counting reduced forms `(a, b, c)`:
/// `|b| ≤ a ≤ c`, with `b ≥ 0` when `|b| = a` or `a = c`.
pub fn class_number_forms(d: i64) -> Result<u64> {
    if d >= 0 || d.rem_euclid(4) > 1 {
        return Err(domain("class_number_forms", format!("D = {d} is not a negative discriminant")));
    }
    let n = d.unsigned_abs() as i64;
    let mut h = 0u64;
    let mut a = 1i64;
    while 3 * a * a <= n {
        for b in -a + 1..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            h += 1;
        }
        a += 1;
    }
    Ok(h)
}

/// Fundamental unit data for real quadratic fields (`D > 1`), with the
/// class number supplied by the caller.
pub fn real_quadratic_data(d: i64, h: u64) -> Result<QuadraticFieldData> {
    let unit = pell_fundamental(d)?;
    let l1 = l_value(d, 1.0)?.value;
    let raw = (d as f64).sqrt() * l1 / (2.0 * unit.regulator());
    Ok(QuadraticFieldData {
        d,
        h,
        w: 2,
        unit: Some(unit),
        l1,
        rounding_distance: (raw - h as f64).abs(),
    })
}
