//! Laurent-series summation `Σ_n (−x)^n/n! Σ_j c_j γ_n(a_j)` against its
//! closed form `Σ_j c_j [ζ(1+x, a_j) − 1/x]`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::numerics::CompensatedSum;
use crate::special::digamma;
use crate::zeta::hurwitz_zeta_with_error;
use crate::Rational;

use super::integral::stieltjes_gamma_batch;

/// Default partial-sum cutoff.
pub const DEFAULT_N_MAX: usize = 40;

/// A linear combination of Laurent series evaluated at `s − 1 = x`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummatorySpec {
    /// `(coefficient, a)` pairs.
    pub terms: Vec<(Rational, Rational)>,
    pub x: f64,
    pub n_max: usize,
    /// Permit `x = 0` with a non-cancelling combination; the value is then the
    /// `x → 0` limit `Σ c_j γ_0(a_j)`.
    pub allow_pole: bool,
}

impl SummatorySpec {
    pub fn new(terms: Vec<(Rational, Rational)>, x: f64) -> Self {
        SummatorySpec {
            terms,
            x,
            n_max: DEFAULT_N_MAX,
            allow_pole: false,
        }
    }

    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }

    fn coefficient_sum(&self) -> f64 {
        self.terms.iter().map(|(c, _)| c.to_f64()).sum()
    }

    fn validate(&self) -> Result<()> {
        if !self.x.is_finite() {
            return Err(domain("summatory_eval", format!("x = {}", self.x)));
        }
        if self.x == 0.0 && self.coefficient_sum() != 0.0 && !self.allow_pole {
            return Err(domain(
                "summatory_eval",
                "x = 0 with coefficients that do not cancel the pole",
            ));
        }
        if self.terms.iter().any(|(_, a)| a.to_f64() <= 0.0) {
            return Err(domain("summatory_eval", "every shift a must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummatoryResult {
    pub closed_form: f64,
    pub closed_form_error: f64,
    /// `S_N` for `N = 0..=n_max`.
    pub partial_sums: Vec<f64>,
    /// Propagated error of each `S_N` from the `γ_n` estimates.
    pub partial_errors: Vec<f64>,
}

impl SummatoryResult {
    pub fn last_partial(&self) -> f64 {
        self.partial_sums.last().copied().unwrap_or(0.0)
    }
}

fn closed_form(spec: &SummatorySpec) -> Result<(f64, f64)> {
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    for (c, a) in &spec.terms {
        let c = c.to_f64();
        if spec.x == 0.0 {
            acc.add(-c * digamma(a.to_f64())?);
        } else {
            let (z, e) = hurwitz_zeta_with_error(1.0 + spec.x, a.to_f64())?;
            acc.add(c * z);
            err += c.abs() * e;
        }
    }
    if spec.x != 0.0 {
        acc.add(-spec.coefficient_sum() / spec.x);
    }
    Ok((acc.value(), err))
}

/// Closed form and partial sums for `spec`.
pub fn summatory_eval(spec: &SummatorySpec) -> Result<SummatoryResult> {
    spec.validate()?;
    let (closed, closed_err) = closed_form(spec)?;
    let n = spec.n_max;
    let batches: Vec<Vec<(f64, f64)>> = spec
        .terms
        .par_iter()
        .map(|(_, a)| stieltjes_gamma_batch(n, a.to_f64()))
        .collect::<Result<_>>()?;
    let mut partial_sums = Vec::with_capacity(n + 1);
    let mut partial_errors = Vec::with_capacity(n + 1);
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    let mut weight = 1.0; // (−x)^k / k!
    for k in 0..=n {
        let mut inner = CompensatedSum::new();
        let mut inner_err = 0.0;
        for ((c, _), b) in spec.terms.iter().zip(&batches) {
            inner.add(c.to_f64() * b[k].0);
            inner_err += c.to_f64().abs() * b[k].1;
        }
        acc.add(weight * inner.value());
        err += weight.abs() * inner_err;
        partial_sums.push(acc.value());
        partial_errors.push(err);
        weight *= -spec.x / (k as f64 + 1.0);
    }
    Ok(SummatoryResult {
        closed_form: closed,
        closed_form_error: closed_err,
        partial_sums,
        partial_errors,
    })
}

/// One row of [`convergence_profile`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfileRow {
    pub n: usize,
    pub partial_sum: f64,
    pub abs_diff: f64,
}

/// `(N, S_N, |S_N − closed form|)` for `N = 0..=n_max`.
pub fn convergence_profile(spec: &SummatorySpec) -> Result<Vec<ProfileRow>> {
    let r = summatory_eval(spec)?;
    Ok(r.partial_sums
        .iter()
        .enumerate()
        .map(|(n, &p)| ProfileRow {
            n,
            partial_sum: p,
            abs_diff: (p - r.closed_form).abs(),
        })
        .collect())
}
