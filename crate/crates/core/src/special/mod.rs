//! Scalar special functions.

mod bessel;
mod dilog;
mod gamma;
mod numbers;

pub use bessel::bessel_k0;
pub use dilog::{bloch_wigner, clausen2, dilog};
pub use gamma::{beta_integral, digamma, gamma, log_gamma, log_minus_digamma, polygamma};
pub use numbers::{bernoulli, bernoulli_f64, euler_number, sech_coefficient, MAX_TABLE_INDEX};

pub(crate) use numbers::bernoulli_over_factorial;
