//! Generalized Stieltjes constants, Hurwitz zeta values and quadratic Dirichlet
//! L-functions, each computable by more than one independent route, together
//! with an audit harness that checks summation identities between them.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`]: double-exponential quadrature, compensated summation,
//!   divisor sums, a segmented prime sieve and a Pell-equation solver.
//! * [`special`]: gamma family, Euler/Bernoulli numbers, Bessel `K0`,
//!   dilogarithm, Clausen and Bloch–Wigner functions.
//! * [`zeta`]: Hurwitz zeta and its `s`-derivative, the Riemann zeta function
//!   in the critical strip, Epstein zeta functions of binary quadratic forms.
//! * [`stieltjes`]: `γ_k(a)` from an integral representation, a
//!   limit-definition oracle and the Laurent summation engine.
//! * [`characters`]: Kronecker symbol, character tables, class numbers.
//! * [`lfunctions`]: `L_D(s)` by Hurwitz, Euler-product and functional-equation
//!   routes plus derived constants.
//! * [`primeprod`]: truncated Euler products restricted to residue classes.
//! * [`audit`]: the identity catalogue, ratio diagnostics and reports.

pub mod audit;
pub mod characters;
mod error;
pub mod lfunctions;
pub mod numerics;
pub mod primeprod;
mod rational;
pub mod special;
pub mod stieltjes;
pub mod zeta;

pub use error::{Error, Result};
pub use rational::Rational;

/// Euler's constant γ = γ_0(1).
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
