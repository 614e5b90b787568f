//! Foundational numeric utilities.

mod arith;
mod pell;
mod quadrature;
mod sieve;
mod summation;

pub use arith::{divisor_sigma, divisors, is_fundamental_discriminant, is_prime_u64};
pub use pell::{pell_fundamental, PellUnit};
pub use quadrature::{
    de_quadrature, de_quadrature_vec, Domain, QuadratureResult, VecQuadratureResult,
    DEFAULT_MAX_LEVEL,
};
pub use sieve::{
    par_map_segments, primes_below, sieve_primes, SegmentedSieve, SieveSegment,
    DEFAULT_SEGMENT_SIZE, MAX_SIEVE_LIMIT,
};
pub use summation::{compensated_sum, CompensatedSum};
