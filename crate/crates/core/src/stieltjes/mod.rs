//! Generalized Stieltjes constants `γ_k(a)` and the Laurent summation engine.

mod integral;
mod oracle;
mod summatory;

pub use integral::{
    stieltjes_gamma, stieltjes_gamma_batch, stieltjes_laurent, LaurentCoefficients, MAX_ORDER,
};
pub use oracle::{stieltjes_oracle, MAX_ORACLE_ORDER};
pub use summatory::{
    convergence_profile, summatory_eval, ProfileRow, SummatoryResult, SummatorySpec,
    DEFAULT_N_MAX,
};
