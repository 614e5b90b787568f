//! Hurwitz zeta, the Riemann zeta function in the critical strip, and
//! Epstein zeta functions of binary quadratic forms.

mod crit_strip;
mod epstein;
mod hurwitz;

pub use crit_strip::{
    de_bruijn_log_integral, zeta_bounds, zeta_crit_strip, zeta_crit_strip_ds,
    zeta_crit_strip_with_error, ZetaBounds,
};
pub use epstein::{epstein_partial_zeta, epstein_zeta_2_series, QuadForm};
pub use hurwitz::{
    hurwitz_em, hurwitz_zeta, hurwitz_zeta_ds, hurwitz_zeta_ds_regularized,
    hurwitz_zeta_with_error, initial_params, HurwitzParams,
};
