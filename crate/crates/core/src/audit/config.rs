use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use chrono::{DateTime, SecondsFormat, Utc};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How displayed identities are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Signs, prefactors and conventions exactly as printed.
    Literal,
    /// Every series normalized through the Laurent expansion of `ζ(s, a)`
    /// at `s = 1`, with the corrected prefactors.
    Audited,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Literal => "literal",
            Mode::Audited => "audited",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(Mode::Literal),
            "audited" => Ok(Mode::Audited),
            _ => Err(Error::Parse {
                token: s.to_string(),
                msg: "expected literal or audited".into(),
            }),
        }
    }
}

pub const DEFAULT_SIEVE_LIMIT: u64 = 10_000_000;
pub const DEFAULT_QUAD_TARGET: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub mode: Mode,
    /// Primes below this bound enter every truncated product.
    pub sieve_limit: u64,
    /// Absolute target for quadrature routes.
    pub quad_target: f64,
    /// Minimum number of Stieltjes terms; checks raise it where the
    /// argument needs more.
    pub n_max: usize,
    /// Glob over check ids; `None` selects every check.
    pub filter: Option<String>,
    /// Angle in the Clausen combination for `D = −7`.
    pub theta7: f64,
    /// Exponent in `e^{−πn·e}` of the `σ_{−3}` series for `D = −23`.
    pub sigma_exponent: f64,
    /// ISO-8601 UTC timestamp recorded in the report; `None` keeps reports
    /// byte-identical across runs.
    pub timestamp: Option<String>,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            mode: Mode::Audited,
            sieve_limit: DEFAULT_SIEVE_LIMIT,
            quad_target: DEFAULT_QUAD_TARGET,
            n_max: crate::stieltjes::DEFAULT_N_MAX,
            filter: None,
            theta7: 2.0 * 7f64.sqrt().atan(),
            sigma_exponent: 23f64.sqrt(),
            timestamp: None,
        }
    }
}

impl AuditConfig {
    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_filter(mut self, filter: &str) -> Self {
        self.filter = Some(filter.to_string());
        self
    }

    /// Record the current time.
    pub fn with_timestamp_now(mut self) -> Self {
        self.timestamp = Some(Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true));
        self
    }

    /// Record a given time, normalized to UTC.
    pub fn with_timestamp(mut self, ts: &str) -> Result<Self> {
        let t = DateTime::parse_from_rfc3339(ts).map_err(|e| Error::Parse {
            token: ts.to_string(),
            msg: format!("not an ISO-8601 timestamp: {e}"),
        })?;
        self.timestamp = Some(t.with_timezone(&Utc).to_rfc3339_opts(SecondsFormat::Secs, true));
        Ok(self)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.sieve_limit < crate::primeprod::MIN_LIMIT {
            return Err(crate::error::domain("audit", "sieve limit below 100"));
        }
        if !(self.quad_target > 0.0) {
            return Err(crate::error::domain("audit", "quadrature target must be positive"));
        }
        if !(self.theta7 > 0.0 && self.theta7 < TAU) {
            return Err(crate::error::domain("audit", "theta7 outside (0, 2π)"));
        }
        if !(self.sigma_exponent > 0.0) {
            return Err(crate::error::domain("audit", "sigma exponent must be positive"));
        }
        if let Some(f) = &self.filter {
            glob::Pattern::new(f).map_err(|e| Error::Parse {
                token: f.clone(),
                msg: e.to_string(),
            })?;
        }
        Ok(())
    }
}
