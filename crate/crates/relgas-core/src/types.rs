//! Shared plumbing: statistics selector, series truncation control,
//! evaluation outcomes and the crate error type.

use core::fmt;

/// Quantum statistics selector.
///
/// Carries the sign `alpha` that enters the occupation factor
/// `1/(e^{x-nu} - alpha)`: `-1` for fermions, `+1` for bosons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistics {
    Fermion,
    Boson,
}

impl Statistics {
    /// Occupation-factor sign: `-1.0` for fermions, `+1.0` for bosons.
    pub fn alpha(self) -> f64 {
        match self {
            Statistics::Fermion => -1.0,
            Statistics::Boson => 1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Statistics::Fermion => "fermion",
            Statistics::Boson => "boson",
        }
    }
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Truncation control for all series evaluations.
///
/// A series is stopped once `|term| < rtol * |partial sum|` has held for
/// `consecutive_small` terms in a row (guarding against accidental zeros of
/// oscillating terms), or after `max_terms` terms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesConfig {
    pub rtol: f64,
    pub max_terms: usize,
    pub consecutive_small: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            rtol: 1e-12,
            max_terms: 256,
            consecutive_small: 3,
        }
    }
}

impl SeriesConfig {
    pub fn with_rtol(rtol: f64) -> Self {
        SeriesConfig {
            rtol,
            ..SeriesConfig::default()
        }
    }

    /// Configuration for the high-temperature `k`-sums: the constant cache
    /// holds 64 entries and two consecutive small terms end the sum.
    pub fn high_t(rtol: f64) -> Self {
        SeriesConfig {
            rtol,
            max_terms: 64,
            consecutive_small: 2,
        }
    }

    pub fn max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }
}

/// Which evaluation route produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// High-temperature even/odd series.
    HighT,
    /// Polylogarithm resummation of the pressure.
    PolylogForm,
    /// Modified-Bessel fugacity series.
    Bessel,
    /// Nonrelativistic polylogarithm series.
    NonRelativistic,
    /// Adaptive Gauss-Kronrod quadrature.
    Quadrature,
    /// Plain convergent series (internal special-function evaluations).
    Series,
    /// Asymptotic series truncated at its smallest term.
    Asymptotic,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::HighT => "high_t",
            Method::PolylogForm => "polylog",
            Method::Bessel => "bessel",
            Method::NonRelativistic => "nonrel",
            Method::Quadrature => "quadrature",
            Method::Series => "series",
            Method::Asymptotic => "asymptotic",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Quality flags attached to a successful evaluation. Out-of-domain inputs
/// are reported as errors, never silently flagged.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalFlags {
    /// Input lies within 2% of a series domain boundary, or an asymptotic
    /// series could not reach the requested tolerance.
    pub degraded_accuracy: bool,
    /// Geometric decay rate of the series is poor (many terms needed).
    pub slow_convergence: bool,
}

impl EvalFlags {
    pub fn is_empty(self) -> bool {
        !self.degraded_accuracy && !self.slow_convergence
    }

    pub fn merge(self, other: EvalFlags) -> EvalFlags {
        EvalFlags {
            degraded_accuracy: self.degraded_accuracy || other.degraded_accuracy,
            slow_convergence: self.slow_convergence || other.slow_convergence,
        }
    }
}

impl fmt::Display for EvalFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.degraded_accuracy, self.slow_convergence) {
            (false, false) => f.write_str("-"),
            (true, false) => f.write_str("degraded"),
            (false, true) => f.write_str("slow"),
            (true, true) => f.write_str("degraded+slow"),
        }
    }
}

/// A value together with how it was obtained and how much to trust it.
#[derive(Clone, Copy, Debug)]
pub struct EvalOutcome {
    pub value: f64,
    pub method: Method,
    pub terms_used: usize,
    /// Truncation-error estimate (last retained term times a
    /// domain-proximity factor, or the quadrature error bound). Always >= 0.
    pub error_estimate: f64,
    pub flags: EvalFlags,
}

impl EvalOutcome {
    pub fn new(value: f64, method: Method, terms_used: usize, error_estimate: f64) -> Self {
        EvalOutcome {
            value,
            method,
            terms_used,
            error_estimate,
            flags: EvalFlags::default(),
        }
    }

    /// An exactly known value (closed form), zero error estimate.
    pub fn exact(value: f64, method: Method) -> Self {
        EvalOutcome::new(value, method, 0, 0.0)
    }

    pub fn with_flags(mut self, flags: EvalFlags) -> Self {
        self.flags = flags;
        self
    }
}

/// Errors shared by every module of the crate.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Pole of a special function (Gamma/digamma at nonpositive integers,
    /// `Li_{-2m}(e^z)` at `z = 0`, zeta at 1).
    Pole { arg: f64 },
    /// An index beyond what the constant cache was built for.
    CacheRange { index: usize, max: usize },
    /// Power-series argument at or outside its radius of convergence.
    Divergent { arg: f64, radius: f64 },
    /// Input outside the validity domain of the requested expansion.
    OutOfDomain {
        what: &'static str,
        value: f64,
        bound: f64,
    },
    /// Physically invalid state (nonpositive temperature, boson with
    /// `mu > m`, negative mass, ...).
    InvalidState { what: &'static str, value: f64 },
    /// Adaptive quadrature exhausted its subdivision budget.
    QuadratureNoConverge { error_estimate: f64, tolerance: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { arg } => write!(f, "pole at argument {arg}"),
            Error::CacheRange { index, max } => {
                write!(f, "index {index} outside constant cache (max {max})")
            }
            Error::Divergent { arg, radius } => {
                write!(f, "series divergent at {arg} (radius {radius})")
            }
            Error::OutOfDomain { what, value, bound } => {
                write!(f, "{what} = {value} outside domain (bound {bound})")
            }
            Error::InvalidState { what, value } => {
                write!(f, "invalid state: {what} = {value}")
            }
            Error::QuadratureNoConverge {
                error_estimate,
                tolerance,
            } => write!(
                f,
                "quadrature did not converge: error {error_estimate} > tolerance {tolerance}"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
