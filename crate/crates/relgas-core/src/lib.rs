//! Thermodynamics of ideal relativistic Fermi and Bose gases.
//!
//! The central object is the dimensionless pressure integral
//!
//! ```text
//! I_P(lambda, nu) = 1/(6 pi^2) * Int_lambda^inf (x^2 - lambda^2)^{3/2} / (e^{x - nu} - alpha) dx
//! ```
//!
//! with `lambda = m/T`, `nu = mu/T` and `alpha = -1` (fermions) or `+1`
//! (bosons). The pressure, particle number density, scalar density, entropy
//! density and energy density all follow from `I_P` and its first
//! derivatives.
//!
//! Four evaluation routes are provided and cross-validated:
//!
//! * [`hightemp`] — even/odd high-temperature series in `lambda` and `nu`,
//!   convergent for `lambda + |nu| < pi` (fermions), plus a polylogarithm
//!   resummation of the same function and a Bernoulli/polygamma form of the
//!   fermion even part used as an algebraic cross-check.
//! * [`bessel`] — the `K_2` series over fugacity powers, fast for
//!   `lambda >> 1`, with a nonrelativistic polylogarithm refinement.
//! * [`polylog`] — polylogarithm evaluation machinery: direct power series,
//!   small-argument expansions around `e^z` and `-e^z`, negative-even-order
//!   closed forms, order-derivatives and the large-`z` asymptotic series.
//! * [`oracle`] — adaptive Gauss-Kronrod quadrature of the defining
//!   integrals; slow but total, used as ground truth everywhere.
//!
//! [`eos::evaluate`] ties the routes together behind automatic regime
//! selection and returns dimensional quantities in natural units
//! (`hbar = c = k_B = 1`, a single energy unit for all inputs).
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature to use it in that mode.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bessel;
pub mod eos;
pub mod hightemp;
pub mod oracle;
pub mod polylog;
pub mod specfun;
pub mod verify;

mod series;
mod types;

pub use types::{Error, EvalFlags, EvalOutcome, Method, Result, SeriesConfig, Statistics};
