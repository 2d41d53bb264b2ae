//! Shared series accumulator implementing the common truncation rule.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::types::SeriesConfig;

/// Accumulates series terms and stops once `|term| < rtol * |sum|` has held
/// for `consecutive_small` terms in a row, or after `max_terms` terms.
pub(crate) struct TermSum {
    pub sum: f64,
    pub terms: usize,
    pub last_term: f64,
    small_run: usize,
    rtol: f64,
    max_terms: usize,
    consecutive_small: usize,
}

impl TermSum {
    pub fn new(cfg: &SeriesConfig) -> Self {
        TermSum {
            sum: 0.0,
            terms: 0,
            last_term: 0.0,
            small_run: 0,
            rtol: cfg.rtol,
            max_terms: cfg.max_terms,
            consecutive_small: cfg.consecutive_small,
        }
    }

    pub fn with_initial(cfg: &SeriesConfig, initial: f64) -> Self {
        let mut s = TermSum::new(cfg);
        s.sum = initial;
        s
    }

    /// Adds a term; returns `true` while more terms are wanted.
    pub fn push(&mut self, term: f64) -> bool {
        self.sum += term;
        self.terms += 1;
        self.last_term = term;
        if term.abs() < self.rtol * self.sum.abs() {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        self.small_run < self.consecutive_small && self.terms < self.max_terms
    }

    /// True if the stop came from the tolerance rule rather than the cap.
    pub fn converged(&self) -> bool {
        self.small_run >= self.consecutive_small
    }
}
