//! Zero testing.
//!
//! `proved_zero` is syntactic: the canonical form (after clearing
//! denominators) is the literal 0. Numeric probing only ever *refutes* zero;
//! it is never taken as a proof.

use super::ast::Expr;
use super::numeric::{eval, sample_point, ProbeSpec};
use super::rational::fraction_numerator;
use super::simplify::simplify;

pub const PROBES_PER_CALL: usize = 20;
pub const NONZERO_THRESHOLD: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    ProvedZero,
    ProbedNonzero,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct ZeroTester {
    pub seed: u64,
    pub spec: ProbeSpec,
}

impl Default for ZeroTester {
    fn default() -> Self {
        ZeroTester {
            seed: 42,
            spec: ProbeSpec::default(),
        }
    }
}

impl ZeroTester {
    pub fn with_seed(seed: u64) -> Self {
        ZeroTester {
            seed,
            spec: ProbeSpec::default(),
        }
    }

    pub fn sign_symbol(mut self, name: &str) -> Self {
        self.spec.sign_symbols.push(name.to_string());
        self
    }

    pub fn verdict(&self, e: &Expr) -> Verdict {
        let fold = |mut e: Expr| {
            for s in &self.spec.sign_symbols {
                e = super::rational::fold_unit_square(&e, s);
            }
            e
        };
        let s = fold(simplify(e));
        if s.is_zero() {
            return Verdict::ProvedZero;
        }
        let num = fold(fraction_numerator(&s));
        if num.is_zero() {
            return Verdict::ProvedZero;
        }
        if self.probes_nonzero(&s) || self.probes_nonzero(&num) {
            return Verdict::ProbedNonzero;
        }
        Verdict::Unknown
    }

    pub fn proved_zero(&self, e: &Expr) -> bool {
        self.verdict(e) == Verdict::ProvedZero
    }

    pub fn probed_nonzero(&self, e: &Expr) -> bool {
        self.verdict(e) == Verdict::ProbedNonzero
    }

    /// Cancellation-aware nonzero probe: the value must stand out against the
    /// magnitudes of the top-level terms.
    fn probes_nonzero(&self, e: &Expr) -> bool {
        let mut hits = 0usize;
        let mut attempts = 0usize;
        let mut k = 0u64;
        while hits < PROBES_PER_CALL && attempts < PROBES_PER_CALL * 10 {
            attempts += 1;
            let point = sample_point(e, self.seed.wrapping_add(k), &self.spec);
            k += 1;
            let val = match eval(e, &point) {
                Ok(v) => v,
                Err(_) => continue,
            };
            let mut scale = 0.0f64;
            if let Expr::Sum(ts) = e {
                for t in ts {
                    if let Ok(tv) = eval(t, &point) {
                        scale += tv.abs();
                    }
                }
            } else {
                scale = val.abs();
            }
            hits += 1;
            if val.abs() > NONZERO_THRESHOLD * (1.0 + scale) {
                return true;
            }
        }
        false
    }
}

/// Verdict with the default tester (seed 42, no sign symbols).
pub fn is_zero(e: &Expr) -> Verdict {
    ZeroTester::default().verdict(e)
}
