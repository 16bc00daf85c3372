//! Canonical-form symbolic expression kernel: construction, parsing,
//! printing, simplification, differentiation, substitution, numeric
//! evaluation, zero testing and coefficient extraction.

pub mod ast;
pub mod calculus;
pub mod collect;
pub mod numeric;
pub mod parse;
pub mod rational;
pub mod render;
pub mod simplify;
pub mod zero;

pub use ast::{int, ratio, sym, App, Expr, Func, Rat};
pub use calculus::{derive, diff, diff_n, substitute, Binding};
pub use collect::{coefficient_of, collect_coefficients, collect_laurent};
pub use numeric::{eval, sample_point, NumericPoint, ProbeSpec};
pub use parse::parse;
pub use rational::{as_fraction, contains_node, fraction_numerator, replace_node, strip_common_factors};
pub use render::render;
pub use simplify::{add, add2, div, fun, mul, mul2, neg, pow, simplify, sub};
pub use zero::{is_zero, Verdict, ZeroTester};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ExprError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown jet-variable name '{name}'")]
    UnknownJetVariable { name: String },
    #[error("conflicting bindings for '{target}'")]
    ConflictingBindings { target: String },
    #[error("expression is not polynomial in {atom}: {expr}")]
    NonPolynomial { atom: String, expr: String },
    #[error("unbound symbol '{name}' in numeric evaluation")]
    UnboundSymbol { name: String },
    #[error("domain violation: {detail}")]
    Domain { detail: String },
}

/// Parse, panicking on failure. For statically known catalog strings.
pub fn x(text: &str) -> Expr {
    parse(text).unwrap_or_else(|err| panic!("bad expression {text:?}: {err}"))
}

#[cfg(test)]
mod tests;
