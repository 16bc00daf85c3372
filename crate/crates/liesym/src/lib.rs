//! Symbolic Lie-symmetry and equivalence-transformation calculus for the
//! class of (1+1)-dimensional diffusion-reaction equations
//! `u_t = f(u_x) u_xx + g(u)`, together with a verification harness covering
//! symmetry tables, equivalence-group families, commutation relations, Lie
//! reductions and exact solutions.

pub mod expr;
pub mod jet;
pub mod symmetry;
pub mod equivalence;
pub mod reduction;
pub mod harness;

pub use expr::{Expr, ExprError};

#[cfg(test)]
mod symmetry_tests;

#[cfg(test)]
mod equivalence_tests;

#[cfg(test)]
mod reduction_tests;
