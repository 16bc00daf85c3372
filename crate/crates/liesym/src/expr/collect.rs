//! Polynomial coefficient extraction with respect to a chosen atom.

use super::ast::Expr;
use super::simplify::{add, mul};
use super::ExprError;
use num_traits::ToPrimitive;

/// Occurrence test honoring the opacity of unspecified-head arguments and
/// antiderivative bodies: `f(u_x)` does not count as an occurrence of `u_x`
/// for splitting purposes.
fn occurs_outside_opaque(e: &Expr, atom: &Expr) -> bool {
    if e == atom {
        return true;
    }
    match e {
        Expr::Num(_) | Expr::Sym(_) => false,
        Expr::Pow(b, x) => occurs_outside_opaque(b, atom) || occurs_outside_opaque(x, atom),
        Expr::Fun(_, a) => occurs_outside_opaque(a, atom),
        Expr::App(_) | Expr::Integral(_, _) => false,
        Expr::Sum(ts) | Expr::Prod(ts) => ts.iter().any(|t| occurs_outside_opaque(t, atom)),
    }
}

fn split_term(t: &Expr, atom: &Expr) -> Result<(i64, Expr), ExprError> {
    let non_poly = || ExprError::NonPolynomial {
        atom: super::render::render(atom),
        expr: super::render::render(t),
    };
    let factors: Vec<Expr> = match t {
        Expr::Prod(fs) => fs.clone(),
        other => vec![other.clone()],
    };
    let mut exponent: i64 = 0;
    let mut coeff_factors: Vec<Expr> = Vec::new();
    for f in factors {
        if f == *atom {
            exponent += 1;
            continue;
        }
        if let Expr::Pow(b, x) = &f {
            if **b == *atom {
                let k = x
                    .as_int()
                    .and_then(|k| k.to_i64())
                    .ok_or_else(non_poly)?;
                exponent += k;
                continue;
            }
        }
        if occurs_outside_opaque(&f, atom) {
            return Err(non_poly());
        }
        coeff_factors.push(f);
    }
    Ok((exponent, mul(coeff_factors)))
}

/// Coefficients of powers of `atom`, highest exponent first. The input must
/// be polynomial in `atom` (nonnegative integer exponents outside unspecified
/// arguments). Reassembling the pairs reproduces the input.
pub fn collect_coefficients(e: &Expr, atom: &Expr) -> Result<Vec<(i64, Expr)>, ExprError> {
    let pairs = collect_laurent(e, atom)?;
    if pairs.iter().any(|(k, _)| *k < 0) {
        return Err(ExprError::NonPolynomial {
            atom: super::render::render(atom),
            expr: super::render::render(e),
        });
    }
    Ok(pairs)
}

/// Like [`collect_coefficients`] but admits negative integer exponents.
pub fn collect_laurent(e: &Expr, atom: &Expr) -> Result<Vec<(i64, Expr)>, ExprError> {
    let terms: Vec<Expr> = match e {
        Expr::Sum(ts) => ts.clone(),
        other => vec![other.clone()],
    };
    let mut buckets: std::collections::BTreeMap<i64, Vec<Expr>> = Default::default();
    for t in &terms {
        if t.is_zero() {
            continue;
        }
        let (k, c) = split_term(t, atom)?;
        buckets.entry(k).or_default().push(c);
    }
    let mut out: Vec<(i64, Expr)> = buckets
        .into_iter()
        .map(|(k, cs)| (k, add(cs)))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    out.sort_by_key(|(k, _)| std::cmp::Reverse(*k));
    Ok(out)
}

/// Coefficient of `atom^k` (zero when absent).
pub fn coefficient_of(e: &Expr, atom: &Expr, k: i64) -> Result<Expr, ExprError> {
    Ok(collect_laurent(e, atom)?
        .into_iter()
        .find(|(j, _)| *j == k)
        .map(|(_, c)| c)
        .unwrap_or_else(Expr::zero))
}
