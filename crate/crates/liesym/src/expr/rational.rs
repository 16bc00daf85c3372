//! Fraction normalization: rewriting an expression as a single quotient of
//! expanded (canonical) expressions, used by the zero test and by the
//! reduction machinery.

use super::ast::{int, Expr, Rat};
use super::simplify::{add, mul, pow};
use num_traits::Signed;

/// `e = num/den` with both parts canonical; `den` is nonzero wherever `e` is
/// defined.
pub fn as_fraction(e: &Expr) -> (Expr, Expr) {
    match e {
        Expr::Num(_) | Expr::Sym(_) | Expr::Fun(_, _) | Expr::App(_) | Expr::Integral(_, _) => {
            (e.clone(), Expr::one())
        }
        Expr::Pow(b, x) => {
            let (nb, db) = as_fraction(b);
            match x.as_num() {
                Some(q) if q.is_integer() => {
                    let k = q.clone();
                    if k.is_positive() {
                        let ke = Expr::Num(k);
                        (pow(nb, ke.clone()), pow(db, ke))
                    } else {
                        let ke = Expr::Num(-k);
                        (pow(db, ke.clone()), pow(nb, ke))
                    }
                }
                Some(q) => {
                    // fractional literal exponent: keep the power whole, but
                    // put it on the right side of the bar
                    if db.is_one() {
                        if q.is_negative() {
                            (Expr::one(), pow(nb, Expr::Num(-q.clone())))
                        } else {
                            (e.clone(), Expr::one())
                        }
                    } else {
                        (e.clone(), Expr::one())
                    }
                }
                None => (e.clone(), Expr::one()),
            }
        }
        Expr::Prod(fs) => {
            let mut num = Expr::one();
            let mut den = Expr::one();
            for f in fs {
                let (nf, df) = as_fraction(f);
                num = mul(vec![num, nf]);
                den = mul(vec![den, df]);
            }
            (num, den)
        }
        Expr::Sum(ts) => {
            let mut num = Expr::zero();
            let mut den = Expr::one();
            for t in ts {
                let (nt, dt) = as_fraction(t);
                if dt == den {
                    num = add(vec![num, nt]);
                } else {
                    num = add(vec![mul(vec![num, dt.clone()]), mul(vec![nt, den.clone()])]);
                    den = mul(vec![den, dt]);
                }
            }
            (num, den)
        }
    }
}

/// Numerator of the fraction form: zero iff the expression is zero away from
/// the singular locus of its denominators.
pub fn fraction_numerator(e: &Expr) -> Expr {
    as_fraction(e).0
}

/// Factor map of a canonical term: list of (base, integer exponent) plus the
/// rational coefficient. Non-integer exponents are kept as whole factors with
/// exponent 1.
pub fn term_factors(e: &Expr) -> (Rat, Vec<(Expr, Expr)>) {
    match e {
        Expr::Num(q) => (q.clone(), Vec::new()),
        Expr::Prod(fs) => {
            let mut coeff = Rat::from_integer(1.into());
            let mut out = Vec::new();
            for f in fs {
                match f {
                    Expr::Num(q) => coeff *= q.clone(),
                    Expr::Pow(b, x) => out.push(((**b).clone(), (**x).clone())),
                    other => out.push((other.clone(), Expr::one())),
                }
            }
            (coeff, out)
        }
        Expr::Pow(b, x) => (
            Rat::from_integer(1.into()),
            vec![((**b).clone(), (**x).clone())],
        ),
        other => (
            Rat::from_integer(1.into()),
            vec![(other.clone(), Expr::one())],
        ),
    }
}

/// Divide out the factors (with integer exponents) common to every term of a
/// canonical sum, together with the rational content. Returns the cofactor.
/// Used to strip residuals down to their structural core.
pub fn strip_common_factors(e: &Expr) -> Expr {
    strip_common_factors_keeping(e, |_| false)
}

/// Like [`strip_common_factors`], but factors whose base satisfies `keep` are
/// left in place (for residuals whose unknowns must survive the cleanup).
pub fn strip_common_factors_keeping(e: &Expr, keep: impl Fn(&Expr) -> bool) -> Expr {
    let terms: Vec<Expr> = match e {
        Expr::Sum(ts) => ts.clone(),
        Expr::Num(_) => return if e.is_zero() { e.clone() } else { Expr::one() },
        other => vec![other.clone()],
    };
    if terms.is_empty() {
        return Expr::zero();
    }
    let mut common: Option<Vec<(Expr, Rat)>> = None;
    for t in &terms {
        let (_, factors) = term_factors(t);
        let fs: Vec<(Expr, Rat)> = factors
            .into_iter()
            .filter(|(b, _)| !keep(b))
            .filter_map(|(b, x)| x.as_num().map(|q| (b, q.clone())))
            .collect();
        common = Some(match common {
            None => fs,
            Some(prev) => prev
                .into_iter()
                .filter_map(|(b, q)| {
                    fs.iter().find(|(b2, _)| *b2 == b).map(|(_, q2)| {
                        let m = if q2 < &q { q2.clone() } else { q.clone() };
                        (b, m)
                    })
                })
                .collect(),
        });
        if common.as_ref().is_some_and(|c| c.is_empty()) {
            break;
        }
    }
    let common = common.unwrap_or_default();
    if common.is_empty() {
        return e.clone();
    }
    let inverse: Vec<Expr> = common
        .into_iter()
        .map(|(b, q)| pow(b, Expr::Num(-q)))
        .collect();
    mul(vec![e.clone(), mul(inverse)])
}

/// Multiply by -1 when the canonical leading coefficient of the term holding
/// the given atom (or of the whole sum when absent) is negative.
pub fn sign_normalize_by(e: &Expr, lead_atom: Option<&Expr>) -> Expr {
    let terms: Vec<&Expr> = match e {
        Expr::Sum(ts) => ts.iter().collect(),
        other => vec![other],
    };
    let probe = match lead_atom {
        Some(atom) => terms
            .iter()
            .find(|t| contains_node(t, atom))
            .copied()
            .or_else(|| terms.first().copied()),
        None => terms.first().copied(),
    };
    match probe {
        Some(t) if super::ast::negative_led(t) => mul(vec![int(-1), e.clone()]),
        _ => e.clone(),
    }
}

/// Rewrite s^k -> s^(k mod 2) for a sign parameter s with s^2 = 1 (note that
/// this covers s^-1 = s as well).
pub fn fold_unit_square(e: &Expr, s: &str) -> Expr {
    use super::simplify::simplify;
    let rebuilt = match e {
        Expr::Pow(b, x) => {
            let b2 = fold_unit_square(b, s);
            let x2 = fold_unit_square(x, s);
            if b2.as_sym() == Some(s) {
                if let Some(k) = x2.as_int() {
                    use num_integer::Integer;
                    use num_traits::Zero;
                    let m = k.mod_floor(&2.into());
                    return if m.is_zero() { Expr::one() } else { b2 };
                }
            }
            Expr::Pow(Box::new(b2), Box::new(x2))
        }
        Expr::Sum(ts) => Expr::Sum(ts.iter().map(|t| fold_unit_square(t, s)).collect()),
        Expr::Prod(fs) => Expr::Prod(fs.iter().map(|f| fold_unit_square(f, s)).collect()),
        Expr::Fun(f, a) => Expr::Fun(*f, Box::new(fold_unit_square(a, s))),
        Expr::App(app) => Expr::App(crate::expr::App {
            head: app.head.clone(),
            args: app.args.iter().map(|a| fold_unit_square(a, s)).collect(),
            orders: app.orders.clone(),
        }),
        Expr::Integral(body, v) => {
            Expr::Integral(Box::new(fold_unit_square(body, s)), v.clone())
        }
        _ => e.clone(),
    };
    simplify(&rebuilt)
}

/// Structural node-for-node replacement (no binder awareness; used for jet
/// atoms and unspecified-head instances, which cannot be shadowed).
pub fn replace_node(e: &Expr, target: &Expr, replacement: &Expr) -> Expr {
    if e == target {
        return replacement.clone();
    }
    match e {
        Expr::Num(_) | Expr::Sym(_) => e.clone(),
        Expr::Pow(b, x) => Expr::Pow(
            Box::new(replace_node(b, target, replacement)),
            Box::new(replace_node(x, target, replacement)),
        ),
        Expr::Fun(f, a) => Expr::Fun(*f, Box::new(replace_node(a, target, replacement))),
        Expr::App(app) => Expr::App(crate::expr::App {
            head: app.head.clone(),
            args: app
                .args
                .iter()
                .map(|a| replace_node(a, target, replacement))
                .collect(),
            orders: app.orders.clone(),
        }),
        Expr::Integral(body, v) => Expr::Integral(
            Box::new(replace_node(body, target, replacement)),
            v.clone(),
        ),
        Expr::Sum(ts) => Expr::Sum(
            ts.iter()
                .map(|t| replace_node(t, target, replacement))
                .collect(),
        ),
        Expr::Prod(fs) => Expr::Prod(
            fs.iter()
                .map(|f| replace_node(f, target, replacement))
                .collect(),
        ),
    }
}

pub fn contains_node(e: &Expr, node: &Expr) -> bool {
    if e == node {
        return true;
    }
    match e {
        Expr::Num(_) | Expr::Sym(_) => false,
        Expr::Pow(b, x) => contains_node(b, node) || contains_node(x, node),
        Expr::Fun(_, a) => contains_node(a, node),
        Expr::App(app) => app.args.iter().any(|a| contains_node(a, node)),
        Expr::Integral(body, _) => contains_node(body, node),
        Expr::Sum(ts) | Expr::Prod(ts) => ts.iter().any(|t| contains_node(t, node)),
    }
}
