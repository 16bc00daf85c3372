//! Differentiation and substitution.

use super::ast::{App, Expr, Func};
use super::simplify::{add, div, fun, mul, neg, pow, simplify};
use super::ExprError;
use std::collections::BTreeMap;

/// Generic derivation: linear over sums, Leibniz over products, chain rule
/// through elementary functions and unspecified-head arguments. `rule` gives
/// the derivative of atoms (symbols, and optionally whole `App` nodes, which
/// otherwise chain through their arguments).
pub fn derive(e: &Expr, rule: &dyn Fn(&Expr) -> Option<Expr>) -> Expr {
    match e {
        Expr::Num(_) => Expr::zero(),
        Expr::Sym(_) => rule(e).unwrap_or_else(Expr::zero),
        Expr::Sum(ts) => add(ts.iter().map(|t| derive(t, rule)).collect()),
        Expr::Prod(fs) => {
            let mut terms = Vec::with_capacity(fs.len());
            for (i, f) in fs.iter().enumerate() {
                let df = derive(f, rule);
                if df.is_zero() {
                    continue;
                }
                let mut factors: Vec<Expr> = Vec::with_capacity(fs.len());
                factors.push(df);
                for (j, g) in fs.iter().enumerate() {
                    if j != i {
                        factors.push(g.clone());
                    }
                }
                terms.push(mul(factors));
            }
            add(terms)
        }
        Expr::Pow(b, x) => {
            let db = derive(b, rule);
            let dx = derive(x, rule);
            let mut terms = Vec::new();
            if !db.is_zero() {
                terms.push(mul(vec![
                    (**x).clone(),
                    pow(
                        (**b).clone(),
                        add(vec![(**x).clone(), super::ast::int(-1)]),
                    ),
                    db,
                ]));
            }
            if !dx.is_zero() {
                terms.push(mul(vec![e.clone(), fun(Func::Ln, (**b).clone()), dx]));
            }
            add(terms)
        }
        Expr::Fun(f, a) => {
            let da = derive(a, rule);
            if da.is_zero() {
                return Expr::zero();
            }
            let outer = match f {
                Func::Exp => fun(Func::Exp, (**a).clone()),
                Func::Ln => pow((**a).clone(), super::ast::int(-1)),
                Func::Sin => fun(Func::Cos, (**a).clone()),
                Func::Cos => neg(fun(Func::Sin, (**a).clone())),
                Func::Tan => {
                    // canonical form has no tan nodes, but stay total
                    pow(fun(Func::Cos, (**a).clone()), super::ast::int(-2))
                }
                Func::Arctan => div(
                    Expr::one(),
                    add(vec![Expr::one(), pow((**a).clone(), super::ast::int(2))]),
                ),
                Func::Abs => fun(Func::Sign, (**a).clone()),
                Func::Sign => Expr::zero(),
            };
            mul(vec![outer, da])
        }
        Expr::App(app) => {
            if let Some(d) = rule(e) {
                return d;
            }
            let mut terms = Vec::new();
            for (i, arg) in app.args.iter().enumerate() {
                let darg = derive(arg, rule);
                if darg.is_zero() {
                    continue;
                }
                let mut orders = app.orders.clone();
                orders[i] += 1;
                terms.push(mul(vec![
                    Expr::App(App {
                        head: app.head.clone(),
                        args: app.args.clone(),
                        orders,
                    }),
                    darg,
                ]));
            }
            add(terms)
        }
        Expr::Integral(body, v) => {
            if let Some(d) = rule(e) {
                return d;
            }
            let dv = rule(&Expr::Sym(v.clone())).unwrap_or_else(Expr::zero);
            let mut terms = Vec::new();
            if !dv.is_zero() {
                terms.push(mul(vec![(**body).clone(), dv]));
            }
            // differentiate under the integral for parameters other than v
            let shadow = |atom: &Expr| -> Option<Expr> {
                if atom.as_sym() == Some(v.as_str()) {
                    return Some(Expr::zero());
                }
                rule(atom)
            };
            let dbody = derive(body, &shadow);
            if !dbody.is_zero() {
                terms.push(Expr::Integral(Box::new(dbody), v.clone()));
            }
            add(terms)
        }
    }
}

/// Partial derivative with respect to a plain symbol; all other symbols
/// (including jet variables) are held fixed.
pub fn diff(e: &Expr, s: &str) -> Expr {
    derive(e, &|atom: &Expr| match atom {
        Expr::Sym(name) => Some(if name == s { Expr::one() } else { Expr::zero() }),
        _ => None,
    })
}

pub fn diff_n(e: &Expr, s: &str, n: u32) -> Expr {
    let mut acc = e.clone();
    for _ in 0..n {
        acc = diff(&acc, s);
    }
    acc
}

/// A substitution target.
#[derive(Clone, Debug)]
pub enum Binding {
    /// Replace a symbol by an expression.
    Let(String, Expr),
    /// Replace an unspecified head by a lambda: every derivative instance of
    /// the head is rewritten consistently, differentiating the body.
    LetHead {
        head: String,
        params: Vec<String>,
        body: Expr,
    },
}

impl Binding {
    pub fn let_sym(name: &str, value: Expr) -> Binding {
        Binding::Let(name.to_string(), value)
    }

    pub fn let_head(head: &str, params: &[&str], body: Expr) -> Binding {
        Binding::LetHead {
            head: head.to_string(),
            params: params.iter().map(|s| s.to_string()).collect(),
            body,
        }
    }

    fn target(&self) -> &str {
        match self {
            Binding::Let(s, _) => s,
            Binding::LetHead { head, .. } => head,
        }
    }
}

/// Simultaneous substitution followed by simplification.
pub fn substitute(e: &Expr, bindings: &[Binding]) -> Result<Expr, ExprError> {
    let mut seen = BTreeMap::new();
    for b in bindings {
        if seen.insert(b.target().to_string(), ()).is_some() {
            return Err(ExprError::ConflictingBindings {
                target: b.target().to_string(),
            });
        }
    }
    Ok(simplify(&walk(e, bindings)))
}

fn walk(e: &Expr, bs: &[Binding]) -> Expr {
    match e {
        Expr::Num(_) => e.clone(),
        Expr::Sym(s) => {
            for b in bs {
                if let Binding::Let(name, value) = b {
                    if name == s {
                        return value.clone();
                    }
                }
            }
            e.clone()
        }
        Expr::Sum(ts) => Expr::Sum(ts.iter().map(|t| walk(t, bs)).collect()),
        Expr::Prod(fs) => Expr::Prod(fs.iter().map(|f| walk(f, bs)).collect()),
        Expr::Pow(b, x) => Expr::Pow(Box::new(walk(b, bs)), Box::new(walk(x, bs))),
        Expr::Fun(f, a) => Expr::Fun(*f, Box::new(walk(a, bs))),
        Expr::App(app) => {
            let new_args: Vec<Expr> = app.args.iter().map(|a| walk(a, bs)).collect();
            for b in bs {
                if let Binding::LetHead { head, params, body } = b {
                    if *head == app.head {
                        return apply_head(params, body, &new_args, &app.orders);
                    }
                }
            }
            Expr::App(App {
                head: app.head.clone(),
                args: new_args,
                orders: app.orders.clone(),
            })
        }
        Expr::Integral(body, v) => {
            // the integration variable is a binder: shadow it
            let filtered: Vec<Binding> = bs
                .iter()
                .filter(|b| b.target() != v)
                .cloned()
                .collect();
            Expr::Integral(Box::new(walk(body, &filtered)), v.clone())
        }
    }
}

/// Expand one head instance: differentiate the body per `orders`, then insert
/// the actual arguments for the parameters (capture-safely).
fn apply_head(params: &[String], body: &Expr, args: &[Expr], orders: &[u32]) -> Expr {
    assert_eq!(params.len(), args.len(), "head arity mismatch");
    let fresh: Vec<String> = (0..params.len()).map(|i| format!("__param_{i}")).collect();
    let rename: Vec<Binding> = params
        .iter()
        .zip(&fresh)
        .map(|(p, f)| Binding::Let(p.clone(), Expr::Sym(f.clone())))
        .collect();
    let mut d = walk(body, &rename);
    for (i, k) in orders.iter().enumerate() {
        d = diff_n(&d, &fresh[i], *k);
    }
    let insert: Vec<Binding> = fresh
        .iter()
        .zip(args)
        .map(|(f, a)| Binding::Let(f.clone(), a.clone()))
        .collect();
    walk(&d, &insert)
}
