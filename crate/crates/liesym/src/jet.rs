//! Second-order jet calculus over independent variables (t, x) and dependent
//! variable u: total derivatives and second prolongation of point vector
//! fields.
//!
//! Jet coordinates are flat symbols `u`, `u_t`, `u_x`, `u_tt`, `u_tx`,
//! `u_xx`, ... normalized to sorted index strings (`u_tx`, never `u_xt`).
//! The internal order cap is 3, enough for one total derivative applied to a
//! second-order expression; exceeding it is a hard error.

use crate::expr::{add, derive, diff, mul, simplify, sub, sym, Expr};
use thiserror::Error;

pub const MAX_ORDER: u32 = 3;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum JetError {
    #[error("total derivative of {name} exceeds jet order {max}", max = MAX_ORDER)]
    OrderOverflow { name: String },
    #[error("vector field component {component} = {value} depends on {bad}")]
    NotEvolutionReduced {
        component: String,
        value: String,
        bad: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dir {
    T,
    X,
}

impl Dir {
    fn letter(self) -> char {
        match self {
            Dir::T => 't',
            Dir::X => 'x',
        }
    }
}

/// Multi-index of a jet symbol: `u_ttx` -> (2, 1). Plain `u` is (0, 0).
pub fn jet_orders(name: &str) -> Option<(u32, u32)> {
    if name == "u" {
        return Some((0, 0));
    }
    let rest = name.strip_prefix("u_")?;
    if rest.is_empty() || rest.len() > MAX_ORDER as usize {
        return None;
    }
    let mut t = 0;
    let mut x = 0;
    for c in rest.chars() {
        match c {
            't' => t += 1,
            'x' => x += 1,
            _ => return None,
        }
    }
    Some((t, x))
}

pub fn jet_symbol(t: u32, x: u32) -> Expr {
    if t == 0 && x == 0 {
        return sym("u");
    }
    let mut name = String::from("u_");
    for _ in 0..t {
        name.push('t');
    }
    for _ in 0..x {
        name.push('x');
    }
    sym(&name)
}

fn shift(name: &str, dir: Dir) -> Result<Expr, JetError> {
    let (t, x) = jet_orders(name).expect("shift called on non-jet symbol");
    let (t2, x2) = match dir {
        Dir::T => (t + 1, x),
        Dir::X => (t, x + 1),
    };
    if t2 + x2 > MAX_ORDER {
        return Err(JetError::OrderOverflow {
            name: format!("u_{}{}", "t".repeat(t2 as usize), "x".repeat(x2 as usize)),
        });
    }
    Ok(jet_symbol(t2, x2))
}

/// Total derivative D_t or D_x of an expression in jet coordinates of order
/// at most 2 (3 is representable but cannot be differentiated again).
pub fn total_derivative(e: &Expr, dir: Dir) -> Result<Expr, JetError> {
    let mut overflow: Option<JetError> = None;
    let rule = |atom: &Expr| -> Option<Expr> {
        match atom {
            Expr::Sym(name) => {
                if jet_orders(name).is_some() {
                    // overflow is caught by the pre-check below
                    return Some(match shift(name, dir) {
                        Ok(s) => s,
                        Err(_) => Expr::zero(),
                    });
                }
                let letter = dir.letter().to_string();
                Some(if *name == letter { Expr::one() } else { Expr::zero() })
            }
            _ => None,
        }
    };
    // pre-check for overflow (derive cannot return errors)
    check_order(e, &mut overflow, dir);
    if let Some(err) = overflow {
        return Err(err);
    }
    Ok(simplify(&derive(e, &rule)))
}

fn check_order(e: &Expr, overflow: &mut Option<JetError>, dir: Dir) {
    match e {
        Expr::Sym(name) => {
            if jet_orders(name).is_some() {
                if let Err(err) = shift(name, dir) {
                    overflow.get_or_insert(err);
                }
            }
        }
        Expr::Num(_) => {}
        Expr::Pow(b, x) => {
            check_order(b, overflow, dir);
            check_order(x, overflow, dir);
        }
        Expr::Fun(_, a) => check_order(a, overflow, dir),
        Expr::App(app) => {
            for a in &app.args {
                check_order(a, overflow, dir);
            }
        }
        Expr::Integral(body, _) => check_order(body, overflow, dir),
        Expr::Sum(ts) | Expr::Prod(ts) => {
            for t in ts {
                check_order(t, overflow, dir);
            }
        }
    }
}

pub fn d_t(e: &Expr) -> Result<Expr, JetError> {
    total_derivative(e, Dir::T)
}

pub fn d_x(e: &Expr) -> Result<Expr, JetError> {
    total_derivative(e, Dir::X)
}

/// Point vector field tau d_t + xi d_x + eta d_u on (t, x, u).
#[derive(Clone, Debug, PartialEq)]
pub struct VectorField {
    pub tau: Expr,
    pub xi: Expr,
    pub eta: Expr,
}

impl VectorField {
    /// Evolution-reduced field: tau may depend on t only.
    pub fn new(tau: Expr, xi: Expr, eta: Expr) -> Result<VectorField, JetError> {
        let tau = simplify(&tau);
        for bad in ["x", "u"] {
            if tau.depends_on(bad) {
                return Err(JetError::NotEvolutionReduced {
                    component: "tau".into(),
                    value: tau.to_string(),
                    bad: bad.into(),
                });
            }
        }
        Ok(VectorField {
            tau,
            xi: simplify(&xi),
            eta: simplify(&eta),
        })
    }

    /// Field with unrestricted tau(t, x, u), for negative tests.
    pub fn new_general(tau: Expr, xi: Expr, eta: Expr) -> VectorField {
        VectorField {
            tau: simplify(&tau),
            xi: simplify(&xi),
            eta: simplify(&eta),
        }
    }

    pub fn parse(tau: &str, xi: &str, eta: &str) -> VectorField {
        VectorField::new(crate::expr::x(tau), crate::expr::x(xi), crate::expr::x(eta))
            .expect("catalog vector fields are evolution-reduced")
    }

    /// Characteristic eta - tau u_t - xi u_x.
    pub fn characteristic(&self) -> Expr {
        sub(
            self.eta.clone(),
            add(vec![
                mul(vec![self.tau.clone(), sym("u_t")]),
                mul(vec![self.xi.clone(), sym("u_x")]),
            ]),
        )
    }
}

/// Second prolongation: coefficients of d/du_t, d/du_x, d/du_tt, d/du_tx,
/// d/du_xx.
#[derive(Clone, Debug, PartialEq)]
pub struct ProlongedField {
    pub base: VectorField,
    pub eta10: Expr,
    pub eta01: Expr,
    pub eta20: Expr,
    pub eta11: Expr,
    pub eta02: Expr,
}

/// eta^alpha = D^alpha(eta - tau u_t - xi u_x) + tau u_(alpha+delta1)
///           + xi u_(alpha+delta2)
pub fn prolong2(q: &VectorField) -> Result<ProlongedField, JetError> {
    let ch = simplify(&q.characteristic());
    let coeff = |dch: &Expr, ot: u32, ox: u32| -> Expr {
        simplify(&add(vec![
            dch.clone(),
            mul(vec![q.tau.clone(), jet_symbol(ot + 1, ox)]),
            mul(vec![q.xi.clone(), jet_symbol(ot, ox + 1)]),
        ]))
    };
    let dt = d_t(&ch)?;
    let dx = d_x(&ch)?;
    let dtt = d_t(&dt)?;
    let dtx = d_x(&dt)?;
    let dxx = d_x(&dx)?;
    Ok(ProlongedField {
        base: q.clone(),
        eta10: coeff(&dt, 1, 0),
        eta01: coeff(&dx, 0, 1),
        eta20: coeff(&dtt, 2, 0),
        eta11: coeff(&dtx, 1, 1),
        eta02: coeff(&dxx, 0, 2),
    })
}

impl ProlongedField {
    /// Apply the prolonged field as a derivation to an expression in
    /// (t, x, u, u_t, u_x, u_tt, u_tx, u_xx).
    pub fn apply(&self, e: &Expr) -> Expr {
        let parts = [
            (self.base.tau.clone(), "t"),
            (self.base.xi.clone(), "x"),
            (self.base.eta.clone(), "u"),
            (self.eta10.clone(), "u_t"),
            (self.eta01.clone(), "u_x"),
            (self.eta20.clone(), "u_tt"),
            (self.eta11.clone(), "u_tx"),
            (self.eta02.clone(), "u_xx"),
        ];
        simplify(&add(
            parts
                .into_iter()
                .map(|(c, v)| mul(vec![c, diff(e, v)]))
                .collect(),
        ))
    }

    /// View as a general vector field on the 8 jet coordinates. Symbols
    /// beyond the coordinates are treated as free parameters.
    pub fn as_general(&self) -> crate::symmetry::GeneralVectorField {
        let coords = ["t", "x", "u", "u_t", "u_x", "u_tt", "u_tx", "u_xx"];
        let coeffs = vec![
            self.base.tau.clone(),
            self.base.xi.clone(),
            self.base.eta.clone(),
            self.eta10.clone(),
            self.eta01.clone(),
            self.eta20.clone(),
            self.eta11.clone(),
            self.eta02.clone(),
        ];
        let mut params: Vec<String> = Vec::new();
        for c in &coeffs {
            for s in c.free_symbols() {
                if !coords.contains(&s.as_str()) && !params.contains(&s) {
                    params.push(s);
                }
            }
        }
        let param_refs: Vec<&str> = params.iter().map(String::as_str).collect();
        crate::symmetry::GeneralVectorField::with_params(&coords, &param_refs, coeffs)
            .expect("prolonged coefficients live on the jet space")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{is_zero, x, Verdict};

    #[test]
    fn total_derivatives() {
        assert_eq!(d_x(&x("u")).unwrap(), x("u_x"));
        assert_eq!(d_x(&x("f(u_x)")).unwrap(), x("D(f,1)(u_x)*u_xx"));
        assert_eq!(d_t(&x("x*u")).unwrap(), x("x*u_t"));
        assert_eq!(d_x(&x("t")).unwrap(), Expr::zero());
        // order cap
        assert!(matches!(
            d_x(&x("u_xxx")),
            Err(JetError::OrderOverflow { .. })
        ));
    }

    #[test]
    fn commutation_of_totals() {
        for s in ["u*u_x + t*x", "f(u_x)*u + exp(u)", "u_t*u_x"] {
            let e = x(s);
            let a = d_t(&d_x(&e).unwrap()).unwrap();
            let b = d_x(&d_t(&e).unwrap()).unwrap();
            assert_eq!(is_zero(&crate::expr::sub(a, b)), Verdict::ProvedZero);
        }
    }

    #[test]
    fn prolongation_examples() {
        // Q = d_u: constant characteristic, all coefficients vanish
        let q = VectorField::parse("0", "0", "1");
        let p = prolong2(&q).unwrap();
        for c in [&p.eta10, &p.eta01, &p.eta20, &p.eta11, &p.eta02] {
            assert!(c.is_zero(), "expected 0, got {c}");
        }

        // Q = t d_t - u d_u
        let q = VectorField::parse("t", "0", "-u");
        let p = prolong2(&q).unwrap();
        assert_eq!(p.eta10, x("-2*u_t"));
        assert_eq!(p.eta01, x("-u_x"));
        assert_eq!(p.eta02, x("-u_xx"));

        // Q = x d_x
        let q = VectorField::parse("0", "x", "0");
        let p = prolong2(&q).unwrap();
        assert_eq!(p.eta01, x("-u_x"));
        assert_eq!(p.eta02, x("-2*u_xx"));

        // evolution reduction: eta01 free of u_t for tau = tau(t)
        let q = VectorField::parse("t^2", "x*u", "u^2+t");
        let p = prolong2(&q).unwrap();
        assert!(!p.eta01.depends_on("u_t"));
        assert!(!p.eta01.depends_on("u_tt"));
    }

    #[test]
    fn rejects_non_evolution_tau() {
        assert!(VectorField::new(x("x"), x("0"), x("0")).is_err());
    }
}
