//! Lie-reduction verification: invariance of ansatzes, substitution of
//! ansatzes to reproduce reduced ODEs, verification of closed-form solutions,
//! first integrals, and change-of-variables identities on reduced equations.
//!
//! Reduced equations live on the invariant variable `omega` with an opaque
//! unary head `phi(omega)`; `D(phi,1)(omega)` and `D(phi,1,1)(omega)` are the
//! first and second derivatives.

use crate::expr::rational::{replace_node, sign_normalize_by, strip_common_factors_keeping};
use crate::expr::{
    add, as_fraction, coefficient_of, derive, diff, div, mul, simplify, sub, substitute, sym,
    Binding, Expr, ZeroTester,
};
use crate::jet::JetError;
use crate::symmetry::{apply_constraints, Constraint, SymmetryError};
use crate::jet::VectorField;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ReductionError {
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error("invariant variable {value} is not of the form t or x + s(t)")]
    UnsupportedInvariant { value: String },
    #[error("reduced residual retains explicit (t, x): {value}")]
    ResidualRetainsIndependents { value: String },
    #[error("equation is not affine in {atom}")]
    NotAffine { atom: String },
}

pub fn phi(order: u32) -> Expr {
    crate::expr::simplify::app("phi", vec![sym("omega")], vec![order])
}

/// Total derivative along omega, treating phi as a function of omega.
pub fn d_omega(e: &Expr) -> Expr {
    let rule = |atom: &Expr| -> Option<Expr> {
        match atom {
            Expr::Sym(s) => Some(if s == "omega" { Expr::one() } else { Expr::zero() }),
            Expr::App(app) if app.head == "phi" => {
                let mut orders = app.orders.clone();
                orders[0] += 1;
                Some(Expr::App(crate::expr::App {
                    head: app.head.clone(),
                    args: app.args.clone(),
                    orders,
                }))
            }
            _ => None,
        }
    };
    simplify(&derive(e, &rule))
}

/// One reduction row: PDE (as residual), generator, invariant ansatz and the
/// stated reduced ODE (as residual in omega, phi, phi_omega, phi_omegaomega).
#[derive(Clone, Debug)]
pub struct ReductionEntry {
    pub id: String,
    /// u_t - F(t, x, u, u_x, u_xx), the equation being reduced
    pub pde: Expr,
    pub generator: VectorField,
    /// u = A(t, x, phi(omega)) with `omega` a plain symbol
    pub ansatz: Expr,
    /// omega = W(t, x)
    pub invariant: Expr,
    /// stated reduced equation as a residual
    pub ode: Expr,
    pub constraints: Vec<Constraint>,
}

impl ReductionEntry {
    pub fn new(
        id: &str,
        pde: Expr,
        generator: VectorField,
        ansatz: &str,
        invariant: &str,
        ode: &str,
    ) -> ReductionEntry {
        ReductionEntry {
            id: id.to_string(),
            pde: simplify(&pde),
            generator,
            ansatz: crate::expr::x(ansatz),
            invariant: crate::expr::x(invariant),
            ode: crate::expr::x(ode),
            constraints: Vec::new(),
        }
    }

    pub fn with_constraint(mut self, c: Constraint) -> Self {
        self.constraints.push(c);
        self
    }

    fn tester(&self, seed: u64) -> ZeroTester {
        let mut t = ZeroTester::with_seed(seed);
        for c in &self.constraints {
            if let Constraint::UnitSquare(s) = c {
                t = t.sign_symbol(s);
            }
        }
        t
    }

    /// u as a function of (t, x): the ansatz with omega = W(t, x).
    pub fn surface(&self) -> Expr {
        substitute(
            &self.ansatz,
            &[Binding::let_sym("omega", self.invariant.clone())],
        )
        .expect("single binding")
    }

    /// The generator annihilates omega: tau W_t + xi W_x = 0.
    pub fn invariant_is_annihilated(&self, seed: u64) -> bool {
        let w = &self.invariant;
        let e = add(vec![
            mul(vec![self.generator.tau.clone(), diff(w, "t")]),
            mul(vec![self.generator.xi.clone(), diff(w, "x")]),
        ]);
        let e = apply_constraints(&e, &self.constraints);
        self.tester(seed).proved_zero(&e)
    }

    /// The ansatz is generator-invariant: eta - tau u_t - xi u_x vanishes on
    /// the ansatz surface.
    pub fn ansatz_is_invariant(&self, seed: u64) -> bool {
        let u = self.surface();
        let subs = [
            Binding::let_sym("u_t", diff(&u, "t")),
            Binding::let_sym("u_x", diff(&u, "x")),
            Binding::let_sym("u", u.clone()),
        ];
        let ch = self.generator.characteristic();
        let e = substitute(&ch, &subs).expect("bindings disjoint");
        let e = apply_constraints(&e, &self.constraints);
        self.tester(seed).proved_zero(&e)
    }
}

/// Substitute the ansatz into the PDE, rewrite everything in terms of omega,
/// clear denominators and common factors, and normalize the sign of the
/// leading derivative. The result is the reduced residual in
/// (omega, phi, phi_omega, phi_omegaomega); explicit t or x surviving the
/// substitution is a hard error.
pub fn reduce(entry: &ReductionEntry) -> Result<Expr, ReductionError> {
    let u = entry.surface();
    let subs = [
        Binding::let_sym("u_t", diff(&u, "t")),
        Binding::let_sym("u_x", diff(&u, "x")),
        Binding::let_sym("u_xx", diff(&diff(&u, "x"), "x")),
        Binding::let_sym("u", u.clone()),
    ];
    let raw = substitute(&entry.pde, &subs).expect("bindings disjoint");

    // eliminate (t, x) in favor of omega
    let w = simplify(&entry.invariant);
    let eliminated = if w == sym("t") {
        substitute(&raw, &[Binding::let_sym("t", sym("omega"))]).expect("single binding")
    } else {
        // omega = x + s(t)
        let s = simplify(&sub(w.clone(), sym("x")));
        if s.depends_on("x") {
            return Err(ReductionError::UnsupportedInvariant {
                value: w.to_string(),
            });
        }
        let x_value = sub(sym("omega"), s);
        substitute(&raw, &[Binding::let_sym("x", x_value)]).expect("single binding")
    };

    let (num, _den) = as_fraction(&eliminated);
    let num = strip_common_factors_keeping(&simplify(&num), contains_phi);
    if num.depends_on("x") {
        return Err(ReductionError::ResidualRetainsIndependents {
            value: num.to_string(),
        });
    }
    if !num.depends_on("t") {
        let max_order = max_phi_order(&num);
        let lead = phi(max_order);
        return Ok(sign_normalize_by(&num, Some(&lead)));
    }
    factor_out_t(&num)
}

/// The reduction theory guarantees the residual factors as mu(t) * core with
/// core free of (t, x): group terms by their t-free monomial part and check
/// exact proportionality of the t-dependent coefficient profiles. Anything
/// short of proportionality is a hard error.
fn factor_out_t(num: &Expr) -> Result<Expr, ReductionError> {
    use crate::expr::rational::term_factors;
    use std::collections::BTreeMap;
    let fail = || ReductionError::ResidualRetainsIndependents {
        value: num.to_string(),
    };
    let terms: Vec<Expr> = match num {
        Expr::Sum(ts) => ts.clone(),
        other => vec![other.clone()],
    };
    let mut table: BTreeMap<Expr, BTreeMap<Expr, crate::expr::Rat>> = BTreeMap::new();
    for term in &terms {
        let (q, factors) = term_factors(term);
        let mut t_part: Vec<Expr> = Vec::new();
        let mut rest: Vec<Expr> = Vec::new();
        for (b, e) in factors {
            let f = crate::expr::pow(b.clone(), e);
            if b.depends_on("t") {
                t_part.push(f);
            } else {
                rest.push(f);
            }
        }
        let m = mul(rest);
        let tp = mul(t_part);
        use num_traits::Zero;
        let slot = table
            .entry(m)
            .or_default()
            .entry(tp)
            .or_insert_with(crate::expr::Rat::zero);
        *slot += q;
    }
    for profile in table.values_mut() {
        use num_traits::Zero;
        profile.retain(|_, q| !q.is_zero());
    }
    table.retain(|_, profile| !profile.is_empty());
    if table.is_empty() {
        return Ok(Expr::zero());
    }
    // reference: the monomial carrying the highest phi-derivative
    let max_order = table.keys().map(max_phi_order).max().unwrap_or(0);
    let ref_m = table
        .keys()
        .find(|m| max_phi_order(m) == max_order)
        .cloned()
        .ok_or_else(fail)?;
    let ref_profile = table.get(&ref_m).cloned().unwrap();
    let (tp0, a0) = ref_profile.iter().next().map(|(k, v)| (k.clone(), v.clone())).unwrap();
    let mut core_terms = Vec::new();
    for (m, profile) in &table {
        let a = profile.get(&tp0).ok_or_else(fail)?;
        let lambda = a.clone() / a0.clone();
        // exact proportionality of the whole profile
        if profile.len() != ref_profile.len() {
            return Err(fail());
        }
        for (tp, q) in profile {
            let expected = lambda.clone() * ref_profile.get(tp).ok_or_else(fail)?.clone();
            if *q != expected {
                return Err(fail());
            }
        }
        core_terms.push(mul(vec![Expr::Num(lambda), m.clone()]));
    }
    Ok(add(core_terms))
}

fn contains_phi(e: &Expr) -> bool {
    match e {
        Expr::App(app) => app.head == "phi" || app.args.iter().any(contains_phi),
        Expr::Num(_) | Expr::Sym(_) => false,
        Expr::Pow(b, x) => contains_phi(b) || contains_phi(x),
        Expr::Fun(_, a) => contains_phi(a),
        Expr::Integral(body, _) => contains_phi(body),
        Expr::Sum(ts) | Expr::Prod(ts) => ts.iter().any(contains_phi),
    }
}

fn max_phi_order(e: &Expr) -> u32 {
    match e {
        Expr::App(app) if app.head == "phi" => app.orders[0],
        Expr::Num(_) | Expr::Sym(_) => 0,
        Expr::Pow(b, x) => max_phi_order(b).max(max_phi_order(x)),
        Expr::Fun(_, a) => max_phi_order(a),
        Expr::App(app) => app.args.iter().map(max_phi_order).max().unwrap_or(0),
        Expr::Integral(body, _) => max_phi_order(body),
        Expr::Sum(ts) | Expr::Prod(ts) => ts.iter().map(max_phi_order).max().unwrap_or(0),
    }
}

/// The reduced residual equals a nonzero multiple of the stated ODE: compare
/// by cross-multiplying the leading-derivative coefficients.
pub fn verify_reduction(entry: &ReductionEntry, seed: u64) -> Result<bool, ReductionError> {
    let r = reduce(entry)?;
    let s = simplify(&entry.ode);
    let tester = entry.tester(seed);
    if !entry.invariant_is_annihilated(seed) || !entry.ansatz_is_invariant(seed) {
        return Ok(false);
    }
    let ord = max_phi_order(&s).max(max_phi_order(&r));
    let lead = phi(ord);
    let c_r = coefficient_of(&r, &lead, 1).map_err(|_| ReductionError::NotAffine {
        atom: lead.to_string(),
    })?;
    let c_s = coefficient_of(&s, &lead, 1).map_err(|_| ReductionError::NotAffine {
        atom: lead.to_string(),
    })?;
    let cross = apply_constraints(
        &sub(
            mul(vec![r.clone(), c_s.clone()]),
            mul(vec![s.clone(), c_r.clone()]),
        ),
        &entry.constraints,
    );
    let multiplier_ok = tester.probed_nonzero(&apply_constraints(&c_r, &entry.constraints));
    Ok(tester.proved_zero(&cross) && multiplier_ok)
}

/// The ratio of leading coefficients, reported as the reduction multiplier.
pub fn reduction_multiplier(entry: &ReductionEntry) -> Result<Expr, ReductionError> {
    let r = reduce(entry)?;
    let s = simplify(&entry.ode);
    let ord = max_phi_order(&s).max(max_phi_order(&r));
    let lead = phi(ord);
    let c_r = coefficient_of(&r, &lead, 1).map_err(|_| ReductionError::NotAffine {
        atom: lead.to_string(),
    })?;
    let c_s = coefficient_of(&s, &lead, 1).map_err(|_| ReductionError::NotAffine {
        atom: lead.to_string(),
    })?;
    Ok(simplify(&div(c_r, c_s)))
}

/// A closed-form solution candidate u(t, x) for a PDE residual, with free
/// constants kept symbolic.
#[derive(Clone, Debug)]
pub struct SolutionCandidate {
    pub id: String,
    pub pde: Expr,
    pub u: Expr,
    pub constraints: Vec<Constraint>,
}

impl SolutionCandidate {
    pub fn new(id: &str, pde: Expr, u: &str) -> SolutionCandidate {
        SolutionCandidate {
            id: id.to_string(),
            pde: simplify(&pde),
            u: crate::expr::x(u),
            constraints: Vec::new(),
        }
    }

    pub fn with_constraint(mut self, c: Constraint) -> Self {
        self.constraints.push(c);
        self
    }
}

pub fn verify_solution(c: &SolutionCandidate, seed: u64) -> bool {
    let u = simplify(&c.u);
    let subs = [
        Binding::let_sym("u_t", diff(&u, "t")),
        Binding::let_sym("u_x", diff(&u, "x")),
        Binding::let_sym("u_xx", diff(&diff(&u, "x"), "x")),
        Binding::let_sym("u", u.clone()),
    ];
    let r = substitute(&c.pde, &subs).expect("bindings disjoint");
    let r = apply_constraints(&r, &c.constraints);
    let mut tester = ZeroTester::with_seed(seed);
    for cc in &c.constraints {
        if let Constraint::UnitSquare(s) = cc {
            tester = tester.sign_symbol(s);
        }
    }
    tester.proved_zero(&r)
}

/// ODE-level solution check: substitute phi = body(omega) into the reduced
/// residual (derivative instances are rewritten consistently).
pub fn verify_ode_solution(
    ode: &Expr,
    body: &Expr,
    constraints: &[Constraint],
    seed: u64,
) -> bool {
    let r = substitute(ode, &[Binding::let_head("phi", &["omega"], body.clone())])
        .expect("single binding");
    let r = apply_constraints(&r, constraints);
    let mut tester = ZeroTester::with_seed(seed);
    for c in constraints {
        if let Constraint::UnitSquare(s) = c {
            tester = tester.sign_symbol(s);
        }
    }
    tester.proved_zero(&r)
}

/// First integral check: D_omega I = lambda * ode with lambda nonzero, where
/// lambda is the ratio of the phi_omegaomega coefficients.
pub fn verify_first_integral(
    ode: &Expr,
    integral: &Expr,
    constraints: &[Constraint],
    seed: u64,
) -> Result<bool, ReductionError> {
    let di = d_omega(integral);
    let lead = phi(2);
    let c_i = coefficient_of(&di, &lead, 1).map_err(|_| ReductionError::NotAffine {
        atom: lead.to_string(),
    })?;
    let c_ode = coefficient_of(ode, &lead, 1).map_err(|_| ReductionError::NotAffine {
        atom: lead.to_string(),
    })?;
    let cross = apply_constraints(
        &sub(mul(vec![di, c_ode.clone()]), mul(vec![ode.clone(), c_i.clone()])),
        constraints,
    );
    let mut tester = ZeroTester::with_seed(seed);
    for c in constraints {
        if let Constraint::UnitSquare(s) = c {
            tester = tester.sign_symbol(s);
        }
    }
    let lambda_nonzero = tester.probed_nonzero(&apply_constraints(&c_i, constraints));
    Ok(tester.proved_zero(&cross) && lambda_nonzero)
}

/// Change of variables on a reduced ODE: with y = Y(omega-jet) and
/// p = P(omega-jet) as the new independent/dependent pair, check that the
/// target first-order equation T(y, p, p_y) vanishes on solutions of the
/// source (phi_omegaomega is eliminated through the source equation).
pub fn verify_ode_change_of_variables(
    source: &Expr,
    new_y: &Expr,
    new_p: &Expr,
    target: &Expr,
    constraints: &[Constraint],
    seed: u64,
) -> Result<bool, ReductionError> {
    let dy = d_omega(new_y);
    let dp = d_omega(new_p);
    let p_y = div(dp, dy);
    let t_sub = substitute(
        target,
        &[
            Binding::let_sym("y", new_y.clone()),
            Binding::let_sym("p", new_p.clone()),
            Binding::let_sym("p_y", p_y),
        ],
    )
    .expect("bindings disjoint");
    // solve the source for phi_omegaomega and eliminate it
    let lead = phi(2);
    let c1 = coefficient_of(source, &lead, 1).map_err(|_| ReductionError::NotAffine {
        atom: lead.to_string(),
    })?;
    let c0 = coefficient_of(source, &lead, 0).map_err(|_| ReductionError::NotAffine {
        atom: lead.to_string(),
    })?;
    if c1.is_zero() {
        return Err(ReductionError::NotAffine {
            atom: lead.to_string(),
        });
    }
    let solved = simplify(&div(mul(vec![crate::expr::int(-1), c0]), c1));
    let eliminated = simplify(&replace_node(&t_sub, &lead, &solved));
    let r = apply_constraints(&eliminated, constraints);
    let mut tester = ZeroTester::with_seed(seed);
    for c in constraints {
        if let Constraint::UnitSquare(s) = c {
            tester = tester.sign_symbol(s);
        }
    }
    Ok(tester.proved_zero(&r))
}
