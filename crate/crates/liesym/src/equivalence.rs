//! Point-transformation engine: arbitrary-element maps, push-forward
//! residual checks between equations, composition and inversion,
//! group-template matching, and infinitesimal generators of one-parameter
//! families.

use crate::expr::{
    add, coefficient_of, diff, div, mul, neg, simplify, sub, substitute, sym, Binding, Expr,
    Verdict, ZeroTester,
};
use crate::jet::{d_t, d_x, JetError};
use crate::symmetry::{ClassMember, GeneralVectorField, SymmetryError};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum EquivalenceError {
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error("component {component} = {value} is not affine in {coords}")]
    NotAffine {
        component: String,
        value: String,
        coords: String,
    },
    #[error("degenerate transformation: {detail}")]
    Degenerate { detail: String },
    #[error("family is not at the identity when {param} = 0")]
    NotAtIdentity { param: String },
    #[error("composition needs a g-component on the first transformation")]
    MissingGComponent,
}

/// Point transformation given by t-, x- and u-components (plus an optional
/// g-component for equivalence transformations). The u_x-component is always
/// derived as V = D_x U / D_x X, and the f-component as (D_x X)^2 f / T_t.
#[derive(Clone, Debug, PartialEq)]
pub struct PointTransformation {
    pub t: Expr,
    pub x: Expr,
    pub u: Expr,
    pub g: Option<Expr>,
    pub params: Vec<String>,
    pub nondegeneracy: Vec<Expr>,
}

impl PointTransformation {
    pub fn new(t: Expr, x: Expr, u: Expr) -> PointTransformation {
        PointTransformation {
            t: simplify(&t),
            x: simplify(&x),
            u: simplify(&u),
            g: None,
            params: Vec::new(),
            nondegeneracy: Vec::new(),
        }
    }

    pub fn parse(t: &str, x: &str, u: &str) -> PointTransformation {
        PointTransformation::new(crate::expr::x(t), crate::expr::x(x), crate::expr::x(u))
    }

    pub fn with_g(mut self, g: Expr) -> Self {
        self.g = Some(simplify(&g));
        self
    }

    pub fn with_params(mut self, params: &[&str]) -> Self {
        self.params = params.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_nondegeneracy(mut self, exprs: Vec<Expr>) -> Self {
        self.nondegeneracy = exprs;
        self
    }

    pub fn identity() -> PointTransformation {
        PointTransformation::parse("t", "x", "u").with_g(sym("g"))
    }

    pub fn t_t(&self) -> Expr {
        diff(&self.t, "t")
    }

    /// V = D_x U / D_x X.
    pub fn v_component(&self) -> Result<Expr, EquivalenceError> {
        Ok(simplify(&div(d_x(&self.u)?, d_x(&self.x)?)))
    }

    /// Jacobian factor Delta = X_x U_u - X_u U_x.
    pub fn delta(&self) -> Expr {
        simplify(&sub(
            mul(vec![diff(&self.x, "x"), diff(&self.u, "u")]),
            mul(vec![diff(&self.x, "u"), diff(&self.u, "x")]),
        ))
    }

    /// The transformation on the full space (t, x, u, u_x, f, g).
    pub fn six_map(&self) -> Result<[Expr; 6], EquivalenceError> {
        let v = self.v_component()?;
        let dxx = d_x(&self.x)?;
        let f_comp = simplify(&mul(vec![
            dxx.clone(),
            dxx,
            div(sym("f"), self.t_t()),
        ]));
        Ok([
            self.t.clone(),
            self.x.clone(),
            self.u.clone(),
            v,
            f_comp,
            self.g.clone().unwrap_or_else(|| sym("g")),
        ])
    }

    /// Nondegeneracy certificate: T_t * Delta must not vanish identically,
    /// together with the declared parameter conditions.
    pub fn check_nondegenerate(&self, tester: &ZeroTester) -> Result<(), EquivalenceError> {
        let core = mul(vec![self.t_t(), self.delta()]);
        if !tester.probed_nonzero(&core) {
            return Err(EquivalenceError::Degenerate {
                detail: format!("T_t * Delta = {} fails the nonzero probe", simplify(&core)),
            });
        }
        for cond in &self.nondegeneracy {
            if !tester.probed_nonzero(cond) {
                return Err(EquivalenceError::Degenerate {
                    detail: format!("{cond} fails the nonzero probe"),
                });
            }
        }
        Ok(())
    }
}

/// Composition: apply `first`, then `second` (in target coordinates of
/// `first`).
pub fn compose(
    first: &PointTransformation,
    second: &PointTransformation,
) -> Result<PointTransformation, EquivalenceError> {
    let m = first.six_map()?;
    let needs_g = second.t.depends_on("g")
        || second.x.depends_on("g")
        || second.u.depends_on("g")
        || second.g.as_ref().is_some_and(|g| g.depends_on("g"));
    if needs_g && first.g.is_none() {
        return Err(EquivalenceError::MissingGComponent);
    }
    let bind = |e: &Expr| -> Expr {
        substitute(
            e,
            &[
                Binding::let_sym("t", m[0].clone()),
                Binding::let_sym("x", m[1].clone()),
                Binding::let_sym("u", m[2].clone()),
                Binding::let_sym("u_x", m[3].clone()),
                Binding::let_sym("f", m[4].clone()),
                Binding::let_sym("g", m[5].clone()),
            ],
        )
        .expect("composition bindings are disjoint")
    };
    let mut params = first.params.clone();
    for p in &second.params {
        if !params.contains(p) {
            params.push(p.clone());
        }
    }
    let g = match &second.g {
        Some(g2) => Some(bind(g2)),
        None => first.g.clone(),
    };
    Ok(PointTransformation {
        t: bind(&second.t),
        x: bind(&second.x),
        u: bind(&second.u),
        g,
        params,
        nondegeneracy: first
            .nondegeneracy
            .iter()
            .chain(&second.nondegeneracy)
            .cloned()
            .collect(),
    })
}

/// Linear coefficient extraction `e = c * coord + rest` failing when the
/// coefficient still involves coordinates.
fn affine_split(
    e: &Expr,
    coord: &str,
    forbid: &[&str],
    what: &str,
) -> Result<(Expr, Expr), EquivalenceError> {
    let not_affine = || EquivalenceError::NotAffine {
        component: what.to_string(),
        value: e.to_string(),
        coords: coord.to_string(),
    };
    let pairs = crate::expr::collect_coefficients(e, &sym(coord)).map_err(|_| not_affine())?;
    let mut c = Expr::zero();
    let mut rest = Expr::zero();
    for (k, v) in pairs {
        match k {
            0 => rest = v,
            1 => c = v,
            _ => return Err(not_affine()),
        }
    }
    for bad in forbid {
        if c.depends_on(bad) {
            return Err(not_affine());
        }
    }
    Ok((c, rest))
}

/// Exact inverse for transformations whose t-component is affine in t, whose
/// g-component is affine in g, and whose (x, u)-components are affine in
/// (x, u) with coordinate-free coefficients (all catalog group templates).
pub fn invert(tr: &PointTransformation) -> Result<PointTransformation, EquivalenceError> {
    let coords = ["t", "x", "u", "g"];
    let (a, b) = affine_split(&tr.t, "t", &coords, "t-component")?;
    let t_inv = simplify(&div(sub(sym("t"), b), a.clone()));
    let g_inv = match &tr.g {
        Some(g) => {
            let (c, d) = affine_split(g, "g", &coords, "g-component")?;
            Some(simplify(&div(sub(sym("g"), d), c)))
        }
        None => None,
    };
    // X = Xx x + Xu u + Bx(t, g), same for U
    let (xx, rest) = affine_split(&tr.x, "x", &["x", "u"], "x-component")?;
    let (xu, bx) = affine_split(&rest, "u", &["x", "u"], "x-component")?;
    let (ux, rest) = affine_split(&tr.u, "x", &["x", "u"], "u-component")?;
    let (uu, bu) = affine_split(&rest, "u", &["x", "u"], "u-component")?;
    let det = simplify(&sub(
        mul(vec![xx.clone(), uu.clone()]),
        mul(vec![xu.clone(), ux.clone()]),
    ));
    if det.is_zero() {
        return Err(EquivalenceError::Degenerate {
            detail: "zero Jacobian in (x, u)".into(),
        });
    }
    // source (t, g) in terms of target coordinates
    let mut back = vec![Binding::let_sym("t", t_inv.clone())];
    if let Some(gi) = &g_inv {
        back.push(Binding::let_sym("g", gi.clone()));
    }
    let bx = substitute(&bx, &back).expect("bindings disjoint");
    let bu = substitute(&bu, &back).expect("bindings disjoint");
    let dx = sub(sym("x"), bx);
    let du = sub(sym("u"), bu);
    let x_inv = simplify(&div(
        sub(mul(vec![uu, dx.clone()]), mul(vec![xu, du.clone()])),
        det.clone(),
    ));
    let u_inv = simplify(&div(
        sub(mul(vec![xx, du]), mul(vec![ux, dx])),
        det,
    ));
    Ok(PointTransformation {
        t: t_inv,
        x: x_inv,
        u: u_inv,
        g: g_inv,
        params: tr.params.clone(),
        nondegeneracy: tr.nondegeneracy.clone(),
    })
}

/// Pull the target equation u_t = F(t, x, u, u_x, u_xx) back through the
/// transformation and subtract; `proved_zero` certifies that solutions of the
/// source equation map to solutions of the target.
///
/// Everything happens in source variables via the chain-rule operators
/// d_t~ = (D_t - (D_t X / D_x X) D_x)/T_t and d_x~ = D_x / D_x X; no
/// inversion is needed.
pub fn push_forward_residual(
    tr: &PointTransformation,
    source_rhs: &Expr,
    target_rhs: &Expr,
) -> Result<Expr, EquivalenceError> {
    let tt = tr.t_t();
    if tt.is_zero() {
        return Err(EquivalenceError::Degenerate {
            detail: "T_t = 0".into(),
        });
    }
    let dxx = d_x(&tr.x)?;
    let dxu = d_x(&tr.u)?;
    let v = simplify(&div(dxu, dxx.clone()));
    let uxx_tilde = simplify(&div(d_x(&v)?, dxx));
    let ut_tilde = simplify(&div(
        sub(d_t(&tr.u)?, mul(vec![v.clone(), d_t(&tr.x)?])),
        tt,
    ));
    let target = substitute(
        target_rhs,
        &[
            Binding::let_sym("t", tr.t.clone()),
            Binding::let_sym("x", tr.x.clone()),
            Binding::let_sym("u", tr.u.clone()),
            Binding::let_sym("u_x", v),
            Binding::let_sym("u_xx", uxx_tilde),
        ],
    )
    .expect("push-forward bindings are disjoint");
    let raw = sub(ut_tilde, target);
    let r = substitute(&raw, &[Binding::let_sym("u_t", source_rhs.clone())])
        .expect("single binding");
    Ok(r)
}

/// Raw arbitrary-element maps: the expressions for the target (f~, g~) in
/// source variables. Certifying that they are honest functions of (V, U) is
/// the job of [`push_forward_residual`].
pub fn map_elements(
    tr: &PointTransformation,
    m: &ClassMember,
) -> Result<(Expr, Expr), EquivalenceError> {
    let tt = tr.t_t();
    let dxx = d_x(&tr.x)?;
    let dxu = d_x(&tr.u)?;
    let v = simplify(&div(dxu.clone(), dxx.clone()));
    let delta = tr.delta();
    let f_tilde = simplify(&mul(vec![
        dxx.clone(),
        dxx.clone(),
        div(m.f.clone(), tt.clone()),
    ]));
    let vx = diff(&v, "x");
    let vu = diff(&v, "u");
    let g_tilde = simplify(&add(vec![
        mul(vec![delta, div(m.g.clone(), mul(vec![tt.clone(), dxx.clone()]))]),
        neg(mul(vec![
            div(dxx.clone(), tt.clone()),
            add(vec![vx, mul(vec![sym("u_x"), vu])]),
            m.f.clone(),
        ])),
        div(
            sub(
                mul(vec![diff(&tr.u, "t"), dxx.clone()]),
                mul(vec![diff(&tr.x, "t"), dxu]),
            ),
            mul(vec![tt, dxx]),
        ),
    ]));
    Ok((f_tilde, g_tilde))
}

/// The five equivalence-group shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupId {
    /// usual equivalence group of the whole class (and of H, L, C)
    UsualR,
    /// usual equivalence group of the subclass g_u = 0
    UsualF,
    /// usual equivalence group of the subclass g = 0
    UsualFPrime,
    /// generalized equivalence group of the subclass g_u = 0
    GeneralizedF,
    /// effective generalized equivalence group of the subclass g_u = 0
    EffectiveF,
}

impl GroupId {
    pub fn name(self) -> &'static str {
        match self {
            GroupId::UsualR => "usual-R",
            GroupId::UsualF => "usual-F",
            GroupId::UsualFPrime => "usual-F'",
            GroupId::GeneralizedF => "generalized-F",
            GroupId::EffectiveF => "effective-F",
        }
    }

    pub fn param_names(self) -> Vec<&'static str> {
        match self {
            GroupId::UsualR => vec!["T1", "T0", "X1", "X0", "U2", "U0"],
            GroupId::UsualF => vec!["T1", "T0", "X1", "X0", "U1", "U2", "U3", "U0"],
            GroupId::UsualFPrime => vec!["T1", "T0", "X1", "X2", "X0", "U1", "U2", "U0"],
            GroupId::GeneralizedF => {
                vec!["barT1", "barT0", "barX1", "barX2", "barX0", "barU1", "barU2", "barU0", "barF"]
            }
            GroupId::EffectiveF => {
                vec!["T1", "T0", "X1", "X2", "X0", "U1", "U2", "U3", "U0"]
            }
        }
    }

    /// Template element with symbolic parameters (suffixed to keep two
    /// generic elements distinguishable).
    pub fn generic(self, suffix: &str) -> PointTransformation {
        let p = |name: &str| format!("{name}{suffix}");
        let e = |s: String| crate::expr::x(&s);
        let tr = match self {
            GroupId::UsualR => PointTransformation::new(
                e(format!("{}*t + {}", p("T1"), p("T0"))),
                e(format!("{}*x + {}", p("X1"), p("X0"))),
                e(format!("{}*u + {}", p("U2"), p("U0"))),
            )
            .with_g(e(format!("{}*g/{}", p("U2"), p("T1"))))
            .with_nondegeneracy(vec![e(format!("{}*{}*{}", p("T1"), p("X1"), p("U2")))]),
            GroupId::UsualF => PointTransformation::new(
                e(format!("{}*t + {}", p("T1"), p("T0"))),
                e(format!("{}*x + {}", p("X1"), p("X0"))),
                e(format!(
                    "{}*x + {}*u + {}*t + {}",
                    p("U1"),
                    p("U2"),
                    p("U3"),
                    p("U0")
                )),
            )
            .with_g(e(format!("({}*g + {})/{}", p("U2"), p("U3"), p("T1"))))
            .with_nondegeneracy(vec![e(format!("{}*{}*{}", p("T1"), p("X1"), p("U2")))]),
            GroupId::UsualFPrime => PointTransformation::new(
                e(format!("{}*t + {}", p("T1"), p("T0"))),
                e(format!("{}*x + {}*u + {}", p("X1"), p("X2"), p("X0"))),
                e(format!("{}*x + {}*u + {}", p("U1"), p("U2"), p("U0"))),
            )
            .with_nondegeneracy(vec![e(format!(
                "{}*({}*{} - {}*{})",
                p("T1"),
                p("X1"),
                p("U2"),
                p("X2"),
                p("U1")
            ))]),
            GroupId::GeneralizedF => {
                // parameters are arbitrary smooth functions of g
                let h = |name: &str| format!("{}{}(g)", name, suffix);
                PointTransformation::new(
                    e(format!("{}*t + {}", h("barT1"), h("barT0"))),
                    e(format!(
                        "{}*x + {}*u - g*{}*t + {}",
                        h("barX1"),
                        h("barX2"),
                        h("barX2"),
                        h("barX0")
                    )),
                    e(format!(
                        "{}*x + {}*u + ({}*{} - g*{})*t + {}",
                        h("barU1"),
                        h("barU2"),
                        h("barT1"),
                        h("barF"),
                        h("barU2"),
                        h("barU0")
                    )),
                )
                .with_g(e(h("barF")))
                .with_nondegeneracy(vec![e(format!(
                    "{}*({}*{} - {}*{})*D(barF{},1)(g)",
                    h("barT1"),
                    h("barX1"),
                    h("barU2"),
                    h("barX2"),
                    h("barU1"),
                    suffix
                ))])
            }
            GroupId::EffectiveF => PointTransformation::new(
                e(format!("{}*t + {}", p("T1"), p("T0"))),
                e(format!(
                    "{}*x + {}*u - {}*g*t + {}",
                    p("X1"),
                    p("X2"),
                    p("X2"),
                    p("X0")
                )),
                e(format!(
                    "{}*x + {}*u + (1 - {})*g*t + {}*t + {}*g/{} + {}",
                    p("U1"),
                    p("U2"),
                    p("U2"),
                    p("U3"),
                    p("T0"),
                    p("T1"),
                    p("U0")
                )),
            )
            .with_g(e(format!("(g + {})/{}", p("U3"), p("T1"))))
            .with_nondegeneracy(vec![e(format!(
                "{}*({}*{} - {}*{})",
                p("T1"),
                p("X1"),
                p("U2"),
                p("X2"),
                p("U1")
            ))]),
        };
        let params: Vec<String> = self.param_names().iter().map(|n| p(n)).collect();
        let mut tr = tr;
        tr.params = params;
        tr
    }

    /// Instantiate the template with explicit parameter values.
    pub fn instantiate(self, values: &[(&str, Expr)]) -> PointTransformation {
        let generic = self.generic("");
        let bindings: Vec<Binding> = values
            .iter()
            .map(|(n, v)| Binding::let_sym(n, v.clone()))
            .collect();
        let sub_expr = |e: &Expr| substitute(e, &bindings).expect("parameter names are distinct");
        PointTransformation {
            t: sub_expr(&generic.t),
            x: sub_expr(&generic.x),
            u: sub_expr(&generic.u),
            g: generic.g.as_ref().map(sub_expr),
            params: Vec::new(),
            nondegeneracy: generic.nondegeneracy.iter().map(sub_expr).collect(),
        }
    }

    /// Identity parameter values.
    pub fn identity_values(self) -> Vec<(&'static str, Expr)> {
        self.param_names()
            .into_iter()
            .map(|n| {
                let one = matches!(
                    n,
                    "T1" | "X1" | "U2" | "barT1" | "barX1" | "barU2"
                );
                (n, if one { Expr::one() } else { Expr::zero() })
            })
            .collect()
    }
}

/// Try to read the transformation as a template element. Returns the
/// parameter assignment, or None when the shapes do not match or a
/// nondegeneracy condition fails.
pub fn match_group_template(
    tr: &PointTransformation,
    id: GroupId,
    tester: &ZeroTester,
) -> Option<Vec<(String, Expr)>> {
    let assignment = extract_params(tr, id)?;
    // reconstruct and compare all components
    let values: Vec<(&str, Expr)> = assignment
        .iter()
        .map(|(n, v)| (n.as_str(), v.clone()))
        .collect();
    let rebuilt = id.instantiate(&values);
    let same = |a: &Expr, b: &Expr| tester.proved_zero(&sub(a.clone(), b.clone()));
    if !same(&rebuilt.t, &tr.t) || !same(&rebuilt.x, &tr.x) || !same(&rebuilt.u, &tr.u) {
        return None;
    }
    match (&rebuilt.g, &tr.g) {
        (Some(a), Some(b)) if !same(a, b) => return None,
        (Some(_), None) | (None, Some(_)) => return None,
        _ => {}
    }
    for cond in &rebuilt.nondegeneracy {
        if !tester.probed_nonzero(cond) {
            return None;
        }
    }
    Some(assignment)
}

fn coeff(e: &Expr, monomial: &Expr) -> Expr {
    // coefficient of a product of distinct coordinate symbols. Extract by
    // iterated collection.
    let mut current = vec![e.clone()];
    let factors: Vec<Expr> = match monomial {
        Expr::Prod(fs) => fs.clone(),
        other => vec![other.clone()],
    };
    for f in &factors {
        let mut next = Vec::new();
        for c in current {
            match coefficient_of(&c, f, 1) {
                Ok(v) => next.push(v),
                Err(_) => return Expr::zero(),
            }
        }
        current = next;
    }
    simplify(&add(current))
}

fn const_part(e: &Expr, coords: &[&str]) -> Option<Expr> {
    let mut rest = e.clone();
    for c in coords {
        rest = coefficient_of(&rest, &sym(c), 0).ok()?;
    }
    Some(simplify(&rest))
}

fn extract_params(tr: &PointTransformation, id: GroupId) -> Option<Vec<(String, Expr)>> {
    let coords = ["t", "x", "u", "g"];
    let coordless = |e: &Expr| coords.iter().all(|c| !e.depends_on(c));
    let t1 = coeff(&tr.t, &sym("t"));
    let t0 = const_part(&tr.t, &["t"])?;
    if !coordless(&t1) || !coordless(&t0) || tr.t.depends_on("x") || tr.t.depends_on("u") {
        return None;
    }
    let x1 = coeff(&tr.x, &sym("x"));
    let x2 = coeff(&tr.x, &sym("u"));
    let u1 = coeff(&tr.u, &sym("x"));
    let u2 = coeff(&tr.u, &sym("u"));
    if ![&x1, &x2, &u1, &u2].iter().all(|e| coordless(e)) {
        return None;
    }
    let mut out: Vec<(String, Expr)> = Vec::new();
    let mut push = |name: &str, v: Expr| out.push((name.to_string(), v));
    match id {
        GroupId::UsualR => {
            push("T1", t1);
            push("T0", t0);
            push("X1", x1);
            push("X0", const_part(&tr.x, &coords)?);
            push("U2", u2);
            push("U0", const_part(&tr.u, &coords)?);
        }
        GroupId::UsualF => {
            push("T1", t1);
            push("T0", t0);
            push("X1", x1);
            push("X0", const_part(&tr.x, &coords)?);
            push("U1", u1);
            push("U2", u2);
            push("U3", coeff(&tr.u, &sym("t")));
            push("U0", const_part(&tr.u, &coords)?);
        }
        GroupId::UsualFPrime => {
            push("T1", t1);
            push("T0", t0);
            push("X1", x1);
            push("X2", x2);
            push("X0", const_part(&tr.x, &coords)?);
            push("U1", u1);
            push("U2", u2);
            push("U0", const_part(&tr.u, &coords)?);
        }
        GroupId::GeneralizedF => return None, // function-valued parameters are not matched
        GroupId::EffectiveF => {
            push("T1", t1);
            push("T0", t0);
            push("X1", x1);
            push("X2", x2);
            push("X0", const_part(&tr.x, &coords)?);
            push("U1", u1);
            push("U2", u2.clone());
            // the g-component is (g + U3)/T1: U3 = constant part / g-coefficient
            let g_comp = tr.g.as_ref()?;
            let c = coeff(g_comp, &sym("g"));
            if c.is_zero() {
                return None;
            }
            let u3 = simplify(&div(const_part(g_comp, &coords)?, c));
            push("U3", u3);
            push("U0", const_part(&tr.u, &coords)?);
        }
    }
    Some(out)
}

/// A one-parameter family inside a group template: `param` varies with the
/// flow parameter delta (components contain `delta`); at delta = 0 the family
/// sits at the identity.
#[derive(Clone, Debug)]
pub struct TransformationFamily {
    pub tr: PointTransformation,
    pub delta: String,
}

impl TransformationFamily {
    pub fn new(tr: PointTransformation, delta: &str) -> TransformationFamily {
        TransformationFamily {
            tr,
            delta: delta.to_string(),
        }
    }
}

/// Differentiate the family components with respect to delta at the identity;
/// the result is a vector field on (t, x, u, u_x, f, g).
pub fn infinitesimal_generator(
    family: &TransformationFamily,
) -> Result<GeneralVectorField, EquivalenceError> {
    let six = family.tr.six_map()?;
    let at_zero = |e: &Expr| {
        substitute(e, &[Binding::let_sym(&family.delta, Expr::zero())])
            .expect("single binding")
    };
    let coords = ["t", "x", "u", "u_x", "f", "g"];
    for (i, comp) in six.iter().enumerate() {
        let v = at_zero(comp);
        if !(v == sym(coords[i])) {
            return Err(EquivalenceError::NotAtIdentity {
                param: family.delta.clone(),
            });
        }
    }
    let coeffs: Vec<Expr> = six
        .iter()
        .map(|comp| at_zero(&diff(comp, &family.delta)))
        .collect();
    Ok(GeneralVectorField::with_params(&coords, &[], coeffs)?)
}

/// In-class certificate for a group template: push the template's stated
/// (f~, g~) forward against a symbolic member and require a vanishing
/// residual. `f_pulled`/`g_pulled` are the template formulas written in
/// source variables.
pub fn in_class_residual(
    tr: &PointTransformation,
    m: &ClassMember,
    f_pulled: &Expr,
    g_pulled: &Expr,
) -> Result<Expr, EquivalenceError> {
    let tt = tr.t_t();
    let dxx = d_x(&tr.x)?;
    let v = simplify(&div(d_x(&tr.u)?, dxx.clone()));
    let uxx_tilde = simplify(&div(d_x(&v)?, dxx));
    let ut_tilde = simplify(&div(
        sub(d_t(&tr.u)?, mul(vec![v, d_t(&tr.x)?])),
        tt,
    ));
    let raw = sub(
        ut_tilde,
        add(vec![mul(vec![f_pulled.clone(), uxx_tilde]), g_pulled.clone()]),
    );
    let r = substitute(&raw, &[Binding::let_sym("u_t", m.rhs())]).expect("single binding");
    Ok(r)
}

/// Verdict helper shared by harness checks.
pub fn residual_verdict(r: &Expr, tester: &ZeroTester) -> Verdict {
    tester.verdict(r)
}
