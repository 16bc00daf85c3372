//! Built-in catalog: the group-classification table, the reduction table,
//! the additional equivalence maps between cases, exact solutions and first
//! integrals, the equivalence-algebra basis with its commutator table, and
//! frozen algebra signatures.

use crate::equivalence::PointTransformation;
use crate::expr::{sub, x, Expr};
use crate::jet::VectorField;
use crate::reduction::{ReductionEntry, SolutionCandidate};
use crate::symmetry::{
    AlgebraSignature, ClassMember, Constraint, GeneralVectorField, SideRelation, Subclass,
};
use once_cell::sync::Lazy;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub subclass: Subclass,
    pub member: ClassMember,
    pub fields: Vec<VectorField>,
    pub side_relations: Vec<SideRelation>,
    /// printed as equivalent to another case (still verified)
    pub crossed_out: bool,
    pub notes: &'static str,
}

impl CatalogEntry {
    fn new(
        subclass: Subclass,
        f: &str,
        g: &str,
        fields: &[(&str, &str, &str)],
    ) -> CatalogEntry {
        let member = ClassMember::parse(f, g).tag(subclass);
        let id = entry_id(subclass, &member);
        CatalogEntry {
            id,
            subclass,
            member,
            fields: fields
                .iter()
                .map(|(t, xi, eta)| VectorField::parse(t, xi, eta))
                .collect(),
            side_relations: Vec::new(),
            crossed_out: false,
            notes: "",
        }
    }

    fn eps(mut self) -> Self {
        self.member = self
            .member
            .with_constraint(Constraint::UnitSquare("eps".into()));
        self
    }

    fn constrain(mut self, c: Constraint) -> Self {
        self.member = self.member.with_constraint(c);
        self
    }

    fn relation(mut self, rel: SideRelation) -> Self {
        self.side_relations.push(rel);
        self
    }

    fn crossed(mut self) -> Self {
        self.crossed_out = true;
        self
    }

    fn note(mut self, s: &'static str) -> Self {
        self.notes = s;
        self
    }
}

pub fn entry_id(subclass: Subclass, member: &ClassMember) -> String {
    let tag = match subclass {
        Subclass::H => "H",
        Subclass::L => "L",
        Subclass::F => "F",
        Subclass::FPrime => "F'",
        Subclass::C => "C",
    };
    format!("{tag}:f={};g={}", member.f, member.g)
}

fn heat_relation(extra: &str) -> SideRelation {
    // h_t = h_xx (+ extra source terms)
    let rhs = if extra.is_empty() {
        x("D(h,2,2)(t,x)")
    } else {
        x(&format!("D(h,2,2)(t,x) + {extra}"))
    };
    SideRelation::new("h", &["t", "x"], 0, rhs).expect("heat relation is oriented")
}

fn kolmogorov_relation(g: &str) -> SideRelation {
    // ht_t = ht_uu - g(u) ht_u with the row's reaction term inserted
    let rhs = x(&format!("D(ht,2,2)(t,u) - ({g})*D(ht,2)(t,u)"));
    SideRelation::new("ht", &["t", "u"], 0, rhs).expect("Kolmogorov relation is oriented")
}

/// All rows of the group-classification table.
#[allow(clippy::vec_init_then_push)]
pub fn table1() -> Vec<CatalogEntry> {
    use Subclass::*;
    let mut rows = Vec::new();

    // --- regular subclass C, up to usual-R equivalence ---
    rows.push(
        CatalogEntry::new(C, "f(u_x)", "g(u)", &[("1", "0", "0"), ("0", "1", "0")])
            .note("maximal only for members inequivalent to the extensions below"),
    );
    rows.push(
        CatalogEntry::new(
            C,
            "f(u_x)",
            "u",
            &[("1", "0", "0"), ("0", "1", "0"), ("0", "0", "exp(t)")],
        )
        .note("maximal only for f inequivalent to the special values"),
    );
    rows.push(
        CatalogEntry::new(
            C,
            "f(u_x)",
            "u^-1",
            &[("1", "0", "0"), ("0", "1", "0"), ("2*t", "x", "u")],
        )
        .note("maximal only for f inequivalent to the special values"),
    );
    rows.push(
        CatalogEntry::new(
            C,
            "abs(u_x)^n",
            "eps*exp(u)",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("(n+2)*t", "x", "-(n+2)"),
            ],
        )
        .eps()
        .constrain(Constraint::Excluded("n".into(), vec![0, -2])),
    );
    rows.push(
        CatalogEntry::new(
            C,
            "abs(u_x)^n",
            "abs(u)^m",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("(1-m)*(n+2)*t", "(n+1-m)*x", "(n+2)*u"),
            ],
        )
        .constrain(Constraint::Excluded("n".into(), vec![0, -2]))
        .constrain(Constraint::Excluded("m".into(), vec![-1, 0, 1]))
        .note("(n, m) = (1, 2) falls into the quadratic case"),
    );
    rows.push(
        CatalogEntry::new(
            C,
            "abs(u_x)^n",
            "abs(u)^(n+1) + eps*u",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("eps*exp(-eps*n*t)", "0", "u*exp(-eps*n*t)"),
            ],
        )
        .eps()
        .constrain(Constraint::Excluded("n".into(), vec![0, -2, 1, -1])),
    );
    rows.push(
        CatalogEntry::new(
            C,
            "(u_x+1)^-1",
            "eps*u",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("0", "0", "exp(eps*t)"),
                ("exp(eps*t)", "0", "eps*exp(eps*t)*(u+x)"),
            ],
        )
        .eps(),
    );
    rows.push(CatalogEntry::new(
        C,
        "u_x",
        "u^2",
        &[
            ("1", "0", "0"),
            ("0", "1", "0"),
            ("t", "0", "-u"),
            ("t^2", "0", "-(2*t*u+1)"),
        ],
    ));
    rows.push(CatalogEntry::new(
        C,
        "u_x",
        "u^2+1",
        &[
            ("1", "0", "0"),
            ("0", "1", "0"),
            ("cos(2*t)", "0", "2*cos(2*t) + 2*u*sin(2*t)"),
            ("sin(2*t)", "0", "2*sin(2*t) - 2*u*cos(2*t)"),
        ],
    ));
    rows.push(CatalogEntry::new(
        C,
        "u_x",
        "u^2-1",
        &[
            ("1", "0", "0"),
            ("0", "1", "0"),
            ("exp(2*t)", "0", "-2*(u+1)*exp(2*t)"),
            ("exp(-2*t)", "0", "2*(u-1)*exp(-2*t)"),
        ],
    ));
    rows.push(
        CatalogEntry::new(
            C,
            "u_x*(u_x+1)^-3",
            "eps*u",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("0", "0", "exp(eps*t)"),
                ("exp(-eps*t)", "-eps*u*exp(-eps*t)", "eps*u*exp(-eps*t)"),
            ],
        )
        .eps()
        .note("the only regular case with a u-dependent x-component"),
    );
    rows.push(
        CatalogEntry::new(
            C,
            "abs(u_x)^n",
            "eps*u",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("0", "0", "exp(eps*t)"),
                ("0", "n*x", "(n+2)*u"),
                ("exp(-eps*n*t)", "0", "eps*u*exp(-eps*n*t)"),
            ],
        )
        .eps()
        .constrain(Constraint::Excluded("n".into(), vec![0, -2])),
    );

    // --- subclass F, up to generalized-F equivalence ---
    rows.push(CatalogEntry::new(
        F,
        "f(u_x)",
        "0",
        &[
            ("1", "0", "0"),
            ("0", "1", "0"),
            ("0", "0", "1"),
            ("2*t", "x", "u"),
        ],
    ));
    rows.push(
        CatalogEntry::new(
            F,
            "abs(u_x)^n",
            "0",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("0", "0", "1"),
                ("2*t", "x", "u"),
                ("n*t", "0", "-u"),
            ],
        )
        .constrain(Constraint::Excluded("n".into(), vec![0, -2]))
        .note("n >= -1 mod generalized-F equivalence"),
    );
    rows.push(CatalogEntry::new(
        F,
        "exp(u_x)",
        "0",
        &[
            ("1", "0", "0"),
            ("0", "1", "0"),
            ("0", "0", "1"),
            ("2*t", "x", "u"),
            ("t", "0", "-x"),
        ],
    ));
    rows.push(
        CatalogEntry::new(
            F,
            "exp(m*arctan(u_x))*(u_x^2+1)^-1",
            "0",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("0", "0", "1"),
                ("2*t", "x", "u"),
                ("m*t", "u", "-x"),
            ],
        )
        .note("m >= 0 mod usual-R equivalence"),
    );
    rows.push(
        CatalogEntry::new(
            F,
            "1",
            "0",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("0", "0", "1"),
                ("2*t", "x", "0"),
                ("0", "0", "u"),
                ("0", "2*t", "-x*u"),
                ("4*t^2", "4*t*x", "-(x^2+2*t)*u"),
                ("0", "0", "h(t,x)"),
            ],
        )
        .relation(heat_relation("")),
    );

    // --- subclass H, up to usual-R equivalence, additional to f = 1, g = 0 ---
    rows.push(
        CatalogEntry::new(
            H,
            "1",
            "eps*exp(u)",
            &[("1", "0", "0"), ("0", "1", "0"), ("2*t", "x", "-2")],
        )
        .eps(),
    );
    rows.push(
        CatalogEntry::new(
            H,
            "1",
            "abs(u)^m",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("2*(1-m)*t", "(1-m)*x", "2*u"),
            ],
        )
        .constrain(Constraint::Excluded("m".into(), vec![0, 1])),
    );
    rows.push(
        CatalogEntry::new(
            H,
            "1",
            "eps*u*ln(abs(u))",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("0", "2*exp(eps*t)", "-eps*x*u*exp(eps*t)"),
                ("0", "0", "u*exp(eps*t)"),
            ],
        )
        .eps(),
    );
    rows.push(
        CatalogEntry::new(
            H,
            "1",
            "eps*u",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("2*t", "x", "2*eps*t*u"),
                ("0", "0", "u"),
                ("0", "2*t", "-x*u"),
                ("4*t^2", "4*t*x", "-(x^2 + 2*t - 4*eps*t^2)*u"),
                ("0", "0", "h(t,x)"),
            ],
        )
        .eps()
        .relation(heat_relation("eps*h(t,x)")),
    );
    rows.push(
        CatalogEntry::new(
            H,
            "1",
            "1",
            &[
                ("1", "0", "0"),
                ("0", "1", "0"),
                ("2*t", "x", "2*t"),
                ("0", "0", "u-t"),
                ("0", "2*t", "-x*(u-t)"),
                ("4*t^2", "4*t*x", "-((x^2+2*t)*(u-t) - 4*t^2)"),
                ("0", "0", "h(t,x)"),
            ],
        )
        .relation(heat_relation(""))
        .crossed()
        .note("equivalent to the heat-equation case by u -> u - t"),
    );

    // --- subclass L, up to its equivalence groupoid ---
    rows.push(
        CatalogEntry::new(
            L,
            "u_x^-2",
            "g(u)",
            &[("1", "0", "0"), ("0", "ht(t,u)", "0"), ("0", "x", "0")],
        )
        .relation(kolmogorov_relation("g(u)")),
    );
    rows.push(
        CatalogEntry::new(
            L,
            "u_x^-2",
            "mu*u^-1",
            &[
                ("1", "0", "0"),
                ("0", "ht(t,u)", "0"),
                ("0", "x", "0"),
                ("4*t", "0", "2*u"),
                ("4*t^2", "-(u^2 + 2*(1+nu)*t)*x", "4*t*u"),
            ],
        )
        .relation(kolmogorov_relation("mu*u^-1"))
        .constrain(Constraint::Equal("nu".into(), x("-mu")))
        .note("the projective field forces nu = -mu; mu >= 1, mu != 2 up to point transformations"),
    );
    rows.push(
        CatalogEntry::new(
            L,
            "u_x^-2",
            "(2*nu*tan(nu*ln(abs(u))) - 1)*u^-1",
            &[
                ("1", "0", "0"),
                ("0", "ht(t,u)", "0"),
                ("0", "x", "0"),
                ("2*t", "1/2*x*(2*nu*tan(nu*ln(abs(u))) - 1)", "u"),
                (
                    "4*t^2",
                    "-(u^2 + 2*t - 2*t*(2*nu*tan(nu*ln(abs(u))) - 1))*x",
                    "4*t*u",
                ),
            ],
        )
        .relation(kolmogorov_relation("(2*nu*tan(nu*ln(abs(u))) - 1)*u^-1"))
        .note("nu > 0 up to point transformations; forms fixed by solving the residuals"),
    );
    rows.push(
        CatalogEntry::new(
            L,
            "u_x^-2",
            "0",
            &[
                ("1", "0", "0"),
                ("0", "ht(t,u)", "0"),
                ("0", "x", "0"),
                ("2*t", "0", "u"),
                ("4*t^2", "-(u^2+2*t)*x", "4*t*u"),
                ("0", "-x*u", "2*t"),
            ],
        )
        .relation(kolmogorov_relation("0"))
        .crossed()
        .note("equivalent to the heat-equation case by the hodograph map"),
    );

    rows
}

/// The additional equivalence transformations between table cases (footnote
/// maps). `from`/`to` follow the printed labels; the verified orientation is
/// discovered by the harness.
#[derive(Clone, Debug)]
pub struct EquivalenceEdge {
    pub id: String,
    pub from_id: String,
    pub to_id: String,
    pub source: ClassMember,
    pub target: ClassMember,
    pub transformation: PointTransformation,
    pub constraints: Vec<Constraint>,
    /// the map is its own inverse (both orientations hold)
    pub involution: bool,
}

fn edge(
    id: &str,
    from: (Subclass, &str, &str),
    to: (Subclass, &str, &str),
    tr: PointTransformation,
) -> EquivalenceEdge {
    let source = ClassMember::parse(from.1, from.2).tag(from.0);
    let target = ClassMember::parse(to.1, to.2).tag(to.0);
    EquivalenceEdge {
        id: id.to_string(),
        from_id: entry_id(from.0, &source),
        to_id: entry_id(to.0, &target),
        source,
        target,
        transformation: tr,
        constraints: Vec::new(),
        involution: false,
    }
}

#[allow(clippy::vec_init_then_push)]
pub fn footnote_edges() -> Vec<EquivalenceEdge> {
    use Subclass::*;
    let mut edges = Vec::new();
    edges.push(edge(
        "quadratic+1 -> quadratic",
        (C, "u_x", "u^2+1"),
        (C, "u_x", "u^2"),
        PointTransformation::parse("arctan(t)", "x", "(t^2+1)*u + t"),
    ));
    edges.push(edge(
        "quadratic-1 -> quadratic",
        (C, "u_x", "u^2-1"),
        (C, "u_x", "u^2"),
        PointTransformation::parse(
            "1/2*ln(abs((t-1)*(t+1)^-1))",
            "x",
            "(t^2-1)*u + t",
        ),
    ));
    let exp_time = || {
        PointTransformation::parse("exp(eps*n*t)*(eps*n)^-1", "x", "exp(-eps*t)*u")
    };
    let mut e = edge(
        "power-linear -> power (m = n+1)",
        (C, "abs(u_x)^n", "abs(u)^(n+1) + eps*u"),
        (C, "abs(u_x)^n", "abs(u)^(n+1)"),
        exp_time(),
    );
    e.constraints.push(Constraint::UnitSquare("eps".into()));
    edges.push(e);
    let mut e = edge(
        "power-linear-source -> power-filtration",
        (C, "abs(u_x)^n", "eps*u"),
        (F, "abs(u_x)^n", "0"),
        exp_time(),
    );
    e.constraints.push(Constraint::UnitSquare("eps".into()));
    edges.push(e);
    let mut e = edge(
        "heat-linear -> heat",
        (H, "1", "eps*u"),
        (F, "1", "0"),
        PointTransformation::parse("t", "x", "exp(-eps*t)*u"),
    );
    e.constraints.push(Constraint::UnitSquare("eps".into()));
    edges.push(e);
    edges.push(edge(
        "heat-constant -> heat",
        (H, "1", "1"),
        (F, "1", "0"),
        PointTransformation::parse("t", "x", "u - t"),
    ));
    let mut e = edge(
        "linearizable -> heat (hodograph)",
        (L, "u_x^-2", "0"),
        (F, "1", "0"),
        PointTransformation::parse("t", "u", "x"),
    );
    e.involution = true;
    edges.push(e);
    edges
}

fn pde(f: &str, g: &str) -> Expr {
    ClassMember::parse(f, g).pde_residual()
}

/// Equation obtained from the peculiar case by the flattening map:
/// u_t = u_x u_xx - eps u u_x.
pub fn boosted_pde() -> Expr {
    sub(x("u_t"), x("u_x*u_xx - eps*u*u_x"))
}

/// All rows of the reduction table.
#[allow(clippy::vec_init_then_push)]
pub fn table2() -> Vec<ReductionEntry> {
    let eps2 = || Constraint::UnitSquare("eps".to_string());
    let slow = || pde("(u_x+1)^-1", "eps*u");
    let quad = || pde("u_x", "u^2");
    let mut rows = Vec::new();

    rows.push(
        ReductionEntry::new(
            "slow.1",
            slow(),
            VectorField::parse("0", "1", "0"),
            "phi(omega)",
            "t",
            "D(phi,1)(omega) - eps*phi(omega)",
        )
        .with_constraint(eps2()),
    );
    rows.push(
        ReductionEntry::new(
            "slow.2",
            slow(),
            VectorField::parse("1", "kappa", "0"),
            "phi(omega)",
            "x - kappa*t",
            "D(phi,1,1)(omega) + (kappa*D(phi,1)(omega) + eps*phi(omega))*(D(phi,1)(omega) + 1)",
        )
        .with_constraint(eps2()),
    );
    rows.push(
        ReductionEntry::new(
            "slow.3",
            slow(),
            VectorField::parse("exp(eps*t)", "0", "eps*exp(eps*t)*(u+x)"),
            "phi(omega)*exp(eps*t) - x",
            "x",
            "D(phi,1,1)(omega) - eps*omega*D(phi,1)(omega)",
        )
        .with_constraint(eps2()),
    );
    rows.push(
        ReductionEntry::new(
            "slow.4",
            slow(),
            VectorField::parse(
                "exp(eps*t)",
                "1",
                "eps*exp(eps*t)*(u+x)",
            ),
            "phi(omega)*exp(eps*t) - x - exp(-eps*t)/(2*eps)",
            "x + exp(-eps*t)/eps",
            "D(phi,1,1)(omega) - D(phi,1)(omega)*(eps*omega - D(phi,1)(omega))",
        )
        .with_constraint(eps2()),
    );

    rows.push(ReductionEntry::new(
        "quadratic.1",
        quad(),
        VectorField::parse("0", "1", "0"),
        "phi(omega)",
        "t",
        "D(phi,1)(omega) - phi(omega)^2",
    ));
    rows.push(ReductionEntry::new(
        "quadratic.2",
        quad(),
        VectorField::parse("1", "0", "0"),
        "phi(omega)",
        "x",
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2",
    ));
    rows.push(ReductionEntry::new(
        "quadratic.3",
        quad(),
        VectorField::parse("1", "1", "0"),
        "phi(omega)",
        "x - t",
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + D(phi,1)(omega)",
    ));
    rows.push(ReductionEntry::new(
        "quadratic.4",
        quad(),
        VectorField::parse("t", "kappa", "-u"),
        "phi(omega)*t^-1",
        "x - kappa*ln(abs(t))",
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + kappa*D(phi,1)(omega) + phi(omega)",
    ));
    rows.push(ReductionEntry::new(
        "quadratic.5",
        quad(),
        VectorField::parse("t^2+1", "kappa", "-(2*t*u+1)"),
        "(phi(omega) - t)*(t^2+1)^-1",
        "x - kappa*arctan(t)",
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + kappa*D(phi,1)(omega) + 1",
    ));

    let boosted = boosted_pde;
    rows.push(
        ReductionEntry::new(
            "boosted.1",
            boosted(),
            VectorField::parse("0", "1", "0"),
            "phi(omega)",
            "t",
            "D(phi,1)(omega)",
        )
        .with_constraint(eps2()),
    );
    rows.push(
        ReductionEntry::new(
            "boosted.2",
            boosted(),
            VectorField::parse("0", "t", "eps^-1"),
            "phi(omega) + eps^-1*x*t^-1",
            "t",
            "D(phi,1)(omega) + omega^-1*phi(omega)",
        )
        .with_constraint(eps2()),
    );
    rows.push(
        ReductionEntry::new(
            "boosted.3",
            boosted(),
            VectorField::parse("1", "0", "0"),
            "phi(omega)",
            "x",
            "D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega))",
        )
        .with_constraint(eps2()),
    );
    rows.push(
        ReductionEntry::new(
            "boosted.4",
            boosted(),
            VectorField::parse("1", "t", "eps^-1"),
            "phi(omega) + eps^-1*t",
            "x - t^2/2",
            "D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) - eps^-1",
        )
        .with_constraint(eps2()),
    );
    rows.push(
        ReductionEntry::new(
            "boosted.5",
            boosted(),
            VectorField::parse("t", "kappa", "-u"),
            "(phi(omega) + eps^-1*kappa)*t^-1",
            "x - kappa*ln(abs(t))",
            "D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) + phi(omega) + eps^-1*kappa",
        )
        .with_constraint(eps2()),
    );

    rows
}

/// One verifiable item of the solutions suite.
#[derive(Clone, Debug)]
pub enum SolutionCheck {
    Pde(SolutionCandidate),
    Ode {
        id: String,
        ode: Expr,
        body: Expr,
        constraints: Vec<Constraint>,
    },
    FirstIntegral {
        id: String,
        ode: Expr,
        integral: Expr,
        constraints: Vec<Constraint>,
    },
    ChangeOfVariables {
        id: String,
        source: Expr,
        new_y: Expr,
        new_p: Expr,
        target: Expr,
        constraints: Vec<Constraint>,
    },
    /// d/dy of an elementary antiderivative reproduces the integrand
    Antiderivative {
        id: String,
        expr: Expr,
        var: String,
        integrand: Expr,
        /// radical to adjoin as a symbol: (base, name, degree)
        algebraic_root: Option<(Expr, String, u32)>,
    },
}

impl SolutionCheck {
    pub fn id(&self) -> &str {
        match self {
            SolutionCheck::Pde(c) => &c.id,
            SolutionCheck::Ode { id, .. }
            | SolutionCheck::FirstIntegral { id, .. }
            | SolutionCheck::ChangeOfVariables { id, .. }
            | SolutionCheck::Antiderivative { id, .. } => id,
        }
    }
}

#[allow(clippy::vec_init_then_push)]
pub fn solution_checks() -> Vec<SolutionCheck> {
    let eps2 = || Constraint::UnitSquare("eps".to_string());
    let eps_is = |v: i64| Constraint::Equal("eps".to_string(), crate::expr::int(v));
    let mut checks = Vec::new();

    // closed forms at the PDE level
    checks.push(SolutionCheck::Pde(SolutionCandidate::new(
        "quadratic: u = -(t+c1)^-1",
        pde("u_x", "u^2"),
        "-(t+c1)^-1",
    )));
    checks.push(SolutionCheck::Pde(SolutionCandidate::new(
        "quadratic: u = 0",
        pde("u_x", "u^2"),
        "0",
    )));
    checks.push(SolutionCheck::Pde(
        SolutionCandidate::new(
            "slow-diffusion: u = c1 e^(eps t)",
            pde("(u_x+1)^-1", "eps*u"),
            "c1*exp(eps*t)",
        )
        .with_constraint(eps2()),
    ));
    checks.push(SolutionCheck::Pde(
        SolutionCandidate::new(
            "boosted: u = c0/t + x/(eps t)",
            boosted_pde(),
            "c0*t^-1 + eps^-1*x*t^-1",
        )
        .with_constraint(eps2()),
    ));
    checks.push(SolutionCheck::Pde(
        SolutionCandidate::new(
            "boosted separation (eps = 1): u = c0 + c1 e^(x-c0 t) + c2 e^(-x+c0 t)",
            boosted_pde(),
            "c0 + c1*exp(x - c0*t) + c2*exp(-x + c0*t)",
        )
        .with_constraint(eps_is(1)),
    ));
    checks.push(SolutionCheck::Pde(
        SolutionCandidate::new(
            "boosted separation (eps = -1): u = c0 + c1 cos(x + c0 t + c2)",
            boosted_pde(),
            "c0 + c1*cos(x + c0*t + c2)",
        )
        .with_constraint(eps_is(-1)),
    ));

    // quadrature forms at the ODE level
    checks.push(SolutionCheck::Ode {
        id: "slow.3: phi = c1 Int(e^(eps w^2/2)) + c2".into(),
        ode: x("D(phi,1,1)(omega) - eps*omega*D(phi,1)(omega)"),
        body: x("c1*Int(exp(eps*omega^2/2), omega) + c2"),
        constraints: vec![eps2()],
    });
    checks.push(SolutionCheck::Ode {
        id: "slow.4: phi = ln|Int(e^(eps w^2/2)) + c1| + c2".into(),
        ode: x("D(phi,1,1)(omega) - D(phi,1)(omega)*(eps*omega - D(phi,1)(omega))"),
        body: x("ln(abs(Int(exp(eps*omega^2/2), omega) + c1)) + c2"),
        constraints: vec![eps2()],
    });
    checks.push(SolutionCheck::Ode {
        id: "slow.1: phi = c1 e^(eps w)".into(),
        ode: x("D(phi,1)(omega) - eps*phi(omega)"),
        body: x("c1*exp(eps*omega)"),
        constraints: vec![eps2()],
    });
    checks.push(SolutionCheck::Ode {
        id: "quadratic.1: phi = -(w+c1)^-1".into(),
        ode: x("D(phi,1)(omega) - phi(omega)^2"),
        body: x("-(omega+c1)^-1"),
        constraints: vec![],
    });
    checks.push(SolutionCheck::Ode {
        id: "quadratic.2 singular family: phi = c2 e^-w".into(),
        ode: x("D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2"),
        body: x("c2*exp(-omega)"),
        constraints: vec![],
    });
    checks.push(SolutionCheck::Ode {
        id: "boosted.1: phi = c0".into(),
        ode: x("D(phi,1)(omega)"),
        body: x("c0"),
        constraints: vec![],
    });
    checks.push(SolutionCheck::Ode {
        id: "boosted.2: phi = c0/w".into(),
        ode: x("D(phi,1)(omega) + omega^-1*phi(omega)"),
        body: x("c0*omega^-1"),
        constraints: vec![],
    });
    checks.push(SolutionCheck::Ode {
        id: "boosted.3 (eps = 1): phi = c1 e^w + c2 e^-w".into(),
        ode: x("D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega))"),
        body: x("c1*exp(omega) + c2*exp(-omega)"),
        constraints: vec![eps_is(1)],
    });
    checks.push(SolutionCheck::Ode {
        id: "boosted.3 (eps = -1): phi = c1 cos w + c2 sin w".into(),
        ode: x("D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega))"),
        body: x("c1*cos(omega) + c2*sin(omega)"),
        constraints: vec![eps_is(-1)],
    });
    checks.push(SolutionCheck::Ode {
        id: "boosted.3: constant family".into(),
        ode: x("D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega))"),
        body: x("c0"),
        constraints: vec![eps2()],
    });

    // first integrals
    checks.push(SolutionCheck::FirstIntegral {
        id: "boosted.4: phi_w^2 - eps phi^2 - 2 w/eps".into(),
        ode: x("D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) - eps^-1"),
        integral: x("D(phi,1)(omega)^2 - eps*phi(omega)^2 - 2*eps^-1*omega"),
        constraints: vec![eps2()],
    });
    checks.push(SolutionCheck::FirstIntegral {
        id: "slow.2 (kappa = 0): phi_w - ln|phi_w+1| + eps phi^2/2".into(),
        ode: x("D(phi,1,1)(omega) + eps*phi(omega)*(D(phi,1)(omega) + 1)"),
        integral: x(
            "D(phi,1)(omega) - ln(abs(D(phi,1)(omega) + 1)) + eps*phi(omega)^2/2",
        ),
        constraints: vec![eps2()],
    });
    checks.push(SolutionCheck::FirstIntegral {
        id: "quadratic.2: phi_w^3 + phi^3".into(),
        ode: x("D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2"),
        integral: x("D(phi,1)(omega)^3 + phi(omega)^3"),
        constraints: vec![],
    });
    checks.push(SolutionCheck::FirstIntegral {
        id: "boosted.5 (kappa = 0): separable relation".into(),
        ode: x("D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) + phi(omega)"),
        integral: x(
            "phi(omega)^2 - eps^-1*D(phi,1)(omega)^2 - 2*eps^-2*D(phi,1)(omega) \
             - 2*eps^-3*ln(abs(D(phi,1)(omega) - eps^-1))",
        ),
        constraints: vec![eps2()],
    });

    // changes of variables to first-order canonical forms
    let quad_family = x(
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + kappa*D(phi,1)(omega) \
         + mu*phi(omega) + nu",
    );
    checks.push(SolutionCheck::ChangeOfVariables {
        id: "quadratic.3-5: lowering to p(y)".into(),
        source: quad_family.clone(),
        new_y: x("phi(omega)"),
        new_p: x("D(phi,1)(omega)"),
        target: x("p^2*p_y + y^2 + kappa*p + mu*y + nu"),
        constraints: vec![],
    });
    checks.push(SolutionCheck::ChangeOfVariables {
        id: "quadratic.3-5: Abel second kind".into(),
        source: quad_family,
        new_y: x("D(phi,1)(omega) + phi(omega)"),
        new_p: x("phi(omega)"),
        target: x("((2*y + mu - kappa)*p - y^2 + kappa*y + nu)*p_y + (p - y)^2"),
        constraints: vec![],
    });
    checks.push(SolutionCheck::ChangeOfVariables {
        id: "quadratic.3-5 (nu = 0): simpler Abel form".into(),
        source: x(
            "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + kappa*D(phi,1)(omega) \
             + mu*phi(omega)",
        ),
        new_y: x("D(phi,1)(omega)/phi(omega)"),
        new_p: x("phi(omega)^-1"),
        target: x("((kappa*y + mu)*p + y^3 + 1)*p_y - y^2*p"),
        constraints: vec![],
    });
    checks.push(SolutionCheck::ChangeOfVariables {
        id: "boosted.4: canonical Abel form".into(),
        source: x("D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) - eps^-1"),
        new_y: x("-D(phi,1)(omega)^-1"),
        new_p: x("D(phi,1)(omega)^-1 + phi(omega)"),
        target: x("p*p_y + p + eps*y^-3"),
        constraints: vec![eps2()],
    });
    checks.push(SolutionCheck::ChangeOfVariables {
        id: "boosted.5: first-order form".into(),
        source: x(
            "D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) + phi(omega) \
             + eps^-1*kappa",
        ),
        new_y: x("D(phi,1)(omega)"),
        new_p: x("phi(omega)"),
        target: x("((1 - eps*y)*p + eps^-1*kappa)*p_y + y^2"),
        constraints: vec![eps2()],
    });
    checks.push(SolutionCheck::ChangeOfVariables {
        id: "boosted.5 (kappa != 0): canonical Abel form".into(),
        source: x(
            "D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) + phi(omega) \
             + eps^-1*kappa",
        ),
        new_y: x("-eps^-1*kappa*(1 - eps*D(phi,1)(omega))^-1"),
        new_p: x("phi(omega) + eps^-1*kappa*(1 - eps*D(phi,1)(omega))^-1"),
        target: x("p*p_y + p + eps^-1*(y + eps^-1*kappa)^2*y^-3"),
        constraints: vec![eps2()],
    });

    // the elementary form of the quadratic stationary quadrature
    checks.push(SolutionCheck::Antiderivative {
        id: "quadratic.2: elementary antiderivative of -(y^3+c1)^(-1/3)".into(),
        expr: x(
            "1/2*ln(abs((y^3+c1)^(1/3) - y)) \
             + 3^(-1/2)*arctan((2*(y^3+c1)^(1/3) + y)*(3^(1/2)*y)^-1)",
        ),
        var: "y".into(),
        integrand: x("-(y^3+c1)^(-1/3)"),
        algebraic_root: Some((x("y^3+c1"), "A".into(), 3)),
    });

    checks
}

/// Basis of the equivalence algebra on (t, x, u, u_x, f, g): P^t, D^t, P^x,
/// D^x, P^u, D^u, Z^t, Z^x, R.
pub fn q_basis() -> Vec<GeneralVectorField> {
    let coords = ["t", "x", "u", "u_x", "f", "g"];
    [
        ("1", "0", "0", "0", "0", "0"),
        ("t", "0", "0", "0", "-f", "-g"),
        ("0", "1", "0", "0", "0", "0"),
        ("0", "x", "0", "-u_x", "2*f", "0"),
        ("0", "0", "1", "0", "0", "0"),
        ("0", "0", "u", "u_x", "0", "g"),
        ("0", "0", "t", "0", "0", "1"),
        ("0", "0", "x", "1", "0", "0"),
        ("0", "u - g*t", "0", "-u_x^2", "2*u_x*f", "0"),
    ]
    .iter()
    .map(|cs| {
        GeneralVectorField::new(
            &coords,
            vec![x(cs.0), x(cs.1), x(cs.2), x(cs.3), x(cs.4), x(cs.5)],
        )
        .expect("basis coefficients live on the coordinate tuple")
    })
    .collect()
}

pub const Q_NAMES: [&str; 9] = [
    "P^t", "D^t", "P^x", "D^x", "P^u", "D^u", "Z^t", "Z^x", "R",
];

pub type CommutatorCombo = Vec<(&'static str, usize)>;

/// Expected nonzero commutators, as (i, j, linear combination) with i < j.
pub fn nonzero_commutators() -> Vec<(usize, usize, CommutatorCombo)> {
    vec![
        (0, 1, vec![("1", 0)]),            // [P^t, D^t] = P^t
        (2, 3, vec![("1", 2)]),            // [P^x, D^x] = P^x
        (4, 5, vec![("1", 4)]),            // [P^u, D^u] = P^u
        (0, 6, vec![("1", 4)]),            // [P^t, Z^t] = P^u
        (2, 7, vec![("1", 4)]),            // [P^x, Z^x] = P^u
        (6, 1, vec![("-1", 6)]),           // [Z^t, D^t] = -Z^t
        (7, 3, vec![("-1", 7)]),           // [Z^x, D^x] = -Z^x
        (6, 5, vec![("1", 6)]),            // [Z^t, D^u] = Z^t
        (7, 5, vec![("1", 7)]),            // [Z^x, D^u] = Z^x
        (0, 8, vec![("-g", 2)]),           // [P^t, R] = -g P^x
        (4, 8, vec![("1", 2)]),            // [P^u, R] = P^x
        (3, 8, vec![("-1", 8)]),           // [D^x, R] = -R
        (5, 8, vec![("1", 8)]),            // [D^u, R] = R
        (7, 8, vec![("1", 3), ("-1", 5), ("g", 6)]), // [Z^x, R] = D^x - D^u + g Z^t
    ]
}

/// Frozen algebra signatures for the finite-dimensional table rows, computed
/// by brute-force bracket evaluation at the sample parameter values below.
#[derive(Clone, Debug)]
pub struct SignatureCase {
    pub entry_id: String,
    pub substitutions: Vec<(&'static str, Expr)>,
    pub expected: AlgebraSignature,
    /// anchored cases distinguish pairs the way the classification proof does
    pub anchored: bool,
}

pub fn signature_cases() -> Vec<SignatureCase> {
    let entries = table1();
    let sig = |dim: usize,
               dim_pr_t: usize,
               derived: &[usize],
               lower: &[usize],
               center_dim: usize| AlgebraSignature {
        dim,
        dim_pr_t,
        derived_series_dims: derived.to_vec(),
        lower_central_dims: lower.to_vec(),
        center_dim,
    };
    let subst = || {
        vec![
            ("eps", crate::expr::int(1)),
            ("n", crate::expr::int(3)),
            ("m", crate::expr::int(5)),
            ("mu", crate::expr::ratio(3, 2)),
            ("nu", crate::expr::ratio(-3, 2)),
        ]
    };
    let mut cases = Vec::new();
    let mut add = |idx: usize, expected: AlgebraSignature, anchored: bool| {
        cases.push(SignatureCase {
            entry_id: entries[idx].id.clone(),
            substitutions: subst(),
            expected,
            anchored,
        });
    };
    // subclass C
    add(0, sig(2, 1, &[2, 0], &[2, 0], 2), false);
    add(1, sig(3, 1, &[3, 1, 0], &[3, 1, 1], 1), true);
    add(2, sig(3, 2, &[3, 2, 0], &[3, 2, 2], 0), false);
    add(3, sig(3, 2, &[3, 2, 0], &[3, 2, 2], 0), false);
    add(4, sig(3, 2, &[3, 2, 0], &[3, 2, 2], 0), false);
    add(5, sig(3, 2, &[3, 1, 0], &[3, 1, 1], 1), true);
    add(6, sig(4, 2, &[4, 2, 0], &[4, 2, 2], 0), true);
    add(7, sig(4, 3, &[4, 3, 3], &[4, 3, 3], 1), false);
    add(8, sig(4, 3, &[4, 3, 3], &[4, 3, 3], 1), false);
    add(9, sig(4, 3, &[4, 3, 3], &[4, 3, 3], 1), false);
    add(10, sig(4, 2, &[4, 3, 1, 0], &[4, 3, 3], 1), false);
    add(11, sig(5, 2, &[5, 3, 0], &[5, 3, 3], 0), false);
    // subclass F (the heat row carries a side relation and is skipped)
    add(12, sig(4, 2, &[4, 3, 0], &[4, 3, 3], 0), false);
    add(13, sig(5, 2, &[5, 3, 0], &[5, 3, 3], 0), false);
    add(14, sig(5, 2, &[5, 3, 0], &[5, 3, 3], 0), false);
    add(15, sig(5, 2, &[5, 3, 0], &[5, 3, 3], 0), false);
    // subclass H (rows with h(t, x) are skipped)
    add(17, sig(3, 2, &[3, 2, 0], &[3, 2, 2], 0), false);
    add(18, sig(3, 2, &[3, 2, 0], &[3, 2, 2], 0), false);
    add(19, sig(4, 1, &[4, 2, 0], &[4, 2, 2], 0), true);
    cases
}

pub static CATALOG: Lazy<Catalog> = Lazy::new(Catalog::load);

/// Everything the verification suites consume.
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub reductions: Vec<ReductionEntry>,
    pub edges: Vec<EquivalenceEdge>,
    pub solutions: Vec<SolutionCheck>,
    pub signatures: Vec<SignatureCase>,
}

impl Catalog {
    pub fn load() -> Catalog {
        Catalog {
            entries: table1(),
            reductions: table2(),
            edges: footnote_edges(),
            solutions: solution_checks(),
            signatures: signature_cases(),
        }
    }

    pub fn entry(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Distinct point fields appearing anywhere in the table (used for the
    /// kernel check).
    pub fn field_inventory(&self) -> Vec<(String, VectorField)> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for e in &self.entries {
            for q in &e.fields {
                let key = format!("[{}; {}; {}]", q.tau, q.xi, q.eta);
                if seen.insert(key.clone()) {
                    out.push((key, q.clone()));
                }
            }
        }
        out
    }
}
