use crate::equivalence::*;
use crate::expr::{is_zero, sub, sym, x, Expr, Verdict, ZeroTester};
use crate::symmetry::{ClassMember, GeneralVectorField};

fn zero(e: &Expr) -> bool {
    is_zero(e) == Verdict::ProvedZero
}

#[test]
fn push_forward_identity() {
    let id = PointTransformation::identity();
    let m = ClassMember::parse("f(u_x)", "g(u)");
    let r = push_forward_residual(&id, &m.rhs(), &m.rhs()).unwrap();
    assert!(r.is_zero());
}

#[test]
fn push_forward_arctan_map() {
    // t~ = arctan t, x~ = x, u~ = (t^2+1) u + t carries solutions of
    // u_t = u_x u_xx + u^2 to solutions of u_t = u_x u_xx + u^2 + 1
    let tr = PointTransformation::parse("arctan(t)", "x", "(t^2+1)*u + t");
    let src = ClassMember::parse("u_x", "u^2");
    let tgt = ClassMember::parse("u_x", "u^2+1");
    let r = push_forward_residual(&tr, &src.rhs(), &tgt.rhs()).unwrap();
    assert!(zero(&r), "residual: {r}");
    // and not the other way around
    let r = push_forward_residual(&tr, &tgt.rhs(), &src.rhs()).unwrap();
    assert_eq!(is_zero(&r), Verdict::ProbedNonzero);
}

#[test]
fn push_forward_peculiar_map() {
    // t~ = e^(eps t)/eps, x~ = x + u, u~ = e^(-eps t) u maps
    // u_t = u_x u_xx / (u_x+1)^3 + eps u to u_t = u_x u_xx - eps u u_x
    let tr = PointTransformation::parse(
        "exp(eps*t)/eps",
        "x + u",
        "exp(-eps*t)*u",
    );
    let src = ClassMember::parse("u_x*(u_x+1)^-3", "eps*u");
    let target_rhs = x("u_x*u_xx - eps*u*u_x");
    let r = push_forward_residual(&tr, &src.rhs(), &target_rhs).unwrap();
    let r = crate::symmetry::apply_constraints(
        &r,
        &[crate::symmetry::Constraint::UnitSquare("eps".into())],
    );
    assert!(zero(&r), "residual: {r}");
}

#[test]
fn kolmogorov_linearization() {
    // hodograph (t, u, x) sends f = c u_x^-2 to the Kolmogorov equation
    // u~_t = c u~_xx - g(x~) u~_x
    let tr = PointTransformation::parse("t", "u", "x");
    let src = ClassMember::parse("c*u_x^-2", "g(u)");
    let target_rhs = x("c*u_xx - g(x)*u_x");
    let r = push_forward_residual(&tr, &src.rhs(), &target_rhs).unwrap();
    assert!(zero(&r), "residual: {r}");

    // raw element maps: f~ = c, g~ = -g(u)/u_x
    let (ft, gt) = map_elements(&tr, &src).unwrap();
    assert_eq!(ft, x("c"));
    assert_eq!(gt, x("-g(u)/u_x"));
}

#[test]
fn map_elements_identity_and_scaling() {
    let m = ClassMember::parse("f(u_x)", "g(u)");
    let id = PointTransformation::identity();
    let (ft, gt) = map_elements(&id, &m).unwrap();
    assert_eq!(ft, x("f(u_x)"));
    assert_eq!(gt, x("g(u)"));

    let tr = PointTransformation::parse("T1*t", "X1*x", "U2*u");
    let (ft, gt) = map_elements(&tr, &m).unwrap();
    assert!(zero(&sub(ft, x("X1^2/T1*f(u_x)"))));
    assert!(zero(&sub(gt, x("U2/T1*g(u)"))));
    // u_x-component
    assert!(zero(&sub(tr.v_component().unwrap(), x("U2/X1*u_x"))));
}

#[test]
fn compose_and_invert() {
    let id = PointTransformation::identity();
    let tr = GroupId::UsualR.generic("");
    let c = compose(&id, &tr).unwrap();
    assert!(zero(&sub(c.t.clone(), tr.t.clone())));
    assert!(zero(&sub(c.u.clone(), tr.u.clone())));

    // two scalings compose to a scaling with multiplied parameters
    let s1 = GroupId::UsualR.instantiate(&[
        ("T1", sym("a")),
        ("T0", Expr::zero()),
        ("X1", sym("b")),
        ("X0", Expr::zero()),
        ("U2", sym("c")),
        ("U0", Expr::zero()),
    ]);
    let s2 = GroupId::UsualR.instantiate(&[
        ("T1", sym("ap")),
        ("T0", Expr::zero()),
        ("X1", sym("bp")),
        ("X0", Expr::zero()),
        ("U2", sym("cp")),
        ("U0", Expr::zero()),
    ]);
    let c = compose(&s1, &s2).unwrap();
    assert!(zero(&sub(c.t.clone(), x("a*ap*t"))));
    assert!(zero(&sub(c.x.clone(), x("b*bp*x"))));
    assert!(zero(&sub(c.u.clone(), x("c*cp*u"))));

    // inversion: affine t-component
    let tr = PointTransformation::parse("T1*t + T0", "x", "u");
    let inv = invert(&tr).unwrap();
    assert!(zero(&sub(inv.t.clone(), x("(t - T0)/T1"))));

    // hodograph is an involution
    let h = PointTransformation::parse("t", "u", "x");
    let hh = invert(&h).unwrap();
    assert!(zero(&sub(hh.x.clone(), x("u"))));
    assert!(zero(&sub(hh.u.clone(), x("x"))));

    // compose(invert(tr), tr) = identity for a generic usual-F element
    let tr = GroupId::UsualF.generic("");
    let inv = invert(&tr).unwrap();
    let round = compose(&tr, &inv).unwrap();
    assert!(zero(&sub(round.t.clone(), sym("t"))));
    assert!(zero(&sub(round.x.clone(), sym("x"))));
    assert!(zero(&sub(round.u.clone(), sym("u"))));
    assert!(zero(&sub(round.g.clone().unwrap(), sym("g"))));

    // non-affine components are rejected
    assert!(invert(&PointTransformation::parse("arctan(t)", "x", "u")).is_err());
}

#[test]
fn hat_group_closure() {
    let tester = ZeroTester::default();
    let a = GroupId::EffectiveF.generic("a");
    let b = GroupId::EffectiveF.generic("b");
    let c = compose(&a, &b).unwrap();
    let assignment = match_group_template(&c, GroupId::EffectiveF, &tester)
        .expect("composition of effective-group elements stays in the group");
    // spot check the composition law for the t-scaling parameter
    let t1 = assignment
        .iter()
        .find(|(n, _)| n == "T1")
        .map(|(_, v)| v.clone())
        .unwrap();
    assert!(zero(&sub(t1, x("T1a*T1b"))));

    let inv = invert(&a).unwrap();
    assert!(match_group_template(&inv, GroupId::EffectiveF, &tester).is_some());
}

#[test]
fn match_concrete_scaling() {
    let tester = ZeroTester::default();
    let tr = PointTransformation::parse("2*t", "x", "u").with_g(x("g/2"));
    let assignment = match_group_template(&tr, GroupId::UsualR, &tester).unwrap();
    let get = |n: &str| {
        assignment
            .iter()
            .find(|(name, _)| name == n)
            .map(|(_, v)| v.clone())
            .unwrap()
    };
    assert_eq!(get("T1"), x("2"));
    assert_eq!(get("X1"), Expr::one());
    assert_eq!(get("U2"), Expr::one());
    assert!(get("T0").is_zero() && get("X0").is_zero() && get("U0").is_zero());
}

#[test]
fn intersection_constraints() {
    let tester = ZeroTester::default();
    // a generic usual-F element is not in the effective group
    let f = GroupId::UsualF.generic("");
    assert!(match_group_template(&f, GroupId::EffectiveF, &tester).is_none());
    // constraining T0 = 0 alone or U2 = 1 alone is not enough
    let sub1: Vec<(&str, Expr)> = vec![("T0", Expr::zero())];
    let partial = instantiate_partial(&f, &sub1);
    assert!(match_group_template(&partial, GroupId::EffectiveF, &tester).is_none());
    let sub2: Vec<(&str, Expr)> = vec![("U2", Expr::one())];
    let partial = instantiate_partial(&f, &sub2);
    assert!(match_group_template(&partial, GroupId::EffectiveF, &tester).is_none());
    // both together land exactly in the intersection
    let sub3: Vec<(&str, Expr)> = vec![("T0", Expr::zero()), ("U2", Expr::one())];
    let both = instantiate_partial(&f, &sub3);
    assert!(match_group_template(&both, GroupId::EffectiveF, &tester).is_some());

    // a usual-F element with (U1, U3) != (0, 0) is not a usual-R element
    assert!(match_group_template(&f, GroupId::UsualR, &tester).is_none());
}

fn instantiate_partial(tr: &PointTransformation, values: &[(&str, Expr)]) -> PointTransformation {
    use crate::expr::{substitute, Binding};
    let bindings: Vec<Binding> = values
        .iter()
        .map(|(n, v)| Binding::let_sym(n, v.clone()))
        .collect();
    let sub_expr = |e: &Expr| substitute(e, &bindings).unwrap();
    PointTransformation {
        t: sub_expr(&tr.t),
        x: sub_expr(&tr.x),
        u: sub_expr(&tr.u),
        g: tr.g.as_ref().map(sub_expr),
        params: tr.params.clone(),
        nondegeneracy: tr.nondegeneracy.iter().map(sub_expr).collect(),
    }
}

#[test]
fn infinitesimal_generators_of_families() {
    // G~_R with T1 = e^delta gives D^t = t d_t - f d_f - g d_g
    let tr = GroupId::UsualR.instantiate(&[
        ("T1", x("exp(delta)")),
        ("T0", Expr::zero()),
        ("X1", Expr::one()),
        ("X0", Expr::zero()),
        ("U2", Expr::one()),
        ("U0", Expr::zero()),
    ]);
    let gen = infinitesimal_generator(&TransformationFamily::new(tr, "delta")).unwrap();
    let coords = ["t", "x", "u", "u_x", "f", "g"];
    let expect = GeneralVectorField::new(
        &coords,
        vec![x("t"), x("0"), x("0"), x("0"), x("-f"), x("-g")],
    )
    .unwrap();
    assert_eq!(gen, expect);

    // hat family with T0 = delta gives P^t + g P^u
    let tr = GroupId::EffectiveF.instantiate(&[
        ("T1", Expr::one()),
        ("T0", sym("delta")),
        ("X1", Expr::one()),
        ("X2", Expr::zero()),
        ("X0", Expr::zero()),
        ("U1", Expr::zero()),
        ("U2", Expr::one()),
        ("U3", Expr::zero()),
        ("U0", Expr::zero()),
    ]);
    let gen = infinitesimal_generator(&TransformationFamily::new(tr, "delta")).unwrap();
    let expect = GeneralVectorField::new(
        &coords,
        vec![x("1"), x("0"), x("g"), x("0"), x("0"), x("0")],
    )
    .unwrap();
    assert_eq!(gen, expect);

    // translation family X0 = delta gives P^x
    let tr = GroupId::UsualR.instantiate(&[
        ("T1", Expr::one()),
        ("T0", Expr::zero()),
        ("X1", Expr::one()),
        ("X0", sym("delta")),
        ("U2", Expr::one()),
        ("U0", Expr::zero()),
    ]);
    let gen = infinitesimal_generator(&TransformationFamily::new(tr, "delta")).unwrap();
    assert_eq!(gen.coeffs[1], Expr::one());
    assert!(gen.coeffs[0].is_zero() && gen.coeffs[2].is_zero());

    // a family that is not at the identity is rejected
    let bad = PointTransformation::parse("t + 1 + delta", "x", "u");
    assert!(infinitesimal_generator(&TransformationFamily::new(bad, "delta")).is_err());
}

#[test]
fn in_class_certificates() {
    let tester = ZeroTester::default();
    // usual-R on a fully generic member
    let tr = GroupId::UsualR.generic("");
    let m = ClassMember::parse("f(u_x)", "g(u)");
    let f_pulled = x("X1^2/T1*f(u_x)");
    let g_pulled = x("U2/T1*g(u)");
    let r = in_class_residual(&tr, &m, &f_pulled, &g_pulled).unwrap();
    assert!(tester.proved_zero(&r), "residual: {r}");

    // effective generalized group on a subclass-F member (g = gamma constant)
    let tr = GroupId::EffectiveF.generic("");
    let tr = instantiate_partial(&tr, &[("g", sym("gamma"))]); // g-dependence is via the member
    let m = ClassMember::parse("f(u_x)", "gamma");
    let f_pulled = x("(X1 + X2*u_x)^2/T1*f(u_x)");
    let g_pulled = x("(gamma + U3)/T1");
    let r = in_class_residual(&tr, &m, &f_pulled, &g_pulled).unwrap();
    assert!(tester.proved_zero(&r), "residual: {r}");
}
