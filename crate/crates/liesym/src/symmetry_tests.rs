use crate::expr::{is_zero, neg, sub, sym, x, Verdict, ZeroTester};
use crate::jet::VectorField;
use crate::symmetry::*;

fn opaque() -> ClassMember {
    ClassMember::parse("f(u_x)", "g(u)")
}

#[test]
fn residual_of_du_is_minus_gu() {
    let q = VectorField::parse("0", "0", "1");
    let r = invariance_residual(&q, &opaque()).unwrap();
    assert_eq!(r, neg(x("D(g,1)(u)")));
}

#[test]
fn table1_spot_checks() {
    // t d_t - u d_u for u_t = u_x u_xx + u^2
    let m = ClassMember::parse("u_x", "u^2");
    let q = VectorField::parse("t", "0", "-u");
    assert!(is_symmetry(&q, &m, &[], 42).unwrap());

    // x d_x is not a symmetry of the same equation
    let q = VectorField::parse("0", "x", "0");
    assert_eq!(
        symmetry_verdict(&q, &m, &[], 42).unwrap(),
        Verdict::ProbedNonzero
    );

    // e^(eps t) d_u for f = (u_x+1)^-1, g = eps u with eps^2 = 1
    let m = ClassMember::parse("(u_x+1)^-1", "eps*u")
        .with_constraint(Constraint::UnitSquare("eps".into()));
    let q = VectorField::parse("0", "0", "exp(eps*t)");
    assert!(is_symmetry(&q, &m, &[], 42).unwrap());
    let q = VectorField::parse("exp(eps*t)", "0", "eps*exp(eps*t)*(u+x)");
    assert!(is_symmetry(&q, &m, &[], 42).unwrap());
}

#[test]
fn side_relation_rows() {
    // h(t,x) d_u for the heat equation, h_t -> h_xx
    let heat = SideRelation::new("h", &["t", "x"], 0, x("D(h,2,2)(t,x)")).unwrap();
    let m = ClassMember::parse("1", "0");
    let q = VectorField::parse("0", "0", "h(t,x)");
    assert!(is_symmetry(&q, &m, std::slice::from_ref(&heat), 42).unwrap());

    // iterated rewriting: h_tt -> h_xxxx, h_x untouched
    assert_eq!(
        apply_side_relations(&x("D(h,1,1)(t,x)"), std::slice::from_ref(&heat)),
        x("D(h,2,2,2,2)(t,x)")
    );
    assert_eq!(
        apply_side_relations(&x("D(h,1)(t,x)"), std::slice::from_ref(&heat)),
        x("D(h,2,2)(t,x)")
    );
    assert_eq!(
        apply_side_relations(&x("D(h,2)(t,x)"), &[heat]),
        x("D(h,2)(t,x)")
    );

    // tilde-h d_x for f = u_x^-2 with the Kolmogorov relation
    let rel = SideRelation::new(
        "ht",
        &["t", "u"],
        0,
        x("D(ht,2,2)(t,u) - g(u)*D(ht,2)(t,u)"),
    )
    .unwrap();
    let m = ClassMember::parse("u_x^-2", "g(u)");
    let q = VectorField::parse("0", "ht(t,u)", "0");
    assert!(is_symmetry(&q, &m, &[rel], 42).unwrap());

    // a relation whose right-hand side still carries h_t is rejected
    assert!(SideRelation::new("h", &["t", "x"], 0, x("D(h,1)(t,x)")).is_err());
}

#[test]
fn kernel_only_translations() {
    let m = opaque();
    for (q, expect) in [
        (VectorField::parse("1", "0", "0"), true),
        (VectorField::parse("0", "1", "0"), true),
        (VectorField::parse("0", "0", "1"), false),
        (VectorField::parse("t", "0", "-u"), false),
        (VectorField::parse("0", "x", "0"), false),
        (VectorField::parse("2*t", "x", "u"), false),
    ] {
        let v = symmetry_verdict(&q, &m, &[], 42).unwrap();
        if expect {
            assert_eq!(v, Verdict::ProvedZero, "{q:?}");
        } else {
            assert_eq!(v, Verdict::ProbedNonzero, "{q:?}");
        }
    }
}

#[test]
fn determining_equations_match_printed_forms() {
    let [a, b] = determining_equations(&opaque()).unwrap();
    let eq_a = x(
        "(-D(xi,3)(t,x,u)*u_x^2 + (D(eta,3)(t,x,u) - D(xi,2)(t,x,u))*u_x + D(eta,2)(t,x,u)) \
         * D(f,1)(u_x) \
         + (-2*D(xi,3)(t,x,u)*u_x + D(tau,1)(t) - 2*D(xi,2)(t,x,u))*f(u_x)",
    );
    assert_eq!(a, eq_a);
    let eq_b = x(
        "(-D(xi,3,3)(t,x,u)*u_x^3 + (D(eta,3,3)(t,x,u) - 2*D(xi,2,3)(t,x,u))*u_x^2 \
          + (2*D(eta,2,3)(t,x,u) - D(xi,2,2)(t,x,u))*u_x + D(eta,2,2)(t,x,u))*f(u_x) \
         + (D(xi,1)(t,x,u) + D(xi,3)(t,x,u)*g(u))*u_x \
         + eta(t,x,u)*D(g,1)(u) + (D(tau,1)(t) - D(eta,3)(t,x,u))*g(u) - D(eta,1)(t,x,u)",
    );
    assert_eq!(b, eq_b);

    // specializations: f = 1 and f = u_x^-2
    let [a1, _] = determining_equations(&ClassMember::parse("1", "g(u)")).unwrap();
    assert_eq!(
        a1,
        x("D(tau,1)(t) - 2*D(xi,2)(t,x,u) - 2*D(xi,3)(t,x,u)*u_x")
    );
    let [a2, _] = determining_equations(&ClassMember::parse("u_x^-2", "g(u)")).unwrap();
    // (9a) with f' = -2 f / u_x folded in
    let expect = x(
        "(-D(xi,3)(t,x,u)*u_x^2 + (D(eta,3)(t,x,u) - D(xi,2)(t,x,u))*u_x + D(eta,2)(t,x,u)) \
         *(-2)*u_x^-3 + (-2*D(xi,3)(t,x,u)*u_x + D(tau,1)(t) - 2*D(xi,2)(t,x,u))*u_x^-2",
    );
    assert_eq!(is_zero(&sub(a2, expect)), Verdict::ProvedZero);
}

#[test]
fn criterion_consistency_on_samples() {
    // is_symmetry agrees with the split determining equations
    for (f, g, q) in [
        ("u_x", "u^2", VectorField::parse("t", "0", "-u")),
        ("u_x", "u^2", VectorField::parse("0", "x", "0")),
        ("abs(u_x)^3", "abs(u)^5", VectorField::parse("-20*t", "-x", "5*u")),
    ] {
        let m = ClassMember::parse(f, g);
        let direct = is_symmetry(&q, &m, &[], 42).unwrap();
        let residual = invariance_residual(&q, &m).unwrap();
        let pairs =
            crate::expr::collect_coefficients(&residual, &sym("u_xx")).unwrap();
        let tester = ZeroTester::with_seed(42);
        let split = pairs.iter().all(|(_, c)| tester.proved_zero(c));
        assert_eq!(direct, split, "{f} {g}");
    }
}

fn q_fields() -> Vec<GeneralVectorField> {
    let coords = ["t", "x", "u", "u_x", "f", "g"];
    [
        ("1", "0", "0", "0", "0", "0"),          // P^t
        ("t", "0", "0", "0", "-f", "-g"),        // D^t
        ("0", "1", "0", "0", "0", "0"),          // P^x
        ("0", "x", "0", "-u_x", "2*f", "0"),     // D^x
        ("0", "0", "1", "0", "0", "0"),          // P^u
        ("0", "0", "u", "u_x", "0", "g"),        // D^u
        ("0", "0", "t", "0", "0", "1"),          // Z^t
        ("0", "0", "x", "1", "0", "0"),          // Z^x
        ("0", "u - g*t", "0", "-u_x^2", "2*u_x*f", "0"), // R
    ]
    .iter()
    .map(|cs| {
        GeneralVectorField::new(
            &coords,
            vec![x(cs.0), x(cs.1), x(cs.2), x(cs.3), x(cs.4), x(cs.5)],
        )
        .unwrap()
    })
    .collect()
}

#[test]
fn bracket_examples() {
    let q = q_fields();
    // [P^t, D^t] = P^t
    let b = lie_bracket(&q[0], &q[1]).unwrap();
    assert_eq!(b, q[0]);
    // [d_t, d_x] = 0
    assert!(lie_bracket(&q[0], &q[2]).unwrap().is_zero());
    // [Z^x, R] = D^x - D^u + g Z^t
    let b = lie_bracket(&q[7], &q[8]).unwrap();
    let expect = q[3].plus(&q[5].scale(&x("-1"))).plus(&q[6].scale(&x("g")));
    for (c1, c2) in b.coeffs.iter().zip(&expect.coeffs) {
        assert_eq!(is_zero(&sub(c1.clone(), c2.clone())), Verdict::ProvedZero);
    }
    // coordinate mismatch
    let other = GeneralVectorField::new(&["t", "x"], vec![x("1"), x("0")]).unwrap();
    assert!(lie_bracket(&q[0], &other).is_err());
}

#[test]
fn structure_constants_examples() {
    // abelian
    let coords = ["t", "x", "u"];
    let e1 = GeneralVectorField::new(&coords, vec![x("1"), x("0"), x("0")]).unwrap();
    let e2 = GeneralVectorField::new(&coords, vec![x("0"), x("1"), x("0")]).unwrap();
    use num_traits::Zero;
    let sc = structure_constants(&[e1.clone(), e2.clone()])
        .unwrap()
        .unwrap();
    assert!(sc.table.iter().flatten().flatten().all(|q| q.is_zero()));

    // {e^t d_u, d_t, d_x}: [d_t, e^t d_u] = e^t d_u
    let e3 = GeneralVectorField::new(&coords, vec![x("0"), x("0"), x("exp(t)")]).unwrap();
    let sc = structure_constants(&[e3.clone(), e1.clone(), e2.clone()])
        .unwrap()
        .unwrap();
    assert_eq!(
        sc.table[1][0],
        vec![
            crate::expr::ast::rat_int(1),
            crate::expr::ast::rat_int(0),
            crate::expr::ast::rat_int(0)
        ]
    );

    // {Z^x, R} does not close
    let q = q_fields();
    let fail = structure_constants(&[q[7].clone(), q[8].clone()])
        .unwrap()
        .unwrap_err();
    assert_eq!((fail.i, fail.j), (0, 1));
    let expect = q[3].plus(&q[5].scale(&x("-1"))).plus(&q[6].scale(&x("g")));
    for (c1, c2) in fail.remainder.coeffs.iter().zip(&expect.coeffs) {
        assert_eq!(is_zero(&sub(c1.clone(), c2.clone())), Verdict::ProvedZero);
    }

    // dependent basis is rejected
    assert!(structure_constants(&[e1.clone(), e1.scale(&x("2"))]).is_err());
}

#[test]
fn signature_examples() {
    let coords = ["t", "x", "u"];
    let dt = GeneralVectorField::new(&coords, vec![x("1"), x("0"), x("0")]).unwrap();
    let dx = GeneralVectorField::new(&coords, vec![x("0"), x("1"), x("0")]).unwrap();
    let eu = GeneralVectorField::new(&coords, vec![x("0"), x("0"), x("exp(t)")]).unwrap();

    // f arbitrary, g = u: {d_t, d_x, e^t d_u}
    let sig = algebra_signature(&[dt.clone(), dx.clone(), eu]).unwrap().unwrap();
    assert_eq!(sig.dim, 3);
    assert_eq!(sig.dim_pr_t, 1);
    assert_eq!(sig.derived_series_dims, vec![3, 1, 0]);

    // abelian pair
    let sig = algebra_signature(&[dt.clone(), dx.clone()]).unwrap().unwrap();
    assert_eq!(sig.dim, 2);
    assert_eq!(sig.derived_series_dims, vec![2, 0]);
    assert_eq!(sig.center_dim, 2);

    // f = u_x, g = u^2: sl2 + translation, derived series stabilizes at 3
    let e1 = dt.clone();
    let e2 = GeneralVectorField::new(&coords, vec![x("t"), x("0"), x("-u")]).unwrap();
    let e3 =
        GeneralVectorField::new(&coords, vec![x("t^2"), x("0"), x("-(2*t*u+1)")]).unwrap();
    let sig = algebra_signature(&[e1, e2, e3, dx]).unwrap().unwrap();
    assert_eq!(sig.dim, 4);
    assert_eq!(sig.derived_series_dims, vec![4, 3, 3]);
    assert_eq!(sig.dim_pr_t, 3);
    assert_eq!(sig.center_dim, 1);
}

#[test]
fn antisymmetry_and_jacobi_random() {
    use rand::Rng;
    use rand::SeedableRng;
    let q = q_fields();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut f = GeneralVectorField::zero(&["t", "x", "u", "u_x", "f", "g"]);
            for _ in 0..2 {
                let i = rng.gen_range(0..9);
                let c = rng.gen_range(-3i64..=3);
                f = f.plus(&q[i].scale(&crate::expr::int(c)));
            }
            f
        };
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let anti = lie_bracket(&a, &b).unwrap().plus(&lie_bracket(&b, &a).unwrap());
        assert!(anti.coeffs.iter().all(|e| {
            matches!(is_zero(e), Verdict::ProvedZero)
        }));
        let jac = jacobi_sum(&a, &b, &c).unwrap();
        for e in &jac.coeffs {
            assert_eq!(is_zero(e), Verdict::ProvedZero, "jacobi failed: {e}");
        }
    }
}

#[test]
fn constraint_folding() {
    let e = x("eps^2*u + eps^3*t + eps^-1*x");
    let folded = apply_constraints(&e, &[Constraint::UnitSquare("eps".into())]);
    assert_eq!(folded, x("u + eps*t + eps*x"));
    let e = x("nu + mu");
    let folded = apply_constraints(
        &e,
        &[Constraint::Equal("nu".into(), neg(sym("mu")))],
    );
    assert!(folded.is_zero());
}

#[test]
fn tags_checked_where_decidable() {
    assert!(ClassMember::parse("1", "u").tag(Subclass::H).tags_consistent());
    assert!(!ClassMember::parse("u_x", "u").tag(Subclass::H).tags_consistent());
    assert!(ClassMember::parse("u_x^-2", "g(u)").tag(Subclass::L).tags_consistent());
    assert!(ClassMember::parse("u_x", "0").tag(Subclass::FPrime).tags_consistent());
    assert!(ClassMember::parse("u_x", "u^2").tag(Subclass::C).tags_consistent());
    assert!(!ClassMember::parse("u_x^-2", "u^2").tag(Subclass::C).tags_consistent());
}
