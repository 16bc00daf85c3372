//! Property tests for the expression kernel.

use liesym::expr::{
    add, diff, eval, fun, int, is_zero, mul, neg, parse, pow, render, sample_point, simplify,
    sub, sym, Expr, Func, Verdict,
};
use proptest::prelude::*;

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(sym("a")),
        Just(sym("b")),
        Just(sym("y")),
        Just(sym("u_x")),
        (-4i64..=4).prop_map(int),
        (1i64..=5, 1i64..=5).prop_map(|(n, d)| liesym::expr::ratio(n, d)),
    ];
    leaf.prop_recursive(4, 64, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..3).prop_map(add),
            prop::collection::vec(inner.clone(), 2..3).prop_map(mul),
            (inner.clone(), 1i64..=3).prop_map(|(e, k)| pow(e, int(k))),
            inner.clone().prop_map(|e| fun(Func::Sin, e)),
            inner.clone().prop_map(|e| fun(Func::Cos, e)),
            inner.clone().prop_map(|e| fun(Func::Exp, e)),
            inner.clone().prop_map(|e| fun(Func::Abs, e)),
            inner.prop_map(neg),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn simplify_is_idempotent(e in arb_expr()) {
        let s1 = simplify(&e);
        let s2 = simplify(&s1);
        prop_assert_eq!(s1, s2);
    }

    #[test]
    fn render_parse_round_trip(e in arb_expr()) {
        let canonical = simplify(&e);
        let text = render(&canonical);
        let back = parse(&text).unwrap();
        prop_assert_eq!(canonical, back, "rendered as {}", text);
    }

    #[test]
    fn simplify_preserves_values(e in arb_expr(), seed in any::<u64>()) {
        let s = simplify(&e);
        let p = sample_point(&e, seed, &Default::default());
        if let (Ok(v1), Ok(v2)) = (eval(&e, &p), eval(&s, &p)) {
            if v1.abs() < 1e9 {
                prop_assert!(
                    (v1 - v2).abs() <= 1e-9 * (1.0 + v1.abs()),
                    "{} vs {} for {}",
                    v1,
                    v2,
                    e
                );
            }
        }
    }

    #[test]
    fn mixed_partials_commute(e in arb_expr()) {
        let ab = diff(&diff(&e, "a"), "b");
        let ba = diff(&diff(&e, "b"), "a");
        prop_assert_eq!(is_zero(&sub(ab, ba)), Verdict::ProvedZero);
    }

    #[test]
    fn differentiation_is_linear_and_leibniz(e1 in arb_expr(), e2 in arb_expr()) {
        let sum_rule = sub(
            diff(&add(vec![e1.clone(), e2.clone()]), "y"),
            add(vec![diff(&e1, "y"), diff(&e2, "y")]),
        );
        prop_assert_eq!(is_zero(&sum_rule), Verdict::ProvedZero);
        let prod_rule = sub(
            diff(&mul(vec![e1.clone(), e2.clone()]), "y"),
            add(vec![
                mul(vec![diff(&e1, "y"), e2.clone()]),
                mul(vec![e1.clone(), diff(&e2, "y")]),
            ]),
        );
        prop_assert_eq!(is_zero(&prod_rule), Verdict::ProvedZero);
    }
}
