//! Point transformations between equations of the class: element maps,
//! push-forward residual certificates, the hodograph linearization, and the
//! effective generalized equivalence group.

use liesym::equivalence::{
    compose, infinitesimal_generator, invert, map_elements, match_group_template,
    push_forward_residual, GroupId, PointTransformation, TransformationFamily,
};
use liesym::expr::{x, Expr, ZeroTester};
use liesym::symmetry::ClassMember;

fn main() {
    let tester = ZeroTester::default();

    // the arctan map carries quadratic-source solutions to shifted ones
    let tr = PointTransformation::parse("arctan(t)", "x", "(t^2+1)*u + t");
    let src = ClassMember::parse("u_x", "u^2");
    let tgt = ClassMember::parse("u_x", "u^2+1");
    let r = push_forward_residual(&tr, &src.rhs(), &tgt.rhs()).unwrap();
    println!("arctan map residual: {} (proved zero: {})", r, tester.proved_zero(&r));

    // hodograph linearization of the u_x^-2 subclass
    let hodograph = PointTransformation::parse("t", "u", "x");
    let src = ClassMember::parse("c*u_x^-2", "g(u)");
    let (ft, gt) = map_elements(&hodograph, &src).unwrap();
    println!("hodograph element maps: f~ = {ft}, g~ = {gt}");
    let r = push_forward_residual(&hodograph, &src.rhs(), &x("c*u_xx - g(x)*u_x")).unwrap();
    println!("drift-diffusion target residual proved zero: {}", tester.proved_zero(&r));

    // the effective generalized equivalence group is closed under
    // composition and inverse
    let a = GroupId::EffectiveF.generic("a");
    let b = GroupId::EffectiveF.generic("b");
    let c = compose(&a, &b).unwrap();
    let assignment = match_group_template(&c, GroupId::EffectiveF, &tester).unwrap();
    println!("\ncomposition of two effective-group elements stays in the group:");
    for (name, value) in assignment.iter().take(4) {
        println!("  {name} = {value}");
    }
    let inv = invert(&a).unwrap();
    println!(
        "inverse stays in the group: {}",
        match_group_template(&inv, GroupId::EffectiveF, &tester).is_some()
    );

    // one-parameter families give the algebra generators
    let family = GroupId::EffectiveF.instantiate(&[
        ("T1", Expr::one()),
        ("T0", liesym::expr::sym("delta")),
        ("X1", Expr::one()),
        ("X2", Expr::zero()),
        ("X0", Expr::zero()),
        ("U1", Expr::zero()),
        ("U2", Expr::one()),
        ("U3", Expr::zero()),
        ("U0", Expr::zero()),
    ]);
    let gen = infinitesimal_generator(&TransformationFamily::new(family, "delta")).unwrap();
    println!("\ntime-translation family generates: {gen}");
}
