//! Checking Lie symmetries of diffusion-reaction equations, including rows
//! whose parameter functions satisfy side relations.

use liesym::expr::x;
use liesym::jet::VectorField;
use liesym::symmetry::{
    invariance_residual, is_symmetry, symmetry_verdict, ClassMember, Constraint, SideRelation,
};

fn main() {
    // u_t = u_x u_xx + u^2 admits the projective field t^2 d_t - (2tu+1) d_u
    let m = ClassMember::parse("u_x", "u^2");
    let q = VectorField::parse("t^2", "0", "-(2*t*u+1)");
    println!(
        "t^2 d_t - (2tu+1) d_u on u_t = u_x u_xx + u^2: symmetry = {}",
        is_symmetry(&q, &m, &[], 42).unwrap()
    );

    // and x d_x is rejected by a numeric probe
    let q = VectorField::parse("0", "x", "0");
    println!(
        "x d_x on the same equation: verdict = {:?}",
        symmetry_verdict(&q, &m, &[], 42).unwrap()
    );

    // a sign parameter with eps^2 = 1
    let m = ClassMember::parse("(u_x+1)^-1", "eps*u")
        .with_constraint(Constraint::UnitSquare("eps".into()));
    let q = VectorField::parse("exp(eps*t)", "0", "eps*exp(eps*t)*(u+x)");
    println!(
        "e^(eps t)(d_t + eps (u+x) d_u) on the slow-diffusion equation: {}",
        is_symmetry(&q, &m, &[], 42).unwrap()
    );

    // infinite-dimensional rows: h(t, x) d_u with h_t = h_xx
    let heat = SideRelation::new("h", &["t", "x"], 0, x("D(h,2,2)(t,x)")).unwrap();
    let m = ClassMember::parse("1", "0");
    let q = VectorField::parse("0", "0", "h(t,x)");
    println!(
        "h(t,x) d_u on the heat equation with h_t -> h_xx: {}",
        is_symmetry(&q, &m, &[heat], 42).unwrap()
    );

    // the bare residual of d_u on an opaque member is -g_u
    let opaque = ClassMember::parse("f(u_x)", "g(u)");
    let r = invariance_residual(&VectorField::parse("0", "0", "1"), &opaque).unwrap();
    println!("residual of d_u on an opaque member: {r}");
}
