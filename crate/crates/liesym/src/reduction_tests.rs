use crate::expr::{sub, x, Expr};
use crate::jet::VectorField;
use crate::reduction::*;
use crate::symmetry::{ClassMember, Constraint};

fn eps2() -> Constraint {
    Constraint::UnitSquare("eps".into())
}

fn pde_quadratic() -> Expr {
    // u_t = u_x u_xx + u^2
    ClassMember::parse("u_x", "u^2").pde_residual()
}

fn pde_boosted() -> Expr {
    // u_t = u_x u_xx - eps u u_x
    sub(x("u_t"), x("u_x*u_xx - eps*u*u_x"))
}

fn pde_slow_diffusion() -> Expr {
    // u_t = u_xx/(u_x+1) + eps u
    sub(x("u_t"), x("u_xx*(u_x+1)^-1 + eps*u"))
}

#[test]
fn reduce_stationary_row() {
    let e = ReductionEntry::new(
        "quadratic.2",
        pde_quadratic(),
        VectorField::parse("1", "0", "0"),
        "phi(omega)",
        "x",
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2",
    );
    let r = reduce(&e).unwrap();
    assert_eq!(r, x("D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2"));
    assert!(verify_reduction(&e, 42).unwrap());
}

#[test]
fn reduce_spatial_translation_rows() {
    // u = phi(t) for f = (u_x+1)^-1, g = eps u: phi_omega = eps phi
    let e = ReductionEntry::new(
        "slow.1",
        pde_slow_diffusion(),
        VectorField::parse("0", "1", "0"),
        "phi(omega)",
        "t",
        "D(phi,1)(omega) - eps*phi(omega)",
    )
    .with_constraint(eps2());
    let r = reduce(&e).unwrap();
    assert_eq!(r, x("D(phi,1)(omega) - eps*phi(omega)"));
    assert!(verify_reduction(&e, 42).unwrap());

    // generic: u = phi(t) for any f and opaque g: phi_omega - g(phi)
    let e = ReductionEntry::new(
        "generic.dx",
        ClassMember::parse("f(u_x)", "g(u)").pde_residual(),
        VectorField::parse("0", "1", "0"),
        "phi(omega)",
        "t",
        "D(phi,1)(omega) - g(phi(omega))",
    );
    let r = reduce(&e).unwrap();
    assert_eq!(r, x("D(phi,1)(omega) - g(phi(omega))"));
}

#[test]
fn reduce_exponential_row() {
    // u = phi e^(eps t) - x, omega = x: phi_omegaomega = eps omega phi_omega
    let e = ReductionEntry::new(
        "slow.3",
        pde_slow_diffusion(),
        VectorField::parse("exp(eps*t)", "0", "eps*exp(eps*t)*(u+x)"),
        "phi(omega)*exp(eps*t) - x",
        "x",
        "D(phi,1,1)(omega) - eps*omega*D(phi,1)(omega)",
    )
    .with_constraint(eps2());
    assert!(e.invariant_is_annihilated(42));
    assert!(e.ansatz_is_invariant(42));
    let r = reduce(&e).unwrap();
    assert_eq!(r, x("D(phi,1,1)(omega) - eps*omega*D(phi,1)(omega)"));
    assert!(verify_reduction(&e, 42).unwrap());
}

#[test]
fn reduce_projective_row() {
    // u = (phi - t)/(t^2+1), omega = x - kappa arctan t
    let e = ReductionEntry::new(
        "quadratic.5",
        pde_quadratic(),
        VectorField::parse("t^2+1", "kappa", "-(2*t*u+1)"),
        "(phi(omega) - t)*(t^2+1)^-1",
        "x - kappa*arctan(t)",
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + kappa*D(phi,1)(omega) + 1",
    );
    assert!(e.invariant_is_annihilated(42));
    assert!(e.ansatz_is_invariant(42));
    assert!(verify_reduction(&e, 42).unwrap());

    // a corrupted constant term is rejected
    let bad = ReductionEntry::new(
        "quadratic.5-corrupted",
        pde_quadratic(),
        VectorField::parse("t^2+1", "kappa", "-(2*t*u+1)"),
        "(phi(omega) - t)*(t^2+1)^-1",
        "x - kappa*arctan(t)",
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + kappa*D(phi,1)(omega) + 2",
    );
    assert!(!verify_reduction(&bad, 42).unwrap());
}

#[test]
fn reduce_galilean_row() {
    // u = phi + x/(eps t), omega = t for the boosted equation
    let e = ReductionEntry::new(
        "boosted.2",
        pde_boosted(),
        VectorField::parse("0", "t", "eps^-1"),
        "phi(omega) + x/(eps*t)",
        "t",
        "D(phi,1)(omega) + omega^-1*phi(omega)",
    )
    .with_constraint(eps2());
    assert!(e.invariant_is_annihilated(42));
    assert!(e.ansatz_is_invariant(42));
    assert!(verify_reduction(&e, 42).unwrap());
}

#[test]
fn bad_entry_retains_independents() {
    // wrong invariant variable: residual keeps explicit x
    let e = ReductionEntry::new(
        "broken",
        pde_quadratic(),
        VectorField::parse("1", "0", "0"),
        "phi(omega) + x",
        "t",
        "D(phi,1)(omega)",
    );
    assert!(matches!(
        reduce(&e),
        Err(ReductionError::ResidualRetainsIndependents { .. })
    ));
}

#[test]
fn solution_checks() {
    // u = -(t+c1)^-1 and u = 0 for u_t = u_x u_xx + u^2
    let s = SolutionCandidate::new("quadratic.general", pde_quadratic(), "-(t+c1)^-1");
    assert!(verify_solution(&s, 42));
    let s = SolutionCandidate::new("quadratic.singular", pde_quadratic(), "0");
    assert!(verify_solution(&s, 42));
    // and a wrong one fails
    let s = SolutionCandidate::new("quadratic.wrong", pde_quadratic(), "(t+c1)^-1");
    assert!(!verify_solution(&s, 42));

    // separation family for eps = 1: u = c0 + c1 e^(x - c0 t) + c2 e^(-x + c0 t)
    let pde = sub(x("u_t"), x("u_x*u_xx - u*u_x"));
    let s = SolutionCandidate::new(
        "separation.plus",
        pde,
        "c0 + c1*exp(x - c0*t) + c2*exp(-x + c0*t)",
    );
    assert!(verify_solution(&s, 42));

    // trigonometric family for eps = -1: u = c0 + c1 cos(x + c0 t + c2)
    let pde = sub(x("u_t"), x("u_x*u_xx + u*u_x"));
    let s = SolutionCandidate::new("separation.minus", pde, "c0 + c1*cos(x + c0*t + c2)");
    assert!(verify_solution(&s, 42));
}

#[test]
fn ode_solution_checks() {
    // phi = c1 Int(e^(eps w^2/2), w) + c2 solves phi_ww = eps w phi_w
    let ode = x("D(phi,1,1)(omega) - eps*omega*D(phi,1)(omega)");
    let body = x("c1*Int(exp(eps*omega^2/2), omega) + c2");
    assert!(verify_ode_solution(&ode, &body, &[eps2()], 42));

    // phi = ln|Int(e^(eps w^2/2), w) + c1| + c2 solves phi_ww = phi_w (eps w - phi_w)
    let ode = x(
        "D(phi,1,1)(omega) - D(phi,1)(omega)*(eps*omega - D(phi,1)(omega))",
    );
    let body = x("ln(abs(Int(exp(eps*omega^2/2), omega) + c1)) + c2");
    assert!(verify_ode_solution(&ode, &body, &[eps2()], 42));

    // phi = -1/(omega+c1) solves phi_w = phi^2
    let ode = x("D(phi,1)(omega) - phi(omega)^2");
    assert!(verify_ode_solution(&ode, &x("-(omega+c1)^-1"), &[], 42));

    // singular family phi = c2 e^-omega for phi_w phi_ww + phi^2 = 0
    let ode = x("D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2");
    assert!(verify_ode_solution(&ode, &x("c2*exp(-omega)"), &[], 42));
    assert!(!verify_ode_solution(&ode, &x("c2*exp(omega/2)"), &[], 42));
}

#[test]
fn first_integral_checks() {
    // I = phi_w^2 - eps phi^2 - 2 eps^-1 w for phi_w(phi_ww - eps phi) = eps^-1
    let ode = x("D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) - eps^-1");
    let i = x("D(phi,1)(omega)^2 - eps*phi(omega)^2 - 2*eps^-1*omega");
    assert!(verify_first_integral(&ode, &i, &[eps2()], 42).unwrap());

    // I = phi is not a first integral of phi_ww
    let ode = x("D(phi,1,1)(omega)");
    assert!(!verify_first_integral(&ode, &x("phi(omega)"), &[], 42).unwrap());

    // kappa = 0 traveling wave: I = phi_w - ln|phi_w + 1| + eps phi^2/2
    // for phi_ww + eps phi (phi_w + 1)
    let ode = x("D(phi,1,1)(omega) + eps*phi(omega)*(D(phi,1)(omega) + 1)");
    let i = x("D(phi,1)(omega) - ln(abs(D(phi,1)(omega) + 1)) + eps*phi(omega)^2/2");
    assert!(verify_first_integral(&ode, &i, &[eps2()], 42).unwrap());

    // cubic first integral for the stationary quadratic row
    let ode = x("D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2");
    let i = x("D(phi,1)(omega)^3 + phi(omega)^3");
    assert!(verify_first_integral(&ode, &i, &[], 42).unwrap());
}

#[test]
fn abel_changes_of_variables() {
    // step 1: p(y) with y = phi, p = phi_w maps
    // phi_w phi_ww + phi^2 + kappa phi_w + mu phi + nu = 0 to
    // p^2 p_y + y^2 + kappa p + mu y + nu = 0
    let source = x(
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + kappa*D(phi,1)(omega) \
         + mu*phi(omega) + nu",
    );
    let target = x("p^2*p_y + y^2 + kappa*p + mu*y + nu");
    assert!(verify_ode_change_of_variables(
        &source,
        &x("phi(omega)"),
        &x("D(phi,1)(omega)"),
        &target,
        &[],
        42
    )
    .unwrap());

    // step 2: y~ = p + y, p~ = y gives the Abel equation of the second kind
    let target = x(
        "((2*y + mu - kappa)*p - y^2 + kappa*y + nu)*p_y + (p - y)^2",
    );
    assert!(verify_ode_change_of_variables(
        &source,
        &x("D(phi,1)(omega) + phi(omega)"),
        &x("phi(omega)"),
        &target,
        &[],
        42
    )
    .unwrap());

    // nu = 0 variant: y~ = p/y, p~ = 1/y
    let source0 = x(
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + kappa*D(phi,1)(omega) \
         + mu*phi(omega)",
    );
    let target = x("((kappa*y + mu)*p + y^3 + 1)*p_y - y^2*p");
    assert!(verify_ode_change_of_variables(
        &source0,
        &x("D(phi,1)(omega)/phi(omega)"),
        &x("phi(omega)^-1"),
        &target,
        &[],
        42
    )
    .unwrap());

    // canonical Abel form of the boosted stationary+galilean row:
    // y = -1/phi_w, p = 1/phi_w + phi maps
    // phi_w(phi_ww - eps phi) = eps^-1 to p p_y + p + eps/y^3 = 0
    let source = x("D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) - eps^-1");
    let target = x("p*p_y + p + eps*y^-3");
    assert!(verify_ode_change_of_variables(
        &source,
        &x("-D(phi,1)(omega)^-1"),
        &x("D(phi,1)(omega)^-1 + phi(omega)"),
        &target,
        &[eps2()],
        42
    )
    .unwrap());

    // scaling row of the same equation, kappa != 0:
    // y = phi_w, p = phi maps phi_w(phi_ww - eps phi) + phi = -eps^-1 kappa
    // to ((1 - eps y) p + eps^-1 kappa) p_y = -y^2
    let source = x(
        "D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) + phi(omega) + eps^-1*kappa",
    );
    let target = x("((1 - eps*y)*p + eps^-1*kappa)*p_y + y^2");
    assert!(verify_ode_change_of_variables(
        &source,
        &x("D(phi,1)(omega)"),
        &x("phi(omega)"),
        &target,
        &[eps2()],
        42
    )
    .unwrap());
}
