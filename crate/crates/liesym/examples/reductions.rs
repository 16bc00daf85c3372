//! Lie reductions to ODEs, exact solutions and first integrals.

use liesym::expr::x;
use liesym::jet::VectorField;
use liesym::reduction::{
    reduce, verify_first_integral, verify_ode_solution, verify_reduction, verify_solution,
    ReductionEntry, SolutionCandidate,
};
use liesym::symmetry::ClassMember;

fn main() {
    // traveling-wave reduction of the quadratic-source equation
    let entry = ReductionEntry::new(
        "traveling wave",
        ClassMember::parse("u_x", "u^2").pde_residual(),
        VectorField::parse("1", "kappa", "0"),
        "phi(omega)",
        "x - kappa*t",
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + kappa*D(phi,1)(omega)",
    );
    println!("reduced residual: {}", reduce(&entry).unwrap());
    println!("matches the stated equation: {}", verify_reduction(&entry, 42).unwrap());

    // a projective reduction where a (t^2+1)-multiplier must factor out
    let entry = ReductionEntry::new(
        "projective",
        ClassMember::parse("u_x", "u^2").pde_residual(),
        VectorField::parse("t^2+1", "kappa", "-(2*t*u+1)"),
        "(phi(omega) - t)*(t^2+1)^-1",
        "x - kappa*arctan(t)",
        "D(phi,1)(omega)*D(phi,1,1)(omega) + phi(omega)^2 + kappa*D(phi,1)(omega) + 1",
    );
    println!("projective row verifies: {}", verify_reduction(&entry, 42).unwrap());

    // solutions of the unreduced equation
    let blowup = SolutionCandidate::new(
        "blow-up",
        ClassMember::parse("u_x", "u^2").pde_residual(),
        "-(t+c1)^-1",
    );
    println!("u = -(t+c1)^-1 solves u_t = u_x u_xx + u^2: {}", verify_solution(&blowup, 42));

    // a quadrature with an antiderivative node, checked at the ODE level
    let ode = x("D(phi,1,1)(omega) - eps*omega*D(phi,1)(omega)");
    let body = x("c1*Int(exp(eps*omega^2/2), omega) + c2");
    let eps = liesym::symmetry::Constraint::UnitSquare("eps".into());
    println!(
        "phi = c1 Int(e^(eps w^2/2)) + c2 solves phi_ww = eps w phi_w: {}",
        verify_ode_solution(&ode, &body, std::slice::from_ref(&eps), 42)
    );

    // a first integral: D_w I = 2 * (equation)
    let ode = x("D(phi,1)(omega)*(D(phi,1,1)(omega) - eps*phi(omega)) - eps^-1");
    let integral = x("D(phi,1)(omega)^2 - eps*phi(omega)^2 - 2*eps^-1*omega");
    println!(
        "phi_w^2 - eps phi^2 - 2 w/eps is a first integral: {}",
        verify_first_integral(&ode, &integral, &[eps], 42).unwrap()
    );
}
