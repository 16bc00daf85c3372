//! The equivalence-algebra basis on (t, x, u, u_x, f, g): commutator table,
//! closure failures, and computable algebra signatures.

use liesym::harness::catalog::{q_basis, Q_NAMES};
use liesym::symmetry::{algebra_signature, lie_bracket, structure_constants, GeneralVectorField};

fn main() {
    let q = q_basis();

    println!("nonzero commutators:");
    for i in 0..q.len() {
        for j in (i + 1)..q.len() {
            let b = lie_bracket(&q[i], &q[j]).unwrap();
            if !b.is_zero() {
                println!("  [{}, {}] = {}", Q_NAMES[i], Q_NAMES[j], b);
            }
        }
    }

    // {Z^x, R} fails to close
    match structure_constants(&[q[7].clone(), q[8].clone()]).unwrap() {
        Ok(_) => println!("\n{{Z^x, R}} unexpectedly closed"),
        Err(fail) => println!("\n{{Z^x, R}}: {fail}"),
    }

    // signature of a maximal invariance algebra: the quadratic case
    let coords = ["t", "x", "u"];
    let field = |t: &str, x_: &str, u_: &str| {
        GeneralVectorField::new(
            &coords,
            vec![
                liesym::expr::x(t),
                liesym::expr::x(x_),
                liesym::expr::x(u_),
            ],
        )
        .unwrap()
    };
    let basis = vec![
        field("1", "0", "0"),
        field("0", "1", "0"),
        field("t", "0", "-u"),
        field("t^2", "0", "-(2*t*u+1)"),
    ];
    let sig = algebra_signature(&basis).unwrap().unwrap();
    println!(
        "\nquadratic case algebra: dim {}, dim pr_t {}, derived {:?}, lower central {:?}, \
         center {}",
        sig.dim, sig.dim_pr_t, sig.derived_series_dims, sig.lower_central_dims, sig.center_dim
    );
}
