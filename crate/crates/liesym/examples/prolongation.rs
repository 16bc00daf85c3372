//! Jet calculus: total derivatives and the second prolongation of point
//! vector fields.

use liesym::expr::x;
use liesym::jet::{d_t, d_x, prolong2, VectorField};

fn main() {
    // total derivatives treat jet coordinates as independent symbols
    println!("D_x u         = {}", d_x(&x("u")).unwrap());
    println!("D_x f(u_x)    = {}", d_x(&x("f(u_x)")).unwrap());
    println!("D_t (x*u)     = {}", d_t(&x("x*u")).unwrap());

    // second prolongation of a scaling field
    let q = VectorField::parse("t", "0", "-u");
    let p = prolong2(&q).unwrap();
    println!("\nQ = t d_t - u d_u");
    println!("eta^(1,0) = {}", p.eta10);
    println!("eta^(0,1) = {}", p.eta01);
    println!("eta^(2,0) = {}", p.eta20);
    println!("eta^(1,1) = {}", p.eta11);
    println!("eta^(0,2) = {}", p.eta02);

    // apply the prolonged field to the equation residual
    let residual = x("u_t - u_x*u_xx - u^2");
    println!(
        "\nQ^(2)(u_t - u_x u_xx - u^2) = {}",
        p.apply(&residual)
    );
}
