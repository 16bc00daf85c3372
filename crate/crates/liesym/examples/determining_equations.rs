//! The determining equations of the class, produced by splitting the
//! invariance criterion with respect to u_xx.

use liesym::symmetry::{determining_equations, ClassMember};

fn main() {
    // fully generic arbitrary elements
    let m = ClassMember::parse("f(u_x)", "g(u)");
    let [a, b] = determining_equations(&m).unwrap();
    println!("coefficient of u_xx:\n  {a}\n");
    println!("u_xx-free part:\n  {b}\n");

    // specializations fold the derivative of f into the coefficients
    for (f, g) in [("1", "g(u)"), ("u_x^-2", "g(u)"), ("u_x", "u^2")] {
        let m = ClassMember::parse(f, g);
        let [a, _] = determining_equations(&m).unwrap();
        println!("f = {f}: u_xx-coefficient splits to\n  {a}\n");
    }
}
