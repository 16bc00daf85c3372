//! Tour of the expression kernel: parsing, canonical simplification,
//! differentiation, substitution, numeric evaluation and zero testing.

use liesym::expr::{
    diff, eval, is_zero, parse, substitute, x, Binding, NumericPoint, Verdict,
};

fn main() {
    // parsing and canonical form
    let e = x("u_x^2 + t*u + 0*x");
    println!("u_x^2 + t*u + 0*x   simplifies to   {e}");

    let e = x("sign(u_x)^2*f(u_x) - f(u_x)");
    println!("sign algebra:       sign(u_x)^2 f(u_x) - f(u_x) = {e}");

    let e = x("abs(u)^(n+1)/u");
    println!("abs/sign merging:   abs(u)^(n+1)/u = {e}");

    // differentiation, including through unspecified heads
    println!("d/du_x abs(u_x)^n   = {}", diff(&x("abs(u_x)^n"), "u_x"));
    println!("d/du_x f(u_x)       = {}", diff(&x("f(u_x)"), "u_x"));
    println!("d/dy ln(abs(y))     = {}", diff(&x("ln(abs(y))"), "y"));

    // substitution rewrites derivative instances consistently
    let g_u = x("D(g,1)(u)");
    let squared = substitute(&g_u, &[Binding::let_head("g", &["u"], x("u^2"))]).unwrap();
    println!("g_u with g = u^2    = {squared}");

    // numeric evaluation
    let p = NumericPoint::default().bind("u_x", 2.0);
    println!(
        "eval u_x^2 + 1 at u_x = 2:   {}",
        eval(&x("u_x^2 + 1"), &p).unwrap()
    );

    // three-valued zero testing
    for s in ["u_x - u_x", "1/y - 1/(y+1) - 1/(y*(y+1))", "D(g,1)(u)"] {
        let verdict = is_zero(&parse(s).unwrap());
        println!("is_zero({s}) = {verdict:?}");
    }
    assert_eq!(is_zero(&x("u_x - u_x")), Verdict::ProvedZero);
}
