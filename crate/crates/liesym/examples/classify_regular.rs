//! Furcate splitting for the regular subclass: template solvers and the full
//! enumeration, diffed against the built-in catalog.

use liesym::expr::{int, neg, sym, Expr};
use liesym::harness::furcate::{
    classify_diff, furcate_enumerate_c, solve_template_f, solve_template_f_quadratic,
    solve_template_g,
};

fn main() {
    // the f-template a2 u_x f' + a4 f = 0
    let (f, adm) = solve_template_f(&Expr::one(), &neg(sym("n"))).unwrap();
    println!("f-template (1, -n):  f = {f}  [{adm:?}]");
    let (f, adm) = solve_template_f(&Expr::one(), &int(2)).unwrap();
    println!("f-template (1, 2):   f = {f}  [{adm:?}]");

    // the quadratic template of the singular branches
    let (f, _) =
        solve_template_f_quadratic(&[Expr::one(), Expr::one(), Expr::zero(), int(-1)]).unwrap();
    println!("quadratic template (1, 1, 0, -1):  f = {f}");

    // the g-template (b1 u + b2) g_u + b3 g = b4 u + b5
    for b in [
        [1i64, 0, 1, 0, 0],
        [1, 0, -3, 0, 0],
        [0, 1, 0, 1, 0],
        [0, 1, -1, 0, 0],
    ] {
        let coeffs = b.map(int);
        let g = solve_template_g(&coeffs).unwrap();
        println!("g-template {b:?}:  g = {g}");
    }

    // the full enumeration
    println!("\nenumerated regular-subclass extensions:");
    for case in furcate_enumerate_c() {
        println!("  {}", case.id());
        println!("      via {}", case.branch);
    }
    let (missing, extra) = classify_diff();
    println!("\ndiff against the catalog: missing {missing:?}, extraneous {extra:?}");
}
