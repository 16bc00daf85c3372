//! ASCII rendering of expressions. `parse(render(e))` reproduces `e` for
//! canonical `e`.

use super::ast::{negative_led, Expr};
use num_traits::Signed;

const PREC_SUM: u8 = 1;
const PREC_PROD: u8 = 2;
const PREC_NEG: u8 = 3;
const PREC_POW: u8 = 4;
const PREC_ATOM: u8 = 5;

pub fn render(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(&mut s, e, 0);
    s
}

fn write_paren(out: &mut String, e: &Expr, prec: u8, min: u8) {
    if prec < min {
        out.push('(');
        write_expr(out, e, 0);
        out.push(')');
    } else {
        write_expr(out, e, min);
    }
}

/// Split `e` into (is_negative, magnitude-part) for sum rendering.
fn strip_sign(e: &Expr) -> (bool, Expr) {
    if negative_led(e) {
        (true, super::simplify::neg(e.clone()))
    } else {
        (false, e.clone())
    }
}

fn write_expr(out: &mut String, e: &Expr, min: u8) {
    match e {
        Expr::Num(q) => {
            let neg = q.is_negative();
            let prec = if neg {
                PREC_NEG
            } else if q.is_integer() {
                PREC_ATOM
            } else {
                PREC_PROD
            };
            if prec < min {
                out.push('(');
            }
            if q.is_integer() {
                out.push_str(&q.numer().to_string());
            } else {
                out.push_str(&format!("{}/{}", q.numer(), q.denom()));
            }
            if prec < min {
                out.push(')');
            }
        }
        Expr::Sym(s) => out.push_str(s),
        Expr::Sum(ts) => {
            if PREC_SUM < min {
                out.push('(');
            }
            for (i, t) in ts.iter().enumerate() {
                let (neg, mag) = strip_sign(t);
                if i == 0 {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                write_paren(out, &mag, prec_of(&mag), PREC_PROD);
            }
            if PREC_SUM < min {
                out.push(')');
            }
        }
        Expr::Prod(fs) => {
            if PREC_PROD < min {
                out.push('(');
            }
            let mut rest: &[Expr] = fs;
            if let Some(Expr::Num(q)) = fs.first() {
                if *q == super::ast::rat_int(-1) && fs.len() > 1 {
                    out.push('-');
                    rest = &fs[1..];
                }
            }
            for (i, f) in rest.iter().enumerate() {
                if i > 0 {
                    out.push('*');
                }
                write_paren(out, f, prec_of(f), PREC_NEG);
            }
            if PREC_PROD < min {
                out.push(')');
            }
        }
        Expr::Pow(b, x) => {
            if PREC_POW < min {
                out.push('(');
            }
            // base binds tighter than ^
            write_paren(out, b, prec_of(b), PREC_ATOM);
            out.push('^');
            write_exponent(out, x);
            if PREC_POW < min {
                out.push(')');
            }
        }
        Expr::Fun(f, a) => {
            out.push_str(f.name());
            out.push('(');
            write_expr(out, a, 0);
            out.push(')');
        }
        Expr::App(app) => {
            let total: u32 = app.orders.iter().sum();
            if total == 0 {
                out.push_str(&app.head);
            } else {
                out.push_str("D(");
                out.push_str(&app.head);
                for (i, k) in app.orders.iter().enumerate() {
                    for _ in 0..*k {
                        out.push_str(&format!(",{}", i + 1));
                    }
                }
                out.push(')');
            }
            out.push('(');
            for (i, a) in app.args.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_expr(out, a, 0);
            }
            out.push(')');
        }
        Expr::Integral(body, v) => {
            out.push_str("Int(");
            write_expr(out, body, 0);
            out.push(',');
            out.push_str(v);
            out.push(')');
        }
    }
}

fn write_exponent(out: &mut String, e: &Expr) {
    // `^` admits a bare atom or `-`atom on the right; everything else is
    // parenthesized
    match e {
        Expr::Num(q) if q.is_integer() => {
            out.push_str(&q.numer().to_string());
        }
        Expr::Sym(s) => out.push_str(s),
        Expr::Fun(_, _) | Expr::App(_) | Expr::Integral(_, _) => {
            write_expr(out, e, PREC_ATOM)
        }
        _ => {
            out.push('(');
            write_expr(out, e, 0);
            out.push(')');
        }
    }
}

fn prec_of(e: &Expr) -> u8 {
    match e {
        Expr::Num(q) => {
            if q.is_negative() {
                PREC_NEG
            } else if q.is_integer() {
                PREC_ATOM
            } else {
                PREC_PROD
            }
        }
        Expr::Sym(_) | Expr::Fun(_, _) | Expr::App(_) | Expr::Integral(_, _) => PREC_ATOM,
        Expr::Sum(_) => PREC_SUM,
        Expr::Prod(_) => PREC_PROD,
        Expr::Pow(_, _) => PREC_POW,
    }
}
