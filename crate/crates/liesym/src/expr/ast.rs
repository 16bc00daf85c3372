//! Expression tree: immutable, canonically ordered after [`simplify`](super::simplify::simplify).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

pub type Rat = BigRational;

/// Elementary function heads known to the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Func {
    Exp,
    Ln,
    Sin,
    Cos,
    Tan,
    Arctan,
    Abs,
    Sign,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Arctan => "arctan",
            Func::Abs => "abs",
            Func::Sign => "sign",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "arctan" => Func::Arctan,
            "abs" => Func::Abs,
            "sign" => Func::Sign,
            _ => return None,
        })
    }
}

/// An application of an unspecified function head, possibly differentiated.
///
/// `orders[i]` counts partial derivatives with respect to the i-th positional
/// argument, so `f(u_x)` with orders `[1]` is `f'` evaluated at `u_x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct App {
    pub head: String,
    pub args: Vec<Expr>,
    pub orders: Vec<u32>,
}

/// Symbolic expression. Construct through the helpers in this module (or
/// `parse`); they keep results in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Expr {
    Num(Rat),
    Sym(String),
    Pow(Box<Expr>, Box<Expr>),
    Fun(Func, Box<Expr>),
    App(App),
    /// `Integral(e, v)` is a fixed antiderivative of `e` with respect to `v`:
    /// opaque except for the contract `diff(Integral(e, v), v) = e`.
    Integral(Box<Expr>, String),
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
}

impl Expr {
    pub fn zero() -> Expr {
        Expr::Num(Rat::zero())
    }

    pub fn one() -> Expr {
        Expr::Num(Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Expr::Num(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Expr::Num(q) if q.is_one())
    }

    pub fn as_num(&self) -> Option<&Rat> {
        match self {
            Expr::Num(q) => Some(q),
            _ => None,
        }
    }

    /// Integer value if the expression is a literal integer.
    pub fn as_int(&self) -> Option<BigInt> {
        match self {
            Expr::Num(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    pub fn as_sym(&self) -> Option<&str> {
        match self {
            Expr::Sym(s) => Some(s),
            _ => None,
        }
    }

    /// Free symbols of the expression (arguments of unspecified heads included).
    pub fn free_symbols(&self) -> BTreeSet<String> {
        let mut set = BTreeSet::new();
        self.collect_symbols(&mut set);
        set
    }

    fn collect_symbols(&self, set: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Sym(s) => {
                set.insert(s.clone());
            }
            Expr::Pow(b, e) => {
                b.collect_symbols(set);
                e.collect_symbols(set);
            }
            Expr::Fun(_, a) => a.collect_symbols(set),
            Expr::App(app) => {
                for a in &app.args {
                    a.collect_symbols(set);
                }
            }
            Expr::Integral(e, v) => {
                e.collect_symbols(set);
                set.insert(v.clone());
            }
            Expr::Sum(ts) | Expr::Prod(ts) => {
                for t in ts {
                    t.collect_symbols(set);
                }
            }
        }
    }

    pub fn depends_on(&self, name: &str) -> bool {
        match self {
            Expr::Num(_) => false,
            Expr::Sym(s) => s == name,
            Expr::Pow(b, e) => b.depends_on(name) || e.depends_on(name),
            Expr::Fun(_, a) => a.depends_on(name),
            Expr::App(app) => app.args.iter().any(|a| a.depends_on(name)),
            Expr::Integral(e, v) => v == name || e.depends_on(name),
            Expr::Sum(ts) | Expr::Prod(ts) => ts.iter().any(|t| t.depends_on(name)),
        }
    }

    /// Node count, used to keep test generators and diagnostics honest.
    pub fn size(&self) -> usize {
        match self {
            Expr::Num(_) | Expr::Sym(_) => 1,
            Expr::Pow(b, e) => 1 + b.size() + e.size(),
            Expr::Fun(_, a) => 1 + a.size(),
            Expr::App(app) => 1 + app.args.iter().map(Expr::size).sum::<usize>(),
            Expr::Integral(e, _) => 1 + e.size(),
            Expr::Sum(ts) | Expr::Prod(ts) => 1 + ts.iter().map(Expr::size).sum::<usize>(),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render(self))
    }
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn int(n: i64) -> Expr {
    Expr::Num(rat_int(n))
}

pub fn ratio(n: i64, d: i64) -> Expr {
    assert!(d != 0, "zero denominator in rational literal");
    Expr::Num(Rat::new(BigInt::from(n), BigInt::from(d)))
}

pub fn sym(name: &str) -> Expr {
    Expr::Sym(name.to_string())
}

/// Sign of the canonical leading coefficient, used to normalize odd/even
/// function arguments and rendering. Returns true when the expression is
/// "negative-led": a negative number, a product with negative coefficient, or
/// a sum whose first term is negative-led.
pub fn negative_led(e: &Expr) -> bool {
    match e {
        Expr::Num(q) => q.is_negative(),
        Expr::Prod(fs) => fs.first().is_some_and(negative_led),
        Expr::Sum(ts) => ts.first().is_some_and(negative_led),
        _ => false,
    }
}
