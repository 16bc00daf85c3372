//! Canonical-form normalization.
//!
//! The constructors in this module ([`add`], [`mul`], [`pow`], [`fun`], ...)
//! expect canonical children and produce canonical results; [`simplify`]
//! rebuilds an arbitrary tree bottom-up through them. Canonical form is fully
//! distributed: products carry no sum factors, sums no nested sums, rational
//! constants are folded, and terms/factors sit in a fixed total order.
//!
//! Sign conventions for real-branch work: `sign(y)^2 -> 1`,
//! `abs(y)*sign(y) -> y`, `abs(y)^2 -> y^2`, `cos(t)^2 -> 1 - sin(t)^2`,
//! and `tan` is kept as `sin/cos`.

use super::ast::{int, App, Expr, Func, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Largest literal integer exponent that gets folded or expanded.
const MAX_FOLD_EXP: i64 = 4096;
const MAX_SUM_POW_EXPAND: i64 = 64;

pub fn simplify(e: &Expr) -> Expr {
    match e {
        Expr::Num(_) | Expr::Sym(_) => e.clone(),
        Expr::Sum(ts) => add(ts.iter().map(simplify).collect()),
        Expr::Prod(fs) => mul(fs.iter().map(simplify).collect()),
        Expr::Pow(b, x) => pow(simplify(b), simplify(x)),
        Expr::Fun(f, a) => fun(*f, simplify(a)),
        Expr::App(app) => Expr::App(App {
            head: app.head.clone(),
            args: app.args.iter().map(simplify).collect(),
            orders: app.orders.clone(),
        }),
        Expr::Integral(body, v) => Expr::Integral(Box::new(simplify(body)), v.clone()),
    }
}

pub fn neg(e: Expr) -> Expr {
    mul(vec![int(-1), e])
}

pub fn sub(a: Expr, b: Expr) -> Expr {
    add(vec![a, neg(b)])
}

pub fn div(a: Expr, b: Expr) -> Expr {
    mul(vec![a, pow(b, int(-1))])
}

pub fn add2(a: Expr, b: Expr) -> Expr {
    add(vec![a, b])
}

pub fn mul2(a: Expr, b: Expr) -> Expr {
    mul(vec![a, b])
}

/// Split a canonical term into (rational coefficient, monomial rest).
fn split_coeff(e: Expr) -> (Rat, Expr) {
    match e {
        Expr::Num(q) => (q, Expr::one()),
        Expr::Prod(mut fs) => {
            if matches!(fs.first(), Some(Expr::Num(_))) {
                let q = match fs.remove(0) {
                    Expr::Num(q) => q,
                    _ => unreachable!(),
                };
                (q, assemble_prod(Rat::one(), fs))
            } else {
                (Rat::one(), Expr::Prod(fs))
            }
        }
        other => (Rat::one(), other),
    }
}

fn assemble_prod(coeff: Rat, mut factors: Vec<Expr>) -> Expr {
    if coeff.is_zero() {
        return Expr::zero();
    }
    factors.sort();
    if factors.is_empty() {
        return Expr::Num(coeff);
    }
    if coeff.is_one() {
        if factors.len() == 1 {
            return factors.pop().unwrap();
        }
        return Expr::Prod(factors);
    }
    let mut out = Vec::with_capacity(factors.len() + 1);
    out.push(Expr::Num(coeff));
    out.extend(factors);
    Expr::Prod(out)
}

pub fn add(terms: Vec<Expr>) -> Expr {
    let mut constant = Rat::zero();
    let mut map: BTreeMap<Expr, Rat> = BTreeMap::new();
    let mut stack = terms;
    stack.reverse();
    while let Some(t) = stack.pop() {
        match t {
            Expr::Sum(ts) => {
                for x in ts.into_iter().rev() {
                    stack.push(x);
                }
            }
            Expr::Num(q) => constant += q,
            other => {
                let (q, key) = split_coeff(other);
                if key.is_one() {
                    constant += q;
                } else {
                    let slot = map.entry(key).or_insert_with(Rat::zero);
                    *slot += q;
                }
            }
        }
    }
    let mut out: Vec<Expr> = Vec::with_capacity(map.len() + 1);
    for (key, q) in map {
        if q.is_zero() {
            continue;
        }
        if q.is_one() {
            out.push(key);
        } else if let Expr::Prod(fs) = key {
            let mut v = Vec::with_capacity(fs.len() + 1);
            v.push(Expr::Num(q));
            v.extend(fs);
            out.push(Expr::Prod(v));
        } else {
            out.push(Expr::Prod(vec![Expr::Num(q), key]));
        }
    }
    if !constant.is_zero() {
        out.push(Expr::Num(constant));
    }
    out.sort();
    match out.len() {
        0 => Expr::zero(),
        1 => out.pop().unwrap(),
        _ => Expr::Sum(out),
    }
}

fn is_positive_class(e: &Expr) -> bool {
    match e {
        Expr::Num(q) => q.is_positive(),
        Expr::Fun(Func::Exp, _) | Expr::Fun(Func::Abs, _) => true,
        Expr::Pow(b, _) => is_positive_class(b),
        _ => false,
    }
}

/// Exact `q^k` for integer `k` of modest size; `None` when not folded.
fn pow_rat_int(q: &Rat, k: &BigInt) -> Option<Rat> {
    let k64 = k.to_i64()?;
    if k64.abs() > MAX_FOLD_EXP {
        return None;
    }
    if q.is_zero() {
        return if k64 > 0 { Some(Rat::zero()) } else { None };
    }
    let mut base = q.clone();
    let mut n = k64;
    if n < 0 {
        base = base.recip();
        n = -n;
    }
    let mut acc = Rat::one();
    for _ in 0..n {
        acc *= base.clone();
    }
    Some(acc)
}

fn exact_root(n: &BigInt, d: u64) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.nth_root(d as u32);
    let mut p = BigInt::one();
    for _ in 0..d {
        p *= &r;
    }
    if p == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact `q^(p/r)` when the roots come out rational; `None` otherwise.
fn pow_rat_rat(q: &Rat, e: &Rat) -> Option<Rat> {
    if e.is_integer() {
        return pow_rat_int(q, &e.to_integer());
    }
    let p = e.numer().clone();
    let r = e.denom().to_u64()?;
    if r > 64 {
        return None;
    }
    let (qq, negate) = if q.is_negative() {
        if r % 2 == 1 {
            (-q.clone(), true)
        } else {
            return None;
        }
    } else {
        (q.clone(), false)
    };
    let rn = exact_root(qq.numer(), r)?;
    let rd = exact_root(qq.denom(), r)?;
    let mut root = Rat::new(rn, rd);
    if negate {
        root = -root;
    }
    pow_rat_int(&root, &p)
}

thread_local! {
    static DEPTH: std::cell::Cell<usize> = const { std::cell::Cell::new(0) };
}

struct DepthGuard;
impl DepthGuard {
    fn new(site: &str) -> DepthGuard {
        DEPTH.with(|d| {
            let v = d.get() + 1;
            assert!(v < 3000, "normalization recursion runaway at {site}");
            d.set(v);
        });
        DepthGuard
    }
}
impl Drop for DepthGuard {
    fn drop(&mut self) {
        DEPTH.with(|d| d.set(d.get() - 1));
    }
}

pub fn pow(b: Expr, e: Expr) -> Expr {
    let _g = DepthGuard::new("pow");
    pow_inner(b, e)
}

fn pow_inner(b: Expr, e: Expr) -> Expr {
    if e.is_zero() {
        return Expr::one();
    }
    if e.is_one() {
        return b;
    }
    if b.is_one() {
        return Expr::one();
    }
    if b.is_zero() {
        if let Expr::Num(q) = &e {
            if q.is_positive() {
                return Expr::zero();
            }
        }
        return Expr::Pow(Box::new(b), Box::new(e));
    }
    if let (Expr::Num(qb), Expr::Num(qe)) = (&b, &e) {
        if let Some(v) = pow_rat_rat(qb, qe) {
            return Expr::Num(v);
        }
    }
    let e_int = e.as_int();
    match b {
        Expr::Pow(b2, e2) => {
            if e_int.is_some() || is_positive_class(&b2) {
                return pow(*b2, mul(vec![*e2, e]));
            }
            Expr::Pow(Box::new(Expr::Pow(b2, e2)), Box::new(e))
        }
        Expr::Fun(Func::Abs, _) if e_int.as_ref().is_some_and(|k| k.is_even()) => {
            // |y|^(2m) = y^(2m)
            if let Expr::Fun(Func::Abs, y) = b {
                pow(*y, e)
            } else {
                unreachable!()
            }
        }
        Expr::Fun(Func::Exp, a) => fun(Func::Exp, mul(vec![*a, e])),
        Expr::Fun(Func::Sign, a) => match &e_int {
            Some(k) => {
                if k.is_even() {
                    Expr::one()
                } else {
                    Expr::Fun(Func::Sign, a)
                }
            }
            None => Expr::Pow(Box::new(Expr::Fun(Func::Sign, a)), Box::new(e)),
        },
        Expr::Fun(Func::Cos, a) => {
            // cos^2 -> 1 - sin^2 keeps trigonometric polynomials canonical.
            match &e_int {
                Some(k) if *k >= BigInt::from(2) && *k <= BigInt::from(MAX_SUM_POW_EXPAND) => {
                    let k64 = k.to_i64().unwrap();
                    let sin2 = pow(fun(Func::Sin, (*a).clone()), int(2));
                    let base = add(vec![Expr::one(), neg(sin2)]);
                    let even = pow(base, int(k64 / 2));
                    if k64 % 2 == 0 {
                        even
                    } else {
                        mul(vec![even, Expr::Fun(Func::Cos, a)])
                    }
                }
                _ => Expr::Pow(Box::new(Expr::Fun(Func::Cos, a)), Box::new(e)),
            }
        }
        Expr::Prod(fs) => {
            if e_int.is_some() {
                return mul(fs.into_iter().map(|f| pow(f, e.clone())).collect());
            }
            let (pos, rest): (Vec<Expr>, Vec<Expr>) =
                fs.into_iter().partition(is_positive_class);
            if pos.is_empty() {
                return Expr::Pow(Box::new(mul(rest)), Box::new(e));
            }
            let mut out: Vec<Expr> = pos.into_iter().map(|f| pow(f, e.clone())).collect();
            if !rest.is_empty() {
                out.push(pow_raw(mul(rest), e));
            }
            mul(out)
        }
        Expr::Sum(ts) => match &e_int {
            Some(k)
                if k.is_positive() && *k <= BigInt::from(MAX_SUM_POW_EXPAND) =>
            {
                let k64 = k.to_i64().unwrap();
                let base = Expr::Sum(ts);
                let mut acc = base.clone();
                for _ in 1..k64 {
                    acc = mul(vec![acc, base.clone()]);
                }
                acc
            }
            _ => Expr::Pow(Box::new(Expr::Sum(ts)), Box::new(e)),
        },
        other => Expr::Pow(Box::new(other), Box::new(e)),
    }
}

/// Power node without further rewriting (used to avoid infinite recursion on
/// already-irreducible bases).
fn pow_raw(b: Expr, e: Expr) -> Expr {
    if e.is_one() {
        b
    } else if e.is_zero() {
        Expr::one()
    } else {
        Expr::Pow(Box::new(b), Box::new(e))
    }
}

/// Stable sign choice for odd/even argument normalization: a number or
/// numeric-led product flips when its coefficient is negative; a sum flips
/// when its negation precedes it in the total order (first-term signs are
/// not stable under negation, the total order is).
fn flips_sign(e: &Expr) -> bool {
    match e {
        Expr::Num(q) => num_traits::Signed::is_negative(q),
        Expr::Prod(fs) => fs.first().is_some_and(flips_sign),
        Expr::Sum(_) => {
            let negated = neg(e.clone());
            negated < *e
        }
        _ => false,
    }
}

pub fn fun(f: Func, a: Expr) -> Expr {
    let _g = DepthGuard::new("fun");
    fun_inner(f, a)
}

fn fun_inner(f: Func, a: Expr) -> Expr {
    match f {
        Func::Exp => {
            if a.is_zero() {
                return Expr::one();
            }
            if let Expr::Fun(Func::Ln, y) = a {
                return *y;
            }
            Expr::Fun(Func::Exp, Box::new(a))
        }
        Func::Ln => {
            if a.is_one() {
                return Expr::zero();
            }
            if let Expr::Fun(Func::Exp, y) = a {
                return *y;
            }
            Expr::Fun(Func::Ln, Box::new(a))
        }
        Func::Sin => {
            if a.is_zero() {
                return Expr::zero();
            }
            if flips_sign(&a) {
                return neg(Expr::Fun(Func::Sin, Box::new(neg(a))));
            }
            Expr::Fun(Func::Sin, Box::new(a))
        }
        Func::Cos => {
            if a.is_zero() {
                return Expr::one();
            }
            if flips_sign(&a) {
                return Expr::Fun(Func::Cos, Box::new(neg(a)));
            }
            Expr::Fun(Func::Cos, Box::new(a))
        }
        Func::Tan => {
            if a.is_zero() {
                return Expr::zero();
            }
            div(fun(Func::Sin, a.clone()), fun(Func::Cos, a))
        }
        Func::Arctan => {
            if a.is_zero() {
                return Expr::zero();
            }
            if flips_sign(&a) {
                return neg(Expr::Fun(Func::Arctan, Box::new(neg(a))));
            }
            Expr::Fun(Func::Arctan, Box::new(a))
        }
        Func::Abs => abs_of(a),
        Func::Sign => sign_of(a),
    }
}

fn abs_of(a: Expr) -> Expr {
    match a {
        Expr::Num(q) => Expr::Num(q.abs()),
        Expr::Prod(fs) => mul(fs.into_iter().map(abs_of).collect()),
        Expr::Fun(Func::Exp, y) => Expr::Fun(Func::Exp, y),
        Expr::Fun(Func::Abs, y) => abs_of(*y),
        Expr::Fun(Func::Sign, _) => Expr::one(),
        Expr::Pow(b, e) => {
            if let Some(k) = e.as_int() {
                if k.is_even() {
                    // |b^(2m)| = b^(2m) for real b
                    return pow(*b, Expr::Num(Rat::from_integer(k)));
                }
                return pow(abs_of(*b), *e);
            }
            let collapse = match e.as_num() {
                Some(q) => q.denom().is_odd(),
                None => is_positive_class(&b),
            };
            if collapse {
                pow(abs_of(*b), *e)
            } else {
                Expr::Fun(Func::Abs, Box::new(Expr::Pow(b, e)))
            }
        }
        other => {
            if flips_sign(&other) {
                abs_of(neg(other))
            } else {
                Expr::Fun(Func::Abs, Box::new(other))
            }
        }
    }
}

fn sign_of(a: Expr) -> Expr {
    match a {
        Expr::Num(q) => {
            if q.is_zero() {
                Expr::zero()
            } else if q.is_positive() {
                Expr::one()
            } else {
                int(-1)
            }
        }
        Expr::Prod(fs) => mul(fs.into_iter().map(sign_of).collect()),
        Expr::Fun(Func::Exp, _) => Expr::one(),
        Expr::Fun(Func::Abs, _) => Expr::one(),
        Expr::Fun(Func::Sign, y) => Expr::Fun(Func::Sign, y),
        Expr::Pow(b, e) => {
            match e.as_num() {
                Some(q) => {
                    if q.is_integer() {
                        if q.to_integer().is_even() {
                            Expr::one()
                        } else {
                            sign_of(*b)
                        }
                    } else if q.denom().is_odd() {
                        if q.numer().is_even() {
                            Expr::one()
                        } else {
                            sign_of(*b)
                        }
                    } else {
                        // even-denominator root: base nonnegative on the real branch
                        Expr::one()
                    }
                }
                None => {
                    if is_positive_class(&b) {
                        Expr::one()
                    } else {
                        Expr::Fun(Func::Sign, Box::new(Expr::Pow(b, e)))
                    }
                }
            }
        }
        other => {
            if flips_sign(&other) {
                neg(sign_of(neg(other)))
            } else {
                Expr::Fun(Func::Sign, Box::new(other))
            }
        }
    }
}

pub fn app(head: &str, args: Vec<Expr>, orders: Vec<u32>) -> Expr {
    assert_eq!(args.len(), orders.len(), "orders must match arity");
    Expr::App(App {
        head: head.to_string(),
        args,
        orders,
    })
}

pub fn integral(body: Expr, var: &str) -> Expr {
    Expr::Integral(Box::new(body), var.to_string())
}

/// Per-carrier bookkeeping in product merging: exponents of `y`, `abs(y)` and
/// `sign(y)` collected separately, then recombined with `abs(y)*sign(y) = y`.
#[derive(Default)]
struct Carrier {
    plain: Vec<Expr>,
    absv: Vec<Expr>,
    sgn: Vec<Expr>,
}

pub fn mul(factors: Vec<Expr>) -> Expr {
    mul_depth(factors, 0)
}

fn mul_depth(factors: Vec<Expr>, depth: usize) -> Expr {
    assert!(depth < 64, "product normalization failed to converge");
    // flatten
    let mut flat: Vec<Expr> = Vec::with_capacity(factors.len());
    let mut stack = factors;
    stack.reverse();
    while let Some(f) = stack.pop() {
        match f {
            Expr::Prod(fs) => {
                for x in fs.into_iter().rev() {
                    stack.push(x);
                }
            }
            other => {
                if other.is_zero() {
                    return Expr::zero();
                }
                if !other.is_one() {
                    flat.push(other);
                }
            }
        }
    }
    // distribute over sum factors
    if flat.iter().any(|f| matches!(f, Expr::Sum(_))) {
        let mut combos: Vec<Vec<Expr>> = vec![Vec::new()];
        for f in flat {
            match f {
                Expr::Sum(ts) => {
                    let mut next = Vec::with_capacity(combos.len() * ts.len());
                    for c in &combos {
                        for t in &ts {
                            let mut c2 = c.clone();
                            c2.push(t.clone());
                            next.push(c2);
                        }
                    }
                    combos = next;
                }
                other => {
                    for c in &mut combos {
                        c.push(other.clone());
                    }
                }
            }
        }
        return add(
            combos
                .into_iter()
                .map(|c| mul_depth(c, depth + 1))
                .collect(),
        );
    }

    // collect (base, exponent) pairs
    let mut coeff = Rat::one();
    let mut exp_args: Vec<Expr> = Vec::new();
    let mut pairs: Vec<(Expr, Expr)> = Vec::new();
    for f in flat {
        match f {
            Expr::Num(q) => coeff *= q,
            Expr::Fun(Func::Exp, a) => exp_args.push(*a),
            Expr::Pow(b, e) => match *b {
                Expr::Fun(Func::Exp, a) => exp_args.push(mul_depth(vec![*a, *e], depth + 1)),
                other => pairs.push((other, *e)),
            },
            other => pairs.push((other, Expr::one())),
        }
    }

    // route through carriers where abs/sign algebra applies
    let mut carriers: BTreeMap<Expr, Carrier> = BTreeMap::new();
    for (b, _) in &pairs {
        if let Expr::Fun(Func::Abs, y) | Expr::Fun(Func::Sign, y) = b {
            carriers.entry((**y).clone()).or_default();
        }
    }
    let mut generic: BTreeMap<Expr, Vec<Expr>> = BTreeMap::new();
    for (b, e) in pairs {
        match &b {
            Expr::Fun(Func::Abs, y) => carriers.get_mut(y).unwrap().absv.push(e),
            Expr::Fun(Func::Sign, y) => carriers.get_mut(y).unwrap().sgn.push(e),
            _ => {
                if let Some(c) = carriers.get_mut(&b) {
                    c.plain.push(e);
                } else {
                    generic.entry(b).or_default().push(e);
                }
            }
        }
    }
    for (y, c) in carriers {
        let mut p_plain = add(c.plain);
        let mut p_abs = add(c.absv);
        let p_sign = add(c.sgn);
        let two = BigInt::from(2);
        let s_int = p_sign.as_int().map(|k| k.mod_floor(&two));
        let plain_int = p_plain.as_int();
        if s_int.is_none() || (plain_int.is_none() && !p_plain.is_zero()) {
            // symbolic sign or plain exponent: only reduce what is safe
            generic.entry(y.clone()).or_default().push(p_plain);
            generic
                .entry(Expr::Fun(Func::Abs, Box::new(y.clone())))
                .or_default()
                .push(p_abs);
            generic
                .entry(Expr::Fun(Func::Sign, Box::new(y)))
                .or_default()
                .push(match s_int {
                    Some(k) => Expr::Num(Rat::from_integer(k)),
                    None => p_sign,
                });
            continue;
        }
        let mut s = s_int.unwrap();
        // move the integer plain power onto abs/sign: y^k = |y|^k sign(y)^k
        if let Some(j) = plain_int {
            if !j.is_zero() {
                p_abs = add(vec![p_abs, Expr::Num(Rat::from_integer(j.clone()))]);
                s = (s + j).mod_floor(&two);
            }
            p_plain = Expr::zero();
        }
        // fold abs back to the plain carrier when that does not add factors:
        // |y|^k sign(y)^e = y^k sign(y)^((k+e) mod 2)
        if let Some(k) = p_abs.as_int() {
            if !k.is_zero() {
                let s2 = (s.clone() + &k).mod_floor(&two);
                let before = 1 + usize::from(s.is_one());
                let after = 1 + usize::from(s2.is_one());
                if after <= before {
                    p_plain = Expr::Num(Rat::from_integer(k));
                    p_abs = Expr::zero();
                    s = s2;
                }
            } else {
                p_abs = Expr::zero();
            }
        }
        if !p_plain.is_zero() {
            generic.entry(y.clone()).or_default().push(p_plain);
        }
        if !p_abs.is_zero() {
            generic
                .entry(Expr::Fun(Func::Abs, Box::new(y.clone())))
                .or_default()
                .push(p_abs);
        }
        if s.is_one() {
            generic
                .entry(Expr::Fun(Func::Sign, Box::new(y)))
                .or_default()
                .push(Expr::one());
        }
    }

    // rebuild factors
    let mut out: Vec<Expr> = Vec::new();
    let mut needs_rerun = false;
    for (b, es) in generic {
        let total = add(es);
        let pw = pow(b, total);
        match pw {
            Expr::Num(q) => coeff *= q,
            Expr::Fun(Func::Exp, a) => exp_args.push(*a),
            Expr::Sum(_) | Expr::Prod(_) => {
                needs_rerun = true;
                out.push(pw);
            }
            other => {
                if !other.is_one() {
                    out.push(other)
                }
            }
        }
    }
    if !exp_args.is_empty() {
        let arg = add(exp_args);
        let ex = fun(Func::Exp, arg);
        match ex {
            Expr::Num(q) => coeff *= q,
            Expr::Sum(_) | Expr::Prod(_) => {
                needs_rerun = true;
                out.push(ex);
            }
            other => {
                if !other.is_one() {
                    out.push(other)
                }
            }
        }
    }
    if needs_rerun {
        out.push(Expr::Num(coeff));
        return mul_depth(out, depth + 1);
    }
    assemble_prod(coeff, out)
}
