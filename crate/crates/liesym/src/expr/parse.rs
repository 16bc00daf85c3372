//! Recursive-descent parser for the expression grammar.
//!
//! Grammar (ASCII): integers and `p/q` rationals, identifiers, jet variables
//! `u`, `u_t`, `u_x`, ... (suffix over {t,x} up to length 3), binary
//! `+ - * / ^` with usual precedence, unary minus, elementary functions
//! `exp ln sin cos tan arctan abs sign`, unspecified application `f(u_x)`,
//! derivatives of unspecified heads `D(f,u_x)(u_x)`, `D(h,1,2)(t,x)` or
//! `f'(u_x)`, and antiderivatives `Int(expr, var)`.

use super::ast::{Expr, Func, Rat};
use super::simplify::{add, div, fun, mul, neg, pow, simplify};
use super::ExprError;
use num_bigint::BigInt;
use std::str::FromStr;

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(simplify(&e))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

/// Derivative tags inside a `D(...)` head: positional index or symbol name to
/// be matched against the application arguments.
enum DTag {
    Idx(usize),
    Name(String),
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ExprError {
        ExprError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = add(vec![acc, t]);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = add(vec![acc, neg(t)]);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = mul(vec![acc, f]);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = div(acc, f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        self.skip_ws();
        if self.eat(b'-') {
            let f = self.factor()?;
            return Ok(neg(f));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.eat(b'^') {
            let e = self.exponent()?;
            return Ok(pow(base, e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<Expr, ExprError> {
        self.skip_ws();
        if self.eat(b'-') {
            let e = self.exponent()?;
            return Ok(neg(e));
        }
        self.power()
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.identifier_like(),
            _ => Err(self.err("expected expression")),
        }
    }

    fn number(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let n = BigInt::from_str(text).map_err(|_| self.err("bad integer"))?;
        Ok(Expr::Num(Rat::from_integer(n)))
    }

    fn ident(&mut self) -> Result<String, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c.is_ascii_alphanumeric() || c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.err("expected identifier"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn identifier_like(&mut self) -> Result<Expr, ExprError> {
        let name = self.ident()?;
        if name == "D" {
            return self.derivative_head();
        }
        if name == "Int" {
            self.expect(b'(')?;
            let body = self.expr()?;
            self.expect(b',')?;
            let v = self.ident()?;
            self.expect(b')')?;
            return Ok(Expr::Integral(Box::new(body), v));
        }
        // prime shorthand for unary heads: f'(x), f''(x)
        let mut primes = 0u32;
        while self.peek() == Some(b'\'') {
            self.pos += 1;
            primes += 1;
        }
        self.skip_ws();
        if self.peek() == Some(b'(') {
            if let Some(f) = Func::from_name(&name) {
                if primes > 0 {
                    return Err(self.err("primes apply to unspecified heads only"));
                }
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b')')?;
                return Ok(fun(f, a));
            }
            let args = self.call_args()?;
            if primes > 0 && args.len() != 1 {
                return Err(self.err("prime shorthand needs a unary head"));
            }
            let orders = vec![primes; args.len()];
            return Ok(Expr::App(super::ast::App {
                head: name,
                args,
                orders,
            }));
        }
        if primes > 0 {
            return Err(self.err("expected '(' after primed head"));
        }
        self.symbol(name)
    }

    fn symbol(&mut self, name: String) -> Result<Expr, ExprError> {
        if let Some(rest) = name.strip_prefix("u_") {
            let ok = !rest.is_empty()
                && rest.len() <= 3
                && rest.bytes().all(|c| c == b't' || c == b'x');
            if !ok {
                return Err(ExprError::UnknownJetVariable { name: name.clone() });
            }
            // canonical index order: t's before x's
            let ts = rest.bytes().filter(|&c| c == b't').count();
            let xs = rest.len() - ts;
            let canon = format!("u_{}{}", "t".repeat(ts), "x".repeat(xs));
            return Ok(Expr::Sym(canon));
        }
        Ok(Expr::Sym(name))
    }

    fn call_args(&mut self) -> Result<Vec<Expr>, ExprError> {
        self.expect(b'(')?;
        let mut args = Vec::new();
        if self.eat(b')') {
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            if self.eat(b',') {
                continue;
            }
            self.expect(b')')?;
            return Ok(args);
        }
    }

    /// `D(head, tags...)(args...)` with tags either 1-based indices or symbol
    /// names resolved against the argument list.
    fn derivative_head(&mut self) -> Result<Expr, ExprError> {
        self.expect(b'(')?;
        let head = self.ident()?;
        if Func::from_name(&head).is_some() {
            return Err(self.err("D applies to unspecified heads only"));
        }
        let mut tags: Vec<DTag> = Vec::new();
        while self.eat(b',') {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = match self.number()? {
                        Expr::Num(q) => q,
                        _ => unreachable!(),
                    };
                    let idx: usize = q_to_usize(&n).ok_or_else(|| self.err("bad index"))?;
                    if idx == 0 {
                        return Err(self.err("derivative indices are 1-based"));
                    }
                    tags.push(DTag::Idx(idx - 1));
                }
                _ => {
                    let name = self.ident()?;
                    tags.push(DTag::Name(name));
                }
            }
        }
        self.expect(b')')?;
        if tags.is_empty() {
            return Err(self.err("D needs at least one differentiation tag"));
        }
        let args = self.call_args()?;
        let mut orders = vec![0u32; args.len()];
        for tag in tags {
            let idx = match tag {
                DTag::Idx(i) => {
                    if i >= args.len() {
                        return Err(self.err("derivative index out of range"));
                    }
                    i
                }
                DTag::Name(n) => {
                    let target = self.symbol(n.clone())?;
                    let hits: Vec<usize> = args
                        .iter()
                        .enumerate()
                        .filter(|(_, a)| **a == target)
                        .map(|(i, _)| i)
                        .collect();
                    match hits.as_slice() {
                        [i] => *i,
                        [] => return Err(self.err(&format!("'{}' is not an argument", n))),
                        _ => return Err(self.err(&format!("'{}' matches several arguments", n))),
                    }
                }
            };
            orders[idx] += 1;
        }
        Ok(Expr::App(super::ast::App { head, args, orders }))
    }
}

fn q_to_usize(q: &Rat) -> Option<usize> {
    use num_traits::ToPrimitive;
    if q.is_integer() {
        q.to_integer().to_usize()
    } else {
        None
    }
}
