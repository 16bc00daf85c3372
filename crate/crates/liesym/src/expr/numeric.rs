//! Floating-point evaluation and randomized probing.
//!
//! Unspecified heads are sampled as smooth functions (a small analytic basis
//! with random coefficients), so that a head and its derivative instances
//! stay mutually consistent under probing.

use super::ast::{Expr, Func};
use super::ExprError;
use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Range probes are drawn from, shifted away from singular loci.
pub const PROBE_LO: f64 = 0.1;
pub const PROBE_HI: f64 = 2.1;

#[derive(Clone, Debug)]
pub struct SampledFn {
    arity: usize,
    /// coefficient tensor over the per-axis basis [1, s, sin s, exp(s/4)]
    coeffs: Vec<f64>,
}

const BASIS: usize = 4;

fn basis_val(which: usize, s: f64, order: u32) -> f64 {
    match which {
        0 => {
            if order == 0 {
                1.0
            } else {
                0.0
            }
        }
        1 => match order {
            0 => s,
            1 => 1.0,
            _ => 0.0,
        },
        2 => match order % 4 {
            0 => s.sin(),
            1 => s.cos(),
            2 => -s.sin(),
            _ => -s.cos(),
        },
        _ => 0.25f64.powi(order as i32) * (s / 4.0).exp(),
    }
}

impl SampledFn {
    fn new(arity: usize, rng: &mut impl Rng) -> SampledFn {
        let n = BASIS.pow(arity as u32);
        let coeffs = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        SampledFn { arity, coeffs }
    }

    fn eval(&self, args: &[f64], orders: &[u32]) -> f64 {
        let mut total = 0.0;
        for (idx, c) in self.coeffs.iter().enumerate() {
            let mut term = *c;
            let mut rem = idx;
            for i in 0..self.arity {
                let which = rem % BASIS;
                rem /= BASIS;
                term *= basis_val(which, args[i], orders[i]);
            }
            total += term;
        }
        total
    }
}

/// A full assignment: symbol values, sampled heads, and opaque values for
/// antiderivative atoms (keyed by rendered form).
#[derive(Clone, Debug, Default)]
pub struct NumericPoint {
    pub values: BTreeMap<String, f64>,
    pub heads: BTreeMap<String, SampledFn>,
    pub integrals: BTreeMap<String, f64>,
}

impl NumericPoint {
    pub fn bind(mut self, name: &str, v: f64) -> Self {
        self.values.insert(name.to_string(), v);
        self
    }
}

/// Probing policy: which symbols are sign parameters (sampled from ±1) and
/// which carry fixed values.
#[derive(Clone, Debug, Default)]
pub struct ProbeSpec {
    pub sign_symbols: Vec<String>,
    pub fixed: Vec<(String, f64)>,
}

pub fn sample_point(e: &Expr, seed: u64, spec: &ProbeSpec) -> NumericPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = NumericPoint::default();
    for s in e.free_symbols() {
        if let Some((_, v)) = spec.fixed.iter().find(|(n, _)| *n == s) {
            p.values.insert(s, *v);
        } else if spec.sign_symbols.contains(&s) {
            let v = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            p.values.insert(s, v);
        } else {
            p.values.insert(s, rng.gen_range(PROBE_LO..PROBE_HI));
        }
    }
    collect_heads(e, &mut p, &mut rng);
    p
}

fn collect_heads(e: &Expr, p: &mut NumericPoint, rng: &mut impl Rng) {
    match e {
        Expr::App(app) => {
            for a in &app.args {
                collect_heads(a, p, rng);
            }
            if !p.heads.contains_key(&app.head) {
                let f = SampledFn::new(app.args.len(), rng);
                p.heads.insert(app.head.clone(), f);
            }
        }
        Expr::Integral(body, _) => {
            collect_heads(body, p, rng);
            let key = super::render::render(e);
            p.integrals
                .entry(key)
                .or_insert_with(|| rng.gen_range(PROBE_LO..PROBE_HI));
        }
        Expr::Pow(b, x) => {
            collect_heads(b, p, rng);
            collect_heads(x, p, rng);
        }
        Expr::Fun(_, a) => collect_heads(a, p, rng),
        Expr::Sum(ts) | Expr::Prod(ts) => {
            for t in ts {
                collect_heads(t, p, rng);
            }
        }
        _ => {}
    }
}

pub fn eval(e: &Expr, p: &NumericPoint) -> Result<f64, ExprError> {
    let v = eval_inner(e, p)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(ExprError::Domain {
            detail: format!("non-finite value for {}", e),
        })
    }
}

fn eval_inner(e: &Expr, p: &NumericPoint) -> Result<f64, ExprError> {
    match e {
        Expr::Num(q) => q.to_f64().ok_or(ExprError::Domain {
            detail: "rational out of f64 range".into(),
        }),
        Expr::Sym(s) => p
            .values
            .get(s)
            .copied()
            .ok_or_else(|| ExprError::UnboundSymbol { name: s.clone() }),
        Expr::Sum(ts) => ts.iter().map(|t| eval_inner(t, p)).sum(),
        Expr::Prod(fs) => fs.iter().map(|f| eval_inner(f, p)).product(),
        Expr::Pow(b, x) => {
            let bv = eval_inner(b, p)?;
            if let Some(q) = x.as_num() {
                if q.is_integer() {
                    let k = q.to_integer().to_i32().ok_or_else(|| ExprError::Domain {
                        detail: "exponent out of range".into(),
                    })?;
                    if bv == 0.0 && k < 0 {
                        return Err(ExprError::Domain {
                            detail: "division by zero".into(),
                        });
                    }
                    return Ok(bv.powi(k));
                }
                let ev = q.to_f64().ok_or_else(|| ExprError::Domain {
                    detail: "exponent out of f64 range".into(),
                })?;
                if bv < 0.0 {
                    // odd-denominator rational exponents act branch-wise
                    if q.denom().to_u64().is_some_and(|d| d % 2 == 1) {
                        let mag = (-bv).powf(ev);
                        let odd_num = q.numer().to_i64().is_some_and(|n| n % 2 != 0);
                        return Ok(if odd_num { -mag } else { mag });
                    }
                    return Err(ExprError::Domain {
                        detail: "negative base with even-denominator exponent".into(),
                    });
                }
                if bv == 0.0 && ev < 0.0 {
                    return Err(ExprError::Domain {
                        detail: "division by zero".into(),
                    });
                }
                return Ok(bv.powf(ev));
            }
            let ev = eval_inner(x, p)?;
            if bv <= 0.0 {
                return Err(ExprError::Domain {
                    detail: "nonpositive base with symbolic exponent".into(),
                });
            }
            Ok(bv.powf(ev))
        }
        Expr::Fun(f, a) => {
            let av = eval_inner(a, p)?;
            Ok(match f {
                Func::Exp => av.exp(),
                Func::Ln => {
                    if av <= 0.0 {
                        return Err(ExprError::Domain {
                            detail: "ln of nonpositive value".into(),
                        });
                    }
                    av.ln()
                }
                Func::Sin => av.sin(),
                Func::Cos => av.cos(),
                Func::Tan => av.tan(),
                Func::Arctan => av.atan(),
                Func::Abs => av.abs(),
                Func::Sign => {
                    if av == 0.0 {
                        0.0
                    } else {
                        av.signum()
                    }
                }
            })
        }
        Expr::App(app) => {
            let f = p
                .heads
                .get(&app.head)
                .ok_or_else(|| ExprError::UnboundSymbol {
                    name: app.head.clone(),
                })?;
            let args: Result<Vec<f64>, _> = app.args.iter().map(|a| eval_inner(a, p)).collect();
            Ok(f.eval(&args?, &app.orders))
        }
        Expr::Integral(_, _) => {
            let key = super::render::render(e);
            match p.integrals.get(&key) {
                Some(v) => Ok(*v),
                None => Err(ExprError::UnboundSymbol { name: key }),
            }
        }
    }
}
