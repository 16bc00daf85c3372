//! Infinitesimal invariance criterion, determining equations, side-relation
//! rewriting, and Lie-algebra computations (brackets, structure constants,
//! closure, signatures) over arbitrary coordinate tuples.

use crate::expr::rational::replace_node;
use crate::expr::{
    add, collect_coefficients, diff, diff_n, mul, neg, simplify, sub, substitute, sym,
    Binding, Expr, ProbeSpec, Rat, Verdict, ZeroTester,
};
use crate::jet::{prolong2, JetError, VectorField};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SymmetryError {
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error("coordinate tuples differ: {0:?} vs {1:?}")]
    CoordMismatch(Vec<String>, Vec<String>),
    #[error("coefficient {value} of d_{coord} uses symbols outside the coordinate tuple")]
    BadCoefficient { coord: String, value: String },
    #[error("side relation for '{head}' still carries a t-derivative on the right-hand side")]
    NonTerminatingRelation { head: String },
    #[error("residual is not polynomial in u_xx")]
    NonPolynomialResidual,
}

/// Subclass tags of the diffusion-reaction class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Subclass {
    /// f_{u_x} = 0 (semilinear heat equations with source)
    H,
    /// (u_x^2 f)_{u_x} = 0 (linearizable)
    L,
    /// g_u = 0 (filtration with constant source)
    F,
    /// g = 0 (nonlinear filtration)
    FPrime,
    /// regular complement: f_{u_x} != 0, (u_x^2 f)_{u_x} != 0, g_u != 0
    C,
}

/// Assumed relations on symbolic parameters of a class member or check.
#[derive(Debug, Clone, PartialEq)]
pub enum Constraint {
    /// s^2 = 1 (sign parameter)
    UnitSquare(String),
    /// s = value
    Equal(String, Expr),
    /// documentation of excluded integer values (n != 0, -2, ...)
    Excluded(String, Vec<i64>),
}

/// One (f, g) pair, possibly opaque, plus tags and parameter constraints.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMember {
    pub f: Expr,
    pub g: Expr,
    pub tags: BTreeSet<Subclass>,
    pub constraints: Vec<Constraint>,
}

impl ClassMember {
    pub fn new(f: Expr, g: Expr) -> ClassMember {
        ClassMember {
            f: simplify(&f),
            g: simplify(&g),
            tags: BTreeSet::new(),
            constraints: Vec::new(),
        }
    }

    pub fn parse(f: &str, g: &str) -> ClassMember {
        ClassMember::new(crate::expr::x(f), crate::expr::x(g))
    }

    pub fn tag(mut self, tag: Subclass) -> Self {
        self.tags.insert(tag);
        self
    }

    pub fn with_constraint(mut self, c: Constraint) -> Self {
        self.constraints.push(c);
        self
    }

    pub fn sign_symbols(&self) -> Vec<String> {
        self.constraints
            .iter()
            .filter_map(|c| match c {
                Constraint::UnitSquare(s) => Some(s.clone()),
                _ => None,
            })
            .collect()
    }

    /// u_t - f u_xx - g as an expression over the jet space.
    pub fn pde_residual(&self) -> Expr {
        sub(
            sym("u_t"),
            add(vec![mul(vec![self.f.clone(), sym("u_xx")]), self.g.clone()]),
        )
    }

    /// Right-hand side f u_xx + g.
    pub fn rhs(&self) -> Expr {
        add(vec![mul(vec![self.f.clone(), sym("u_xx")]), self.g.clone()])
    }

    /// Check tag consistency where symbolically decidable (see the subclass
    /// definitions). Opaque members are accepted as-is.
    pub fn tags_consistent(&self) -> bool {
        let tester = self.tester(42);
        let f_ux = diff(&self.f, "u_x");
        let lin = diff(&simplify(&mul(vec![sym("u_x"), sym("u_x"), self.f.clone()])), "u_x");
        let g_u = diff(&self.g, "u");
        for tag in &self.tags {
            let ok = match tag {
                Subclass::H => tester.proved_zero(&f_ux),
                Subclass::L => tester.proved_zero(&lin),
                Subclass::F => tester.proved_zero(&g_u),
                Subclass::FPrime => tester.proved_zero(&self.g),
                Subclass::C => {
                    !tester.proved_zero(&f_ux)
                        && !tester.proved_zero(&lin)
                        && !tester.proved_zero(&g_u)
                }
            };
            if !ok {
                return false;
            }
        }
        true
    }

    pub fn tester(&self, seed: u64) -> ZeroTester {
        ZeroTester {
            seed,
            spec: ProbeSpec {
                sign_symbols: self.sign_symbols(),
                fixed: Vec::new(),
            },
        }
    }
}

/// Apply parameter constraints as rewrite rules and resimplify.
pub fn apply_constraints(e: &Expr, constraints: &[Constraint]) -> Expr {
    let mut out = e.clone();
    for c in constraints {
        match c {
            Constraint::UnitSquare(s) => out = crate::expr::rational::fold_unit_square(&out, s),
            Constraint::Equal(s, v) => {
                out = substitute(&out, &[Binding::let_sym(s, v.clone())])
                    .expect("single binding cannot conflict");
            }
            Constraint::Excluded(_, _) => {}
        }
    }
    simplify(&out)
}

/// Q^(2)(u_t - f u_xx - g) with u_t substituted by f u_xx + g.
pub fn invariance_residual(q: &VectorField, m: &ClassMember) -> Result<Expr, SymmetryError> {
    let pr = prolong2(q)?;
    let raw = pr.apply(&m.pde_residual());
    let r = substitute(&raw, &[Binding::let_sym("u_t", m.rhs())])
        .expect("single binding cannot conflict");
    Ok(r)
}

/// A rewrite h_t -> (spatial expression), oriented so that t-derivatives
/// strictly decrease.
#[derive(Debug, Clone, PartialEq)]
pub struct SideRelation {
    pub head: String,
    pub args: Vec<String>,
    pub t_index: usize,
    pub rhs: Expr,
}

impl SideRelation {
    pub fn new(
        head: &str,
        args: &[&str],
        t_index: usize,
        rhs: Expr,
    ) -> Result<SideRelation, SymmetryError> {
        let rel = SideRelation {
            head: head.to_string(),
            args: args.iter().map(|s| s.to_string()).collect(),
            t_index,
            rhs: simplify(&rhs),
        };
        if rel.rhs_has_t_derivative(&rel.rhs) {
            return Err(SymmetryError::NonTerminatingRelation {
                head: head.to_string(),
            });
        }
        Ok(rel)
    }

    fn rhs_has_t_derivative(&self, e: &Expr) -> bool {
        match e {
            Expr::App(app) => {
                (app.head == self.head && app.orders[self.t_index] >= 1)
                    || app.args.iter().any(|a| self.rhs_has_t_derivative(a))
            }
            Expr::Num(_) | Expr::Sym(_) => false,
            Expr::Pow(b, x) => self.rhs_has_t_derivative(b) || self.rhs_has_t_derivative(x),
            Expr::Fun(_, a) => self.rhs_has_t_derivative(a),
            Expr::Integral(body, _) => self.rhs_has_t_derivative(body),
            Expr::Sum(ts) | Expr::Prod(ts) => ts.iter().any(|t| self.rhs_has_t_derivative(t)),
        }
    }

    /// Find one rewritable node, if any.
    fn find_node(&self, e: &Expr) -> Option<crate::expr::App> {
        match e {
            Expr::App(app) => {
                if app.head == self.head
                    && app.orders[self.t_index] >= 1
                    && app.args.len() == self.args.len()
                    && app
                        .args
                        .iter()
                        .zip(&self.args)
                        .all(|(a, n)| a.as_sym() == Some(n.as_str()))
                {
                    return Some(app.clone());
                }
                app.args.iter().find_map(|a| self.find_node(a))
            }
            Expr::Num(_) | Expr::Sym(_) => None,
            Expr::Pow(b, x) => self.find_node(b).or_else(|| self.find_node(x)),
            Expr::Fun(_, a) => self.find_node(a),
            Expr::Integral(body, _) => self.find_node(body),
            Expr::Sum(ts) | Expr::Prod(ts) => ts.iter().find_map(|t| self.find_node(t)),
        }
    }

    /// d_t^(a-1) (spatial derivatives) of the right-hand side.
    fn replacement(&self, node: &crate::expr::App) -> Expr {
        let mut d = self.rhs.clone();
        for (i, name) in self.args.iter().enumerate() {
            let amount = if i == self.t_index {
                node.orders[i] - 1
            } else {
                node.orders[i]
            };
            d = diff_n(&d, name, amount);
        }
        d
    }
}

/// Fixed point of side-relation rewriting (each step strictly reduces the
/// t-derivative count), then simplify.
pub fn apply_side_relations(e: &Expr, rels: &[SideRelation]) -> Expr {
    let mut out = simplify(e);
    loop {
        let mut changed = false;
        for rel in rels {
            while let Some(node) = rel.find_node(&out) {
                let repl = rel.replacement(&node);
                out = simplify(&replace_node(&out, &Expr::App(node), &repl));
                changed = true;
            }
        }
        if !changed {
            return out;
        }
    }
}

/// Full symmetry check: residual, side relations, parameter constraints, and
/// sign-instantiated reruns for each sign parameter.
pub fn is_symmetry(
    q: &VectorField,
    m: &ClassMember,
    rels: &[SideRelation],
    seed: u64,
) -> Result<bool, SymmetryError> {
    Ok(symmetry_verdict(q, m, rels, seed)? == Verdict::ProvedZero)
}

/// Verdict of the invariance check (ProvedZero for symmetries; negative tests
/// expect ProbedNonzero, not merely the absence of a proof).
pub fn symmetry_verdict(
    q: &VectorField,
    m: &ClassMember,
    rels: &[SideRelation],
    seed: u64,
) -> Result<Verdict, SymmetryError> {
    let raw = invariance_residual(q, m)?;
    let rewritten = apply_side_relations(&raw, rels);
    let constrained = apply_constraints(&rewritten, &m.constraints);
    let tester = m.tester(seed);
    let mut verdict = tester.verdict(&constrained);
    if verdict != Verdict::ProvedZero {
        return Ok(verdict);
    }
    // safety net: rerun with each sign parameter instantiated
    for s in m.sign_symbols() {
        for v in [1i64, -1] {
            let inst = substitute(
                &rewritten,
                &[Binding::let_sym(&s, crate::expr::int(v))],
            )
            .expect("single binding cannot conflict");
            if tester.verdict(&inst) != Verdict::ProvedZero {
                verdict = Verdict::Unknown;
            }
        }
    }
    Ok(verdict)
}

/// Determining equations: the residual for generic tau(t), xi(t,x,u),
/// eta(t,x,u) split with respect to u_xx. Returns [coefficient of u_xx,
/// u_xx-free part], sign-normalized to the conventional printed forms.
pub fn determining_equations(m: &ClassMember) -> Result<[Expr; 2], SymmetryError> {
    let q = VectorField::new(
        crate::expr::x("tau(t)"),
        crate::expr::x("xi(t,x,u)"),
        crate::expr::x("eta(t,x,u)"),
    )?;
    let residual = invariance_residual(&q, m)?;
    let pairs = collect_coefficients(&residual, &sym("u_xx"))
        .map_err(|_| SymmetryError::NonPolynomialResidual)?;
    let mut eq_a = Expr::zero();
    let mut eq_b = Expr::zero();
    for (k, c) in pairs {
        match k {
            1 => eq_a = neg(c),
            0 => eq_b = neg(c),
            _ => return Err(SymmetryError::NonPolynomialResidual),
        }
    }
    Ok([eq_a, eq_b])
}

/// Vector field over an ordered coordinate tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralVectorField {
    pub coords: Vec<String>,
    pub coeffs: Vec<Expr>,
}

impl GeneralVectorField {
    pub fn new(coords: &[&str], coeffs: Vec<Expr>) -> Result<GeneralVectorField, SymmetryError> {
        Self::with_params(coords, &[], coeffs)
    }

    pub fn with_params(
        coords: &[&str],
        params: &[&str],
        coeffs: Vec<Expr>,
    ) -> Result<GeneralVectorField, SymmetryError> {
        assert_eq!(coords.len(), coeffs.len(), "one coefficient per coordinate");
        let coeffs: Vec<Expr> = coeffs.iter().map(simplify).collect();
        for (c, v) in coords.iter().zip(&coeffs) {
            for s in v.free_symbols() {
                if !coords.contains(&s.as_str()) && !params.contains(&s.as_str()) {
                    return Err(SymmetryError::BadCoefficient {
                        coord: c.to_string(),
                        value: v.to_string(),
                    });
                }
            }
        }
        Ok(GeneralVectorField {
            coords: coords.iter().map(|s| s.to_string()).collect(),
            coeffs,
        })
    }

    pub fn zero(coords: &[&str]) -> GeneralVectorField {
        GeneralVectorField {
            coords: coords.iter().map(|s| s.to_string()).collect(),
            coeffs: vec![Expr::zero(); coords.len()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Expr::is_zero)
    }

    /// Apply as a derivation.
    pub fn apply(&self, e: &Expr) -> Expr {
        simplify(&add(
            self.coords
                .iter()
                .zip(&self.coeffs)
                .map(|(c, v)| mul(vec![v.clone(), diff(e, c)]))
                .collect(),
        ))
    }

    pub fn scale(&self, by: &Expr) -> GeneralVectorField {
        GeneralVectorField {
            coords: self.coords.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| simplify(&mul(vec![by.clone(), c.clone()])))
                .collect(),
        }
    }

    pub fn plus(&self, other: &GeneralVectorField) -> GeneralVectorField {
        GeneralVectorField {
            coords: self.coords.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| add(vec![a.clone(), b.clone()]))
                .collect(),
        }
    }

    /// Embed a (t, x, u) point field into this coordinate tuple.
    pub fn from_point_field(q: &VectorField, coords: &[&str]) -> GeneralVectorField {
        let mut coeffs = vec![Expr::zero(); coords.len()];
        for (name, value) in [("t", &q.tau), ("x", &q.xi), ("u", &q.eta)] {
            if let Some(i) = coords.iter().position(|c| *c == name) {
                coeffs[i] = value.clone();
            }
        }
        GeneralVectorField {
            coords: coords.iter().map(|s| s.to_string()).collect(),
            coeffs,
        }
    }
}

impl fmt::Display for GeneralVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, v) in self.coords.iter().zip(&self.coeffs) {
            if v.is_zero() {
                continue;
            }
            if v.is_one() {
                parts.push(format!("d_{c}"));
            } else {
                parts.push(format!("({v})*d_{c}"));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// [Q1, Q2], coefficient i = Q1(Q2^i) - Q2(Q1^i).
pub fn lie_bracket(
    q1: &GeneralVectorField,
    q2: &GeneralVectorField,
) -> Result<GeneralVectorField, SymmetryError> {
    if q1.coords != q2.coords {
        return Err(SymmetryError::CoordMismatch(
            q1.coords.clone(),
            q2.coords.clone(),
        ));
    }
    let coeffs = q1
        .coeffs
        .iter()
        .zip(&q2.coeffs)
        .map(|(a, b)| simplify(&sub(q1.apply(b), q2.apply(a))))
        .collect();
    Ok(GeneralVectorField {
        coords: q1.coords.clone(),
        coeffs,
    })
}

/// Monomial decomposition of coefficient tuples into an exact rational vector
/// space: each (coordinate index, monomial) pair is one axis.
pub struct MonomialSpace {
    pub axes: Vec<(usize, Expr)>,
    index: BTreeMap<(usize, Expr), usize>,
}

impl MonomialSpace {
    pub fn new() -> MonomialSpace {
        MonomialSpace {
            axes: Vec::new(),
            index: BTreeMap::new(),
        }
    }

    pub fn vector_of(&mut self, field: &GeneralVectorField) -> Vec<Rat> {
        let mut entries: Vec<(usize, Rat)> = Vec::new();
        for (i, coeff) in field.coeffs.iter().enumerate() {
            let terms: Vec<Expr> = match coeff {
                Expr::Sum(ts) => ts.clone(),
                other if other.is_zero() => Vec::new(),
                other => vec![other.clone()],
            };
            for t in terms {
                let (q, mono) = split_term(t);
                let key = (i, mono);
                let idx = *self.index.entry(key.clone()).or_insert_with(|| {
                    self.axes.push(key.clone());
                    self.axes.len() - 1
                });
                entries.push((idx, q));
            }
        }
        let mut v = vec![Rat::zero(); self.axes.len()];
        for (i, q) in entries {
            v[i] += q;
        }
        v
    }
}

impl Default for MonomialSpace {
    fn default() -> Self {
        Self::new()
    }
}

fn split_term(t: Expr) -> (Rat, Expr) {
    match t {
        Expr::Num(q) => (q, Expr::one()),
        Expr::Prod(mut fs) => {
            if matches!(fs.first(), Some(Expr::Num(_))) {
                let q = match fs.remove(0) {
                    Expr::Num(q) => q,
                    _ => unreachable!(),
                };
                let rest = if fs.len() == 1 {
                    fs.pop().unwrap()
                } else {
                    Expr::Prod(fs)
                };
                (q, rest)
            } else {
                (Rat::one(), Expr::Prod(fs))
            }
        }
        other => (Rat::one(), other),
    }
}

fn pad(v: &mut Vec<Rat>, n: usize) {
    while v.len() < n {
        v.push(Rat::zero());
    }
}

/// Row-reduce in place; returns the rank. Rows may have differing lengths and
/// are padded to the longest.
#[allow(clippy::ptr_arg, clippy::needless_range_loop)]
pub fn rank(rows: &mut Vec<Vec<Rat>>) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    for r in rows.iter_mut() {
        pad(r, width);
    }
    let mut rank = 0;
    for col in 0..width {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let scale = rows[rank][col].clone();
        for c in col..width {
            let v = rows[rank][c].clone() / scale.clone();
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..width {
                    let v = rows[r][c].clone() - factor.clone() * rows[rank][c].clone();
                    rows[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Solve sum_i x_i a_i = b over the rationals. None when inconsistent.
#[allow(clippy::needless_range_loop)]
pub fn solve_linear(columns: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let width = columns
        .iter()
        .map(Vec::len)
        .chain(std::iter::once(b.len()))
        .max()
        .unwrap_or(0);
    let n = columns.len();
    // augmented system in row-echelon terms: rows = equations (one per axis)
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(width);
    for axis in 0..width {
        let mut row: Vec<Rat> = Vec::with_capacity(n + 1);
        for col in columns {
            row.push(col.get(axis).cloned().unwrap_or_else(Rat::zero));
        }
        row.push(b.get(axis).cloned().unwrap_or_else(Rat::zero));
        rows.push(row);
    }
    let mut rank = 0usize;
    for col in 0..n {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let scale = rows[rank][col].clone();
        for c in col..=n {
            let v = rows[rank][c].clone() / scale.clone();
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=n {
                    let v = rows[r][c].clone() - factor.clone() * rows[rank][c].clone();
                    rows[r][c] = v;
                }
            }
        }
        rank += 1;
    }
    // inconsistency: a row with zero coefficients but nonzero rhs
    for row in &rows {
        if row[..n].iter().all(Rat::is_zero) && !row[n].is_zero() {
            return None;
        }
    }
    // read the particular solution (free variables set to zero)
    let mut xs = vec![Rat::zero(); n];
    for row in &rows {
        if let Some(lead) = (0..n).find(|&c| row[c].is_one()) {
            if row[..lead].iter().all(Rat::is_zero) {
                xs[lead] = row[n].clone();
            }
        }
    }
    Some(xs)
}

/// Structure constants c^k_{ij} with [e_i, e_j] = sum_k c^k_{ij} e_k.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub dim: usize,
    /// c[i][j] = coordinates of [e_i, e_j] in the basis
    pub table: Vec<Vec<Vec<Rat>>>,
}

/// The bracket of a basis pair left the span.
#[derive(Clone, Debug)]
pub struct ClosureFailure {
    pub i: usize,
    pub j: usize,
    pub remainder: GeneralVectorField,
}

impl fmt::Display for ClosureFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bracket of basis elements {} and {} leaves the span; remainder {}",
            self.i, self.j, self.remainder
        )
    }
}

pub fn structure_constants(
    basis: &[GeneralVectorField],
) -> Result<Result<StructureConstants, ClosureFailure>, SymmetryError> {
    let n = basis.len();
    let mut space = MonomialSpace::new();
    let cols: Vec<Vec<Rat>> = basis.iter().map(|f| space.vector_of(f)).collect();
    // verify linear independence
    {
        let mut rows = cols.clone();
        if rank(&mut rows) != n {
            return Err(SymmetryError::BadCoefficient {
                coord: "basis".into(),
                value: "basis elements are linearly dependent".into(),
            });
        }
    }
    let mut table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let br = lie_bracket(&basis[i], &basis[j])?;
            let b = space.vector_of(&br);
            // columns may be shorter than the new vector; solve_linear pads
            match solve_linear(&cols, &b) {
                Some(xs) => table[i][j] = xs,
                None => {
                    return Ok(Err(ClosureFailure {
                        i,
                        j,
                        remainder: br,
                    }))
                }
            }
        }
    }
    Ok(Ok(StructureConstants { dim: n, table }))
}

/// Select a linearly independent subset (representatives) of the given
/// fields; returns (reps, dim).
fn independent_subset(fields: Vec<GeneralVectorField>) -> (Vec<GeneralVectorField>, usize) {
    let mut space = MonomialSpace::new();
    let mut reps: Vec<GeneralVectorField> = Vec::new();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for f in fields {
        if f.is_zero() {
            continue;
        }
        let v = space.vector_of(&f);
        let mut trial = rows.clone();
        trial.push(v.clone());
        if rank(&mut trial) > rows.len() {
            rows.push(v);
            let r = rank(&mut rows);
            debug_assert_eq!(r, rows.len());
            reps.push(f);
        }
    }
    let d = reps.len();
    (reps, d)
}

/// Computable isomorphism-invariant data of a finite-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSignature {
    pub dim: usize,
    /// dimension of the span of the t-coefficient functions
    pub dim_pr_t: usize,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub center_dim: usize,
}

pub fn algebra_signature(
    basis: &[GeneralVectorField],
) -> Result<Result<AlgebraSignature, ClosureFailure>, SymmetryError> {
    let sc = match structure_constants(basis)? {
        Ok(sc) => sc,
        Err(fail) => return Ok(Err(fail)),
    };
    let n = basis.len();

    // dim pr_t: rank of the tau-coefficient functions
    let t_fields: Vec<GeneralVectorField> = basis
        .iter()
        .map(|f| GeneralVectorField {
            coords: vec![f.coords[0].clone()],
            coeffs: vec![f.coeffs[0].clone()],
        })
        .collect();
    let (_, dim_pr_t) = independent_subset(t_fields);

    // derived series: S_{k+1} = [S_k, S_k]
    let mut derived = vec![n];
    let mut reps: Vec<GeneralVectorField> = basis.to_vec();
    loop {
        let mut brackets = Vec::new();
        for i in 0..reps.len() {
            for j in (i + 1)..reps.len() {
                brackets.push(lie_bracket(&reps[i], &reps[j])?);
            }
        }
        let (next, d) = independent_subset(brackets);
        derived.push(d);
        if d == 0 || d == *derived.get(derived.len() - 2).unwrap() {
            break;
        }
        reps = next;
    }

    // lower central series: L_{k+1} = [g, L_k]
    let mut lower = vec![n];
    let mut reps: Vec<GeneralVectorField> = basis.to_vec();
    loop {
        let mut brackets = Vec::new();
        for b in basis {
            for r in &reps {
                brackets.push(lie_bracket(b, r)?);
            }
        }
        let (next, d) = independent_subset(brackets);
        lower.push(d);
        if d == 0 || d == *lower.get(lower.len() - 2).unwrap() {
            break;
        }
        reps = next;
    }

    // center: nullity of a |-> ([a, e_j])_j using structure constants
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..n {
        // row i: concatenated coordinates of [e_i, e_j] over j
        let mut row = Vec::with_capacity(n * n);
        for j in 0..n {
            row.extend(sc.table[i][j].iter().cloned());
            pad(&mut row, (j + 1) * n);
        }
        rows.push(row);
    }
    let r = rank(&mut rows);
    let center_dim = n - r;

    Ok(Ok(AlgebraSignature {
        dim: n,
        dim_pr_t,
        derived_series_dims: derived,
        lower_central_dims: lower,
        center_dim,
    }))
}

/// Jacobi cyclic sum [q1,[q2,q3]] + [q2,[q3,q1]] + [q3,[q1,q2]].
pub fn jacobi_sum(
    q1: &GeneralVectorField,
    q2: &GeneralVectorField,
    q3: &GeneralVectorField,
) -> Result<GeneralVectorField, SymmetryError> {
    let a = lie_bracket(q1, &lie_bracket(q2, q3)?)?;
    let b = lie_bracket(q2, &lie_bracket(q3, q1)?)?;
    let c = lie_bracket(q3, &lie_bracket(q1, q2)?)?;
    Ok(a.plus(&b).plus(&c))
}

/// Instantiate symbolic parameters of a field's coefficients.
pub fn instantiate_field(
    field: &GeneralVectorField,
    values: &[(&str, Expr)],
) -> GeneralVectorField {
    let bindings: Vec<Binding> = values
        .iter()
        .map(|(n, v)| Binding::let_sym(n, v.clone()))
        .collect();
    GeneralVectorField {
        coords: field.coords.clone(),
        coeffs: field
            .coeffs
            .iter()
            .map(|c| substitute(c, &bindings).expect("catalog bindings are disjoint"))
            .collect(),
    }
}
