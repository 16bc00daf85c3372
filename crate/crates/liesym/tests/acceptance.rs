//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use liesym::harness::{run_suite, Report, Status, Suite, CATALOG};

fn failures(reports: &[Report]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| format!("{}::{} ({})", r.entry, r.check, r.detail))
        .collect()
}

fn criterion(n: usize, name: &str, ok: bool, detail: &str) {
    println!(
        "criterion {n:2}: {} — {name}{}{}",
        if ok { "PASS" } else { "FAIL" },
        if detail.is_empty() { "" } else { " — " },
        detail
    );
    assert!(ok, "criterion {n} failed: {name}: {detail}");
}

#[test]
fn criterion_01_table1_suite() {
    let start = std::time::Instant::now();
    let reports = run_suite(Suite::Table1, None, 42, 1);
    let elapsed = start.elapsed();
    let fails = failures(&reports);
    let field_checks = reports
        .iter()
        .filter(|r| r.check.starts_with("field-"))
        .count();
    let ok = fails.is_empty() && field_checks >= 70 && elapsed.as_secs() < 60;
    criterion(
        1,
        "every listed vector field of every row proves its residual zero",
        ok,
        &format!(
            "{field_checks} field-row pairs, {} checks, {:.2?} single-threaded{}",
            reports.len(),
            elapsed,
            if fails.is_empty() {
                String::new()
            } else {
                format!("; failures: {fails:?}")
            }
        ),
    );
}

#[test]
fn criterion_02_kernel() {
    use liesym::expr::{neg, x, Verdict};
    use liesym::jet::VectorField;
    use liesym::symmetry::{invariance_residual, symmetry_verdict, ClassMember};
    let opaque = ClassMember::parse("f(u_x)", "g(u)");
    let mut passing: Vec<String> = Vec::new();
    let mut bad: Vec<String> = Vec::new();
    for (key, q) in CATALOG.field_inventory() {
        match symmetry_verdict(&q, &opaque, &[], 42).unwrap() {
            Verdict::ProvedZero => passing.push(key),
            Verdict::ProbedNonzero => {}
            Verdict::Unknown => bad.push(key),
        }
    }
    passing.sort();
    let expected = vec!["[0; 1; 0]".to_string(), "[1; 0; 0]".to_string()];
    let residual = invariance_residual(&VectorField::parse("0", "0", "1"), &opaque).unwrap();
    let ok = passing == expected && bad.is_empty() && residual == neg(x("D(g,1)(u)"));
    criterion(
        2,
        "exactly the two translations pass on an opaque member; residual of d_u is -g_u",
        ok,
        &format!("passing fields {passing:?}, undecided {bad:?}, residual {residual}"),
    );
}

#[test]
fn criterion_03_commutator_table() {
    let reports = run_suite(Suite::Algebras, Some("commutators"), 42, 0);
    let fails = failures(&reports);
    let nonzero = liesym::harness::catalog::nonzero_commutators().len();
    let pair_checks = reports
        .iter()
        .filter(|r| r.check.starts_with('['))
        .count();
    let jacobi = reports
        .iter()
        .any(|r| r.check.contains("1000 random triples") && r.status == Status::Pass);
    let ok = fails.is_empty() && pair_checks == 36 && jacobi;
    criterion(
        3,
        "the nonzero commutation relations reproduce exactly and all other pairs vanish",
        ok,
        &format!(
            "{nonzero} nonzero relations, {pair_checks} pairs checked, Jacobi on 1000 random triples{}",
            if fails.is_empty() { String::new() } else { format!("; failures: {fails:?}") }
        ),
    );
}

#[test]
fn criterion_04_equivalence_groups() {
    let reports = run_suite(Suite::Groups, None, 42, 0);
    let fails = failures(&reports);
    let must_pass = [
        "usual-R on a generic member",
        "usual-F on a constant-source member",
        "usual-F' on a sourceless member",
        "generalized-F on a constant-source member",
        "effective-F on a constant-source member",
        "closed under composition",
        "closed under inverse",
        "usual-F meets effective-F at T0 = 0, U2 = 1",
        "usual-F families span Q^1..Q^8",
        "effective-F families span the hat basis",
    ];
    let missing: Vec<&str> = must_pass
        .iter()
        .filter(|name| {
            !reports
                .iter()
                .any(|r| r.check == **name && r.status == Status::Pass)
        })
        .copied()
        .collect();
    let ok = fails.is_empty() && missing.is_empty();
    criterion(
        4,
        "group families certified in class; closure; intersection constraints; generator spans",
        ok,
        &format!(
            "{} checks{}{}",
            reports.len(),
            if missing.is_empty() {
                String::new()
            } else {
                format!("; missing: {missing:?}")
            },
            if fails.is_empty() {
                String::new()
            } else {
                format!("; failures: {fails:?}")
            }
        ),
    );
}

#[test]
fn criterion_05_kolmogorov_linearization() {
    use liesym::equivalence::{push_forward_residual, PointTransformation};
    use liesym::expr::{x, ZeroTester};
    use liesym::symmetry::ClassMember;
    let tr = PointTransformation::parse("t", "u", "x");
    let src = ClassMember::parse("c*u_x^-2", "g(u)");
    let r = push_forward_residual(&tr, &src.rhs(), &x("c*u_xx - g(x)*u_x")).unwrap();
    let ok = ZeroTester::with_seed(42).proved_zero(&r);
    criterion(
        5,
        "hodograph sends f = c u_x^-2 to the drift-diffusion equation with residual zero",
        ok,
        &format!("residual {r}"),
    );
}

#[test]
fn criterion_06_footnote_edges() {
    let reports = run_suite(Suite::Footnote, None, 42, 0);
    let fails = failures(&reports);
    let as_written = reports
        .iter()
        .filter(|r| r.detail.contains("verified as written"))
        .count();
    let reversed = reports
        .iter()
        .filter(|r| r.detail.contains("verified reversed"))
        .count();
    let involutions = reports
        .iter()
        .filter(|r| r.detail.contains("involution"))
        .count();
    let ok = fails.is_empty()
        && reports.len() == 7
        && as_written + reversed == 6
        && involutions == 1;
    criterion(
        6,
        "all seven additional equivalence maps verify with recorded orientations",
        ok,
        &format!(
            "{as_written} as written, {reversed} reversed, {involutions} involution (both \
             orientations hold for the hodograph map)"
        ),
    );
}

#[test]
fn criterion_07_table2_suite() {
    let reports = run_suite(Suite::Table2, None, 42, 0);
    let fails = failures(&reports);
    let rows = CATALOG.reductions.len();
    let reductions = reports
        .iter()
        .filter(|r| r.check == "reduction" && r.status == Status::Pass)
        .count();
    let invariance = reports
        .iter()
        .filter(|r| r.check == "ansatz-invariant" && r.status == Status::Pass)
        .count();
    let ok = fails.is_empty() && rows == 14 && reductions == 14 && invariance == 14;
    criterion(
        7,
        "all 14 reductions reproduce their stated equations with invariant ansatzes",
        ok,
        &format!(
            "{reductions}/{rows} reductions, {invariance} invariance checks{}",
            if fails.is_empty() {
                String::new()
            } else {
                format!("; failures: {fails:?}")
            }
        ),
    );
}

#[test]
fn criterion_08_solutions_suite() {
    let reports = run_suite(Suite::Solutions, None, 42, 0);
    let fails = failures(&reports);
    let must_pass = [
        "quadratic: u = -(t+c1)^-1",
        "quadratic: u = 0",
        "slow.3: phi = c1 Int(e^(eps w^2/2)) + c2",
        "slow.4: phi = ln|Int(e^(eps w^2/2)) + c1| + c2",
        "boosted.4: phi_w^2 - eps phi^2 - 2 w/eps",
        "slow.2 (kappa = 0): phi_w - ln|phi_w+1| + eps phi^2/2",
        "boosted separation (eps = 1): u = c0 + c1 e^(x-c0 t) + c2 e^(-x+c0 t)",
        "boosted separation (eps = -1): u = c0 + c1 cos(x + c0 t + c2)",
        "boosted.5 (kappa = 0): separable relation",
    ];
    let missing: Vec<&str> = must_pass
        .iter()
        .filter(|name| {
            !reports
                .iter()
                .any(|r| r.entry == **name && r.status == Status::Pass)
        })
        .copied()
        .collect();
    let closed_forms = reports.iter().filter(|r| r.status == Status::Pass).count();
    let ok = fails.is_empty() && missing.is_empty() && closed_forms >= 10;
    criterion(
        8,
        "at least ten closed forms verify, including the named quadratures and first integrals",
        ok,
        &format!(
            "{closed_forms} checks{}{}",
            if missing.is_empty() {
                String::new()
            } else {
                format!("; missing: {missing:?}")
            },
            if fails.is_empty() {
                String::new()
            } else {
                format!("; failures: {fails:?}")
            }
        ),
    );
}

#[test]
fn criterion_09_furcate_enumeration() {
    let (missing, extra) = liesym::harness::classify_diff();
    let cases = liesym::harness::furcate_enumerate_c();
    let ok = missing.is_empty() && extra.is_empty() && cases.len() == 11;
    criterion(
        9,
        "the furcate enumerator reproduces the eleven regular-subclass cases exactly",
        ok,
        &format!(
            "{} cases, missing {missing:?}, extraneous {extra:?}",
            cases.len()
        ),
    );
}

#[test]
fn criterion_10_algebra_signatures() {
    let reports = run_suite(Suite::Algebras, Some("C:"), 42, 0);
    let more = run_suite(Suite::Algebras, Some("F:"), 42, 0);
    let more_h = run_suite(Suite::Algebras, Some("H:"), 42, 0);
    let mut all = reports;
    all.extend(more);
    all.extend(more_h);
    let sig_checks: Vec<&Report> = all
        .iter()
        .filter(|r| r.check.starts_with("signature"))
        .collect();
    let fails: Vec<String> = sig_checks
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| format!("{}: {}", r.entry, r.detail))
        .collect();
    let anchored = sig_checks
        .iter()
        .filter(|r| r.check.contains("anchored"))
        .count();
    // the anchored pairs are distinguished exactly as the classification
    // proof distinguishes them: by dim pr_t
    let cases = &CATALOG.signatures;
    let pr = |needle: &str| {
        cases
            .iter()
            .find(|c| c.entry_id.contains(needle))
            .map(|c| c.expected.dim_pr_t)
    };
    let pair1 = (pr(":f=f(u_x);g=u"), pr("abs(u)^(1 + n)"));
    let pair2 = (pr("(1 + u_x)^-1;g=eps*u"), pr("ln(abs(u))"));
    let ok = fails.is_empty()
        && sig_checks.len() == 19
        && anchored == 4
        && pair1 == (Some(1), Some(2))
        && pair2 == (Some(2), Some(1));
    criterion(
        10,
        "computed (dim, dim pr_t, derived series) match the frozen signatures",
        ok,
        &format!(
            "{} signature rows, {anchored} anchored, pr_t pairs {pair1:?} and {pair2:?}{}",
            sig_checks.len(),
            if fails.is_empty() {
                String::new()
            } else {
                format!("; failures: {fails:?}")
            }
        ),
    );
}

#[test]
fn criterion_11_property_suites() {
    let mut detail = String::new();
    let mut ok = true;
    for seed in [42u64, 7, 101, 2024, 31337, 987654321] {
        let reports = run_suite(Suite::Properties, None, seed, 0);
        let fails = failures(&reports);
        if !fails.is_empty() {
            ok = false;
            detail = format!("seed {seed}: {fails:?}");
            break;
        }
        detail = format!("{detail}{seed} ");
    }
    criterion(
        11,
        "idempotence, numeric soundness, Clairaut, Leibniz, commutation and prolongation \
         homomorphism hold at six seeds",
        ok,
        &format!("seeds {detail}"),
    );
}

#[test]
fn criterion_12_lemma_checks() {
    let reports = run_suite(Suite::Table1, Some("C:"), 42, 0);
    let lemma: Vec<&Report> = reports
        .iter()
        .filter(|r| r.check.starts_with("lemma"))
        .collect();
    let fails: Vec<String> = lemma
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| format!("{}: {}", r.entry, r.detail))
        .collect();
    let rows = CATALOG
        .entries
        .iter()
        .filter(|e| e.subclass == liesym::symmetry::Subclass::C)
        .count();
    let ok = fails.is_empty() && lemma.len() == 2 * rows;
    criterion(
        12,
        "regular-subclass fields are affine in (x, u) with the stated xi_u/eta_x exceptions",
        ok,
        &format!(
            "{} lemma checks over {rows} rows{}",
            lemma.len(),
            if fails.is_empty() {
                String::new()
            } else {
                format!("; failures: {fails:?}")
            }
        ),
    );
}
