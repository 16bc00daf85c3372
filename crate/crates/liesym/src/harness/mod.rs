//! Built-in catalog of classification results, the furcate-splitting
//! enumerator for the regular subclass, the verification-suite runner, and
//! the command-line interface with machine-readable reports.

pub mod catalog;
pub mod cli;
pub mod furcate;
pub mod suites;

pub use catalog::{
    entry_id, Catalog, CatalogEntry, EquivalenceEdge, SignatureCase, SolutionCheck, CATALOG,
};
pub use furcate::{
    classify_diff, furcate_enumerate_c, solve_template_f, solve_template_f_quadratic,
    solve_template_g, Admissibility, FurcateCase, FurcateError,
};
pub use suites::{run_suite, Report, Status, Suite};

use std::io::Write;

/// Write reports as JSON lines.
pub fn write_reports<W: Write>(
    mut w: W,
    reports: &[Report],
) -> std::io::Result<()> {
    for r in reports {
        let line = serde_json::to_string(r).expect("reports serialize");
        writeln!(w, "{line}")?;
    }
    Ok(())
}

/// Human-oriented one-line summaries.
pub fn print_reports(reports: &[Report]) {
    for r in reports {
        let mark = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        let detail = if r.detail.is_empty() {
            String::new()
        } else {
            format!(" — {}", r.detail)
        };
        println!("[{mark}] {}::{} :: {}{detail}", r.suite, r.entry, r.check);
    }
    let fails = reports.iter().filter(|r| r.status == Status::Fail).count();
    let passes = reports.iter().filter(|r| r.status == Status::Pass).count();
    println!("{passes} passed, {fails} failed, {} total", reports.len());
}
