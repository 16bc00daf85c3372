//! Run every verification suite and print a summary, mirroring
//! `liesym verify all`.

use liesym::harness::{run_suite, Status, Suite};

fn main() {
    let mut total = 0;
    let mut failed = 0;
    for suite in Suite::all() {
        let reports = run_suite(suite, None, 42, 0);
        let fails: Vec<_> = reports
            .iter()
            .filter(|r| r.status == Status::Fail)
            .collect();
        println!(
            "{:<12} {:>4} checks, {} failures",
            suite.name(),
            reports.len(),
            fails.len()
        );
        for f in &fails {
            println!("    FAIL {}::{} — {}", f.entry, f.check, f.detail);
        }
        total += reports.len();
        failed += fails.len();
    }
    println!("\n{total} checks, {failed} failures");
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
