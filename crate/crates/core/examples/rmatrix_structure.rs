//! Structural checks on the R-matrices of every representation.

use sl3_invariant::cli::{suite_relations, suite_skein, suite_yang_baxter};

fn main() {
    for report in [suite_relations(), suite_yang_baxter(false), suite_skein()] {
        println!("{}: {}/{} passed", report.name, report.checks.iter().filter(|c| c.passed).count(), report.checks.len());
        for c in report.failures() {
            println!("  FAIL {}", c.name);
        }
    }
}
