//! Runs every acceptance criterion and prints one line per criterion.
//!
//! A criterion listed in `KNOWN_FAILURES` is still run and still reported as
//! FAIL, but does not fail the run; if it starts passing, the run fails so
//! the list gets updated.

use prym_core::acceptance;

/// Criterion 2 pins the printed table, two entries of which disagree with
/// the determinant, lattice-path and brute-force counts (8192 and 35840).
const KNOWN_FAILURES: &[u32] = &[2];

fn main() {
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids = (!filter.is_empty()).then_some(filter.as_slice());
    let mut unexpected = 0;
    for criterion in acceptance::criteria().iter().filter(|c| ids.is_none_or(|ids| ids.contains(&c.id))) {
        let report = criterion.run();
        let known = KNOWN_FAILURES.contains(&report.id);
        println!("{}{}", report.line(), if known && !report.passed { " [known]" } else { "" });
        if report.passed == known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} acceptance criteria did not match their expected outcome");
        std::process::exit(1);
    }
}
