//! Run every randomized theorem suite once from a fixed seed. The same
//! suites back the `knotalg verify` subcommand.

use knotalg::verify::{run_suite, SuiteName};

fn main() {
    let mut all_passed = true;
    for name in SuiteName::ALL {
        let report = run_suite(name, 50, 2026);
        println!("{}\n", report);
        all_passed &= report.passed();
    }
    if all_passed {
        println!("all suites passed");
    } else {
        std::process::exit(1);
    }
}
