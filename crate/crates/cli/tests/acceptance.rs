//! Acceptance suite: runs every verification section at its exact
//! tolerance and prints one pass/fail line per criterion.
//!
//! Run with `cargo test -p cvt-cli --test acceptance -- --nocapture`
//! to see the lines as they complete.

use cvt_cli::verify;

#[test]
fn acceptance_criteria() {
    let results = verify::run_sections(&[]).expect("verification harness runs");
    assert_eq!(results.len(), verify::SECTION_KEYS.len());
    let mut all_pass = true;
    for r in &results {
        println!(
            "{}: {}  [{}]",
            r.key,
            if r.pass { "PASS" } else { "FAIL" },
            r.details
        );
        all_pass &= r.pass;
    }
    assert!(all_pass, "some acceptance criteria failed");
}
