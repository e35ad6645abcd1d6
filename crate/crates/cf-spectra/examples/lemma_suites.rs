//! Run every lemma verification suite at demonstration scale and print the
//! one-line verdicts. Each suite is deterministic for a fixed seed.

use cf_spectra::verifiers::*;

fn main() {
    let seed = 0xC0FFEE;
    let reports = [
        run_comp_bounds_suite(3, 2_000, seed),
        run_repeat_suite(0, 200, seed),
        run_surgery_suite(500, seed),
        run_parity_agreement_suite(2_000, seed),
        run_lambda_window_suite(300, seed),
        run_banned_contrapositive(5),
        run_min_avoiding(10),
        run_firstelements_suite(),
    ];
    for r in &reports {
        println!(
            "{:<24} trials={:<6} status={}{}",
            r.lemma,
            r.trials,
            r.status,
            if r.failures.is_empty() {
                String::new()
            } else {
                format!(" ({} failures)", r.failures.len())
            }
        );
    }
    assert!(reports.iter().all(|r| r.ok()));
}
