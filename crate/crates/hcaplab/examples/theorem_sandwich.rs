//! The comparability sandwich hsiz/66 < hcap <= 7 hsiz/(2 pi) checked over a
//! seeded random hull corpus with rigorous-or-3-sigma interval arithmetic.
//!
//! Run with `cargo run --release --example theorem_sandwich`.

use hcaplab::verify::{corpus, theorem1_corpus, Verdict, VerifyBudget};

fn main() {
    let hulls = corpus(2026, 25);
    let budget = VerifyBudget {
        n_paths: 30_000,
        ..VerifyBudget::default()
    };
    let reports = theorem1_corpus(&hulls, &budget, 7);

    println!(
        "{:<10} {:>9} {:>9} {:>9} {:>9} {:>9}  verdict",
        "hull", "hcap", "hsiz", "ratio", "lo", "hi"
    );
    for r in &reports {
        println!(
            "{:<10} {:>9.4} {:>9.4} {:>9.4} {:>9.4} {:>9.4}  {:?}",
            r.hull_id, r.hcap.value, r.hsiz.value, r.ratio, r.ratio_lo, r.ratio_hi, r.verdict
        );
    }

    let pass = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let inconclusive = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Inconclusive)
        .count();
    let violated = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Violated)
        .count();
    println!(
        "\nbounds: 1/66 = {:.6}, 7/(2 pi) = {:.6}",
        1.0 / 66.0,
        7.0 / (2.0 * std::f64::consts::PI)
    );
    println!("{pass} pass, {inconclusive} inconclusive, {violated} violated");
}
