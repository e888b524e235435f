//! Empirical extremes of the ratio hcap/hsiz over parameterized hull
//! families. The unit slit pins the scale-invariant value 1/(2 pi); widening
//! rectangles drive the ratio up while staying inside the sandwich.
//!
//! Run with `cargo run --release --example extremal_scan`.

use hcaplab::verify::{extremal_scan, FamilySpec, VerifyBudget};

fn main() {
    let budget = VerifyBudget {
        n_paths: 30_000,
        ..VerifyBudget::default()
    };

    for family in [
        FamilySpec::UnitVSlit,
        FamilySpec::UnitHalfDisk,
        FamilySpec::RectHalfWidth {
            values: vec![0.25, 0.5, 1.0, 2.0, 4.0, 8.0],
        },
        FamilySpec::Comb {
            teeth: 5,
            spacings: vec![0.5, 1.0, 2.0, 4.0],
        },
    ] {
        let rep = extremal_scan(&family, &budget, 3);
        println!("family '{}':", rep.family);
        for p in &rep.points {
            println!(
                "  param {:>6.2}  ratio {:.4} in [{:.4}, {:.4}]  {:?}",
                p.param, p.ratio, p.ratio_lo, p.ratio_hi, p.verdict
            );
        }
        println!(
            "  extremes: min {:.4} at {}, max {:.4} at {}; all in sandwich: {}\n",
            rep.min_ratio, rep.arg_min, rep.max_ratio, rep.arg_max, rep.all_in_sandwich
        );
    }
}
