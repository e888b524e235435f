//! The covering-bound constant chain: rho_c and the lower-bound rate
//! rho_c^2 / (pi + 8c) over a grid of c, the choice c = 8/5 that beats 1/66,
//! and the empirical grid optimum.
//!
//! Run with `cargo run --release --example covering_constants`.

use hcaplab::verify::constants_report;

fn main() {
    let grid: Vec<f64> = (1..=60).map(|i| 0.1 * i as f64).collect();
    let rep = constants_report(&grid);

    println!("{:>6} {:>12} {:>14}", "c", "rho_c", "rho^2/(pi+8c)");
    for row in rep.rows.iter().step_by(5) {
        println!("{:>6.2} {:>12.8} {:>14.10}", row.c, row.rho, row.bound);
    }

    println!(
        "\nat c = 8/5: rho = {:.10}, bound = {:.10} ({} 1/66 = {:.10})",
        rep.chosen.rho,
        rep.chosen.bound,
        if rep.chosen_exceeds_1_66 { ">" } else { "<=" },
        1.0 / 66.0
    );
    println!(
        "grid argmax: c = {:.2} with bound {:.10}",
        rep.argmax.c, rep.argmax.bound
    );
}
