//! Exit probability through the base of the half-strip (-2c, 2c) x (0, inf)
//! from height 1: the closed form (4/pi) arctan(e^{-pi/(4c)}) against
//! walk-on-spheres, and the identity exit = sqrt(2) rho_c.
//!
//! Run with `cargo run --release --example strip_exit`.

use hcaplab::capacity::{bound_constants, strip_exit_prob, strip_exit_prob_mc};

fn main() {
    println!("{:>6} {:>12} {:>12} {:>8} {:>12}", "c", "analytic", "mc", "sigma", "|z-score|");
    for (i, c) in [0.25, 0.5, 1.0, 2.0, 4.0].into_iter().enumerate() {
        let exact = strip_exit_prob(c);
        let est = strip_exit_prob_mc(c, 150_000, 1e-6, 100 + i as u64).unwrap();
        println!(
            "{c:>6} {exact:>12.6} {:>12.6} {:>8.1e} {:>12.2}",
            est.value,
            est.std_error,
            (est.value - exact).abs() / est.std_error
        );
    }

    println!("\nidentity exit_prob = sqrt(2) rho:");
    for c in [0.5, 1.0, 8.0 / 5.0] {
        let b = bound_constants(c);
        println!(
            "  c = {c}: exit {:.12}, sqrt2*rho {:.12}, diff {:.1e}",
            b.exit_prob,
            2f64.sqrt() * b.rho,
            (b.exit_prob - 2f64.sqrt() * b.rho).abs()
        );
    }
}
