//! The zipper on an L-shaped slit: capacity, the emitted driving function,
//! and the Loewner-flow round trip back through the composed maps.
//!
//! Run with `cargo run --release --example zipper_driving`.

use hcaplab::capacity::{hcap_zipper, loewner_evolve, slit_map_apply, EvolveOutcome};
use hcaplab::hull::{Hull, Point, Primitive};

fn main() {
    let hull = Hull::single(Primitive::Slit {
        foot: 0.0,
        vertices: vec![Point::new(0.0, 0.5), Point::new(0.3, 0.5)],
    });
    let res = hcap_zipper(&hull, 0.01).unwrap();
    let d = &res.driving;
    println!(
        "L-slit capacity {:.6} (bias bound {:.1e}, {} elementary maps)",
        res.estimate.value,
        res.estimate.bias_bound,
        d.times().len() - 1
    );

    println!("\ndriving function samples (t, U):");
    let m = d.times().len();
    for k in [0, m / 4, m / 2, 3 * m / 4, m - 1] {
        println!("  t = {:>9.6}   U = {:>9.6}", d.times()[k], d.values()[k]);
    }

    // integrate the Loewner equation for a far point and compare with the
    // composed elementary maps
    let z0 = Point::new(5.0, 5.0);
    let mut z = z0;
    for j in 1..m {
        let h = 2.0 * (d.times()[j] - d.times()[j - 1]).sqrt();
        z = slit_map_apply(z, d.values()[j], h).unwrap();
    }
    match loewner_evolve(d, z0, d.end_time(), 1e-4).unwrap() {
        EvolveOutcome::Evolved(p) => println!(
            "\ng_T(5+5i): composed maps ({:.8}, {:.8}), ODE ({:.8}, {:.8}), diff {:.1e}",
            z.x,
            z.y,
            p.x,
            p.y,
            (p.x - z.x).hypot(p.y - z.y)
        ),
        other => println!("unexpected: {other:?}"),
    }

    // a point on the curve is swallowed before T
    match loewner_evolve(d, Point::new(0.0, 0.25), d.end_time(), 1e-5).unwrap() {
        EvolveOutcome::Swallowed { t, .. } => {
            println!("the on-curve point 0.25i is swallowed at t = {t:.6}")
        }
        EvolveOutcome::Evolved(p) => println!("survived to ({}, {})", p.x, p.y),
    }
}
