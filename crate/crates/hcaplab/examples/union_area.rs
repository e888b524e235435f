//! Tangent-disk area of hulls: the exact rectangle formula, the certified
//! quadtree, and Monte Carlo, side by side.
//!
//! Run with `cargo run --release --example union_area`.

use hcaplab::hsiz::{hsiz_mc, hsiz_quadtree, hsiz_rect};
use hcaplab::hull::{Hull, Primitive};
use std::f64::consts::PI;

fn main() {
    // R(i, 2) = (-2, 2) x (0, 1]: the union of its tangent disks is a
    // 4 x 2 strip with two half-disk caps, area pi + 8.
    let rect = Hull::single(Primitive::Rect {
        x_lo: -2.0,
        x_hi: 2.0,
        h: 1.0,
    });
    println!("R(i,2): exact formula (pi + 8c) y^2 = {:.8}", hsiz_rect(1.0, 1.0));
    let qt = hsiz_quadtree(&rect, 1e-3).unwrap();
    println!(
        "        quadtree {:.8} +- {:.1e} ({} cells)",
        qt.value, qt.error_bound, qt.cells_or_samples
    );
    let mc = hsiz_mc(&rect, 400_000, 5);
    println!("        monte carlo {:.6} +- {:.4} (3 sigma)", mc.value, mc.error_bound);

    // the unit slit's disks nest inside B(i, 1): area exactly pi
    let slit = Hull::single(Primitive::VSlit { x0: 0.0, h: 1.0 });
    let qt = hsiz_quadtree(&slit, 1e-3).unwrap();
    println!("\nunit slit: quadtree {:.8} vs pi = {:.8}", qt.value, PI);

    // a union with overlap: operations reduce over primitives, overlap is fine
    let union = Hull::new(vec![
        Primitive::Rect {
            x_lo: -1.0,
            x_hi: 1.0,
            h: 0.8,
        },
        Primitive::HalfDisk { x0: 0.5, r: 1.0 },
        Primitive::VSlit { x0: 2.5, h: 0.6 },
    ])
    .unwrap();
    let qt = hsiz_quadtree(&union, 1e-3).unwrap();
    let mc = hsiz_mc(&union, 400_000, 9);
    println!(
        "\noverlapping union: quadtree {:.6} +- {:.1e}, mc {:.6} +- {:.4}",
        qt.value, qt.error_bound, mc.value, mc.error_bound
    );
}
