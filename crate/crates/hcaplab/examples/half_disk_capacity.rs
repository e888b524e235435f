//! Capacity of half-disks: the exact value `r^2` against both Monte Carlo
//! routes (the limit definition and the line-integral definition).
//!
//! Run with `cargo run --release --example half_disk_capacity`.

use hcaplab::capacity::{hcap_exact, hcap_integral, hcap_wos, IntegralParams, WosParams};
use hcaplab::hull::{Hull, Primitive};

fn main() {
    let r = 2f64.sqrt();
    let hull = Hull::single(Primitive::HalfDisk { x0: 0.0, r });

    println!("half-disk of radius sqrt(2): exact hcap = r^2 = {:.6}\n", hcap_exact(&hull).unwrap().value);

    let wos = hcap_wos(
        &hull,
        &WosParams {
            n_paths: 200_000,
            y_start: 32.0,
            eps: 1e-4,
            seed: 11,
        },
    )
    .unwrap();
    println!(
        "limit route:    {:.6} +- {:.6} (bias bound {:.4})",
        wos.value, wos.std_error, wos.bias_bound
    );

    let y0 = 1.5;
    let integral = hcap_integral(
        &hull,
        &IntegralParams {
            n_paths: 200_000,
            y0,
            window: (-40.0 * y0, 40.0 * y0),
            eps: 1e-4,
            seed: 13,
        },
    )
    .unwrap();
    println!(
        "integral route: {:.6} +- {:.6} (bias bound {:.4})",
        integral.value, integral.std_error, integral.bias_bound
    );

    // scaling law: hcap(rA) = r^2 hcap(A)
    for factor in [0.5, 3.0] {
        let scaled = hull.scale(factor);
        println!(
            "scaled by {factor}: exact hcap = {:.6} (= {factor}^2 * {:.6})",
            hcap_exact(&scaled).unwrap().value,
            hcap_exact(&hull).unwrap().value
        );
    }
}
