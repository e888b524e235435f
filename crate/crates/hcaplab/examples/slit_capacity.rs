//! Three routes to the capacity of the unit vertical slit, whose exact value
//! is 1/2: the catalog, walk-on-spheres from the Brownian limit definition,
//! and the slit-map zipper.
//!
//! Run with `cargo run --release --example slit_capacity`.

use hcaplab::capacity::{hcap_exact, hcap_wos, hcap_zipper, WosParams};
use hcaplab::hull::{Hull, Primitive};

fn main() {
    let slit = Hull::single(Primitive::VSlit { x0: 0.0, h: 1.0 });

    let exact = hcap_exact(&slit).unwrap();
    println!("exact catalog:     {:.6}", exact.value);

    let wos = hcap_wos(
        &slit,
        &WosParams {
            n_paths: 200_000,
            y_start: 32.0,
            eps: 1e-4,
            seed: 7,
        },
    )
    .unwrap();
    println!(
        "walk-on-spheres:   {:.6} +- {:.6} (bias bound {:.6}, {} paths)",
        wos.value, wos.std_error, wos.bias_bound, wos.n_paths
    );

    let zip = hcap_zipper(&slit, 1e-3).unwrap();
    println!(
        "zipper:            {:.6} (bias bound {:.2e})",
        zip.estimate.value, zip.estimate.bias_bound
    );

    println!(
        "\nall three agree with h^2/2 = 0.5; the WoS deviation is {:.2e}",
        (wos.value - 0.5).abs()
    );
}
