//! Hull spec files: the JSON format consumed by the CLI, with parse-and-
//! validate round trips and the property suite's random generator.
//!
//! Run with `cargo run --release --example hull_files`.

use hcaplab::hull::Hull;
use hcaplab::rng::path_rng;
use hcaplab::verify::random_hull;

fn main() {
    let doc = r#"{
  "primitives": [
    {"kind": "rect", "x_lo": -2.0, "x_hi": 2.0, "h": 1.0},
    {"kind": "halfdisk", "x0": 3.0, "r": 0.8},
    {"kind": "vslit", "x0": -3.5, "h": 1.2},
    {"kind": "slit", "foot": 5.0, "vertices": [[5.1, 0.4], [4.9, 0.9]]}
  ]
}"#;
    let hull = Hull::from_json_str(doc).unwrap();
    println!(
        "parsed {} primitives; sup_im = {:.3}, extent = {:?}",
        hull.primitives().len(),
        hull.sup_im(),
        hull.x_extent()
    );

    println!("\nserialized back:\n{}", hull.to_json());

    // bad files are rejected with field-level diagnostics
    for bad in [
        r#"{"primitives": []}"#,
        r#"{"primitives": [{"kind": "rect", "x_lo": 1.0, "x_hi": -1.0, "h": 1.0}]}"#,
        r#"{"primitives": [{"kind": "slit", "foot": 0.0, "vertices": [[0.0, -1.0]]}]}"#,
    ] {
        println!("\nrejected: {}", Hull::from_json_str(bad).unwrap_err());
    }

    // the corpus generator used by verification
    let mut rng = path_rng(1, 0);
    let random = random_hull(&mut rng);
    println!("\na random corpus hull:\n{}", random.to_json());
}
