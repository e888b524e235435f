//! The greedy covering construction: picks, interval disjointness, sampled
//! coverage, and the capacity/area bound sums.
//!
//! Run with `cargo run --release --example greedy_cover`.

use hcaplab::cover::{
    cover_sums, cover_to_csv, coverage_check, default_eps_stop, default_grid, greedy_cover,
};
use hcaplab::hsiz::hsiz_quadtree;
use hcaplab::hull::{Hull, Primitive};

fn main() {
    let hull = Hull::new(vec![
        Primitive::VSlit { x0: 0.0, h: 1.0 },
        Primitive::VSlit { x0: 10.0, h: 0.5 },
        Primitive::HalfDisk { x0: 4.0, r: 0.8 },
    ])
    .unwrap();

    let cover = greedy_cover(&hull, 1.0, default_grid(&hull), default_eps_stop(&hull));
    println!("greedy cover at c = 1 ({} elements):", cover.elements.len());
    print!("{}", cover_to_csv(&cover));

    let report = coverage_check(&hull, &cover, 50_000, 17);
    println!(
        "\ncoverage: {} samples, {} exact misses, {} violations, disjoint {}, monotone {}",
        report.n_samples,
        report.exact_misses,
        report.violations.len(),
        report.disjoint_ok,
        report.monotone_ok
    );

    let sums = cover_sums(&cover);
    println!("\nsum y_j^2         = {:.6}", sums.sum_sq);
    println!("pi  * sum         = {:.6}  <= hsiz (valid, c >= 1)", sums.hsiz_lo);
    println!("(pi+8c) * sum     = {:.6}  >= hsiz", sums.hsiz_hi);
    println!("rho_c^2 * sum     = {:.6}  <= hcap", sums.hcap_lo);
    println!("(7/2) * sum       = {:.6}  >= hcap (valid, c = 1)", sums.hcap_hi);

    let area = hsiz_quadtree(&hull, 1e-3).unwrap();
    println!(
        "\nquadtree hsiz    = {:.6} +- {:.1e}: sandwich {}",
        area.value,
        area.error_bound,
        if sums.hsiz_lo <= area.value + area.error_bound
            && area.value - area.error_bound <= sums.hsiz_hi
        {
            "holds"
        } else {
            "violated"
        }
    );
}
