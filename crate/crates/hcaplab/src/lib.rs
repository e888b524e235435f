//! Half-plane capacity and tangent-disk area for compact hulls in the upper
//! half plane.
//!
//! The library computes `hcap(A)` (exact catalog, walk-on-spheres Monte Carlo,
//! or a slit-map zipper), the tangent-disk area `hsiz(A)` (certified quadtree
//! or Monte Carlo), greedy rectangle covers with their capacity/area bound
//! sums, and verifies the comparability sandwich
//! `hsiz(A)/66 < hcap(A) <= 7 hsiz(A)/(2 pi)` on hull corpora.
//!
//! Start with [`hull::Hull`] for geometry, [`capacity`] and [`hsiz`] for the
//! two quantities, [`cover`] for the covering construction and [`verify`] for
//! the sandwich checks. The `examples/` directory has one runnable example per
//! capability; `src/bin/hcaplab.rs` exposes the same operations as a CLI.

// Parameter guards use `!(x > 0.0)` so that NaN is rejected along with
// nonpositive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod capacity;
pub mod cli;
pub mod cover;
pub mod hsiz;
pub mod hull;
pub mod rng;
pub mod verify;

pub use capacity::{hcap_exact, hcap_integral, hcap_wos, hcap_zipper, CapEstimate};
pub use cover::{cover_sums, coverage_check, greedy_cover, Cover, CoverElement};
pub use hsiz::{hsiz_mc, hsiz_quadtree, hsiz_rect, AreaResult};
pub use hull::{Hull, Point, Primitive};
pub use verify::{theorem1_check, TheoremReport};
