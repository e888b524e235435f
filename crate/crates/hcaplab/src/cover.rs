//! Greedy covering of a hull by rectangles `R(z_j, 2c)` and the capacity/area
//! bound sums built from it.
//!
//! The recursion removes `R(z_k, 2c)` for every previous pick and takes the
//! next pick at the maximal remaining height. All our primitives attain their
//! height suprema on a known top face (rectangle top edge, half-disk upper
//! arc, slit polyline), so grid maximization over those faces reports exact
//! hull heights at the picked points.

use crate::capacity::bound_constants;
use crate::hull::{slit_points, Hull, Point, Primitive};
use crate::rng::{pairwise_sum, path_rng};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// One pick `z_j` of the greedy covering at parameter `c`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CoverElement {
    pub z: Point,
    pub c: f64,
}

impl CoverElement {
    /// Open interval `I(z, c) = (x - cy, x + cy)`.
    pub fn interval(&self) -> (f64, f64) {
        (
            self.z.x - self.c * self.z.y,
            self.z.x + self.c * self.z.y,
        )
    }

    /// True iff `p` lies in the covering rectangle `R(z, 2c)`.
    pub fn rect_covers(&self, p: Point) -> bool {
        (p.x - self.z.x).abs() < 2.0 * self.c * self.z.y && p.y > 0.0 && p.y <= self.z.y
    }
}

/// A finished greedy cover together with the parameters that produced it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Cover {
    pub elements: Vec<CoverElement>,
    pub c: f64,
    pub grid: f64,
    pub eps_stop: f64,
    /// Area of tangent disks possibly missed by stopping below `eps_stop`.
    pub truncation_hsiz: f64,
}

/// Default grid pitch relative to the hull height.
pub fn default_grid(hull: &Hull) -> f64 {
    hull.sup_im() / 512.0
}

/// Default stopping height relative to the hull height.
pub fn default_eps_stop(hull: &Hull) -> f64 {
    1e-6 * hull.sup_im()
}

#[derive(Clone, Copy)]
struct Candidate {
    x: f64,
    y: f64,
    prim: usize,
    alive: bool,
}

/// Grid points on the top face of each primitive. Heights are exact hull
/// heights at the listed abscissas.
fn candidates(hull: &Hull, grid: f64) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (idx, prim) in hull.primitives().iter().enumerate() {
        match prim {
            Primitive::VSlit { x0, h } => out.push(Candidate {
                x: *x0,
                y: *h,
                prim: idx,
                alive: true,
            }),
            Primitive::Rect { x_lo, x_hi, h } => {
                let width = x_hi - x_lo;
                let n = ((width / grid) - 1e-9).ceil().max(1.0) as usize;
                let nudge = 1e-9 * width;
                for k in 0..=n {
                    let mut x = x_lo + width * k as f64 / n as f64;
                    // open vertical sides: keep picks inside the hull
                    if k == 0 {
                        x += nudge;
                    }
                    if k == n {
                        x -= nudge;
                    }
                    out.push(Candidate {
                        x,
                        y: *h,
                        prim: idx,
                        alive: true,
                    });
                }
            }
            Primitive::HalfDisk { x0, r } => {
                let width = 2.0 * r;
                let mut n = ((width / grid) - 1e-9).ceil().max(2.0) as usize;
                if n % 2 == 1 {
                    n += 1; // keep the apex on the grid
                }
                for k in 0..=n {
                    let x = x0 - r + width * k as f64 / n as f64;
                    let y2 = r * r - (x - x0) * (x - x0);
                    if y2 <= 0.0 {
                        continue; // rim points sit on the axis, not in the hull
                    }
                    out.push(Candidate {
                        x,
                        y: y2.sqrt(),
                        prim: idx,
                        alive: true,
                    });
                }
            }
            Primitive::Slit { foot, vertices } => {
                let pts = slit_points(*foot, vertices);
                for w in pts.windows(2) {
                    let len = w[0].dist_to(w[1]);
                    let n = ((len / grid) - 1e-9).ceil().max(1.0) as usize;
                    for k in 0..=n {
                        let t = k as f64 / n as f64;
                        let x = w[0].x + t * (w[1].x - w[0].x);
                        let y = w[0].y + t * (w[1].y - w[0].y);
                        if y <= 0.0 {
                            continue;
                        }
                        out.push(Candidate {
                            x,
                            y,
                            prim: idx,
                            alive: true,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Greedy covering: repeatedly pick a maximal-height point of what remains
/// after removing `R(z_k, 2c)` for all previous picks.
///
/// Ties break to the smallest `x`, then the earliest primitive. Stops when
/// the grid point set is exhausted or the maximal height falls below
/// `eps_stop`; the truncated tangent-disk area is recorded on the result.
pub fn greedy_cover(hull: &Hull, c: f64, grid: f64, eps_stop: f64) -> Cover {
    assert!(c > 0.0, "greedy_cover requires c > 0");
    assert!(grid > 0.0, "greedy_cover requires grid > 0");
    assert!(eps_stop >= 0.0, "greedy_cover requires eps_stop >= 0");
    let mut cands = candidates(hull, grid);
    let mut elements: Vec<CoverElement> = Vec::new();
    let mut truncated = false;
    loop {
        let mut best: Option<(f64, f64, usize, usize)> = None; // (y, x, prim, idx)
        for (i, cand) in cands.iter().enumerate() {
            if !cand.alive {
                continue;
            }
            let better = match &best {
                None => true,
                Some((by, bx, bp, _)) => {
                    cand.y > *by
                        || (cand.y == *by
                            && (cand.x < *bx || (cand.x == *bx && cand.prim < *bp)))
                }
            };
            if better {
                best = Some((cand.y, cand.x, cand.prim, i));
            }
        }
        let Some((y, x, _, _)) = best else { break };
        if y < eps_stop {
            truncated = true;
            break;
        }
        let pick = CoverElement {
            z: Point::new(x, y),
            c,
        };
        for cand in cands.iter_mut() {
            if cand.alive && cand.y <= y && (cand.x - x).abs() < 2.0 * c * y {
                cand.alive = false;
            }
        }
        elements.push(pick);
    }
    // Leftovers live below eps_stop; their tangent disks fit in a strip of
    // height 2 eps_stop over the hull extent.
    let truncation_hsiz = if truncated {
        let (lo, hi) = hull.x_extent();
        2.0 * eps_stop * ((hi - lo) + 4.0 * eps_stop)
    } else {
        0.0
    };
    Cover {
        elements,
        c,
        grid,
        eps_stop,
        truncation_hsiz,
    }
}

/// Result of checking a cover against its hull.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverageReport {
    pub n_samples: u64,
    /// Sampled points outside the exact union of covering rectangles.
    pub exact_misses: u64,
    /// Misses beyond the grid-pitch allowance; any entry fails the check.
    pub violations: Vec<(Point, f64)>,
    pub disjoint_ok: bool,
    pub monotone_ok: bool,
}

impl CoverageReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty() && self.disjoint_ok && self.monotone_ok
    }
}

fn sample_primitive(prim: &Primitive, rng: &mut rand_chacha::ChaCha8Rng) -> Point {
    match prim {
        Primitive::Rect { x_lo, x_hi, h } => Point::new(
            x_lo + (x_hi - x_lo) * rng.gen::<f64>(),
            h * rng.gen::<f64>().max(1e-300),
        ),
        Primitive::VSlit { x0, h } => Point::new(*x0, h * rng.gen::<f64>().max(1e-300)),
        Primitive::HalfDisk { x0, r } => loop {
            let x = x0 - r + 2.0 * r * rng.gen::<f64>();
            let y = r * rng.gen::<f64>();
            if (x - x0) * (x - x0) + y * y <= r * r && y > 0.0 {
                return Point::new(x, y);
            }
        },
        Primitive::Slit { foot, vertices } => {
            let pts = slit_points(*foot, vertices);
            let lens: Vec<f64> = pts.windows(2).map(|w| w[0].dist_to(w[1])).collect();
            let total: f64 = lens.iter().sum();
            let mut target = total * rng.gen::<f64>();
            for (w, len) in pts.windows(2).zip(&lens) {
                if target <= *len {
                    let t = target / len;
                    return Point::new(
                        w[0].x + t * (w[1].x - w[0].x),
                        w[0].y + t * (w[1].y - w[0].y),
                    );
                }
                target -= len;
            }
            *pts.last().unwrap()
        }
    }
}

/// Samples hull points and verifies they land in the union of covering
/// rectangles; also checks interval disjointness and height monotonicity
/// exactly.
///
/// A sampled miss only counts as a violation when it cannot be explained by
/// the grid pitch: the point must stay uncovered even after widening every
/// rectangle by twice the pitch, and must sit above the stopping height.
pub fn coverage_check(hull: &Hull, cover: &Cover, n_samples: u64, seed: u64) -> CoverageReport {
    let prims = hull.primitives();
    let per = (n_samples / prims.len() as u64).max(1);
    let mut exact_misses = 0;
    let mut violations = Vec::new();
    let mut count = 0;
    for (pi, prim) in prims.iter().enumerate() {
        for i in 0..per {
            let mut rng = path_rng(seed, (pi as u64) << 32 | i);
            let p = sample_primitive(prim, &mut rng);
            count += 1;
            if cover.elements.iter().any(|e| e.rect_covers(p)) {
                continue;
            }
            exact_misses += 1;
            if p.y <= cover.eps_stop + 1e-12 {
                continue;
            }
            let slack = cover
                .elements
                .iter()
                .filter(|e| e.z.y >= p.y)
                .map(|e| (p.x - e.z.x).abs() - 2.0 * e.c * e.z.y)
                .fold(f64::INFINITY, f64::min);
            if slack > 2.0 * cover.grid {
                violations.push((p, slack));
            }
        }
    }
    // Interval disjointness, exact arithmetic: sort by left endpoint and
    // require right <= next left (open intervals may touch).
    let mut iv: Vec<(f64, f64)> = cover.elements.iter().map(|e| e.interval()).collect();
    iv.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let disjoint_ok = iv.windows(2).all(|w| w[0].1 <= w[1].0);
    let monotone_ok = cover
        .elements
        .windows(2)
        .all(|w| w[0].z.y >= w[1].z.y);
    CoverageReport {
        n_samples: count,
        exact_misses,
        violations,
        disjoint_ok,
        monotone_ok,
    }
}

/// Bound sums built from a cover.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CoverSums {
    pub sum_sq: f64,
    pub hsiz_lo: f64,
    pub hsiz_hi: f64,
    pub hcap_lo: f64,
    pub hcap_hi: f64,
    /// `pi sum_sq <= hsiz` needs disjoint tangent disks, i.e. `c >= 1`.
    pub hsiz_lo_valid: bool,
    /// The subadditivity chain `hcap <= K sum_sq` is stated for `c = 1` covers.
    pub hcap_hi_valid: bool,
    /// Rigorous constant used for the upper chain (`hcap(R(i,2)) < 7/2`).
    pub k_upper: f64,
    pub rho: f64,
}

/// Capacity constant for the upper bound at `c = 1`.
pub const K_UPPER_RIGOROUS: f64 = 3.5;

/// `sum y_j^2` and the four bounds it induces:
/// `pi sum <= hsiz <= (pi + 8c) sum` and `rho_c^2 sum <= hcap <= K sum`.
pub fn cover_sums(cover: &Cover) -> CoverSums {
    assert!(!cover.elements.is_empty(), "cover_sums needs a nonempty cover");
    let sq: Vec<f64> = cover.elements.iter().map(|e| e.z.y * e.z.y).collect();
    let sum_sq = pairwise_sum(&sq);
    let rho = bound_constants(cover.c).rho;
    CoverSums {
        sum_sq,
        hsiz_lo: PI * sum_sq,
        hsiz_hi: (PI + 8.0 * cover.c) * sum_sq,
        hcap_lo: rho * rho * sum_sq,
        hcap_hi: K_UPPER_RIGOROUS * sum_sq,
        hsiz_lo_valid: cover.c >= 1.0,
        hcap_hi_valid: cover.c == 1.0,
        k_upper: K_UPPER_RIGOROUS,
        rho,
    }
}

/// CSV export with header `j,x,y,c`.
pub fn cover_to_csv(cover: &Cover) -> String {
    let mut out = String::from("j,x,y,c\n");
    for (j, e) in cover.elements.iter().enumerate() {
        out.push_str(&format!(
            "{},{:.16e},{:.16e},{:.16e}\n",
            j + 1,
            e.z.x,
            e.z.y,
            e.c
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vslit(x0: f64, h: f64) -> Primitive {
        Primitive::VSlit { x0, h }
    }

    #[test]
    fn single_slit_single_element() {
        let hull = Hull::single(vslit(0.0, 1.0));
        for c in [0.25, 1.0, 3.0] {
            let cover = greedy_cover(&hull, c, default_grid(&hull), default_eps_stop(&hull));
            assert_eq!(cover.elements.len(), 1);
            assert_eq!(cover.elements[0].z, Point::new(0.0, 1.0));
        }
    }

    #[test]
    fn two_slits_two_elements() {
        let hull = Hull::new(vec![vslit(0.0, 1.0), vslit(10.0, 0.5)]).unwrap();
        let cover = greedy_cover(&hull, 1.0, default_grid(&hull), default_eps_stop(&hull));
        assert_eq!(cover.elements.len(), 2);
        assert_eq!(cover.elements[0].z, Point::new(0.0, 1.0));
        assert_eq!(cover.elements[1].z, Point::new(10.0, 0.5));
        // intervals (-1, 1) and (9.5, 10.5) are disjoint
        assert_eq!(cover.elements[0].interval(), (-1.0, 1.0));
        assert_eq!(cover.elements[1].interval(), (9.5, 10.5));
        let report = coverage_check(&hull, &cover, 20_000, 17);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn rect_leftmost_tie_break_covers_in_one() {
        let hull = Hull::single(Primitive::Rect {
            x_lo: -1.0,
            x_hi: 1.0,
            h: 1.0,
        });
        let cover = greedy_cover(&hull, 1.0, default_grid(&hull), default_eps_stop(&hull));
        assert_eq!(cover.elements.len(), 1, "{:?}", cover.elements);
        let z = cover.elements[0].z;
        assert!((z.x - (-1.0)).abs() < 1e-6, "leftmost maximizer, got {z:?}");
        assert_eq!(z.y, 1.0);
        let report = coverage_check(&hull, &cover, 20_000, 23);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn negative_control_reports_violations() {
        let hull = Hull::new(vec![vslit(0.0, 1.0), vslit(10.0, 0.5)]).unwrap();
        let mut cover = greedy_cover(&hull, 1.0, default_grid(&hull), default_eps_stop(&hull));
        cover.elements.pop();
        let report = coverage_check(&hull, &cover, 20_000, 29);
        assert!(!report.violations.is_empty());
        assert!(!report.pass());
    }

    #[test]
    fn half_disk_cover_is_consistent() {
        let hull = Hull::single(Primitive::HalfDisk { x0: 0.0, r: 1.0 });
        let cover = greedy_cover(&hull, 1.0, default_grid(&hull), default_eps_stop(&hull));
        assert!(!cover.elements.is_empty());
        // apex first
        assert_eq!(cover.elements[0].z, Point::new(0.0, 1.0));
        let report = coverage_check(&hull, &cover, 30_000, 31);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn sums_for_slit_cover() {
        let hull = Hull::single(vslit(0.0, 1.0));
        let cover = greedy_cover(&hull, 1.0, default_grid(&hull), default_eps_stop(&hull));
        let sums = cover_sums(&cover);
        assert_eq!(sums.sum_sq, 1.0);
        assert!((sums.hsiz_lo - PI).abs() < 1e-12);
        assert!((sums.hsiz_hi - (PI + 8.0)).abs() < 1e-12);
        // rho_1^2 from the 40-digit oracle; sandwich around the exact 1/2
        #[allow(clippy::excessive_precision)]
        const RHO_ONE_SQ: f64 = 0.14833150575708840;
        assert!((sums.hcap_lo - RHO_ONE_SQ).abs() < 1e-12);
        assert!(sums.hcap_lo <= 0.5 && 0.5 <= sums.hcap_hi);
        assert!(sums.hsiz_lo_valid && sums.hcap_hi_valid);
    }

    #[test]
    fn two_slit_sums_bracket_quadtree() {
        let hull = Hull::new(vec![vslit(0.0, 1.0), vslit(10.0, 0.5)]).unwrap();
        let cover = greedy_cover(&hull, 1.0, default_grid(&hull), default_eps_stop(&hull));
        let sums = cover_sums(&cover);
        assert!((sums.sum_sq - 1.25).abs() < 1e-12);
        let area = crate::hsiz::hsiz_quadtree(&hull, 5e-3).unwrap();
        assert!(sums.hsiz_lo <= area.value + area.error_bound + 1e-9);
        assert!(area.value - area.error_bound <= sums.hsiz_hi + 1e-9);
    }

    #[test]
    fn scaling_commutes_with_cover() {
        let hull = Hull::new(vec![
            Primitive::Rect {
                x_lo: -1.0,
                x_hi: 0.5,
                h: 0.8,
            },
            vslit(2.0, 1.2),
        ])
        .unwrap();
        let grid = default_grid(&hull);
        let eps = default_eps_stop(&hull);
        let base = greedy_cover(&hull, 1.0, grid, eps);
        for r in [0.5, 3.0] {
            let scaled = greedy_cover(&hull.scale(r), 1.0, grid * r, eps * r);
            assert_eq!(base.elements.len(), scaled.elements.len());
            for (a, b) in base.elements.iter().zip(&scaled.elements) {
                assert!((a.z.x * r - b.z.x).abs() < 1e-9 * r.max(1.0));
                assert!((a.z.y * r - b.z.y).abs() < 1e-9 * r.max(1.0));
            }
        }
    }

    #[test]
    fn csv_header_and_rows() {
        let hull = Hull::single(vslit(0.0, 1.0));
        let cover = greedy_cover(&hull, 1.0, default_grid(&hull), default_eps_stop(&hull));
        let csv = cover_to_csv(&cover);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("j,x,y,c"));
        let row = lines.next().unwrap();
        assert!(row.starts_with("1,"), "{row}");
    }
}
