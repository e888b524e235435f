//! Area of the union of tangent disks `B(x+iy, y)` over hull points.
//!
//! Three routes: the exact rectangle formula `(pi + 8c) y^2`, a certified
//! adaptive quadtree driven by the interval form of `tangent_excess`, and a
//! Monte Carlo fallback over the same bounding box.

use crate::hull::{Hull, Point};
use crate::rng::{pairwise_sum, run_paths, PathOutcome};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

/// Hard cap on classified quadtree cells.
pub const CELL_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AreaMethod {
    ExactRect,
    Quadtree,
    Mc,
}

impl AreaMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            AreaMethod::ExactRect => "exact_rect",
            AreaMethod::Quadtree => "quadtree",
            AreaMethod::Mc => "mc",
        }
    }
}

/// Area value with its error bound. Quadtree bounds are deterministic and
/// certified; Monte Carlo bounds are 3 sigma.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct AreaResult {
    pub value: f64,
    pub error_bound: f64,
    pub method: AreaMethod,
    pub cells_or_samples: u64,
}

#[derive(Debug, Error)]
pub enum HsizError {
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("tolerance unreachable within the {budget}-cell budget ({cells} classified)")]
    CellBudgetExceeded { cells: u64, budget: u64 },
}

/// Exact tangent-disk area of the rectangle `R(z, 2c) = (x-2cy, x+2cy) x (0, y]`:
/// a `4cy x 2y` strip capped by two half-disks of radius `y`.
pub fn hsiz_rect(y: f64, c: f64) -> f64 {
    assert!(y > 0.0 && c > 0.0, "hsiz_rect requires y > 0 and c > 0");
    (PI + 8.0 * c) * y * y
}

/// Bounding box guaranteed to contain the tangent-disk union: a disk centered
/// at height `y <= sup_im` has radius `y`, so the union stays within
/// horizontal distance `2 sup_im` of the hull and below height `2 sup_im`.
pub fn tangent_union_box(hull: &Hull) -> (f64, f64, f64, f64) {
    let s = hull.sup_im();
    let (x_lo, x_hi) = hull.x_extent();
    (x_lo - 2.0 * s, x_hi + 2.0 * s, -s, 2.0 * s)
}

#[derive(Clone, Copy)]
struct Cell {
    x: f64,
    y: f64,
    w: f64,
    h: f64,
}

enum CellClass {
    Inside,
    Outside,
    Ambiguous,
}

fn classify(hull: &Hull, cell: &Cell) -> CellClass {
    let (f_lo, f_hi) = hull.tangent_excess_box(cell.x, cell.x + cell.w, cell.y, cell.y + cell.h);
    if f_hi < 0.0 {
        CellClass::Outside
    } else if f_lo > 0.0 {
        CellClass::Inside
    } else {
        CellClass::Ambiguous
    }
}

/// Certified adaptive-subdivision area of the tangent-disk union.
///
/// Cells whose excess interval is negative are outside, positive inside;
/// ambiguous cells are split level by level until their total area drops
/// below `tol`. Half the ambiguous area is credited to the value and half
/// reported as the (two-sided, certified) error bound. Deterministic for any
/// worker count: cells are classified in index order and summed pairwise.
pub fn hsiz_quadtree(hull: &Hull, tol: f64) -> Result<AreaResult, HsizError> {
    if !(tol > 0.0) {
        return Err(HsizError::InvalidTolerance(tol));
    }
    let (x_lo, x_hi, y_lo, y_hi) = tangent_union_box(hull);
    let root = Cell {
        x: x_lo,
        y: y_lo,
        w: x_hi - x_lo,
        h: y_hi - y_lo,
    };
    let mut ambiguous = vec![root];
    let mut inside_area = 0.0_f64;
    let mut cells_classified: u64 = 0;
    loop {
        cells_classified += ambiguous.len() as u64;
        if cells_classified > CELL_BUDGET {
            return Err(HsizError::CellBudgetExceeded {
                cells: cells_classified,
                budget: CELL_BUDGET,
            });
        }
        let classes: Vec<CellClass> = if ambiguous.len() >= 256 {
            ambiguous.par_iter().map(|c| classify(hull, c)).collect()
        } else {
            ambiguous.iter().map(|c| classify(hull, c)).collect()
        };
        let inside: Vec<f64> = ambiguous
            .iter()
            .zip(&classes)
            .filter(|(_, cl)| matches!(cl, CellClass::Inside))
            .map(|(c, _)| c.w * c.h)
            .collect();
        inside_area += pairwise_sum(&inside);
        let still: Vec<Cell> = ambiguous
            .iter()
            .zip(&classes)
            .filter(|(_, cl)| matches!(cl, CellClass::Ambiguous))
            .map(|(c, _)| *c)
            .collect();
        let amb_areas: Vec<f64> = still.iter().map(|c| c.w * c.h).collect();
        let amb_area = pairwise_sum(&amb_areas);
        if amb_area < tol || still.is_empty() {
            return Ok(AreaResult {
                value: inside_area + 0.5 * amb_area,
                error_bound: 0.5 * amb_area,
                method: AreaMethod::Quadtree,
                cells_or_samples: cells_classified,
            });
        }
        let mut next = Vec::with_capacity(4 * still.len());
        for c in &still {
            let hw = 0.5 * c.w;
            let hh = 0.5 * c.h;
            next.push(Cell { x: c.x, y: c.y, w: hw, h: hh });
            next.push(Cell { x: c.x + hw, y: c.y, w: hw, h: hh });
            next.push(Cell { x: c.x, y: c.y + hh, w: hw, h: hh });
            next.push(Cell { x: c.x + hw, y: c.y + hh, w: hw, h: hh });
        }
        ambiguous = next;
    }
}

/// Monte Carlo area over the bounding box; `error_bound` is 3 sigma.
pub fn hsiz_mc(hull: &Hull, n_samples: u64, seed: u64) -> AreaResult {
    assert!(n_samples >= 1, "hsiz_mc requires at least one sample");
    let (x_lo, x_hi, y_lo, y_hi) = tangent_union_box(hull);
    let (w, h) = (x_hi - x_lo, y_hi - y_lo);
    let box_area = w * h;
    let agg = run_paths(n_samples, seed, |rng| {
        let u = x_lo + w * rng.gen::<f64>();
        let v = y_lo + h * rng.gen::<f64>();
        let hit = hull.tangent_excess(Point::new(u, v)) > 0.0;
        PathOutcome::Value(if hit { 1.0 } else { 0.0 })
    });
    AreaResult {
        value: box_area * agg.mean(),
        error_bound: 3.0 * box_area * agg.std_error(),
        method: AreaMethod::Mc,
        cells_or_samples: n_samples,
    }
}
