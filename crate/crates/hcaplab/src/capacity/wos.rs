//! Walk-on-spheres estimators for the Brownian definitions of capacity.
//!
//! `hcap_wos` reads the limit definition `y E^{iy}[Im B_tau]` at a finite start
//! height; `hcap_integral` reads the line-integral definition
//! `(1/pi) int E^{x+iy}[Im B_tau] dx` over a finite window. Both walk the same
//! sphere rule: jump to a uniform point on the largest disk centered at the
//! current point that avoids both the hull and the real axis.

use super::{CapEstimate, CapacityError, Method};
use crate::hull::{Hull, Point};
use crate::rng::{run_paths, Aggregate, PathOutcome};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

/// Per-path step cap; aborted paths are surfaced, not hidden.
pub const STEP_CAP: u32 = 1_000_000;

/// Maximum tolerated fraction of aborted paths.
pub const MAX_ABORT_FRACTION: f64 = 1e-3;

#[derive(Clone, Copy, Debug)]
pub struct WosParams {
    pub n_paths: u64,
    pub y_start: f64,
    pub eps: f64,
    pub seed: u64,
}

impl WosParams {
    /// Defaults for a hull: start at `max(4 sup_im, 4 L)` where `L` is the
    /// moment-support half-width used by the truncation envelope, stop within
    /// `1e-4 sup_im` of the boundary.
    pub fn for_hull(hull: &Hull, n_paths: u64, seed: u64) -> WosParams {
        let s = hull.sup_im();
        WosParams {
            n_paths,
            y_start: (4.0 * s).max(4.0 * moment_half_width(hull)),
            eps: 1e-4 * s,
            seed,
        }
    }
}

/// One walk from `start` until within `eps` of the axis or of the hull.
/// Returns the height at the stop, or `None` when the step cap is hit.
fn walk(hull: &Hull, start: Point, eps: f64, rng: &mut ChaCha8Rng) -> Option<f64> {
    let mut p = start;
    for _ in 0..STEP_CAP {
        if p.y < eps {
            return Some(p.y);
        }
        let d = hull.dist(p);
        if d < eps {
            return Some(p.y);
        }
        let r = p.y.min(d);
        let theta = TAU * rng.gen::<f64>();
        p.x += r * theta.cos();
        p.y += r * theta.sin();
    }
    None
}

/// Half-width of the interval carrying the moments of `g_A(z) - z`, measured
/// from the start abscissa 0: hull footprint plus a `2 sup_im` pad.
fn moment_half_width(hull: &Hull) -> f64 {
    let (lo, hi) = hull.x_extent();
    let s = hull.sup_im();
    (lo - 2.0 * s).abs().max((hi + 2.0 * s).abs())
}

/// Truncation envelope for reading the limit definition at finite `y_start`.
///
/// `g_A(z) - z` has a positive-measure representation with mass `hcap` and
/// real support of half-width `L`, so the error of `y E[Im B]` is bounded by
/// `hcap * q^2 / (1 - q^2)` with `q = L / y_start`. `hcap` is replaced by the
/// smaller of the enclosing half-disk capacity and the measured value plus
/// three standard errors.
fn truncation_envelope(hull: &Hull, y_start: f64, value: f64, sigma: f64) -> f64 {
    let (_, radius) = hull.enclosing_half_disk();
    let hcap_ref = (radius * radius).min((value + 3.0 * sigma).max(0.0));
    let q = moment_half_width(hull) / y_start;
    if q >= 0.95 {
        return hcap_ref;
    }
    hcap_ref * q * q / (1.0 - q * q)
}

fn check_aborts(agg: &Aggregate) -> Result<(), CapacityError> {
    let fraction = agg.abort_fraction();
    if fraction > MAX_ABORT_FRACTION {
        return Err(CapacityError::TooManyAborts { fraction });
    }
    Ok(())
}

/// Capacity from the limit definition `hcap(A) = lim_y y E^{iy}[Im B_tau]`.
///
/// Each path starts at `(0, y_start)`; the first move samples the exact
/// hitting point on the line just above the hull (Cauchy horizontal law), so
/// the empty region above the hull costs nothing. Below that line the walk
/// uses sphere jumps of radius `min(y, dist to hull)`.
pub fn hcap_wos(hull: &Hull, params: &WosParams) -> Result<CapEstimate, CapacityError> {
    let s = hull.sup_im();
    if !(params.y_start >= 4.0 * s) {
        return Err(CapacityError::InvalidParameter(format!(
            "y_start = {} must be at least 4 sup_im = {}",
            params.y_start,
            4.0 * s
        )));
    }
    if !(params.eps > 0.0) {
        return Err(CapacityError::InvalidParameter("eps must be positive".into()));
    }
    if params.n_paths == 0 {
        return Err(CapacityError::InvalidParameter(
            "n_paths must be at least 1".into(),
        ));
    }
    let b = s * (1.0 + 1e-6);
    let cauchy_scale = params.y_start - b;
    let eps = params.eps;
    let agg = run_paths(params.n_paths, params.seed, |rng| {
        // Exact first passage to the line {y = b}: horizontal displacement is
        // Cauchy with scale (y_start - b).
        let u: f64 = rng.gen();
        let x = cauchy_scale * (PI * (u - 0.5)).tan();
        match walk(hull, Point::new(x, b), eps, rng) {
            Some(h) => PathOutcome::Value(h),
            None => PathOutcome::Aborted,
        }
    });
    check_aborts(&agg)?;
    let value = params.y_start * agg.mean();
    let std_error = params.y_start * agg.std_error();
    let completed_frac = agg.completed as f64 / agg.n.max(1) as f64;
    let bias_bound = eps * params.y_start * completed_frac
        + truncation_envelope(hull, params.y_start, value, std_error);
    Ok(CapEstimate {
        value,
        std_error,
        bias_bound,
        n_paths: params.n_paths,
        seed: params.seed,
        method: Method::WosLimit,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct IntegralParams {
    pub n_paths: u64,
    pub y0: f64,
    pub window: (f64, f64),
    pub eps: f64,
    pub seed: u64,
}

/// Capacity from `hcap(A) = (1/pi) int E^{x+iy0}[Im B_tau] dx`.
///
/// Start points are uniform on the window; the truncated tail is bounded
/// through the enclosing half-disk, whose expected height reads
/// `R^2 y0 / |z - x_c|^2`, and is added to the bias.
pub fn hcap_integral(hull: &Hull, params: &IntegralParams) -> Result<CapEstimate, CapacityError> {
    let s = hull.sup_im();
    let (w_lo, w_hi) = params.window;
    if !(params.y0 >= s) {
        return Err(CapacityError::InvalidParameter(format!(
            "y0 = {} must be at least sup_im = {}",
            params.y0, s
        )));
    }
    let (x_lo, x_hi) = hull.x_extent();
    let margin = 20.0 * params.y0;
    if !(w_lo <= x_lo - margin && w_hi >= x_hi + margin) {
        return Err(CapacityError::InvalidParameter(format!(
            "window ({w_lo}, {w_hi}) must cover the hull extent ({x_lo}, {x_hi}) with margin >= 20 y0"
        )));
    }
    if !(params.eps > 0.0) {
        return Err(CapacityError::InvalidParameter("eps must be positive".into()));
    }
    if params.n_paths == 0 {
        return Err(CapacityError::InvalidParameter(
            "n_paths must be at least 1".into(),
        ));
    }
    let width = w_hi - w_lo;
    let y0 = params.y0;
    let eps = params.eps;
    let agg = run_paths(params.n_paths, params.seed, |rng| {
        let x = w_lo + width * rng.gen::<f64>();
        match walk(hull, Point::new(x, y0), eps, rng) {
            Some(h) => PathOutcome::Value(h),
            None => PathOutcome::Aborted,
        }
    });
    check_aborts(&agg)?;
    let scale = width / PI;
    let value = scale * agg.mean();
    let std_error = scale * agg.std_error();
    let (xc, radius) = hull.enclosing_half_disk();
    let tail = (radius * radius / PI)
        * ((PI / 2.0 - ((w_hi - xc) / y0).atan()) + (PI / 2.0 - ((xc - w_lo) / y0).atan()));
    let completed_frac = agg.completed as f64 / agg.n.max(1) as f64;
    let bias_bound = scale * eps * completed_frac + tail;
    Ok(CapEstimate {
        value,
        std_error,
        bias_bound,
        n_paths: params.n_paths,
        seed: params.seed,
        method: Method::WosIntegral,
    })
}
