//! Slit maps, the zipper for curve hulls, and the Loewner flow.
//!
//! The elementary map removes a vertical slit `{u + iy : 0 < y <= h}`:
//! `g(z) = u + (z - u) sqrt(1 + h^2/(z - u)^2)`, the unique branch with
//! `g(z) ~ z` at infinity. A discretized curve is peeled by a composition of
//! such maps, refined until each sub-arc's image chord is nearly vertical;
//! the capacity increments `h^2/2` add up along the composition and the slit
//! feet sample the driving function.

use super::{CapEstimate, CapacityError, DrivingFunction, Method};
use crate::hull::{slit_points, Hull, Point, Primitive, SLIT_THICKNESS};
use num_complex::Complex64;

/// Image of `z` under the map removing the vertical slit at `x0` of height `h`.
pub fn slit_map_apply(z: Point, x0: f64, h: f64) -> Result<Point, CapacityError> {
    if !(h > 0.0) || !h.is_finite() || !x0.is_finite() {
        return Err(CapacityError::InvalidParameter(
            "slit map needs finite x0 and h > 0".into(),
        ));
    }
    if !z.is_finite() {
        return Err(CapacityError::InvalidParameter("point must be finite".into()));
    }
    if (z.x - x0).abs() <= SLIT_THICKNESS && z.y >= 0.0 && z.y <= h {
        return Err(CapacityError::PointOnSlit);
    }
    let w = apply_vslit_map(Complex64::new(z.x, z.y), x0, h);
    Ok(Point::new(w.re, w.im))
}

/// Capacity removed by a vertical slit of height `h`.
pub fn slit_map_capacity(h: f64) -> f64 {
    0.5 * h * h
}

fn apply_vslit_map(z: Complex64, u: f64, h: f64) -> Complex64 {
    let zeta = z - u;
    // The form zeta * sqrt(1 + (h/zeta)^2) keeps the principal branch cut on
    // the slit and its mirror image only, and fixes g(z) ~ z at infinity.
    let q = Complex64::new(h, 0.0) / zeta;
    u + zeta * (Complex64::new(1.0, 0.0) + q * q).sqrt()
}

fn apply_composition(maps: &[(f64, f64)], z: Complex64) -> Complex64 {
    let mut w = z;
    for &(u, h) in maps {
        w = apply_vslit_map(w, u, h);
    }
    w
}

/// Zipper output: the capacity estimate and the sampled driving function.
#[derive(Clone, Debug)]
pub struct ZipperResult {
    pub estimate: CapEstimate,
    pub driving: DrivingFunction,
}

const MAX_SUBDIVISION_DEPTH: u32 = 48;

/// Cap on elementary maps; point evaluation is linear in the composition
/// length, so runaway refinement would go quadratic in cost.
const MAX_MAPS: usize = 150_000;

struct ZipperState {
    maps: Vec<(f64, f64)>,
    total: f64,
    bias: f64,
    tip: f64,
    times: Vec<f64>,
    values: Vec<f64>,
    dev_threshold: f64,
    height_floor: f64,
}

impl ZipperState {
    fn peel(&mut self, a: Point, b: Point, depth: u32) -> Result<(), CapacityError> {
        let w = apply_composition(&self.maps, Complex64::new(b.x, b.y));
        if w.im <= self.height_floor {
            // Image landed on the axis: nothing left to peel on this arc.
            return Ok(());
        }
        let dev = (w.re - self.tip).abs() / w.im;
        if dev > self.dev_threshold && depth < MAX_SUBDIVISION_DEPTH {
            let mid = Point::new(0.5 * (a.x + b.x), 0.5 * (a.y + b.y));
            self.peel(a, mid, depth + 1)?;
            return self.peel(mid, b, depth + 1);
        }
        if self.maps.len() >= MAX_MAPS {
            return Err(CapacityError::InvalidParameter(format!(
                "zipper refinement exceeded {MAX_MAPS} elementary maps; relax tol"
            )));
        }
        let h = w.im;
        let dcap = 0.5 * h * h;
        self.maps.push((w.re, h));
        self.total += dcap;
        // Per-step capacity error is second order in the chord tilt (mirror
        // symmetry kills the linear term for a straight tilted slit), which is
        // why the refinement threshold scales with sqrt(tol): the per-step
        // allowance 4 dev^2 <= tol then sums to about tol times the capacity.
        self.bias += dcap * (4.0 * dev * dev).min(1.0);
        self.tip = w.re;
        self.times.push(0.5 * self.total);
        self.values.push(self.tip);
        Ok(())
    }
}

/// Capacity of a simple grounded curve by peeling it with slit maps.
///
/// The hull must consist of a single `Slit` (or `VSlit`) primitive. Sub-arcs
/// are refined until the image chord tilt is below `sqrt(tol)/2`, so the
/// reported `bias_bound` stays below `tol` times the capacity for curves of
/// moderate length. The driving function is emitted as a by-product.
pub fn hcap_zipper(hull: &Hull, tol: f64) -> Result<ZipperResult, CapacityError> {
    if !(tol > 0.0) {
        return Err(CapacityError::InvalidParameter("tol must be positive".into()));
    }
    if hull.primitives().len() != 1 {
        return Err(CapacityError::NotACurve);
    }
    let pts = match &hull.primitives()[0] {
        Primitive::Slit { foot, vertices } => slit_points(*foot, vertices),
        Primitive::VSlit { x0, h } => vec![Point::new(*x0, 0.0), Point::new(*x0, *h)],
        _ => return Err(CapacityError::NotACurve),
    };
    let scale = hull.sup_im();
    let mut state = ZipperState {
        maps: Vec::new(),
        total: 0.0,
        bias: 0.0,
        tip: pts[0].x,
        times: vec![0.0],
        values: vec![pts[0].x],
        dev_threshold: 0.5 * tol.sqrt(),
        height_floor: 1e-14 * scale,
    };
    for k in 1..pts.len() {
        state.peel(pts[k - 1], pts[k], 0)?;
    }
    if state.times.len() < 2 {
        return Err(CapacityError::InvalidParameter(
            "curve produced no capacity increments".into(),
        ));
    }
    let driving = DrivingFunction::new(state.times, state.values)?;
    Ok(ZipperResult {
        estimate: CapEstimate {
            value: state.total,
            std_error: 0.0,
            bias_bound: state.bias,
            n_paths: 0,
            seed: 0,
            method: Method::Zipper,
        },
        driving,
    })
}

/// Result of integrating the Loewner equation for one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EvolveOutcome {
    /// `g_T(z)` for a point that survives to time `T`.
    Evolved(Point),
    /// The point was absorbed: `|g_t - U_t|` fell below the cutoff `10 sqrt(dt)`.
    Swallowed { t: f64, last: Point },
}

/// Integrates `dg/dt = 2 / (g - U_t)`, `g_0 = z`, to `min(T, swallowing time)`.
///
/// Explicit midpoint with steps clamped so one step moves `g` by at most a
/// quarter of the current gap; integration error is `O(dt)` against the
/// piecewise-linear driving.
pub fn loewner_evolve(
    driving: &DrivingFunction,
    z: Point,
    t_end: f64,
    dt: f64,
) -> Result<EvolveOutcome, CapacityError> {
    if !(z.y > 0.0) {
        return Err(CapacityError::InvalidParameter(
            "z must lie in the open upper half plane".into(),
        ));
    }
    if !(dt > 0.0) {
        return Err(CapacityError::InvalidParameter("dt must be positive".into()));
    }
    if !(t_end >= 0.0 && t_end <= driving.end_time() * (1.0 + 1e-12)) {
        return Err(CapacityError::InvalidParameter(format!(
            "T = {} outside the driving range [0, {}]",
            t_end,
            driving.end_time()
        )));
    }
    let cutoff = 10.0 * dt.sqrt();
    let mut g = Complex64::new(z.x, z.y);
    let mut t = 0.0_f64;
    let max_iters: u64 = ((t_end / dt).ceil() as u64).saturating_mul(8).max(1024);
    for _ in 0..max_iters {
        let u = driving.value_at(t);
        let gap = g - u;
        if gap.norm() < cutoff {
            return Ok(EvolveOutcome::Swallowed {
                t,
                last: Point::new(g.re, g.im),
            });
        }
        if t >= t_end * (1.0 - 1e-15) - 1e-300 {
            return Ok(EvolveOutcome::Evolved(Point::new(g.re, g.im)));
        }
        let dt_eff = dt.min(t_end - t).min(gap.norm_sqr() / 8.0);
        let k1 = 2.0 / gap;
        let gm = g + 0.5 * dt_eff * k1;
        let um = driving.value_at(t + 0.5 * dt_eff);
        let gap_m = gm - um;
        if gap_m.norm() < 0.5 * cutoff {
            return Ok(EvolveOutcome::Swallowed {
                t: t + 0.5 * dt_eff,
                last: Point::new(gm.re, gm.im),
            });
        }
        g += dt_eff * (2.0 / gap_m);
        t += dt_eff;
    }
    // Step clamping keeps dt_eff >= dt while the gap stays above the cutoff,
    // so running out of iterations indicates a parameter pathology.
    Err(CapacityError::InvalidParameter(
        "loewner_evolve failed to reach T within the iteration budget".into(),
    ))
}
