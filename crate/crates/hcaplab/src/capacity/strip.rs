//! Strip exit probability and the covering-bound constants.
//!
//! `sin(theta z)` maps the half-strip `(-2c, 2c) x (0, inf)` onto the half
//! plane sending the base to `[-1, 1]`, which gives the exit probability
//! through the base from height 1 in closed form. The constant
//! `rho_c = (2 sqrt 2 / pi) arctan(e^{-theta})`, `theta = pi/(4c)`, is the
//! capacity gain factor of the top covering rectangle.

use super::CapacityError;
use crate::rng::{run_paths, PathOutcome};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

use super::wos::{MAX_ABORT_FRACTION, STEP_CAP};

/// Constants attached to a covering parameter `c`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BoundConstants {
    pub c: f64,
    pub theta: f64,
    pub rho: f64,
    pub exit_prob: f64,
}

/// `rho_c` and the strip exit probability for parameter `c > 0`.
///
/// The identity `exit_prob = sqrt(2) rho` holds to machine precision.
pub fn bound_constants(c: f64) -> BoundConstants {
    assert!(c > 0.0, "bound_constants requires c > 0");
    let theta = PI / (4.0 * c);
    let a = (-theta).exp().atan();
    BoundConstants {
        c,
        theta,
        rho: (2.0 * 2f64.sqrt() / PI) * a,
        exit_prob: (4.0 / PI) * a,
    }
}

/// Analytic probability that Brownian motion from `(0, 1)` leaves the strip
/// `(-2c, 2c) x (0, inf)` through its base.
pub fn strip_exit_prob(c: f64) -> f64 {
    bound_constants(c).exit_prob
}

/// Monte Carlo estimate with its standard error.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ProbEstimate {
    pub value: f64,
    pub std_error: f64,
    pub n_paths: u64,
    pub seed: u64,
}

/// Walk-on-spheres estimate of the base exit probability of the strip.
pub fn strip_exit_prob_mc(
    c: f64,
    n_paths: u64,
    eps: f64,
    seed: u64,
) -> Result<ProbEstimate, CapacityError> {
    if !(c > 0.0) {
        return Err(CapacityError::InvalidParameter("c must be positive".into()));
    }
    if !(eps > 0.0) {
        return Err(CapacityError::InvalidParameter("eps must be positive".into()));
    }
    if n_paths == 0 {
        return Err(CapacityError::InvalidParameter(
            "n_paths must be at least 1".into(),
        ));
    }
    let half_width = 2.0 * c;
    let agg = run_paths(n_paths, seed, |rng| {
        let mut x = 0.0_f64;
        let mut y = 1.0_f64;
        for _ in 0..STEP_CAP {
            let d_side = half_width - x.abs();
            let d = y.min(d_side);
            if d < eps {
                return PathOutcome::Value(if y <= d_side { 1.0 } else { 0.0 });
            }
            let theta = TAU * rng.gen::<f64>();
            x += d * theta.cos();
            y += d * theta.sin();
        }
        PathOutcome::Aborted
    });
    let fraction = agg.abort_fraction();
    if fraction > MAX_ABORT_FRACTION {
        return Err(CapacityError::TooManyAborts { fraction });
    }
    Ok(ProbEstimate {
        value: agg.mean(),
        std_error: agg.std_error(),
        n_paths,
        seed,
    })
}
