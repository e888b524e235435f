//! Half-plane capacity estimators.
//!
//! Three routes to `hcap(A)`: a small exact catalog (vertical slits and
//! half-disks), walk-on-spheres Monte Carlo from the Brownian definitions, and
//! a slit-map zipper for curve hulls. The strip-exit constants used by the
//! covering bounds live in [`strip`].

mod strip;
mod wos;
mod zipper;

pub use strip::{bound_constants, strip_exit_prob, strip_exit_prob_mc, BoundConstants, ProbEstimate};
pub use wos::{hcap_integral, hcap_wos, IntegralParams, WosParams};
pub use zipper::{
    hcap_zipper, loewner_evolve, slit_map_apply, slit_map_capacity, EvolveOutcome, ZipperResult,
};

use crate::hull::{Hull, Primitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// How a capacity value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    WosLimit,
    WosIntegral,
    Zipper,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::WosLimit => "wos_limit",
            Method::WosIntegral => "wos_integral",
            Method::Zipper => "zipper",
        }
    }
}

/// A capacity value with its statistical error and bias envelope.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CapEstimate {
    /// Capacity (units of length squared).
    pub value: f64,
    /// One standard error of the Monte Carlo mean (0 for exact/zipper).
    pub std_error: f64,
    /// Deterministic bias envelope: stopping tolerance, start-height
    /// truncation, window truncation or refinement error, as applicable.
    pub bias_bound: f64,
    pub n_paths: u64,
    pub seed: u64,
    pub method: Method,
}

impl CapEstimate {
    pub fn exact(value: f64) -> CapEstimate {
        CapEstimate {
            value,
            std_error: 0.0,
            bias_bound: 0.0,
            n_paths: 0,
            seed: 0,
            method: Method::Exact,
        }
    }

    /// Half-width of the `3 sigma + bias` confidence interval.
    pub fn half_width(&self) -> f64 {
        3.0 * self.std_error + self.bias_bound
    }
}

#[derive(Debug, Error)]
pub enum CapacityError {
    #[error("no exact formula for this hull (catalog covers a single vertical slit or half-disk)")]
    NoExactFormula,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("aborted path fraction {fraction:.2e} exceeds 1e-3 (step cap reached)")]
    TooManyAborts { fraction: f64 },
    #[error("point lies on the slit")]
    PointOnSlit,
    #[error("zipper requires a hull with a single slit primitive")]
    NotACurve,
}

/// Piecewise-linear samples of the Loewner driving term `U_t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrivingFunction {
    times: Vec<f64>,
    values: Vec<f64>,
}

impl DrivingFunction {
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Result<DrivingFunction, CapacityError> {
        if times.len() != values.len() || times.len() < 2 {
            return Err(CapacityError::InvalidParameter(
                "driving function needs equally many times and values, at least two".into(),
            ));
        }
        if times[0] != 0.0 {
            return Err(CapacityError::InvalidParameter(
                "driving function must start at t = 0".into(),
            ));
        }
        for w in times.windows(2) {
            if !(w[1] > w[0]) {
                return Err(CapacityError::InvalidParameter(
                    "driving times must be strictly increasing".into(),
                ));
            }
        }
        if times.iter().chain(values.iter()).any(|x| !x.is_finite()) {
            return Err(CapacityError::InvalidParameter(
                "driving samples must be finite".into(),
            ));
        }
        Ok(DrivingFunction { times, values })
    }

    /// Constant driving `U = u0` on `[0, t_end]`.
    pub fn constant(u0: f64, t_end: f64) -> DrivingFunction {
        DrivingFunction::new(vec![0.0, t_end], vec![u0, u0]).expect("valid constant driving")
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn end_time(&self) -> f64 {
        *self.times.last().unwrap()
    }

    /// Linear interpolation of `U` at time `t` (clamped to the sample range).
    pub fn value_at(&self, t: f64) -> f64 {
        if t <= self.times[0] {
            return self.values[0];
        }
        if t >= self.end_time() {
            return *self.values.last().unwrap();
        }
        let idx = match self
            .times
            .binary_search_by(|probe| probe.partial_cmp(&t).unwrap())
        {
            Ok(i) => return self.values[i],
            Err(i) => i,
        };
        let (t0, t1) = (self.times[idx - 1], self.times[idx]);
        let (u0, u1) = (self.values[idx - 1], self.values[idx]);
        u0 + (u1 - u0) * (t - t0) / (t1 - t0)
    }
}

/// Exact catalog: `hcap` of a single vertical slit or half-disk.
///
/// A slit of height `h` has capacity `h^2/2`; a half-disk of radius `r` has
/// capacity `r^2` (the map `z + r^2/z` removes it). Translation leaves the
/// value unchanged.
pub fn hcap_exact(hull: &Hull) -> Result<CapEstimate, CapacityError> {
    if hull.primitives().len() != 1 {
        return Err(CapacityError::NoExactFormula);
    }
    match &hull.primitives()[0] {
        Primitive::VSlit { h, .. } => Ok(CapEstimate::exact(0.5 * h * h)),
        Primitive::HalfDisk { r, .. } => Ok(CapEstimate::exact(r * r)),
        _ => Err(CapacityError::NoExactFormula),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::Point;

    #[test]
    fn exact_catalog_values() {
        let slit = Hull::single(Primitive::VSlit { x0: 0.0, h: 1.0 });
        assert_eq!(hcap_exact(&slit).unwrap().value, 0.5);
        let hd = Hull::single(Primitive::HalfDisk {
            x0: 0.0,
            r: 2f64.sqrt(),
        });
        assert!((hcap_exact(&hd).unwrap().value - 2.0).abs() < 1e-15);
        let translated = Hull::single(Primitive::HalfDisk { x0: 3.0, r: 1.0 });
        assert_eq!(hcap_exact(&translated).unwrap().value, 1.0);
    }

    #[test]
    fn exact_catalog_rejects_other_hulls() {
        let rect = Hull::single(Primitive::Rect {
            x_lo: -2.0,
            x_hi: 2.0,
            h: 1.0,
        });
        assert!(matches!(
            hcap_exact(&rect),
            Err(CapacityError::NoExactFormula)
        ));
    }

    #[test]
    fn exact_scaling_law() {
        for r in [0.5, 2.0, 3.0] {
            let slit = Hull::single(Primitive::VSlit { x0: 1.0, h: 1.0 });
            let a = hcap_exact(&slit).unwrap().value;
            let b = hcap_exact(&slit.scale(r)).unwrap().value;
            assert!((b - r * r * a).abs() < 1e-12);
            let hd = Hull::single(Primitive::HalfDisk { x0: -1.0, r: 1.0 });
            let a = hcap_exact(&hd).unwrap().value;
            let b = hcap_exact(&hd.scale(r)).unwrap().value;
            assert!((b - r * r * a).abs() < 1e-12);
        }
    }

    #[test]
    fn driving_function_interpolates() {
        let d = DrivingFunction::new(vec![0.0, 1.0, 2.0], vec![0.0, 2.0, 0.0]).unwrap();
        assert_eq!(d.value_at(0.5), 1.0);
        assert_eq!(d.value_at(1.0), 2.0);
        assert_eq!(d.value_at(1.5), 1.0);
        assert_eq!(d.value_at(-1.0), 0.0);
        assert_eq!(d.value_at(5.0), 0.0);
        assert!(DrivingFunction::new(vec![0.0, 0.0], vec![0.0, 1.0]).is_err());
        assert!(DrivingFunction::new(vec![0.0], vec![0.0]).is_err());
    }

    #[test]
    fn cap_estimate_interval() {
        let e = CapEstimate {
            value: 1.0,
            std_error: 0.01,
            bias_bound: 0.005,
            n_paths: 10,
            seed: 1,
            method: Method::WosLimit,
        };
        assert!((e.half_width() - 0.035).abs() < 1e-15);
        let _ = Point::new(0.0, 1.0);
    }
}
