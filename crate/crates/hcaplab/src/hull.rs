//! Geometric representation of compact hulls in the upper half plane.
//!
//! A [`Hull`] is a union of grounded primitives: rectangles `(x_lo,x_hi) x (0,h]`,
//! half-disks `{|z - x0| <= r, Im z > 0}`, vertical slits `{x0 + iy : 0 < y <= h}`
//! and simple polyline slits rooted on the real axis. Every primitive touches the
//! real line, which keeps the complement of the union simply connected.
//!
//! All operations are pure; hulls are immutable after construction and safe to
//! share across threads.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Membership thickness for polyline slits. Slits have zero area; estimators
/// treat them through `dist`, not containment, so this only fixes the
/// `contains` predicate.
pub const SLIT_THICKNESS: f64 = 1e-9;

/// A point of the closed upper half plane, `x + iy`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist_to(&self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// One grounded component of a hull.
#[derive(Clone, Debug, PartialEq)]
pub enum Primitive {
    /// `(x_lo, x_hi) x (0, h]`: open vertical sides, closed top.
    Rect { x_lo: f64, x_hi: f64, h: f64 },
    /// `{z : |z - x0| <= r, Im z > 0}`.
    HalfDisk { x0: f64, r: f64 },
    /// Simple polyline from `(foot, 0)` through `vertices`, each above the axis.
    Slit { foot: f64, vertices: Vec<Point> },
    /// `{x0 + iy : 0 < y <= h}`.
    VSlit { x0: f64, h: f64 },
}

#[derive(Debug, Error, PartialEq)]
pub enum HullError {
    #[error("hull must contain at least one primitive")]
    Empty,
    #[error("primitive {index}: {reason}")]
    BadPrimitive { index: usize, reason: String },
    #[error("primitive {index}: slit polyline self-intersects")]
    SelfIntersecting { index: usize },
}

impl Primitive {
    fn validate(&self, index: usize) -> Result<(), HullError> {
        let bad = |reason: &str| {
            Err(HullError::BadPrimitive {
                index,
                reason: reason.to_string(),
            })
        };
        match self {
            Primitive::Rect { x_lo, x_hi, h } => {
                if !(x_lo.is_finite() && x_hi.is_finite() && h.is_finite()) {
                    return bad("non-finite field");
                }
                if x_lo >= x_hi {
                    return bad("requires x_lo < x_hi");
                }
                if *h <= 0.0 {
                    return bad("requires h > 0");
                }
            }
            Primitive::HalfDisk { x0, r } => {
                if !(x0.is_finite() && r.is_finite()) {
                    return bad("non-finite field");
                }
                if *r <= 0.0 {
                    return bad("requires r > 0");
                }
            }
            Primitive::VSlit { x0, h } => {
                if !(x0.is_finite() && h.is_finite()) {
                    return bad("non-finite field");
                }
                if *h <= 0.0 {
                    return bad("requires h > 0");
                }
            }
            Primitive::Slit { foot, vertices } => {
                if !foot.is_finite() {
                    return bad("non-finite foot");
                }
                if vertices.is_empty() {
                    return bad("slit needs at least one vertex");
                }
                for v in vertices {
                    if !v.is_finite() {
                        return bad("non-finite vertex");
                    }
                    if v.y <= 0.0 {
                        return bad("slit vertices must satisfy y > 0");
                    }
                }
                let pts = slit_points(*foot, vertices);
                for w in pts.windows(2) {
                    if w[0].dist_to(w[1]) == 0.0 {
                        return bad("zero-length slit segment");
                    }
                }
                if polyline_self_intersects(&pts) {
                    return Err(HullError::SelfIntersecting { index });
                }
            }
        }
        Ok(())
    }

    /// Largest height attained by the primitive.
    pub fn sup_im(&self) -> f64 {
        match self {
            Primitive::Rect { h, .. } => *h,
            Primitive::HalfDisk { r, .. } => *r,
            Primitive::VSlit { h, .. } => *h,
            Primitive::Slit { vertices, .. } => {
                vertices.iter().map(|v| v.y).fold(0.0, f64::max)
            }
        }
    }

    /// Horizontal extent `[x_min, x_max]` of the closure.
    pub fn x_extent(&self) -> (f64, f64) {
        match self {
            Primitive::Rect { x_lo, x_hi, .. } => (*x_lo, *x_hi),
            Primitive::HalfDisk { x0, r } => (x0 - r, x0 + r),
            Primitive::VSlit { x0, .. } => (*x0, *x0),
            Primitive::Slit { foot, vertices } => {
                let mut lo = *foot;
                let mut hi = *foot;
                for v in vertices {
                    lo = lo.min(v.x);
                    hi = hi.max(v.x);
                }
                (lo, hi)
            }
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        if p.y <= 0.0 {
            return false;
        }
        match self {
            Primitive::Rect { x_lo, x_hi, h } => {
                p.x > *x_lo && p.x < *x_hi && p.y <= *h
            }
            Primitive::HalfDisk { x0, r } => (p.x - x0).hypot(p.y) <= *r,
            Primitive::VSlit { x0, h } => (p.x - x0).abs() <= SLIT_THICKNESS && p.y <= *h,
            Primitive::Slit { foot, vertices } => {
                let pts = slit_points(*foot, vertices);
                pts.windows(2)
                    .any(|w| dist_point_segment(p, w[0], w[1]) <= SLIT_THICKNESS)
            }
        }
    }

    /// Euclidean distance from `p` to the closure of the primitive.
    pub fn dist(&self, p: Point) -> f64 {
        match self {
            Primitive::Rect { x_lo, x_hi, h } => {
                let dx = (x_lo - p.x).max(p.x - x_hi).max(0.0);
                let dy = (-p.y).max(p.y - h).max(0.0);
                dx.hypot(dy)
            }
            Primitive::HalfDisk { x0, r } => {
                if p.y >= 0.0 {
                    ((p.x - x0).hypot(p.y) - r).max(0.0)
                } else {
                    let dx = ((p.x - x0).abs() - r).max(0.0);
                    dx.hypot(p.y)
                }
            }
            Primitive::VSlit { x0, h } => {
                dist_point_segment(p, Point::new(*x0, 0.0), Point::new(*x0, *h))
            }
            Primitive::Slit { foot, vertices } => {
                let pts = slit_points(*foot, vertices);
                pts.windows(2)
                    .map(|w| dist_point_segment(p, w[0], w[1]))
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }

    pub fn scale(&self, r: f64) -> Primitive {
        match self {
            Primitive::Rect { x_lo, x_hi, h } => Primitive::Rect {
                x_lo: x_lo * r,
                x_hi: x_hi * r,
                h: h * r,
            },
            Primitive::HalfDisk { x0, r: rad } => Primitive::HalfDisk {
                x0: x0 * r,
                r: rad * r,
            },
            Primitive::VSlit { x0, h } => Primitive::VSlit {
                x0: x0 * r,
                h: h * r,
            },
            Primitive::Slit { foot, vertices } => Primitive::Slit {
                foot: foot * r,
                vertices: vertices
                    .iter()
                    .map(|v| Point::new(v.x * r, v.y * r))
                    .collect(),
            },
        }
    }

    pub fn translate(&self, dx: f64) -> Primitive {
        match self {
            Primitive::Rect { x_lo, x_hi, h } => Primitive::Rect {
                x_lo: x_lo + dx,
                x_hi: x_hi + dx,
                h: *h,
            },
            Primitive::HalfDisk { x0, r } => Primitive::HalfDisk { x0: x0 + dx, r: *r },
            Primitive::VSlit { x0, h } => Primitive::VSlit { x0: x0 + dx, h: *h },
            Primitive::Slit { foot, vertices } => Primitive::Slit {
                foot: foot + dx,
                vertices: vertices.iter().map(|v| Point::new(v.x + dx, v.y)).collect(),
            },
        }
    }
}

/// Full polyline of a slit including the grounding point `(foot, 0)`.
pub fn slit_points(foot: f64, vertices: &[Point]) -> Vec<Point> {
    let mut pts = Vec::with_capacity(vertices.len() + 1);
    pts.push(Point::new(foot, 0.0));
    pts.extend_from_slice(vertices);
    pts
}

fn dist_point_segment(p: Point, a: Point, b: Point) -> f64 {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return p.dist_to(a);
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    p.dist_to(Point::new(a.x + t * dx, a.y + t * dy))
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Full intersection test: proper crossings, vertex touches and collinear
/// overlaps all count. Only called at construction.
fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}

fn polyline_self_intersects(pts: &[Point]) -> bool {
    for i in 0..pts.len().saturating_sub(1) {
        for j in (i + 2)..pts.len().saturating_sub(1) {
            if segments_intersect(pts[i], pts[i + 1], pts[j], pts[j + 1]) {
                return true;
            }
        }
    }
    false
}

/// A compact hull: a nonempty union of grounded primitives.
///
/// Overlapping primitives are allowed; every operation is a sup/min reduction
/// over the primitive list, so overlap is harmless.
#[derive(Clone, Debug, PartialEq)]
pub struct Hull {
    primitives: Vec<Primitive>,
}

impl Hull {
    pub fn new(primitives: Vec<Primitive>) -> Result<Hull, HullError> {
        if primitives.is_empty() {
            return Err(HullError::Empty);
        }
        for (i, p) in primitives.iter().enumerate() {
            p.validate(i)?;
        }
        Ok(Hull { primitives })
    }

    /// Convenience constructor for a hull with a single primitive.
    pub fn single(p: Primitive) -> Hull {
        Hull::new(vec![p]).expect("primitive must be valid")
    }

    pub fn primitives(&self) -> &[Primitive] {
        &self.primitives
    }

    /// `Im[A] = sup { Im z : z in A }`.
    pub fn sup_im(&self) -> f64 {
        self.primitives
            .iter()
            .map(Primitive::sup_im)
            .fold(0.0, f64::max)
    }

    /// Horizontal extent of the hull's closure.
    pub fn x_extent(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in &self.primitives {
            let (a, b) = p.x_extent();
            lo = lo.min(a);
            hi = hi.max(b);
        }
        (lo, hi)
    }

    /// Radius of the smallest centered half-disk `{|z - x_c| <= R}` containing
    /// the hull, together with its center. Used for truncation-bias envelopes.
    pub fn enclosing_half_disk(&self) -> (f64, f64) {
        let (lo, hi) = self.x_extent();
        let xc = 0.5 * (lo + hi);
        let half_w = 0.5 * (hi - lo);
        let radius = half_w.hypot(self.sup_im());
        (xc, radius)
    }

    pub fn contains(&self, p: Point) -> bool {
        self.primitives.iter().any(|prim| prim.contains(p))
    }

    /// Distance from `p` to the hull (0 when contained).
    pub fn dist(&self, p: Point) -> f64 {
        self.primitives
            .iter()
            .map(|prim| prim.dist(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// The scaled hull `rA`.
    pub fn scale(&self, r: f64) -> Hull {
        assert!(r > 0.0, "scale factor must be positive");
        Hull {
            primitives: self.primitives.iter().map(|p| p.scale(r)).collect(),
        }
    }

    /// The translated hull `A + dx`.
    pub fn translate(&self, dx: f64) -> Hull {
        Hull {
            primitives: self.primitives.iter().map(|p| p.translate(dx)).collect(),
        }
    }

    /// Tangent-disk excess `F(w) = sup_{x+iy in A} (y^2 - |w - z|^2)`.
    ///
    /// `w` lies in the union of disks `B(x+iy, y)` over hull points iff
    /// `F(w) > 0`. Writing `w = u + iv`, the objective splits as
    /// `2yv - (x-u)^2 - v^2`, which each primitive maximizes in closed form.
    pub fn tangent_excess(&self, w: Point) -> f64 {
        let g = self
            .primitives
            .iter()
            .map(|prim| prim_sup_g(prim, w.x, w.y))
            .fold(f64::NEG_INFINITY, f64::max);
        g - w.y * w.y
    }

    /// Certified bounds `[F_lo, F_hi]` for `tangent_excess` over the closed box
    /// `[u_lo, u_hi] x [v_lo, v_hi]`: every `w` in the box satisfies
    /// `F_lo <= F(w) <= F_hi`.
    pub fn tangent_excess_box(&self, u_lo: f64, u_hi: f64, v_lo: f64, v_hi: f64) -> (f64, f64) {
        debug_assert!(u_lo <= u_hi && v_lo <= v_hi);
        let mut g_lo = f64::NEG_INFINITY;
        let mut g_hi = f64::NEG_INFINITY;
        for prim in &self.primitives {
            let (lo, hi) = prim_g_box(prim, u_lo, u_hi, v_lo, v_hi);
            g_lo = g_lo.max(lo);
            g_hi = g_hi.max(hi);
        }
        // v^2 over the box
        let vsq_hi = (v_lo * v_lo).max(v_hi * v_hi);
        let vsq_lo = if v_lo <= 0.0 && v_hi >= 0.0 {
            0.0
        } else {
            (v_lo * v_lo).min(v_hi * v_hi)
        };
        (g_lo - vsq_hi, g_hi - vsq_lo)
    }
}

/// `G(u, v) = sup_{x+iy in P} (2yv - (x-u)^2)` for a single primitive.
fn prim_sup_g(prim: &Primitive, u: f64, v: f64) -> f64 {
    match prim {
        Primitive::Rect { x_lo, x_hi, h } => {
            let dx = (x_lo - u).max(u - x_hi).max(0.0);
            rect_g_from_dx(dx, *h, v)
        }
        Primitive::VSlit { x0, h } => rect_g_from_dx((u - x0).abs(), *h, v),
        Primitive::HalfDisk { x0, r } => half_disk_g((u - x0).abs(), v, *r),
        Primitive::Slit { foot, vertices } => {
            let pts = slit_points(*foot, vertices);
            pts.windows(2)
                .map(|w| segment_sup_g(w[0], w[1], u, v))
                .fold(f64::NEG_INFINITY, f64::max)
        }
    }
}

/// `G` for a product set with horizontal distance `dx` and heights `(0, h]`.
fn rect_g_from_dx(dx: f64, h: f64, v: f64) -> f64 {
    let y_term = if v >= 0.0 { 2.0 * h * v } else { 0.0 };
    y_term - dx * dx
}

/// `G` over a half-disk of radius `r` centered on the axis, `au = |u - x0|`.
///
/// Reduces to the concave 1-d problem
/// `max_{y in [0, r]} 2yv - max(au - sqrt(r^2 - y^2), 0)^2`;
/// the derivative changes sign once, located by bisection.
fn half_disk_g(au: f64, v: f64, r: f64) -> f64 {
    let mut best;
    let y_c; // top of the zero-penalty range of y
    if au <= r {
        y_c = (r * r - au * au).max(0.0).sqrt();
        best = if v >= 0.0 { 2.0 * y_c * v } else { 0.0 };
    } else {
        y_c = 0.0;
        let d0 = au - r;
        best = -d0 * d0;
    }
    let phi = |y: f64| {
        let w = (r * r - y * y).max(0.0).sqrt();
        let d = (au - w).max(0.0);
        2.0 * y * v - d * d
    };
    // Endpoint y = r (w = 0): value 2rv - au^2.
    best = best.max(2.0 * r * v - au * au);
    if au > 0.0 && v > 0.0 && y_c < r {
        // The derivative sign is that of s(y) = v*w - (au - w)*y on (y_c, r).
        let s = |y: f64| {
            let w = (r * r - y * y).max(0.0).sqrt();
            v * w - (au - w).max(0.0) * y
        };
        let mut lo = y_c;
        let mut hi = r;
        if s(lo) > 0.0 && s(hi) < 0.0 {
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if s(mid) > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            best = best.max(phi(0.5 * (lo + hi)));
        }
    }
    best
}

/// `G` restricted to one slit segment: concave quadratic in the parameter.
fn segment_sup_g(a: Point, b: Point, u: f64, v: f64) -> f64 {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let phi = |t: f64| {
        let x = a.x + t * dx;
        let y = a.y + t * dy;
        2.0 * y * v - (x - u) * (x - u)
    };
    let mut best = phi(0.0).max(phi(1.0));
    if dx != 0.0 {
        // phi(t) = 2v(a_y + t dy) - (a_x + t dx - u)^2; vertex of the parabola:
        let t_star = (v * dy - (a.x - u) * dx) / (dx * dx);
        if t_star > 0.0 && t_star < 1.0 {
            best = best.max(phi(t_star));
        }
    }
    best
}

/// Certified `[inf, sup]` of `G` over the box, per primitive.
fn prim_g_box(prim: &Primitive, u_lo: f64, u_hi: f64, v_lo: f64, v_hi: f64) -> (f64, f64) {
    match prim {
        Primitive::Rect { x_lo, x_hi, h } => {
            let dx_min = (x_lo - u_hi).max(u_lo - x_hi).max(0.0);
            let dx_max = dx_interval_max(*x_lo, *x_hi, u_lo, u_hi);
            let hi = rect_g_from_dx(dx_min, *h, v_hi);
            let lo = rect_g_from_dx(dx_max, *h, v_lo);
            (lo, hi)
        }
        Primitive::VSlit { x0, h } => {
            let dx_min = (x0 - u_hi).max(u_lo - x0).max(0.0);
            let dx_max = (u_hi - x0).abs().max((u_lo - x0).abs());
            let hi = rect_g_from_dx(dx_min, *h, v_hi);
            let lo = rect_g_from_dx(dx_max, *h, v_lo);
            (lo, hi)
        }
        Primitive::HalfDisk { x0, r } => {
            // G decreases in |u - x0| and increases in v.
            let au_min = (x0 - u_hi).max(u_lo - x0).max(0.0);
            let au_max = (u_hi - x0).abs().max((u_lo - x0).abs());
            let hi = half_disk_g(au_min, v_hi, *r) + 1e-12 * (1.0 + r * r + v_hi.abs() * r);
            let lo = half_disk_g(au_max, v_lo, *r);
            (lo, hi)
        }
        Primitive::Slit { foot, vertices } => {
            let pts = slit_points(*foot, vertices);
            let mut lo = f64::NEG_INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for w in pts.windows(2) {
                let (slo, shi) = segment_g_box(w[0], w[1], u_lo, u_hi, v_lo, v_hi);
                lo = lo.max(slo);
                hi = hi.max(shi);
            }
            (lo, hi)
        }
    }
}

/// Max over `u in [u_lo, u_hi]` of `dist(u, [x_lo, x_hi])` (convex, so at a corner).
fn dx_interval_max(x_lo: f64, x_hi: f64, u_lo: f64, u_hi: f64) -> f64 {
    let d = |u: f64| (x_lo - u).max(u - x_hi).max(0.0);
    d(u_lo).max(d(u_hi))
}

/// Certified `[inf, sup]` of `G` for one segment over the box.
///
/// `sup_W G = sup_t [2 y(t) v* - dmin_u(x(t))^2]` with `v* = v_hi` and `dmin_u`
/// the distance to the `u`-interval; `inf_W G >= sup_t [2 y(t) v_lo^- - dmax_u(x(t))^2]`
/// (the inner sup is a valid lower bound for the outer inf because `G >= ` each
/// candidate value at every `w`). Piecewise quadratic in `t`; maximized per piece.
fn segment_g_box(
    a: Point,
    b: Point,
    u_lo: f64,
    u_hi: f64,
    v_lo: f64,
    v_hi: f64,
) -> (f64, f64) {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let u_mid = 0.5 * (u_lo + u_hi);

    // Breakpoints in t where the active linear branch of the distance changes.
    let mut ts = vec![0.0, 1.0];
    if dx != 0.0 {
        for bp in [u_lo, u_hi, u_mid] {
            let t = (bp - a.x) / dx;
            if t > 0.0 && t < 1.0 {
                ts.push(t);
            }
        }
    }
    ts.sort_by(|p, q| p.partial_cmp(q).unwrap());

    // On a segment y is tied to t, so the candidate value is 2 y(t) v - du^2
    // with v at the favorable (sup) or adverse (inf) box corner; y >= 0 makes
    // v_hi favorable and v_lo adverse.
    let eval = |t: f64, worst: bool| -> f64 {
        let x = a.x + t * dx;
        let y = a.y + t * dy;
        let du = if worst {
            (x - u_lo).abs().max((x - u_hi).abs())
        } else {
            (u_lo - x).max(x - u_hi).max(0.0)
        };
        let v = if worst { v_lo } else { v_hi };
        2.0 * y * v - du * du
    };

    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::NEG_INFINITY;
    for w in ts.windows(2) {
        let (t0, t1) = (w[0], w[1]);
        for &worst in &[false, true] {
            let f0 = eval(t0, worst);
            let f1 = eval(t1, worst);
            let tm = 0.5 * (t0 + t1);
            let fm = eval(tm, worst);
            // Fit the quadratic through the three samples (the function is a
            // single quadratic on this piece) and include its interior vertex.
            let mut best = f0.max(f1);
            let denom = (t1 - t0) * (t1 - t0);
            if denom > 0.0 {
                // On this piece the function is one quadratic; recover its
                // curvature and slope from the three samples and include the
                // interior vertex when it is a maximum:
                // f(t) = fm + s (t - tm) + (a2/2)(t - tm)^2.
                let a2 = 2.0 * (f0 - 2.0 * fm + f1) / denom;
                if a2 < 0.0 {
                    let s = (f1 - f0) / (t1 - t0);
                    let t_v = tm - s / a2;
                    if t_v > t0 && t_v < t1 {
                        best = best.max(eval(t_v, worst));
                    }
                }
            }
            if worst {
                lo = lo.max(best);
            } else {
                hi = hi.max(best);
            }
        }
    }
    (lo, hi)
}

// ---------------------------------------------------------------------------
// Hull spec files
// ---------------------------------------------------------------------------

/// On-disk form of one primitive, `{"kind": "rect", ...}` etc.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PrimitiveSpec {
    Rect { x_lo: f64, x_hi: f64, h: f64 },
    Halfdisk { x0: f64, r: f64 },
    Vslit { x0: f64, h: f64 },
    Slit { foot: f64, vertices: Vec<[f64; 2]> },
}

/// On-disk form of a hull: `{"primitives": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HullSpec {
    pub primitives: Vec<PrimitiveSpec>,
}

#[derive(Debug, Error)]
pub enum HullFileError {
    #[error("hull file does not parse: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("hull file is invalid: {0}")]
    Invalid(#[from] HullError),
}

impl From<PrimitiveSpec> for Primitive {
    fn from(spec: PrimitiveSpec) -> Primitive {
        match spec {
            PrimitiveSpec::Rect { x_lo, x_hi, h } => Primitive::Rect { x_lo, x_hi, h },
            PrimitiveSpec::Halfdisk { x0, r } => Primitive::HalfDisk { x0, r },
            PrimitiveSpec::Vslit { x0, h } => Primitive::VSlit { x0, h },
            PrimitiveSpec::Slit { foot, vertices } => Primitive::Slit {
                foot,
                vertices: vertices.iter().map(|v| Point::new(v[0], v[1])).collect(),
            },
        }
    }
}

impl From<&Primitive> for PrimitiveSpec {
    fn from(p: &Primitive) -> PrimitiveSpec {
        match p {
            Primitive::Rect { x_lo, x_hi, h } => PrimitiveSpec::Rect {
                x_lo: *x_lo,
                x_hi: *x_hi,
                h: *h,
            },
            Primitive::HalfDisk { x0, r } => PrimitiveSpec::Halfdisk { x0: *x0, r: *r },
            Primitive::VSlit { x0, h } => PrimitiveSpec::Vslit { x0: *x0, h: *h },
            Primitive::Slit { foot, vertices } => PrimitiveSpec::Slit {
                foot: *foot,
                vertices: vertices.iter().map(|v| [v.x, v.y]).collect(),
            },
        }
    }
}

impl Hull {
    /// Parses and validates a hull spec document.
    pub fn from_json_str(s: &str) -> Result<Hull, HullFileError> {
        let spec: HullSpec = serde_json::from_str(s)?;
        let prims = spec.primitives.into_iter().map(Primitive::from).collect();
        Ok(Hull::new(prims)?)
    }

    pub fn to_spec(&self) -> HullSpec {
        HullSpec {
            primitives: self.primitives.iter().map(PrimitiveSpec::from).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("hull spec serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(x_lo: f64, x_hi: f64, h: f64) -> Hull {
        Hull::single(Primitive::Rect { x_lo, x_hi, h })
    }

    #[test]
    fn contains_basic() {
        let r = rect(-2.0, 2.0, 1.0);
        assert!(r.contains(Point::new(0.0, 0.5)));
        assert!(!r.contains(Point::new(0.0, 3.0)));
        let hd = Hull::single(Primitive::HalfDisk {
            x0: 0.0,
            r: 2f64.sqrt(),
        });
        assert!(hd.contains(Point::new(0.0, 1.0)));
        // top edge included, vertical sides excluded
        assert!(r.contains(Point::new(0.0, 1.0)));
        assert!(!r.contains(Point::new(2.0, 0.5)));
        assert!(!r.contains(Point::new(0.0, 0.0)));
    }

    #[test]
    fn sup_im_per_primitive() {
        assert_eq!(rect(-2.0, 2.0, 1.0).sup_im(), 1.0);
        assert_eq!(
            Hull::single(Primitive::VSlit { x0: 0.0, h: 1.0 }).sup_im(),
            1.0
        );
        let union = Hull::new(vec![
            Primitive::Rect {
                x_lo: -2.0,
                x_hi: 2.0,
                h: 1.0,
            },
            Primitive::HalfDisk {
                x0: 0.0,
                r: 2f64.sqrt(),
            },
        ])
        .unwrap();
        assert_eq!(union.sup_im(), 2f64.sqrt());
    }

    #[test]
    fn dist_examples() {
        let vs = Hull::single(Primitive::VSlit { x0: 0.0, h: 1.0 });
        assert!((vs.dist(Point::new(0.0, 2.0)) - 1.0).abs() < 1e-15);
        let r = rect(-2.0, 2.0, 1.0);
        assert!((r.dist(Point::new(3.0, 1.0)) - 1.0).abs() < 1e-15);
        let hd = Hull::single(Primitive::HalfDisk { x0: 0.0, r: 1.0 });
        assert!((hd.dist(Point::new(0.0, 2.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn scale_translate_shapes() {
        let vs = Hull::single(Primitive::VSlit { x0: 0.0, h: 1.0 });
        let s = vs.scale(3.0);
        assert_eq!(s.primitives()[0], Primitive::VSlit { x0: 0.0, h: 3.0 });
        let hd = Hull::single(Primitive::HalfDisk { x0: 0.0, r: 1.0 });
        let t = hd.translate(5.0);
        assert_eq!(t.primitives()[0], Primitive::HalfDisk { x0: 5.0, r: 1.0 });
    }

    #[test]
    fn tangent_excess_point_values() {
        let vs = Hull::single(Primitive::VSlit { x0: 0.0, h: 1.0 });
        assert!((vs.tangent_excess(Point::new(0.0, 1.0)) - 1.0).abs() < 1e-12);
        assert!(vs.tangent_excess(Point::new(0.0, 2.0001)) < 0.0);
        let r = rect(-2.0, 2.0, 1.0);
        assert!((r.tangent_excess(Point::new(4.0, 1.0)) - (-3.0)).abs() < 1e-12);
    }

    #[test]
    fn tangent_excess_rect_matches_grid_search() {
        // Dense grid over the rectangle as an independent check of the
        // closed-form box maximization.
        // The grid samples the closure (y = 0 included); the sup over the hull
        // equals the sup over its closure by continuity.
        let r = rect(-2.0, 2.0, 1.0);
        for &(u, v) in &[(4.0, 1.0), (0.0, 1.5), (-3.0, 0.25), (1.0, -0.5), (2.5, 2.0)] {
            let mut best = f64::NEG_INFINITY;
            let n = 400;
            for i in 0..=n {
                for j in 0..=n {
                    let x = -2.0 + 4.0 * i as f64 / n as f64;
                    let y = 1.0 * j as f64 / n as f64;
                    let val = y * y - ((x - u) * (x - u) + (y - v) * (y - v));
                    best = best.max(val);
                }
            }
            let f = r.tangent_excess(Point::new(u, v));
            assert!(
                (f - best).abs() < 1e-4,
                "closed form {f} vs grid {best} at ({u},{v})"
            );
            assert!(f >= best - 1e-12, "closed form must dominate grid samples");
        }
    }

    #[test]
    fn tangent_excess_half_disk_matches_boundary_search() {
        // The objective 2yv - (x-u)^2 is concave with nonvanishing gradient,
        // so its maximum over the half-disk sits on the boundary: dense
        // sampling of the arc and the diameter is an independent oracle.
        let (x0, r) = (0.5, 1.25);
        let hd = Hull::single(Primitive::HalfDisk { x0, r });
        for &(u, v) in &[(0.5, 1.0), (2.5, 0.5), (-1.0, 2.0), (0.0, -0.25), (3.0, 3.0)] {
            let mut best = f64::NEG_INFINITY;
            let n = 2_000_000;
            for i in 0..=n {
                let theta = PI_TEST * i as f64 / n as f64;
                let x = x0 + r * theta.cos();
                let y = r * theta.sin();
                best = best.max(2.0 * y * v - (x - u) * (x - u));
            }
            for i in 0..=4000 {
                let x = x0 - r + 2.0 * r * i as f64 / 4000.0;
                best = best.max(-(x - u) * (x - u));
            }
            let f = hd.tangent_excess(Point::new(u, v)) + v * v;
            assert!(
                (f - best).abs() < 1e-4,
                "closed form {f} vs boundary search {best} at ({u},{v})"
            );
            assert!(f >= best - 1e-12);
        }
    }

    const PI_TEST: f64 = std::f64::consts::PI;

    #[test]
    fn tangent_excess_slit_matches_grid_search() {
        let slit = Hull::single(Primitive::Slit {
            foot: 0.0,
            vertices: vec![Point::new(0.1, 0.6), Point::new(0.5, 1.1)],
        });
        for &(u, v) in &[(0.0, 1.0), (1.0, 0.5), (-0.5, 2.0), (0.3, -0.5)] {
            let mut best = f64::NEG_INFINITY;
            let pts = slit_points(0.0, &[Point::new(0.1, 0.6), Point::new(0.5, 1.1)]);
            for w in pts.windows(2) {
                let n = 4000;
                for i in 0..=n {
                    let t = i as f64 / n as f64;
                    let x = w[0].x + t * (w[1].x - w[0].x);
                    let y = w[0].y + t * (w[1].y - w[0].y);
                    let val = y * y - ((x - u) * (x - u) + (y - v) * (y - v));
                    best = best.max(val);
                }
            }
            let f = slit.tangent_excess(Point::new(u, v));
            assert!((f - best).abs() < 1e-6, "{f} vs {best} at ({u},{v})");
        }
    }

    #[test]
    fn validation_rejects_bad_primitives() {
        assert_eq!(Hull::new(vec![]), Err(HullError::Empty));
        assert!(Hull::new(vec![Primitive::Rect {
            x_lo: 1.0,
            x_hi: -1.0,
            h: 1.0
        }])
        .is_err());
        assert!(Hull::new(vec![Primitive::HalfDisk { x0: 0.0, r: 0.0 }]).is_err());
        assert!(Hull::new(vec![Primitive::Slit {
            foot: 0.0,
            vertices: vec![Point::new(0.0, -1.0)]
        }])
        .is_err());
        // self-intersecting bow-tie polyline
        let bow = Hull::new(vec![Primitive::Slit {
            foot: 0.0,
            vertices: vec![
                Point::new(0.0, 1.0),
                Point::new(1.0, 1.0),
                Point::new(0.5, 0.5),
                Point::new(-0.5, 1.5),
            ],
        }]);
        assert!(matches!(bow, Err(HullError::SelfIntersecting { .. })));
    }

    #[test]
    fn hull_spec_round_trip() {
        let json = r#"{"primitives": [
            {"kind":"rect","x_lo":-2.0,"x_hi":2.0,"h":1.0},
            {"kind":"halfdisk","x0":0.5,"r":1.5},
            {"kind":"vslit","x0":0.0,"h":1.0},
            {"kind":"slit","foot":3.0,"vertices":[[3.1,0.5],[3.0,1.0]]}
        ]}"#;
        let hull = Hull::from_json_str(json).unwrap();
        assert_eq!(hull.primitives().len(), 4);
        let again = Hull::from_json_str(&hull.to_json()).unwrap();
        assert_eq!(hull, again);
    }

    #[test]
    fn hull_spec_rejects_garbage() {
        assert!(Hull::from_json_str("not json").is_err());
        assert!(Hull::from_json_str(r#"{"primitives":[]}"#).is_err());
        assert!(
            Hull::from_json_str(r#"{"primitives":[{"kind":"cube","side":1.0}]}"#).is_err()
        );
        assert!(Hull::from_json_str(
            r#"{"primitives":[{"kind":"rect","x_lo":2.0,"x_hi":-2.0,"h":1.0}]}"#
        )
        .is_err());
    }
}
