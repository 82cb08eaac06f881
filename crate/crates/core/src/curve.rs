//! Closed strictly convex planar curves.
//!
//! A [`ConvexCurve`] carries a dense curvature profile and the three scalars
//! the certification theorems consume: the maximal curvature `Λ`, the minimal
//! curvature `λ` and the radius `ω` of the smallest enclosing circle.

use std::f64::consts::TAU;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::{golden_max, golden_min};

pub const DEFAULT_SAMPLES: usize = 1024;
pub const MIN_ELLIPSE_SAMPLES: usize = 64;
pub const MIN_POLYGON_POINTS: usize = 8;

/// Relative spread `(Λ - λ) / Λ` under which a curve is flagged as a circle.
pub const CIRCLE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    fn scaled(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    fn contains(&self, p: Point) -> bool {
        let slack = 1e-12 * self.radius.max(1e-300);
        self.center.dist(p) <= self.radius + slack
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("curve is not strictly convex: {0}")]
    NotStrictlyConvex(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
}

/// How the curve was specified.
#[derive(Debug, Clone, PartialEq)]
pub enum CurveKind {
    Ellipse { a: f64, b: f64 },
    Sampled { points: Vec<Point> },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveSample {
    pub point: Point,
    pub curvature: f64,
}

/// A closed strictly convex curve, oriented counterclockwise.
#[derive(Debug, Clone)]
pub struct ConvexCurve {
    kind: CurveKind,
    samples: Vec<CurveSample>,
    max_curvature: f64,
    min_curvature: f64,
    max_point: Point,
    min_point: Point,
    enclosing: Circle,
    seed: u64,
}

impl ConvexCurve {
    pub fn kind(&self) -> &CurveKind {
        &self.kind
    }

    pub fn samples(&self) -> &[CurveSample] {
        &self.samples
    }

    /// `Λ`, the maximal curvature.
    pub fn max_curvature(&self) -> f64 {
        self.max_curvature
    }

    /// `λ`, the minimal curvature.
    pub fn min_curvature(&self) -> f64 {
        self.min_curvature
    }

    /// Points where `Λ` and `λ` are attained (after refinement).
    pub fn extreme_points(&self) -> (Point, Point) {
        (self.max_point, self.min_point)
    }

    /// `ω`, radius of the smallest circle enclosing the curve samples.
    pub fn omega(&self) -> f64 {
        self.enclosing.radius
    }

    pub fn enclosing_circle(&self) -> Circle {
        self.enclosing
    }

    pub fn is_circle(&self) -> bool {
        self.max_curvature - self.min_curvature <= CIRCLE_TOLERANCE * self.max_curvature
    }

    /// Uniformly scaled copy: `ω` scales by `s`, curvatures by `1/s`.
    pub fn scaled(&self, s: f64) -> Result<ConvexCurve, CurveError> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(CurveError::InvalidInput(format!(
                "scale factor must be positive, got {s}"
            )));
        }
        match &self.kind {
            CurveKind::Ellipse { a, b } => make_ellipse_seeded(a * s, b * s, self.samples.len(), self.seed),
            CurveKind::Sampled { points } => {
                make_sampled_seeded(points.iter().map(|p| p.scaled(s)).collect(), self.seed)
            }
        }
    }
}

fn ellipse_curvature(a: f64, b: f64, t: f64) -> f64 {
    if a == b {
        return 1.0 / a;
    }
    let (s, c) = t.sin_cos();
    a * b / (a * a * s * s + b * b * c * c).powf(1.5)
}

/// Ellipse `(A cos t, B sin t)` sampled at `n` uniform parameter values.
pub fn make_ellipse(a: f64, b: f64, n: usize) -> Result<ConvexCurve, CurveError> {
    make_ellipse_seeded(a, b, n, 0)
}

pub fn make_ellipse_seeded(a: f64, b: f64, n: usize, seed: u64) -> Result<ConvexCurve, CurveError> {
    if !(a > 0.0 && a.is_finite() && b > 0.0 && b.is_finite()) {
        return Err(CurveError::InvalidInput(format!(
            "semi-axes must be positive, got A={a}, B={b}"
        )));
    }
    if n < MIN_ELLIPSE_SAMPLES {
        return Err(CurveError::InvalidInput(format!(
            "need at least {MIN_ELLIPSE_SAMPLES} samples, got {n}"
        )));
    }
    let samples: Vec<CurveSample> = (0..n)
        .map(|k| {
            let t = TAU * k as f64 / n as f64;
            CurveSample {
                point: Point::new(a * t.cos(), b * t.sin()),
                curvature: ellipse_curvature(a, b, t),
            }
        })
        .collect();
    let (imax, imin) = extreme_indices(&samples);
    let h = TAU / n as f64;
    let t_of = |i: usize| TAU * i as f64 / n as f64;
    let (tmax, kmax) = golden_max(|t| ellipse_curvature(a, b, t), t_of(imax) - h, t_of(imax) + h, 1e-12);
    let (tmin, kmin) = golden_min(|t| ellipse_curvature(a, b, t), t_of(imin) - h, t_of(imin) + h, 1e-12);
    let kmax = kmax.max(samples[imax].curvature);
    let kmin = kmin.min(samples[imin].curvature);
    let points: Vec<Point> = samples.iter().map(|s| s.point).collect();
    Ok(ConvexCurve {
        kind: CurveKind::Ellipse { a, b },
        enclosing: enclosing_circle(&points, seed),
        samples,
        max_curvature: kmax,
        min_curvature: kmin,
        max_point: Point::new(a * tmax.cos(), b * tmax.sin()),
        min_point: Point::new(a * tmin.cos(), b * tmin.sin()),
        seed,
    })
}

fn extreme_indices(samples: &[CurveSample]) -> (usize, usize) {
    let mut imax = 0;
    let mut imin = 0;
    for (i, s) in samples.iter().enumerate() {
        if s.curvature > samples[imax].curvature {
            imax = i;
        }
        if s.curvature < samples[imin].curvature {
            imin = i;
        }
    }
    (imax, imin)
}

/// Curve through the given points, listed in traversal order (either orientation).
pub fn make_sampled(points: Vec<Point>) -> Result<ConvexCurve, CurveError> {
    make_sampled_seeded(points, 0)
}

pub fn make_sampled_seeded(mut points: Vec<Point>, seed: u64) -> Result<ConvexCurve, CurveError> {
    let n = points.len();
    if n < MIN_POLYGON_POINTS {
        return Err(CurveError::InvalidInput(format!(
            "need at least {MIN_POLYGON_POINTS} points, got {n}"
        )));
    }
    if let Some(p) = points.iter().find(|p| !(p.x.is_finite() && p.y.is_finite())) {
        return Err(CurveError::InvalidInput(format!("non-finite point ({}, {})", p.x, p.y)));
    }
    for i in 0..n {
        if points[i] == points[(i + 1) % n] {
            return Err(CurveError::InvalidInput(format!("repeated point at index {i}")));
        }
    }
    if signed_area(&points) < 0.0 {
        points.reverse();
    }

    // Discrete turning: every turn must be strictly positive and the turns
    // must add up to exactly one revolution.
    let mut turning = 0.0;
    for i in 0..n {
        let p0 = points[(i + n - 1) % n];
        let p1 = points[i];
        let p2 = points[(i + 1) % n];
        let (ex, ey) = (p1.x - p0.x, p1.y - p0.y);
        let (fx, fy) = (p2.x - p1.x, p2.y - p1.y);
        let cross = ex * fy - ey * fx;
        let dot = ex * fx + ey * fy;
        if cross <= 1e-12 * ex.hypot(ey) * fx.hypot(fy) {
            return Err(CurveError::NotStrictlyConvex(format!(
                "turn at point {i} ({}, {}) is not strictly positive",
                p1.x, p1.y
            )));
        }
        turning += cross.atan2(dot);
    }
    if (turning - TAU).abs() > 1e-6 {
        return Err(CurveError::InvalidCurve(format!(
            "total turning is {:.6} revolutions; the curve self-intersects",
            turning / TAU
        )));
    }

    let curvatures = estimate_curvature(&points);
    if let Some((i, k)) = curvatures.iter().enumerate().find(|(_, k)| **k <= 0.0) {
        return Err(CurveError::NotStrictlyConvex(format!(
            "estimated curvature {k} at point {i}"
        )));
    }
    let samples: Vec<CurveSample> = points
        .iter()
        .zip(&curvatures)
        .map(|(&point, &curvature)| CurveSample { point, curvature })
        .collect();
    let (imax, imin) = extreme_indices(&samples);
    let kmax = refine_extreme(&samples, imax, true);
    let kmin = refine_extreme(&samples, imin, false);
    Ok(ConvexCurve {
        enclosing: enclosing_circle(&points, seed),
        kind: CurveKind::Sampled { points },
        max_point: samples[imax].point,
        min_point: samples[imin].point,
        samples,
        max_curvature: kmax,
        min_curvature: kmin,
        seed,
    })
}

fn signed_area(points: &[Point]) -> f64 {
    let n = points.len();
    (0..n)
        .map(|i| {
            let p = points[i];
            let q = points[(i + 1) % n];
            p.x * q.y - q.x * p.y
        })
        .sum::<f64>()
        / 2.0
}

/// Finite-difference weights for the first and second derivative at `x = 0`
/// of the quartic interpolating nodes `xs` (Lagrange basis differentiated).
fn derivative_weights(xs: &[f64; 5]) -> ([f64; 5], [f64; 5]) {
    let mut w1 = [0.0; 5];
    let mut w2 = [0.0; 5];
    for j in 0..5 {
        let denom: f64 = (0..5).filter(|&m| m != j).map(|m| xs[j] - xs[m]).product();
        let others: Vec<f64> = (0..5).filter(|&m| m != j).map(|m| xs[m]).collect();
        // l_j(x) = prod (x - x_m) / denom; derivatives at 0 from elementary symmetric sums
        let e3: f64 = {
            let mut s = 0.0;
            for a in 0..4 {
                for b in a + 1..4 {
                    for c in b + 1..4 {
                        s += others[a] * others[b] * others[c];
                    }
                }
            }
            s
        };
        let e2: f64 = {
            let mut s = 0.0;
            for a in 0..4 {
                for b in a + 1..4 {
                    s += others[a] * others[b];
                }
            }
            s
        };
        // prod (x - r_m) = x^4 - e1 x^3 + e2 x^2 - e3 x + e4
        w1[j] = -e3 / denom;
        w2[j] = 2.0 * e2 / denom;
    }
    (w1, w2)
}

/// Curvature at every vertex from a periodic five-point quartic interpolation in
/// cumulative chord length.
fn estimate_curvature(points: &[Point]) -> Vec<f64> {
    let n = points.len();
    let chord: Vec<f64> = (0..n).map(|i| points[i].dist(points[(i + 1) % n])).collect();
    (0..n)
        .map(|i| {
            let idx = |k: isize| ((i as isize + k).rem_euclid(n as isize)) as usize;
            let mut s = [0.0; 5];
            s[1] = -chord[idx(-1)];
            s[0] = s[1] - chord[idx(-2)];
            s[3] = chord[i];
            s[4] = s[3] + chord[idx(1)];
            let (w1, w2) = derivative_weights(&s);
            let mut dx = 0.0;
            let mut dy = 0.0;
            let mut ddx = 0.0;
            let mut ddy = 0.0;
            for k in 0..5 {
                let p = points[idx(k as isize - 2)];
                dx += w1[k] * p.x;
                dy += w1[k] * p.y;
                ddx += w2[k] * p.x;
                ddy += w2[k] * p.y;
            }
            (dx * ddy - dy * ddx) / (dx * dx + dy * dy).powf(1.5)
        })
        .collect()
}

/// Parabolic refinement of a sampled extremum against chord length.
fn refine_extreme(samples: &[CurveSample], i: usize, is_max: bool) -> f64 {
    let n = samples.len();
    let prev = &samples[(i + n - 1) % n];
    let next = &samples[(i + 1) % n];
    let cur = &samples[i];
    let h0 = -prev.point.dist(cur.point);
    let h1 = cur.point.dist(next.point);
    let (y0, y1, y2) = (prev.curvature, cur.curvature, next.curvature);
    // quadratic through (h0,y0), (0,y1), (h1,y2)
    let a = ((y2 - y1) / h1 - (y0 - y1) / h0) / (h1 - h0);
    let b = (y2 - y1) / h1 - a * h1;
    let refined = if a != 0.0 {
        let x = (-b / (2.0 * a)).clamp(h0, h1);
        y1 + b * x + a * x * x
    } else {
        y1
    };
    if is_max {
        refined.max(y1)
    } else {
        refined.min(y1)
    }
}

fn circle_two(p: Point, q: Point) -> Circle {
    let center = Point::new(0.5 * (p.x + q.x), 0.5 * (p.y + q.y));
    Circle {
        center,
        radius: 0.5 * p.dist(q),
    }
}

/// Circumcircle, or `None` for (nearly) collinear points.
fn circle_three(a: Point, b: Point, c: Point) -> Option<Circle> {
    let (bx, by) = (b.x - a.x, b.y - a.y);
    let (cx, cy) = (c.x - a.x, c.y - a.y);
    let d = 2.0 * (bx * cy - by * cx);
    let scale = (bx * bx + by * by).max(cx * cx + cy * cy);
    if d.abs() <= 1e-14 * scale {
        return None;
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    let center = Point::new(a.x + ux, a.y + uy);
    let radius = center.dist(a).max(center.dist(b)).max(center.dist(c));
    Some(Circle { center, radius })
}

fn circle_three_or_diameter(a: Point, b: Point, c: Point) -> Circle {
    circle_three(a, b, c).unwrap_or_else(|| {
        [circle_two(a, b), circle_two(b, c), circle_two(a, c)]
            .into_iter()
            .max_by(|x, y| x.radius.total_cmp(&y.radius))
            .expect("three candidates")
    })
}

/// Smallest enclosing circle of `points` by the randomized incremental
/// (Welzl-style) algorithm, expected `O(n)`. The insertion order is shuffled
/// with a ChaCha generator seeded by `seed`, so results are reproducible.
///
/// # Panics
/// Panics on an empty point set.
pub fn enclosing_circle(points: &[Point], seed: u64) -> Circle {
    assert!(!points.is_empty(), "enclosing circle of an empty point set");
    let mut pts = points.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut c = Circle {
        center: pts[0],
        radius: 0.0,
    };
    for i in 1..pts.len() {
        if c.contains(pts[i]) {
            continue;
        }
        c = Circle {
            center: pts[i],
            radius: 0.0,
        };
        for j in 0..i {
            if c.contains(pts[j]) {
                continue;
            }
            c = circle_two(pts[i], pts[j]);
            for k in 0..j {
                if !c.contains(pts[k]) {
                    c = circle_three_or_diameter(pts[i], pts[j], pts[k]);
                }
            }
        }
    }
    c
}

/// `ω(Γ)` and the center of the minimal enclosing circle.
pub fn enclosing_radius(curve: &ConvexCurve) -> Circle {
    curve.enclosing_circle()
}

/// Curve specification as read from JSON input files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CurveSpec {
    Ellipse {
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        samples: Option<usize>,
    },
    Points {
        data: Vec<[f64; 2]>,
    },
}

impl CurveSpec {
    pub fn build(&self, seed: u64) -> Result<ConvexCurve, CurveError> {
        match self {
            CurveSpec::Ellipse { a, b, samples } => {
                make_ellipse_seeded(*a, *b, samples.unwrap_or(DEFAULT_SAMPLES), seed)
            }
            CurveSpec::Points { data } => {
                make_sampled_seeded(data.iter().map(|&[x, y]| Point::new(x, y)).collect(), seed)
            }
        }
    }
}

/// Helper for tests and demos: `n` points of the ellipse `(A cos t, B sin t)`.
pub fn ellipse_points(a: f64, b: f64, n: usize) -> Vec<Point> {
    (0..n)
        .map(|k| {
            let t = TAU * k as f64 / n as f64;
            Point::new(a * t.cos(), b * t.sin())
        })
        .collect()
}

/// Inward unit normal of a counterclockwise curve at sample `i`.
pub fn inward_normal(samples: &[CurveSample], i: usize) -> Point {
    let n = samples.len();
    let p = samples[(i + n - 1) % n].point;
    let q = samples[(i + 1) % n].point;
    let (tx, ty) = (q.x - p.x, q.y - p.y);
    let len = tx.hypot(ty);
    Point::new(-ty / len, tx / len)
}
