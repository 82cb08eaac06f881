//! Limaçon of Pascal: the locus of reflections of a base point `A` across the
//! tangent lines of a circle of radius `c` whose center lies at distance `a`
//! from `A`.
//!
//! Coordinates: `A` at the origin, circle center at `(a, 0)`. The radial
//! parametrization is `ρ(θ) = 2a cos θ + 2c`.

use serde::Serialize;
use thiserror::Error;

use crate::curve::Point;

/// Relative distance `|a - c| / max(a, c)` below which a non-cusp limaçon is
/// reported as near-cusp.
pub const NEAR_CUSP_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LimaconError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("limaçon with a = {a}, c = {c} has no inner loop (requires a > c)")]
    NoInnerLoop { a: f64, c: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LoopType {
    /// `a < c`
    Embedded,
    /// `a = c`, cusp at the base point
    Cusp,
    /// `a > c`, two nested loops meeting at the base point
    TwoLoops,
}

fn check_params(a: f64, c: f64) -> Result<(), LimaconError> {
    if a > 0.0 && c > 0.0 && a.is_finite() && c.is_finite() {
        Ok(())
    } else {
        Err(LimaconError::InvalidInput(format!(
            "parameters must be positive, got a={a}, c={c}"
        )))
    }
}

pub fn classify(a: f64, c: f64) -> Result<LoopType, LimaconError> {
    check_params(a, c)?;
    Ok(if a < c {
        LoopType::Embedded
    } else if a == c {
        LoopType::Cusp
    } else {
        LoopType::TwoLoops
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Limacon {
    a: f64,
    c: f64,
}

impl Limacon {
    pub fn new(a: f64, c: f64) -> Result<Self, LimaconError> {
        check_params(a, c)?;
        Ok(Limacon { a, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn loop_type(&self) -> LoopType {
        classify(self.a, self.c).expect("validated on construction")
    }

    /// True when the parameters are within [`NEAR_CUSP_TOLERANCE`] of the cusp
    /// without being exactly equal.
    pub fn is_near_cusp(&self, rel_tol: f64) -> bool {
        self.a != self.c && (self.a - self.c).abs() <= rel_tol * self.a.max(self.c)
    }

    /// Signed radius `2a cos θ + 2c`.
    pub fn radial(&self, theta: f64) -> f64 {
        2.0 * self.a * theta.cos() + 2.0 * self.c
    }

    pub fn point(&self, theta: f64) -> Point {
        let r = self.radial(theta);
        let (s, c) = theta.sin_cos();
        Point::new(r * c, r * s)
    }

    /// The circle point nearest the base point, `B = (a - c, 0)`.
    pub fn nearest_circle_point(&self) -> Point {
        Point::new(self.a - self.c, 0.0)
    }

    /// Squared distance from `B` to the limaçon point at angle `θ`.
    pub fn phi(&self, theta: f64) -> f64 {
        let cos = theta.cos();
        let d = self.a - self.c;
        4.0 * self.c * (self.a * cos + self.c) * (1.0 + cos) + d * d
    }

    /// Angular range `[π - arccos(c/a), π + arccos(c/a)]` traced by the inner
    /// loop; `None` unless the limaçon has two loops.
    pub fn inner_loop_range(&self) -> Option<(f64, f64)> {
        if self.a > self.c {
            let half = (self.c / self.a).acos();
            Some((std::f64::consts::PI - half, std::f64::consts::PI + half))
        } else {
            None
        }
    }

    /// The reflection of the base point across the tangent line of the circle at `P`.
    pub fn reflect_base_point(&self, circle_angle: f64) -> Point {
        // tangent line at P = C + c(cos s, sin s) has unit normal n = (cos s, sin s);
        // reflection of the origin: 2 (P·n) n
        let (s, c) = circle_angle.sin_cos();
        let pn = self.a * c + self.c;
        Point::new(2.0 * pn * c, 2.0 * pn * s)
    }
}

/// Disks attached to the inner loop of a two-loop limaçon: the loop bounds the
/// disk of radius `r_in` and is contained in the disk of radius `r_out`, both
/// centered at `B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InnerLoopDisk {
    pub center: Point,
    pub r_in: f64,
    pub r_out: f64,
}

fn inscribed_radius(a: f64, c: f64) -> f64 {
    let d = a - c;
    (d * d * d / a).sqrt()
}

pub fn inner_loop_disk(a: f64, c: f64) -> Result<InnerLoopDisk, LimaconError> {
    check_params(a, c)?;
    if a <= c {
        return Err(LimaconError::NoInnerLoop { a, c });
    }
    Ok(InnerLoopDisk {
        center: Point::new(a - c, 0.0),
        r_in: inscribed_radius(a, c),
        r_out: a - c,
    })
}

/// Bounds `r_lower <= r(Γ) <= r_upper` on the radius of the disk over which
/// a surface spanning a convex curve with curvature range `[λ, Λ]` is a
/// vertical graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphRadius {
    pub r_lower: f64,
    pub r_upper: f64,
}

impl GraphRadius {
    /// The radius used downstream: the guaranteed lower bound.
    pub fn r_gamma(&self) -> f64 {
        self.r_lower
    }
}

/// `r_lower = √(λ/Λ³)` is the inscribed radius of the inner loop of the
/// limaçon with `a = 1/λ`, `c = 1/λ - 1/Λ`; `r_upper = 1/Λ`.
pub fn graph_lemma_radius(max_curvature: f64, min_curvature: f64) -> Result<GraphRadius, LimaconError> {
    let (big, small) = (max_curvature, min_curvature);
    if !(small > 0.0 && big.is_finite() && small.is_finite()) {
        return Err(LimaconError::InvalidInput(format!(
            "curvatures must be positive, got Λ={big}, λ={small}"
        )));
    }
    if big < small {
        return Err(LimaconError::InvalidInput(format!(
            "maximal curvature Λ={big} is below minimal curvature λ={small}"
        )));
    }
    if big == small {
        return Ok(GraphRadius {
            r_lower: 1.0 / big,
            r_upper: 1.0 / big,
        });
    }
    let a = 1.0 / small;
    let c = 1.0 / small - 1.0 / big;
    Ok(GraphRadius {
        r_lower: inscribed_radius(a, c),
        r_upper: 1.0 / big,
    })
}

/// Closed form `√(λ/Λ³)` for comparison with [`graph_lemma_radius`].
pub fn graph_radius_closed_form(max_curvature: f64, min_curvature: f64) -> f64 {
    (min_curvature / max_curvature.powi(3)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn classification() {
        assert_eq!(classify(1.0, 2.0).unwrap(), LoopType::Embedded);
        assert_eq!(classify(1.0, 1.0).unwrap(), LoopType::Cusp);
        assert_eq!(classify(5.0, 2.0).unwrap(), LoopType::TwoLoops);
        assert!(matches!(classify(0.0, 1.0), Err(LimaconError::InvalidInput(_))));
        assert!(matches!(classify(1.0, -1.0), Err(LimaconError::InvalidInput(_))));
    }

    #[test]
    fn near_cusp_knob() {
        let l = Limacon::new(1.0, 1.0 + 1e-14).unwrap();
        assert_eq!(l.loop_type(), LoopType::Embedded);
        assert!(l.is_near_cusp(NEAR_CUSP_TOLERANCE));
        assert!(!Limacon::new(1.0, 1.0).unwrap().is_near_cusp(NEAR_CUSP_TOLERANCE));
        assert!(!Limacon::new(1.0, 1.1).unwrap().is_near_cusp(NEAR_CUSP_TOLERANCE));
    }

    #[test]
    fn radial_values() {
        let l = Limacon::new(5.0, 2.0).unwrap();
        assert_eq!(l.radial(0.0), 14.0);
        assert!((l.radial(PI) + 6.0).abs() < 1e-14);
        let e = Limacon::new(1.0, 2.0).unwrap();
        assert!((e.radial(FRAC_PI_2) - 4.0).abs() < 1e-14);
    }

    #[test]
    fn phi_values() {
        let l = Limacon::new(5.0, 2.0).unwrap();
        assert!((l.phi(PI) - 9.0).abs() < 1e-12);
        assert_eq!(l.phi(0.0), 121.0);
    }

    #[test]
    fn phi_is_squared_distance_from_b() {
        let l = Limacon::new(3.7, 1.2).unwrap();
        let b = l.nearest_circle_point();
        for k in 0..50 {
            let th = k as f64 * 0.13;
            let d = l.point(th).dist(b);
            assert!((d * d - l.phi(th)).abs() < 1e-10);
        }
    }

    #[test]
    fn reflection_construction_matches_radial_form() {
        // reflecting A across the tangent at circle angle s lands on ρ(s)(cos s, sin s)
        let l = Limacon::new(5.0, 2.0).unwrap();
        for k in 0..40 {
            let s = k as f64 * 0.157;
            let p = l.reflect_base_point(s);
            let q = l.point(s);
            assert!(p.dist(q) < 1e-12);
        }
    }

    #[test]
    fn inner_disks() {
        let d = inner_loop_disk(5.0, 2.0).unwrap();
        assert_eq!(d.center, Point::new(3.0, 0.0));
        assert!((d.r_in - (27.0f64 / 5.0).sqrt()).abs() < 1e-15);
        assert!((d.r_in - 2.323790).abs() < 1e-6);
        assert_eq!(d.r_out, 3.0);
        let d = inner_loop_disk(2.0, 1.0).unwrap();
        assert!((d.r_in - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(d.r_out, 1.0);
        assert_eq!(
            inner_loop_disk(1.0, 1.0),
            Err(LimaconError::NoInnerLoop { a: 1.0, c: 1.0 })
        );
    }

    #[test]
    fn graph_radius() {
        assert_eq!(
            graph_lemma_radius(1.0, 1.0).unwrap(),
            GraphRadius {
                r_lower: 1.0,
                r_upper: 1.0
            }
        );
        let g = graph_lemma_radius(2.0, 0.25).unwrap();
        assert!((g.r_lower - 0.176_776_695_296_636_9).abs() < 1e-12);
        assert_eq!(g.r_upper, 0.5);
        assert!((g.r_lower - graph_radius_closed_form(2.0, 0.25)).abs() < 1e-15);
        assert!(graph_lemma_radius(0.25, 2.0).is_err());
        assert!(graph_lemma_radius(1.0, 0.0).is_err());
    }
}
