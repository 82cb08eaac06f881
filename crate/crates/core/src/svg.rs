//! Static SVG figures for curves and limaçons. Coordinates are flipped so
//! that `y` points up.

use std::fmt::Write;

use crate::curve::{inward_normal, Circle, ConvexCurve, Point};
use crate::limacon::{inner_loop_disk, Limacon};

const LIMACON_SAMPLES: usize = 2048;

#[derive(Debug, Default)]
struct Figure {
    lo: Option<Point>,
    hi: Option<Point>,
    body: String,
}

impl Figure {
    fn include(&mut self, p: Point) {
        let lo = self.lo.get_or_insert(p);
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        let hi = self.hi.get_or_insert(p);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }

    fn polyline(&mut self, points: &[Point], closed: bool, stroke: &str) {
        let mut d = String::new();
        for p in points {
            self.include(*p);
            let _ = write!(d, "{:.6},{:.6} ", p.x, -p.y);
        }
        let tag = if closed { "polygon" } else { "polyline" };
        let _ = writeln!(
            self.body,
            r#"  <{tag} points="{}" fill="none" stroke="{stroke}" stroke-width="{{w}}"/>"#,
            d.trim_end()
        );
    }

    fn circle(&mut self, c: Circle, stroke: &str, dashed: bool) {
        self.include(Point::new(c.center.x - c.radius, c.center.y - c.radius));
        self.include(Point::new(c.center.x + c.radius, c.center.y + c.radius));
        let dash = if dashed { r#" stroke-dasharray="{d}""# } else { "" };
        let _ = writeln!(
            self.body,
            r#"  <circle cx="{:.6}" cy="{:.6}" r="{:.6}" fill="none" stroke="{stroke}" stroke-width="{{w}}"{dash}/>"#,
            c.center.x, -c.center.y, c.radius
        );
    }

    fn dot(&mut self, p: Point, fill: &str) {
        self.include(p);
        let _ = writeln!(
            self.body,
            r#"  <circle cx="{:.6}" cy="{:.6}" r="{{w3}}" fill="{fill}"/>"#,
            p.x, -p.y
        );
    }

    fn render(self) -> String {
        let lo = self.lo.unwrap_or(Point::new(-1.0, -1.0));
        let hi = self.hi.unwrap_or(Point::new(1.0, 1.0));
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-12);
        let pad = 0.05 * span;
        let w = format!("{:.6}", span / 400.0);
        let body = self
            .body
            .replace("{w}", &w)
            .replace("{w3}", &format!("{:.6}", 3.0 * span / 400.0))
            .replace("{d}", &format!("{:.6} {:.6}", span / 100.0, span / 100.0));
        format!(
            concat!(
                r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6} {:.6} {:.6} {:.6}" width="600" height="{:.0}">"#,
                "\n{}</svg>\n"
            ),
            lo.x - pad,
            -hi.y - pad,
            hi.x - lo.x + 2.0 * pad,
            hi.y - lo.y + 2.0 * pad,
            600.0 * (hi.y - lo.y + 2.0 * pad) / (hi.x - lo.x + 2.0 * pad),
            body
        )
    }
}

fn osculating_circle(curve: &ConvexCurve, at: Point, curvature: f64) -> Circle {
    let samples = curve.samples();
    let i = (0..samples.len())
        .min_by(|&a, &b| samples[a].point.dist(at).total_cmp(&samples[b].point.dist(at)))
        .expect("curve has samples");
    let n = inward_normal(samples, i);
    let radius = 1.0 / curvature;
    Circle {
        center: Point::new(at.x + radius * n.x, at.y + radius * n.y),
        radius,
    }
}

/// The curve, its minimal enclosing circle and the osculating circles at the
/// points of maximal and minimal curvature.
pub fn curve_svg(curve: &ConvexCurve) -> String {
    let mut fig = Figure::default();
    let points: Vec<Point> = curve.samples().iter().map(|s| s.point).collect();
    fig.polyline(&points, true, "black");
    fig.circle(curve.enclosing_circle(), "gray", true);
    let (pmax, pmin) = curve.extreme_points();
    fig.circle(osculating_circle(curve, pmax, curve.max_curvature()), "crimson", false);
    fig.circle(
        osculating_circle(curve, pmin, curve.min_curvature()),
        "steelblue",
        false,
    );
    fig.dot(pmax, "crimson");
    fig.dot(pmin, "steelblue");
    fig.render()
}

/// The limaçon with, for two loops, the disks bounded by and containing the
/// inner loop.
pub fn limacon_svg(l: &Limacon) -> String {
    let mut fig = Figure::default();
    let points: Vec<Point> = (0..LIMACON_SAMPLES)
        .map(|k| l.point(std::f64::consts::TAU * k as f64 / LIMACON_SAMPLES as f64))
        .collect();
    fig.polyline(&points, true, "black");
    fig.dot(Point::new(0.0, 0.0), "black");
    if let Ok(disk) = inner_loop_disk(l.a(), l.c()) {
        fig.circle(
            Circle {
                center: disk.center,
                radius: disk.r_in,
            },
            "crimson",
            false,
        );
        fig.circle(
            Circle {
                center: disk.center,
                radius: disk.r_out,
            },
            "steelblue",
            true,
        );
        fig.dot(disk.center, "crimson");
    }
    fig.render()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::make_ellipse;

    #[test]
    fn curve_figure() {
        let svg = curve_svg(&make_ellipse(1.0, 2.0, 256).unwrap());
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polygon").count(), 1);
        // enclosing circle, two osculating circles, two dots
        assert_eq!(svg.matches("<circle").count(), 5);
        assert!(!svg.contains("{w}"));
    }

    #[test]
    fn limacon_figures() {
        let two = limacon_svg(&Limacon::new(5.0, 2.0).unwrap());
        assert_eq!(two.matches("<circle").count(), 4);
        let embedded = limacon_svg(&Limacon::new(1.0, 2.0).unwrap());
        assert_eq!(embedded.matches("<circle").count(), 1);
    }
}
