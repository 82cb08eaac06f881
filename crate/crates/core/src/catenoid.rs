//! Rotational catenoids for the linear relation `κ₂ = m₀ κ₁` (`m₀ < 0`).
//!
//! The upper half of the catenoid with neck radius `r₀` is the graph of
//!
//! ```text
//! h(s) = r₀ ∫₁^{s/r₀} dw / √(w^{-2m₀} - 1),      s ≥ r₀,
//! ```
//!
//! rotated about the vertical axis. The height is bounded iff `m₀ < -1`.
//!
//! Quadrature notes. Write `p = -2m₀`. On `w ∈ [1, 2]` the integrand blows up
//! like `1/√(p(w-1))`; the substitution `w = 1 + u²` turns it into the bounded
//! `2u / √((1+u²)^p - 1)`. When `m₀ < -1`, on `w ≥ 2` we use `v = w^{1+m₀}`
//! (`q = -1-m₀ > 0`), which maps the infinite tail onto a finite interval with
//! the bounded integrand `(1/q) / √(1 - v^{p/q})`.

use std::io::{self, Write};

use serde::Serialize;
use thiserror::Error;

use crate::numeric::{bisect_increasing, integrate, QuadOptions};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatenoidError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("section radius {s} is below the neck radius {r0}")]
    BelowNeck { s: f64, r0: f64 },
    #[error("height integral diverges for m0 = {m0} (bounded only when m0 < -1)")]
    Divergent { m0: f64 },
    #[error("height {target} is not reached: the catenoid height is bounded by {bound}")]
    UnreachableHeight { target: f64, bound: f64 },
}

const QUAD: QuadOptions = QuadOptions {
    abs_tol: 1e-16,
    rel_tol: 1e-14,
    max_intervals: 4000,
};
const INVERSION_REL_TOL: f64 = 1e-14;
/// Doubling knots `2^k`, `k = 0..=KNOTS`, of the memoized profile table.
const KNOTS: usize = 64;

fn check_slope(m0: f64) -> Result<(), CatenoidError> {
    if m0 < 0.0 && m0.is_finite() {
        Ok(())
    } else {
        Err(CatenoidError::InvalidInput(format!(
            "slope m0 must be negative, got {m0}"
        )))
    }
}

fn check_radius(r0: f64) -> Result<(), CatenoidError> {
    if r0 > 0.0 && r0.is_finite() {
        Ok(())
    } else {
        Err(CatenoidError::InvalidInput(format!(
            "neck radius must be positive, got {r0}"
        )))
    }
}

/// `∫_a^b dw / √(w^p - 1)` for `1 ≤ a ≤ b`, `p = -2m₀`.
fn integral_between(m0: f64, a: f64, b: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let p = -2.0 * m0;
    let mut total = 0.0;
    if a < 2.0 {
        let hi = b.min(2.0);
        let u_lo = (a - 1.0).sqrt();
        let u_hi = (hi - 1.0).sqrt();
        let f = |u: f64| {
            if u == 0.0 {
                2.0 / p.sqrt()
            } else {
                2.0 * u / (p * (u * u).ln_1p()).exp_m1().sqrt()
            }
        };
        total += integrate(f, u_lo, u_hi, QUAD).value;
    }
    let a = a.max(2.0);
    if b > a {
        if m0 < -1.0 {
            let q = -1.0 - m0;
            let ratio = p / q;
            let v_hi = a.powf(-q);
            let v_lo = if b.is_infinite() { 0.0 } else { b.powf(-q) };
            let f = |v: f64| 1.0 / (q * (1.0 - v.powf(ratio)).sqrt());
            total += integrate(f, v_lo, v_hi, QUAD).value;
        } else {
            let f = |w: f64| 1.0 / (p * w.ln()).exp_m1().sqrt();
            total += integrate(f, a, b, QUAD).value;
        }
    }
    total
}

/// `h(s)` for the catenoid with slope `m0` and neck radius `r0`.
pub fn height_profile(m0: f64, r0: f64, s: f64) -> Result<f64, CatenoidError> {
    check_slope(m0)?;
    check_radius(r0)?;
    if !(s >= r0) {
        return Err(CatenoidError::BelowNeck { s, r0 });
    }
    Ok(r0 * integral_between(m0, 1.0, s / r0))
}

/// Normalized total height `𝔥(m₀) = ∫₁^∞ dw / √(w^{-2m₀} - 1)`, finite iff `m₀ < -1`.
pub fn total_height(m0: f64) -> Result<f64, CatenoidError> {
    check_slope(m0)?;
    if m0 >= -1.0 {
        return Err(CatenoidError::Divergent { m0 });
    }
    Ok(integral_between(m0, 1.0, f64::INFINITY))
}

/// `𝔥*(m₀)`: `-1/(1+m₀)` for `m₀ < -1`, else `1`.
pub fn hstar(m0: f64) -> Result<f64, CatenoidError> {
    check_slope(m0)?;
    Ok(if m0 < -1.0 { -1.0 / (1.0 + m0) } else { 1.0 })
}

/// Inverse of [`height_profile`]: the section radius at height `target_h`.
pub fn radius_at_height(m0: f64, r0: f64, target_h: f64) -> Result<f64, CatenoidError> {
    CatenoidProfile::new(m0, r0)?.radius_at_height(target_h)
}

/// The neck's curvature pair, the closed end of the half-open diagram segment
/// that starts at the (excluded) origin. Ordered as `(m₀/r₀, 1/r₀)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NeckDiagram {
    pub start: (f64, f64),
    pub start_included: bool,
    pub end: (f64, f64),
    pub end_included: bool,
}

pub fn neck_diagram(m0: f64, r0: f64) -> Result<NeckDiagram, CatenoidError> {
    check_slope(m0)?;
    check_radius(r0)?;
    Ok(NeckDiagram {
        start: (0.0, 0.0),
        start_included: false,
        end: (m0 / r0, 1.0 / r0),
        end_included: true,
    })
}

/// A catenoid with precomputed cumulative heights at the normalized radii
/// `x = s/r₀ = 2^k`, so that evaluations and inversions only integrate over a
/// single table cell. Immutable after construction.
#[derive(Debug, Clone)]
pub struct CatenoidProfile {
    m0: f64,
    r0: f64,
    knots: Vec<f64>,
    cumulative: Vec<f64>,
    total: Option<f64>,
}

impl CatenoidProfile {
    pub fn new(m0: f64, r0: f64) -> Result<Self, CatenoidError> {
        check_slope(m0)?;
        check_radius(r0)?;
        let knots: Vec<f64> = (0..=KNOTS).map(|k| 2f64.powi(k as i32)).collect();
        let mut cumulative = Vec::with_capacity(knots.len());
        let mut acc = 0.0;
        cumulative.push(0.0);
        for w in knots.windows(2) {
            acc += integral_between(m0, w[0], w[1]);
            cumulative.push(acc);
        }
        let total = if m0 < -1.0 {
            Some(acc + integral_between(m0, knots[KNOTS], f64::INFINITY))
        } else {
            None
        };
        Ok(CatenoidProfile {
            m0,
            r0,
            knots,
            cumulative,
            total,
        })
    }

    pub fn m0(&self) -> f64 {
        self.m0
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    /// `r₀ 𝔥(m₀)`, or `None` when the height is unbounded.
    pub fn total_height_bound(&self) -> Option<f64> {
        self.total.map(|t| t * self.r0)
    }

    fn normalized_height(&self, x: f64) -> f64 {
        let k = match self.knots.iter().rposition(|&knot| knot <= x) {
            Some(k) => k,
            None => return 0.0,
        };
        self.cumulative[k] + integral_between(self.m0, self.knots[k], x)
    }

    pub fn height(&self, s: f64) -> Result<f64, CatenoidError> {
        if !(s >= self.r0) {
            return Err(CatenoidError::BelowNeck { s, r0: self.r0 });
        }
        Ok(self.r0 * self.normalized_height(s / self.r0))
    }

    /// The unique `s ≥ r₀` with `h(s) = target_h`.
    pub fn radius_at_height(&self, target_h: f64) -> Result<f64, CatenoidError> {
        if !(target_h >= 0.0 && target_h.is_finite()) {
            return Err(CatenoidError::InvalidInput(format!(
                "target height must be finite and nonnegative, got {target_h}"
            )));
        }
        if let Some(bound) = self.total_height_bound() {
            if target_h >= bound {
                return Err(CatenoidError::UnreachableHeight {
                    target: target_h,
                    bound,
                });
            }
        }
        if target_h == 0.0 {
            return Ok(self.r0);
        }
        let y = target_h / self.r0;
        let last = *self.cumulative.last().expect("nonempty table");
        let x = if y < last {
            let k = self.cumulative.partition_point(|&c| c <= y) - 1;
            let (x0, c0) = (self.knots[k], self.cumulative[k]);
            bisect_increasing(
                |x| c0 + integral_between(self.m0, x0, x),
                y,
                x0,
                self.knots[k + 1],
                INVERSION_REL_TOL,
            )
        } else {
            self.invert_beyond_table(y, last)?
        };
        Ok(x * self.r0)
    }

    fn invert_beyond_table(&self, y: f64, last: f64) -> Result<f64, CatenoidError> {
        let x_last = self.knots[KNOTS];
        match self.total {
            // Bounded case: solve in v = x^{-q}, where the remaining tail is
            // (1/q) ∫₀^v dv' / √(1 - v'^{p/q}).
            Some(total) => {
                let q = -1.0 - self.m0;
                let ratio = -2.0 * self.m0 / q;
                let tail = |v: f64| integrate(|t| 1.0 / (q * (1.0 - t.powf(ratio)).sqrt()), 0.0, v, QUAD).value;
                let wanted = total - y;
                let v_hi = x_last.powf(-q);
                let v = bisect_increasing(tail, wanted, 0.0, v_hi, INVERSION_REL_TOL);
                let x = v.powf(-1.0 / q);
                if x.is_finite() {
                    Ok(x)
                } else {
                    Err(CatenoidError::UnreachableHeight {
                        target: y * self.r0,
                        bound: total * self.r0,
                    })
                }
            }
            None => {
                let mut hi = x_last * 2.0;
                while last + integral_between(self.m0, x_last, hi) < y {
                    hi *= 2.0;
                    if !hi.is_finite() {
                        return Err(CatenoidError::UnreachableHeight {
                            target: y * self.r0,
                            bound: f64::INFINITY,
                        });
                    }
                }
                Ok(bisect_increasing(
                    |x| last + integral_between(self.m0, x_last, x),
                    y,
                    x_last,
                    hi,
                    INVERSION_REL_TOL,
                ))
            }
        }
    }

    /// Triangulated surface of revolution between the neck (`z = 0`) and
    /// `z = height_cap`, with `nu` height levels and `nv` angular steps. With
    /// `mirror`, the reflected copy below `z = 0` is added, sharing the neck ring.
    pub fn revolve_mesh(&self, height_cap: f64, nu: usize, nv: usize, mirror: bool) -> Result<TriMesh, CatenoidError> {
        if nu < 8 || nv < 8 {
            return Err(CatenoidError::InvalidInput(format!(
                "mesh resolution must be at least 8x8, got {nu}x{nv}"
            )));
        }
        let radii: Vec<(f64, f64)> = (0..nu)
            .map(|i| {
                let z = height_cap * i as f64 / (nu - 1) as f64;
                self.radius_at_height(z).map(|s| (s, z))
            })
            .collect::<Result<_, _>>()?;
        let mut levels: Vec<(f64, f64)> = Vec::new();
        if mirror {
            levels.extend(radii.iter().rev().filter(|(_, z)| *z > 0.0).map(|&(s, z)| (s, -z)));
        }
        levels.extend(radii.iter().copied());
        let mut mesh = TriMesh::default();
        for &(s, z) in &levels {
            for j in 0..nv {
                let th = std::f64::consts::TAU * j as f64 / nv as f64;
                mesh.vertices.push([s * th.cos(), s * th.sin(), z]);
            }
        }
        for i in 0..levels.len() - 1 {
            for j in 0..nv {
                let a = i * nv + j;
                let b = i * nv + (j + 1) % nv;
                let c = (i + 1) * nv + j;
                let d = (i + 1) * nv + (j + 1) % nv;
                mesh.faces.push([a, b, d]);
                mesh.faces.push([a, d, c]);
            }
        }
        Ok(mesh)
    }

    /// `(s, h(s))` rows at `n` radii spaced uniformly in height up to `height_cap`.
    pub fn profile_rows(&self, height_cap: f64, n: usize) -> Result<Vec<(f64, f64)>, CatenoidError> {
        let n = n.max(2);
        (0..n)
            .map(|i| {
                let z = height_cap * i as f64 / (n - 1) as f64;
                self.radius_at_height(z).map(|s| (s, z))
            })
            .collect()
    }
}

/// Convenience wrapper over [`CatenoidProfile::revolve_mesh`].
pub fn revolve_mesh(
    m0: f64,
    r0: f64,
    height_cap: f64,
    nu: usize,
    nv: usize,
    mirror: bool,
) -> Result<TriMesh, CatenoidError> {
    CatenoidProfile::new(m0, r0)?.revolve_mesh(height_cap, nu, nv, mirror)
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct TriMesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<[usize; 3]>,
}

impl TriMesh {
    /// ASCII Wavefront OBJ (1-based face indices).
    pub fn write_obj<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "# swcert catenoid mesh")?;
        for v in &self.vertices {
            writeln!(out, "v {:.12} {:.12} {:.12}", v[0], v[1], v[2])?;
        }
        for f in &self.faces {
            writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1)?;
        }
        Ok(())
    }

    /// Edges used by exactly one face.
    pub fn boundary_edge_count(&self) -> usize {
        let mut counts = std::collections::HashMap::new();
        for f in &self.faces {
            for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
                *counts.entry((a.min(b), a.max(b))).or_insert(0usize) += 1;
            }
        }
        counts.values().filter(|&&c| c == 1).count()
    }
}

/// CSV with header `s,h`.
pub fn write_profile_csv<W: Write>(rows: &[(f64, f64)], mut out: W) -> io::Result<()> {
    writeln!(out, "s,h")?;
    for (s, h) in rows {
        writeln!(out, "{s:.12e},{h:.12e}")?;
    }
    Ok(())
}
