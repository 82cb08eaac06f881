//! Weingarten classes `κ₂ = g(κ₁)` with `g: [α, b) → ℝ`, `g(α) = α`, `g' < 0`.
//!
//! Every "for all t" hypothesis is checked on a finite grid; the grids and
//! horizons used are recorded in the returned values and never extrapolated.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gexpr::{self, EvalError, Expr, ParseError};
use crate::numeric::golden_min;

/// Points in the validation grid used by [`WeingartenClass::build`].
pub const VALIDATION_POINTS: usize = 4096;
/// Points in the grids used by the hypothesis checks.
pub const CHECK_POINTS: usize = 8192;
/// How close (relative to `b - α`) geometric grids approach a finite `b`.
const ASYMPTOTE_DEPTH: f64 = 1e-12;
/// For `b = ∞`, grids extend to `α + HORIZON_FACTOR · max(α, 1)`.
pub const HORIZON_FACTOR: f64 = 1e6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WeingartenError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("g({alpha}) = {value}, expected the umbilicity fixed point g(α) = α")]
    NotUmbilic { alpha: f64, value: f64 },
    #[error("g is not strictly decreasing: g({t0}) = {g0} but g({t1}) = {g1}")]
    NotElliptic { t0: f64, g0: f64, t1: f64, g1: f64 },
    #[error("could not evaluate g({t}): {source}")]
    Eval { t: f64, source: EvalError },
    #[error("expression error: {0}")]
    Parse(#[from] ParseError),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// The concrete function behind a class, before any homothety.
#[derive(Clone)]
pub enum GBase {
    Expr(Expr),
    /// `2H - t`
    LinearCmc {
        h: f64,
    },
    /// `(1 - c) α + c t`
    LinearWeingarten {
        alpha: f64,
        c: f64,
    },
    /// `(n₁ t + n₀) / (d₁ t + d₀)`
    Rational {
        num: [f64; 2],
        den: [f64; 2],
    },
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for GBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GBase::Expr(e) => write!(f, "Expr({e})"),
            GBase::LinearCmc { h } => write!(f, "LinearCmc {{ h: {h} }}"),
            GBase::LinearWeingarten { alpha, c } => write!(f, "LinearWeingarten {{ alpha: {alpha}, c: {c} }}"),
            GBase::Rational { num, den } => write!(f, "Rational {{ num: {num:?}, den: {den:?} }}"),
            GBase::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

impl GBase {
    fn eval(&self, t: f64) -> Result<f64, EvalError> {
        let v = match self {
            GBase::Expr(e) => return e.eval(t),
            GBase::LinearCmc { h } => 2.0 * h - t,
            GBase::LinearWeingarten { alpha, c } => (1.0 - c) * alpha + c * t,
            GBase::Rational { num, den } => {
                let d = den[0] * t + den[1];
                if d == 0.0 {
                    return Err(EvalError::DivisionByZero);
                }
                (num[0] * t + num[1]) / d
            }
            GBase::Custom(f) => f(t),
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(EvalError::NonFinite)
        }
    }
}

/// `t ↦ g(d t) / d` for a base `g`; homotheties compose by multiplying `d`.
#[derive(Debug, Clone)]
pub struct GFunction {
    base: Arc<GBase>,
    scale: f64,
}

impl GFunction {
    pub fn new(base: GBase) -> Self {
        GFunction {
            base: Arc::new(base),
            scale: 1.0,
        }
    }

    pub fn eval(&self, t: f64) -> Result<f64, EvalError> {
        if self.scale == 1.0 {
            self.base.eval(t)
        } else {
            Ok(self.base.eval(self.scale * t)? / self.scale)
        }
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TypeTag {
    MinimalType,
    CmcType,
    CgcType,
}

/// A validated Weingarten class `𝒲_g`.
#[derive(Debug, Clone)]
pub struct WeingartenClass {
    g: GFunction,
    alpha: f64,
    b: f64,
    type_tag: TypeTag,
    beta: Option<f64>,
    validated_up_to: f64,
}

/// Sorted grid on `[lo, hi)` (finite `hi`), uniform plus a geometric approach to `hi`.
fn grid_to_asymptote(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let half = n / 2;
    let width = hi - lo;
    let mut g: Vec<f64> = (0..half).map(|i| lo + width * i as f64 / half as f64).collect();
    let decades = -ASYMPTOTE_DEPTH.log10();
    for k in 1..=half {
        let t = hi - width * 10f64.powf(-decades * k as f64 / half as f64);
        if t < hi {
            g.push(t);
        }
    }
    finish_grid(g)
}

/// Sorted grid on the closed interval `[lo, hi]`, uniform plus geometric
/// refinement near `lo`.
fn closed_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let width = hi - lo;
    let half = n / 2;
    let mut g: Vec<f64> = (0..=half).map(|i| lo + width * i as f64 / half as f64).collect();
    for k in 1..half {
        g.push(lo + width * 10f64.powf(-6.0 * k as f64 / half as f64));
    }
    g.push(hi);
    finish_grid(g)
}

/// Grid on `[lo, ∞)` truncated at `lo + HORIZON_FACTOR · max(lo, 1)`.
fn grid_to_horizon(lo: f64, n: usize) -> Vec<f64> {
    let span = lo.max(1.0);
    let half = n / 2;
    let mut g: Vec<f64> = (0..half).map(|i| lo + 10.0 * span * i as f64 / half as f64).collect();
    let decades = HORIZON_FACTOR.log10() - 1.0;
    for k in 0..=half {
        g.push(lo + 10.0 * span * 10f64.powf(decades * k as f64 / half as f64));
    }
    finish_grid(g)
}

fn finish_grid(mut g: Vec<f64>) -> Vec<f64> {
    g.sort_by(f64::total_cmp);
    g.dedup();
    g
}

impl WeingartenClass {
    /// Validates `g` on `[alpha, b)` and classifies the class. `b = None`
    /// means `b = +∞`.
    pub fn build(g: GFunction, alpha: f64, b: Option<f64>) -> Result<Self, WeingartenError> {
        let b = b.unwrap_or(f64::INFINITY);
        if !(alpha >= 0.0 && alpha.is_finite()) {
            return Err(WeingartenError::InvalidInput(format!(
                "alpha must be finite and nonnegative, got {alpha}"
            )));
        }
        if !(b > alpha) {
            return Err(WeingartenError::InvalidInput(format!(
                "domain end b = {b} must exceed alpha = {alpha}"
            )));
        }
        let eval = |t: f64| g.eval(t).map_err(|source| WeingartenError::Eval { t, source });
        let g_alpha = eval(alpha)?;
        if (g_alpha - alpha).abs() > 1e-10 * alpha.abs().max(1e-4) {
            return Err(WeingartenError::NotUmbilic { alpha, value: g_alpha });
        }
        let (grid, validated_up_to) = if b.is_finite() {
            (grid_to_asymptote(alpha, b, VALIDATION_POINTS), b)
        } else {
            let g = grid_to_horizon(alpha, VALIDATION_POINTS);
            let top = *g.last().expect("nonempty grid");
            (g, top)
        };
        let values: Vec<f64> = grid.iter().map(|&t| eval(t)).collect::<Result<_, _>>()?;
        for i in 1..grid.len() {
            if values[i] >= values[i - 1] {
                return Err(WeingartenError::NotElliptic {
                    t0: grid[i - 1],
                    g0: values[i - 1],
                    t1: grid[i],
                    g1: values[i],
                });
            }
        }
        let (type_tag, beta) = if alpha == 0.0 {
            (TypeTag::MinimalType, None)
        } else {
            match values.iter().position(|&v| v <= 0.0) {
                None => (TypeTag::CgcType, None),
                Some(i) if values[i] == 0.0 => (TypeTag::CmcType, Some(grid[i])),
                Some(i) => (TypeTag::CmcType, Some(bisect_root(&g, grid[i - 1], grid[i])?)),
            }
        };
        Ok(WeingartenClass {
            g,
            alpha,
            b,
            type_tag,
            beta,
            validated_up_to,
        })
    }

    pub fn from_spec(spec: &GSpec) -> Result<Self, WeingartenError> {
        let (base, alpha, b) = spec.resolve()?;
        WeingartenClass::build(GFunction::new(base), alpha, b)
    }

    pub fn g(&self, t: f64) -> Result<f64, EvalError> {
        self.g.eval(t)
    }

    pub fn function(&self) -> &GFunction {
        &self.g
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Domain end; `f64::INFINITY` when unbounded.
    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn type_tag(&self) -> TypeTag {
        self.type_tag
    }

    /// Cylinder curvature, the zero of `g`; present iff CMC-type.
    pub fn beta(&self) -> Option<f64> {
        self.beta
    }

    /// Largest `t` covered by the validation grid.
    pub fn validated_up_to(&self) -> f64 {
        self.validated_up_to
    }

    /// The equivalent class `g̃(t) = g(d t)/d` on `[α/d, b/d)`.
    pub fn homothety(&self, d: f64) -> Result<Self, WeingartenError> {
        if !(d > 0.0 && d.is_finite()) {
            return Err(WeingartenError::InvalidInput(format!(
                "homothety ratio must be positive, got {d}"
            )));
        }
        Ok(WeingartenClass {
            g: GFunction {
                base: self.g.base.clone(),
                scale: self.g.scale * d,
            },
            alpha: self.alpha / d,
            b: self.b / d,
            type_tag: self.type_tag,
            beta: self.beta.map(|beta| beta / d),
            validated_up_to: self.validated_up_to / d,
        })
    }

    fn eval_grid(&self, grid: &[f64]) -> Result<Vec<f64>, WeingartenError> {
        grid.iter()
            .map(|&t| self.g.eval(t).map_err(|source| WeingartenError::Eval { t, source }))
            .collect()
    }

    /// Grid over `[alpha, upper]`, or `[alpha, b)` approached geometrically
    /// when `upper` reaches `b`. Returns the grid and whether it was clamped.
    fn check_grid(&self, upper: f64) -> (Vec<f64>, bool) {
        if self.b.is_finite() && upper >= self.b {
            (grid_to_asymptote(self.alpha, self.b, CHECK_POINTS), true)
        } else {
            (closed_grid(self.alpha, upper, CHECK_POINTS), false)
        }
    }

    /// Minimum of `g(t) - line(t)` on the grid, refined by golden section in
    /// the cells around the grid minimizer. Returns `(argmin, min)`.
    fn min_gap<L: Fn(f64) -> f64>(&self, grid: &[f64], line: L) -> Result<(f64, f64), WeingartenError> {
        let values = self.eval_grid(grid)?;
        let gaps: Vec<f64> = grid.iter().zip(&values).map(|(&t, &v)| v - line(t)).collect();
        let i = (0..gaps.len())
            .min_by(|&a, &b| gaps[a].total_cmp(&gaps[b]))
            .expect("nonempty grid");
        let lo = grid[i.saturating_sub(1)];
        let hi = grid[(i + 1).min(grid.len() - 1)];
        let (t, v) = golden_min(
            |t| self.g.eval(t).map(|g| g - line(t)).unwrap_or(f64::INFINITY),
            lo,
            hi,
            1e-14 * hi.abs().max(1.0),
        );
        Ok(if v < gaps[i] { (t, v) } else { (grid[i], gaps[i]) })
    }

    /// Checks `g(t) ≥ (1 - m₀)α + m₀ t` on `[α, min(T, b))`.
    pub fn check_assumption1(&self, m0: f64, horizon: f64) -> Result<Assumption1Check, WeingartenError> {
        if !(self.alpha > 0.0) {
            return Err(WeingartenError::Precondition(
                "assumption check requires alpha > 0".into(),
            ));
        }
        if !(m0 < 0.0) {
            return Err(WeingartenError::Precondition(format!("m0 must be negative, got {m0}")));
        }
        if !(horizon > self.alpha && horizon.is_finite()) {
            return Err(WeingartenError::Precondition(format!(
                "horizon {horizon} must be finite and exceed alpha = {}",
                self.alpha
            )));
        }
        let alpha = self.alpha;
        let line = |t: f64| (1.0 - m0) * alpha + m0 * t;
        let (grid, clamped) = self.check_grid(horizon);
        let (argmin, min_margin) = self.min_gap(&grid, line)?;
        // rounding slack for classes that coincide with the line
        let slack = 1e-12 * line(argmin).abs().max(alpha);
        Ok(Assumption1Check {
            m0,
            holds: min_margin >= -slack,
            min_margin,
            argmin,
            verified_up_to: if clamped { self.b } else { horizon },
            clamped,
        })
    }

    /// Checks `g(t) > m₀ t` on `[α, 1/r_gamma]`.
    pub fn check_condition_e(&self, m0: f64, r_gamma: f64) -> Result<ConditionECheck, WeingartenError> {
        if !(r_gamma > 0.0) {
            return Err(WeingartenError::Precondition(format!(
                "r_gamma must be positive, got {r_gamma}"
            )));
        }
        let upper = 1.0 / r_gamma;
        if !(self.alpha > 0.0 && self.alpha <= upper) {
            return Err(WeingartenError::Precondition(format!(
                "condition (E) needs 0 < alpha <= 1/r_gamma, got alpha = {}, 1/r_gamma = {upper}",
                self.alpha
            )));
        }
        let (grid, clamped) = self.check_grid(upper);
        let (argmin, min_margin) = self.min_gap(&grid, |t| m0 * t)?;
        Ok(ConditionECheck {
            holds: min_margin > 0.0,
            min_margin,
            argmin,
            upper: if clamped { self.b } else { upper },
            clamped,
        })
    }
}

fn bisect_root(g: &GFunction, mut lo: f64, mut hi: f64) -> Result<f64, WeingartenError> {
    // g(lo) > 0 >= g(hi)
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = g.eval(mid).map_err(|source| WeingartenError::Eval { t: mid, source })?;
        if v > 0.0 {
            lo = mid;
        } else if v < 0.0 {
            hi = mid;
        } else {
            return Ok(mid);
        }
    }
    let glo = g.eval(lo).map_err(|source| WeingartenError::Eval { t: lo, source })?;
    let ghi = g.eval(hi).map_err(|source| WeingartenError::Eval { t: hi, source })?;
    Ok(if glo.abs() < ghi.abs() { lo } else { hi })
}

/// Result of the assumption `g(t) ≥ (1 - m₀)α + m₀ t`, verified on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Assumption1Check {
    pub m0: f64,
    pub holds: bool,
    pub min_margin: f64,
    pub argmin: f64,
    pub verified_up_to: f64,
    /// The requested horizon reached past `b` and was clamped.
    pub clamped: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionECheck {
    pub holds: bool,
    pub min_margin: f64,
    pub argmin: f64,
    pub upper: f64,
    pub clamped: bool,
}

/// Comparability hypothesis of the tangency principle: `α₁ ≤ α₂`, `b₁ ≤ b₂`
/// and `g₁ ≤ g₂` where both are defined, i.e. on `[α₂, b₁)`.
pub fn diagram_dominates(w1: &WeingartenClass, w2: &WeingartenClass) -> bool {
    if !(w1.alpha <= w2.alpha && w1.b <= w2.b) {
        return false;
    }
    let lo = w2.alpha;
    let hi = w1.b;
    if !(hi > lo) {
        return true;
    }
    let grid = if hi.is_finite() {
        grid_to_asymptote(lo, hi, CHECK_POINTS)
    } else {
        grid_to_horizon(lo, CHECK_POINTS)
    };
    grid.iter().all(|&t| match (w1.g.eval(t), w2.g.eval(t)) {
        (Ok(a), Ok(b)) => a <= b,
        _ => false,
    })
}

/// Input channel for `g`, as found in JSON files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GSpec {
    Expression {
        expr: String,
        alpha: f64,
        #[serde(default)]
        b: Option<f64>,
    },
    Family(Family),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum Family {
    /// `g(t) = 2H - t` on `[H, ∞)`.
    LinearCmc {
        #[serde(rename = "H")]
        h: f64,
    },
    /// `g(t) = (1 - c)α + c t` on `[α, ∞)`, `c < 0`.
    LinearWeingarten { alpha: f64, c: f64 },
    /// `g(t) = (num[0] t + num[1]) / (den[0] t + den[1])` on `[α, b)`.
    Rational {
        num: [f64; 2],
        den: [f64; 2],
        alpha: f64,
        #[serde(default)]
        b: Option<f64>,
    },
}

impl GSpec {
    fn resolve(&self) -> Result<(GBase, f64, Option<f64>), WeingartenError> {
        Ok(match self {
            GSpec::Expression { expr, alpha, b } => (GBase::Expr(gexpr::parse(expr)?), *alpha, *b),
            GSpec::Family(Family::LinearCmc { h }) => {
                if !(*h > 0.0) {
                    return Err(WeingartenError::InvalidInput(format!("H must be positive, got {h}")));
                }
                (GBase::LinearCmc { h: *h }, *h, None)
            }
            GSpec::Family(Family::LinearWeingarten { alpha, c }) => {
                if !(*c < 0.0) {
                    return Err(WeingartenError::InvalidInput(format!(
                        "slope c must be negative, got {c}"
                    )));
                }
                (GBase::LinearWeingarten { alpha: *alpha, c: *c }, *alpha, None)
            }
            GSpec::Family(Family::Rational { num, den, alpha, b }) => {
                (GBase::Rational { num: *num, den: *den }, *alpha, *b)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expr_class(expr: &str, alpha: f64, b: Option<f64>) -> Result<WeingartenClass, WeingartenError> {
        WeingartenClass::from_spec(&GSpec::Expression {
            expr: expr.into(),
            alpha,
            b,
        })
    }

    fn ellipse_line_example() -> WeingartenClass {
        expr_class("(40*t-4)/(375*t-75)", 1.0 / 25.0, Some(0.2)).unwrap()
    }

    #[test]
    fn linear_cmc() {
        let w = expr_class("2 - t", 1.0, None).unwrap();
        assert_eq!(w.type_tag(), TypeTag::CmcType);
        assert_eq!(w.beta(), Some(2.0));
        let f = WeingartenClass::from_spec(&GSpec::Family(Family::LinearCmc { h: 1.0 })).unwrap();
        assert_eq!(f.beta(), Some(2.0));
        assert_eq!(f.alpha(), 1.0);
    }

    #[test]
    fn rational_example() {
        let w = ellipse_line_example();
        assert_eq!(w.type_tag(), TypeTag::CmcType);
        let beta = w.beta().unwrap();
        assert!((beta - 0.1).abs() < 1e-14, "{beta}");
        assert!(w.g(beta).unwrap().abs() <= 1e-12);
        assert!((w.g(w.alpha()).unwrap() - w.alpha()).abs() <= 1e-12);

        let fam = WeingartenClass::from_spec(&GSpec::Family(Family::Rational {
            num: [40.0, -4.0],
            den: [375.0, -75.0],
            alpha: 0.04,
            b: Some(0.2),
        }))
        .unwrap();
        assert!((fam.beta().unwrap() - 0.1).abs() < 1e-14);
    }

    #[test]
    fn increasing_g_is_not_elliptic() {
        assert!(matches!(
            expr_class("t", 1.0, None),
            Err(WeingartenError::NotElliptic { .. })
        ));
    }

    #[test]
    fn missing_fixed_point() {
        assert!(matches!(
            expr_class("3 - t", 1.0, None),
            Err(WeingartenError::NotUmbilic { .. })
        ));
    }

    #[test]
    fn type_classification() {
        assert_eq!(expr_class("-t", 0.0, None).unwrap().type_tag(), TypeTag::MinimalType);
        let cgc = expr_class("1/t", 1.0, None).unwrap();
        assert_eq!(cgc.type_tag(), TypeTag::CgcType);
        assert_eq!(cgc.beta(), None);
        let lw = WeingartenClass::from_spec(&GSpec::Family(Family::LinearWeingarten { alpha: 1.0, c: -2.0 })).unwrap();
        assert_eq!(lw.type_tag(), TypeTag::CmcType);
        // (1 - c)α + cβ = 0 → β = 1.5
        assert!((lw.beta().unwrap() - 1.5).abs() < 1e-14);
    }

    #[test]
    fn homothety_of_linear_cmc() {
        let w = expr_class("2 - t", 1.0, None).unwrap();
        let h = w.homothety(2.0).unwrap();
        assert_eq!(h.alpha(), 0.5);
        assert_eq!(h.beta(), Some(1.0));
        for t in [0.5, 0.8, 3.0, 100.0] {
            assert!((h.g(t).unwrap() - (1.0 - t)).abs() < 1e-15);
        }
        assert_eq!(h.type_tag(), w.type_tag());
        let same = w.homothety(1.0).unwrap();
        assert_eq!(same.g(1.7).unwrap(), w.g(1.7).unwrap());
        let back = h.homothety(0.5).unwrap();
        for t in [1.0, 1.3, 7.0] {
            assert!((back.g(t).unwrap() - w.g(t).unwrap()).abs() < 1e-12);
        }
        assert!(w.homothety(0.0).is_err());
    }

    #[test]
    fn assumption1() {
        let w = expr_class("2 - t", 1.0, None).unwrap();
        let c = w.check_assumption1(-1.0, 100.0).unwrap();
        assert!(c.holds);
        assert_eq!(c.min_margin, 0.0);
        assert_eq!(c.verified_up_to, 100.0);
        let c = w.check_assumption1(-2.0, 100.0).unwrap();
        assert!(c.holds);
        assert!(c.min_margin.abs() < 1e-12, "margin attained at t = α");

        let p = ellipse_line_example();
        let c = p.check_assumption1(-1.0, 0.199).unwrap();
        assert!(!c.holds);
        assert!(c.min_margin < 0.0);
        let c = p.check_assumption1(-1.0, 5.0).unwrap();
        assert!(c.clamped && !c.holds);
        assert_eq!(c.verified_up_to, 0.2);
    }

    #[test]
    fn condition_e() {
        let w = expr_class("2 - t", 1.0, None).unwrap();
        assert!(w.check_condition_e(-1.0, 1.0).unwrap().holds);
        assert!(matches!(
            w.check_condition_e(-1.0, 2.0),
            Err(WeingartenError::Precondition(_))
        ));

        let p = ellipse_line_example();
        // g(0.19) = -0.96 < -0.19
        let e = p.check_condition_e(-1.0, 1.0 / 0.19).unwrap();
        assert!(!e.holds);
        // g stays positive below beta = 0.1, so the check passes there
        let e = p.check_condition_e(-1.0, 1.0 / 0.1).unwrap();
        assert!(e.holds);
        let e = p.check_condition_e(-1.0, 1.0).unwrap();
        assert!(e.clamped);
    }

    #[test]
    fn dominance() {
        let minimal = expr_class("-t", 0.0, None).unwrap();
        let cmc = expr_class("2 - t", 1.0, None).unwrap();
        assert!(diagram_dominates(&minimal, &cmc));
        assert!(diagram_dominates(&cmc, &cmc));
        assert!(!diagram_dominates(&cmc, &minimal));
    }

    #[test]
    fn spec_json() {
        let s: GSpec = serde_json::from_str(r#"{"expr":"(40*t-4)/(375*t-75)","alpha":0.04,"b":0.2}"#).unwrap();
        assert!(matches!(s, GSpec::Expression { .. }));
        let f: GSpec = serde_json::from_str(r#"{"family":"linear_cmc","H":1.0}"#).unwrap();
        assert_eq!(f, GSpec::Family(Family::LinearCmc { h: 1.0 }));
        assert!(serde_json::from_str::<GSpec>(r#"{"family":"cubic"}"#).is_err());
    }
}
