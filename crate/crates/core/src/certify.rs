//! Hypothesis checkers for the disk-type theorems: the homothety threshold
//! `d₀(Γ)`, the pinching conditions with `C(ε, Λ, λ)` and the general
//! condition list (A)–(G), together with the auxiliary `r_d`, `j(s)`, `s₀`.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::catenoid::{self, CatenoidError};
use crate::limacon::{self, LimaconError};
use crate::report::{round_sig, SIGNIFICANT_DIGITS};
use crate::weingarten::{Assumption1Check, TypeTag, WeingartenClass, WeingartenError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertifyError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("r_d is undefined: d = {d} must exceed alpha·h*/2 = {bound}")]
    UndefinedRd { d: f64, bound: f64 },
    #[error("j(s) is defined for s >= 2ω; got s = {s}, ω = {omega}")]
    Domain { s: f64, omega: f64 },
    #[error("class is not of CMC type (alpha = {alpha}, beta = {beta:?})")]
    NotCmcType { alpha: f64, beta: Option<f64> },
    #[error("missing hypothesis: {0}")]
    MissingHypothesis(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Catenoid(#[from] CatenoidError),
    #[error(transparent)]
    Limacon(#[from] LimaconError),
    #[error(transparent)]
    Weingarten(#[from] WeingartenError),
}

/// Curvature data of the boundary curve: `Λ = max κ`, `λ = min κ`, `ω` the
/// enclosing radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveData {
    pub max_curvature: f64,
    pub min_curvature: f64,
    pub omega: f64,
}

impl CurveData {
    fn validate(&self) -> Result<(), CertifyError> {
        let CurveData {
            max_curvature: big,
            min_curvature: small,
            omega,
        } = *self;
        if !(big > 0.0 && small > 0.0 && omega > 0.0 && big.is_finite() && small.is_finite() && omega.is_finite()) {
            return Err(CertifyError::InvalidInput(format!(
                "Lambda, lambda and omega must be positive, got {big}, {small}, {omega}"
            )));
        }
        Ok(())
    }

    /// `√(λ/Λ³)`, the guaranteed graph radius.
    pub fn r_gamma(&self) -> Result<f64, CertifyError> {
        Ok(limacon::graph_lemma_radius(self.max_curvature, self.min_curvature)?.r_gamma())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Theorem1,
    Theorem2,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

/// One checked inequality; `margin > 0` means satisfied with room to spare.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    pub margin: f64,
    /// Reported for context only; does not enter the overall verdict.
    pub informational: bool,
}

impl Condition {
    fn strict(name: &str, margin: f64) -> Self {
        Condition {
            name: name.into(),
            holds: margin > 0.0,
            margin,
            informational: false,
        }
    }

    fn non_strict(name: &str, margin: f64) -> Self {
        Condition {
            name: name.into(),
            holds: margin >= 0.0,
            margin,
            informational: false,
        }
    }

    fn info(mut self) -> Self {
        self.informational = true;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificationReport {
    pub mode: Mode,
    pub inputs: BTreeMap<String, f64>,
    pub intermediates: BTreeMap<String, f64>,
    pub conditions: Vec<Condition>,
    pub overall: Verdict,
    pub d0: Option<f64>,
    pub notes: Vec<String>,
}

impl CertificationReport {
    fn new(mode: Mode) -> Self {
        CertificationReport {
            mode,
            inputs: BTreeMap::new(),
            intermediates: BTreeMap::new(),
            conditions: Vec::new(),
            overall: Verdict::Fail,
            d0: None,
            notes: Vec::new(),
        }
    }

    fn input(&mut self, key: &str, value: f64) {
        self.inputs.insert(key.into(), value);
    }

    fn mid(&mut self, key: &str, value: f64) {
        self.intermediates.insert(key.into(), value);
    }

    fn finish(mut self) -> Self {
        let pass = self.conditions.iter().filter(|c| !c.informational).all(|c| c.holds);
        self.overall = if pass { Verdict::Pass } else { Verdict::Fail };
        self
    }

    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }
}

/// `r_d = √(2 d h*/α − h*²)`, defined for `d > α h*/2`.
pub fn r_d_value(d: f64, alpha: f64, h_star: f64) -> Result<f64, CertifyError> {
    if !(alpha > 0.0 && h_star > 0.0) {
        return Err(CertifyError::InvalidInput(format!(
            "alpha and h* must be positive, got {alpha}, {h_star}"
        )));
    }
    let bound = alpha * h_star / 2.0;
    if !(d > bound) {
        return Err(CertifyError::UndefinedRd { d, bound });
    }
    Ok((2.0 * d * h_star / alpha - h_star * h_star).sqrt())
}

/// `j(s) = √((s − 2ω)³/(s − ω))` on `s ≥ 2ω`.
pub fn j_value(s: f64, omega: f64) -> Result<f64, CertifyError> {
    if !(omega > 0.0) {
        return Err(CertifyError::InvalidInput(format!(
            "omega must be positive, got {omega}"
        )));
    }
    if !(s >= 2.0 * omega) {
        return Err(CertifyError::Domain { s, omega });
    }
    Ok(j_unchecked(s, omega))
}

fn j_unchecked(s: f64, omega: f64) -> f64 {
    let u = s - 2.0 * omega;
    (u * u * u / (s - omega)).sqrt()
}

/// Smallest `s ≥ 2ω` with `j(s) = target`. Since `j(s) > s − 5ω/2`, the
/// root lies in `[2ω, target + 5ω/2]`.
pub fn s0_solve(omega: f64, target: f64) -> Result<f64, CertifyError> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(CertifyError::InvalidInput(format!(
            "omega must be positive, got {omega}"
        )));
    }
    if !(target >= 0.0 && target.is_finite()) {
        return Err(CertifyError::InvalidInput(format!(
            "target must be nonnegative, got {target}"
        )));
    }
    let mut lo = 2.0 * omega;
    if target == 0.0 {
        return Ok(lo);
    }
    let mut hi = target + 2.5 * omega;
    while j_unchecked(hi, omega) <= target {
        hi *= 2.0;
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if j_unchecked(mid, omega) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// The two branches of `C(ε, Λ, λ)` and their minimum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CValue {
    pub value: f64,
    pub first: f64,
    pub second: f64,
}

fn check_epsilon(epsilon: f64) -> Result<(), CertifyError> {
    if epsilon > 0.0 && epsilon < 2.0 / 3.0 {
        Ok(())
    } else {
        Err(CertifyError::InvalidInput(format!(
            "epsilon must lie in (0, 2/3), got {epsilon}"
        )))
    }
}

/// `C(ε,Λ,λ) = min{Λλ/(Λ+λ), 8ε√(λ⁵Λ³) / ((9√Λ³ + 2√λ³(cosh ε − 1))² + 4ε²λ³)}`.
pub fn c_constant(epsilon: f64, max_curvature: f64, min_curvature: f64) -> Result<CValue, CertifyError> {
    check_epsilon(epsilon)?;
    let (big, small) = (max_curvature, min_curvature);
    if !(big > 0.0 && small > 0.0) {
        return Err(CertifyError::InvalidInput(format!(
            "curvatures must be positive, got {big}, {small}"
        )));
    }
    let first = big * small / (big + small);
    let root_big3 = big.powi(3).sqrt();
    let root_small3 = small.powi(3).sqrt();
    let lead = 9.0 * root_big3 + 2.0 * root_small3 * (epsilon.cosh() - 1.0);
    let second =
        8.0 * epsilon * (small.powi(5) * big.powi(3)).sqrt() / (lead * lead + 4.0 * epsilon * epsilon * small.powi(3));
    Ok(CValue {
        value: first.min(second),
        first,
        second,
    })
}

/// The four threshold inequalities at a given `d`, in their source form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdInputs {
    pub alpha: f64,
    pub beta: f64,
    pub min_curvature: f64,
    pub h_star: f64,
    pub s0: f64,
}

/// Evaluates, at ratio `d`:
/// `A: 1/λ + d/β < d/α`, `B: r_d > 2/λ`, `C: r_d ≥ s₀`, `D: 2d/β − 2h* > h*`.
/// `B` and `C` are compared through `r_d²` so that margins stay finite
/// when `r_d` is undefined.
pub fn threshold_inequalities(d: f64, p: &ThresholdInputs) -> [Condition; 4] {
    let ThresholdInputs {
        alpha,
        beta,
        min_curvature,
        h_star,
        s0,
    } = *p;
    let rd2 = 2.0 * d * h_star / alpha - h_star * h_star;
    let two_over = 2.0 / min_curvature;
    [
        Condition::strict("A", d / alpha - 1.0 / min_curvature - d / beta),
        Condition::strict("B", rd2 - two_over * two_over),
        Condition::non_strict("C", rd2 - s0 * s0),
        Condition::strict("D", 2.0 * d / beta - 3.0 * h_star),
    ]
}

/// Closed-form rearrangements of the four inequalities as lower bounds on `d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    pub d_a: f64,
    pub d_b: f64,
    pub d_c: f64,
    pub d_d: f64,
}

impl Thresholds {
    pub fn from_inputs(p: &ThresholdInputs) -> Self {
        let ThresholdInputs {
            alpha,
            beta,
            min_curvature,
            h_star,
            s0,
        } = *p;
        let two_over = 2.0 / min_curvature;
        Thresholds {
            d_a: alpha * beta / (min_curvature * (beta - alpha)),
            d_b: alpha * (two_over * two_over + h_star * h_star) / (2.0 * h_star),
            d_c: alpha * (s0 * s0 + h_star * h_star) / (2.0 * h_star),
            d_d: 1.5 * beta * h_star,
        }
    }

    pub fn d0(&self) -> f64 {
        self.d_a.max(self.d_b).max(self.d_c).max(self.d_d)
    }

    /// Name of the inequality whose threshold is largest.
    pub fn binding(&self) -> &'static str {
        let all = [("A", self.d_a), ("B", self.d_b), ("C", self.d_c), ("D", self.d_d)];
        all.iter()
            .fold(all[0], |best, c| if c.1 > best.1 { *c } else { best })
            .0
    }
}

/// Quantities shared by the first theorem and the general list.
#[derive(Debug, Clone, Copy, PartialEq)]
struct BarrierData {
    r_gamma: f64,
    h_star: f64,
    r1: f64,
    target: f64,
    s0: f64,
}

fn barrier_data(curve: &CurveData, m0: f64, h_star: f64, r_gamma: f64) -> Result<BarrierData, CertifyError> {
    let r1 = catenoid::radius_at_height(m0, r_gamma, h_star)?;
    let target = 2.0 * curve.omega + r1 - r_gamma;
    let s0 = s0_solve(curve.omega, target)?;
    Ok(BarrierData {
        r_gamma,
        h_star,
        r1,
        target,
        s0,
    })
}

fn cmc_beta(w: &WeingartenClass) -> Result<f64, CertifyError> {
    match (w.type_tag(), w.beta()) {
        (TypeTag::CmcType, Some(beta)) if beta > w.alpha() => Ok(beta),
        _ => Err(CertifyError::NotCmcType {
            alpha: w.alpha(),
            beta: w.beta(),
        }),
    }
}

fn require_ordered(curve: &CurveData) -> Result<(), CertifyError> {
    curve.validate()?;
    if curve.max_curvature < curve.min_curvature {
        return Err(CertifyError::InvalidInput(format!(
            "Lambda = {} must be at least lambda = {}",
            curve.max_curvature, curve.min_curvature
        )));
    }
    Ok(())
}

fn echo_curve(report: &mut CertificationReport, curve: &CurveData) {
    report.input("Lambda", curve.max_curvature);
    report.input("lambda", curve.min_curvature);
    report.input("omega", curve.omega);
}

fn echo_barrier(report: &mut CertificationReport, b: &BarrierData, curve: &CurveData) {
    report.mid("r_gamma", b.r_gamma);
    report.mid("r_gamma_upper", 1.0 / curve.max_curvature);
    report.mid("h_star", b.h_star);
    report.mid("r1", b.r1);
    report.mid("R1", curve.omega);
    report.mid("target", b.target);
    report.mid("s0", b.s0);
}

/// Homothety threshold for the first theorem. The assumption
/// `g(t) ≥ (1 − m₀)α + m₀t` must have been checked by
/// [`WeingartenClass::check_assumption1`] for the same `m₀`. When `d` is
/// given, the four inequalities are also evaluated at that ratio.
pub fn theorem1_threshold(
    curve: &CurveData,
    w: &WeingartenClass,
    m0: f64,
    assumption: Option<&Assumption1Check>,
    d: Option<f64>,
) -> Result<CertificationReport, CertifyError> {
    require_ordered(curve)?;
    if !(m0 < 0.0) {
        return Err(CertifyError::InvalidInput(format!("m0 must be negative, got {m0}")));
    }
    let beta = cmc_beta(w)?;
    let assumption =
        assumption.ok_or_else(|| CertifyError::MissingHypothesis("the assumption on g has not been checked".into()))?;
    if assumption.m0 != m0 {
        return Err(CertifyError::MissingHypothesis(format!(
            "assumption was checked for m0 = {}, not {m0}",
            assumption.m0
        )));
    }
    let alpha = w.alpha();
    let r_gamma = curve.r_gamma()?;
    let h_star = r_gamma * catenoid::hstar(m0)?;
    let b = barrier_data(curve, m0, h_star, r_gamma)?;

    let mut report = CertificationReport::new(Mode::Theorem1);
    echo_curve(&mut report, curve);
    report.input("alpha", alpha);
    report.input("beta", beta);
    report.input("m0", m0);
    report.input("horizon", assumption.verified_up_to);
    echo_barrier(&mut report, &b, curve);

    let p = ThresholdInputs {
        alpha,
        beta,
        min_curvature: curve.min_curvature,
        h_star,
        s0: b.s0,
    };
    let t = Thresholds::from_inputs(&p);
    report.mid("dA", t.d_a);
    report.mid("dB", t.d_b);
    report.mid("dC", t.d_c);
    report.mid("dD", t.d_d);
    let d0 = t.d0();
    report.d0 = Some(d0);

    report.conditions.push(Condition::strict("cmc_type", beta - alpha));
    let mut a1 = Condition::non_strict("assumption1", assumption.min_margin);
    a1.holds = assumption.holds;
    report.conditions.push(a1);
    report.notes.push(format!(
        "assumption on g verified on a grid over [alpha, {}]{}",
        assumption.verified_up_to,
        if assumption.clamped {
            " (horizon clamped to b)"
        } else {
            ""
        }
    ));
    report.notes.push(format!("binding threshold: {}", t.binding()));
    if let Some(d) = d {
        if !(d > 0.0) {
            return Err(CertifyError::InvalidInput(format!("d must be positive, got {d}")));
        }
        report.input("d", d);
        for mut c in threshold_inequalities(d, &p) {
            c.name = format!("d_{}", c.name);
            report.conditions.push(c);
        }
    }
    let mut report = report.finish();
    if report.passed() && d.is_none() {
        report.notes.push(format!(
            "every surface spanning the curve in the class of g(d t)/d with d > {} is topologically a closed disk",
            round_sig(d0, SIGNIFICANT_DIGITS)
        ));
    }
    Ok(report)
}

/// Inputs of the pinching theorem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PinchingInputs {
    pub max_curvature: f64,
    pub min_curvature: f64,
    pub epsilon: f64,
    pub alpha: f64,
    pub beta: f64,
    /// When present, `s₀` is also found by bisection.
    pub omega: Option<f64>,
}

/// Conditions (1) `√(Λ³/λ) < β < (2/(3ε))√(Λ³/λ)` and (2) `α ≤ C(ε,Λ,λ)`.
///
/// The formulas are applied to `Λ` and `λ` as given; `Λ < λ` is accepted
/// and flagged.
pub fn theorem2_check(p: &PinchingInputs) -> Result<CertificationReport, CertifyError> {
    let PinchingInputs {
        max_curvature: big,
        min_curvature: small,
        epsilon,
        alpha,
        beta,
        omega,
    } = *p;
    check_epsilon(epsilon)?;
    for (name, v) in [("Lambda", big), ("lambda", small), ("alpha", alpha), ("beta", beta)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(CertifyError::InvalidInput(format!("{name} must be positive, got {v}")));
        }
    }
    let c = c_constant(epsilon, big, small)?;
    let root = (big.powi(3) / small).sqrt();
    let upper = 2.0 / (3.0 * epsilon) * root;
    let r_gamma = (small / big.powi(3)).sqrt();
    let h_star = epsilon * r_gamma;
    let r1 = r_gamma * epsilon.cosh();
    let s0_analytic = 9.0 / (2.0 * small) + r_gamma * (epsilon.cosh() - 1.0);

    let mut report = CertificationReport::new(Mode::Theorem2);
    report.input("Lambda", big);
    report.input("lambda", small);
    report.input("epsilon", epsilon);
    report.input("alpha", alpha);
    report.input("beta", beta);
    report.input("m0", -1.0);
    report.mid("beta_lower", root);
    report.mid("beta_upper", upper);
    report.mid("C_value", c.value);
    report.mid("C_first", c.first);
    report.mid("C_second", c.second);
    report.mid("r_gamma", r_gamma);
    report.mid("h_star", h_star);
    report.mid("r1", r1);
    report.mid("s0_analytic", s0_analytic);
    if let Some(omega) = omega {
        if !(omega > 0.0) {
            return Err(CertifyError::InvalidInput(format!(
                "omega must be positive, got {omega}"
            )));
        }
        report.input("omega", omega);
        let target = 2.0 * omega + r1 - r_gamma;
        report.mid("R1", omega);
        report.mid("target", target);
        report.mid("s0", s0_solve(omega, target)?);
    }
    if big < small {
        report.notes.push(format!(
            "Lambda = {big} is below lambda = {small}: the formulas were applied to the values as given"
        ));
    }
    report.conditions.push(Condition::strict("1_lower", beta - root));
    report.conditions.push(Condition::strict("1_upper", upper - beta));
    report.conditions.push(Condition::non_strict("2", c.value - alpha));
    Ok(report.finish())
}

/// One row of an ε sweep for the pinching theorem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub epsilon: f64,
    pub beta_upper: f64,
    pub c_value: f64,
    pub pass: bool,
}

/// Evaluates the pinching conditions on `n` evenly spaced ε in `[lo, hi]`.
pub fn sweep_epsilon(base: &PinchingInputs, lo: f64, hi: f64, n: usize) -> Result<Vec<SweepRow>, CertifyError> {
    if n == 0 || !(lo <= hi) {
        return Err(CertifyError::InvalidInput(format!("bad sweep range {lo}:{hi}:{n}")));
    }
    (0..n)
        .map(|i| {
            let epsilon = if n == 1 {
                lo
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            };
            let r = theorem2_check(&PinchingInputs {
                epsilon,
                omega: None,
                ..*base
            })?;
            Ok(SweepRow {
                epsilon,
                beta_upper: r.intermediates["beta_upper"],
                c_value: r.intermediates["C_value"],
                pass: r.passed(),
            })
        })
        .collect()
}

/// Conditions (A)–(E) for explicit `m₀` and `h*`, with (F), (G) and the
/// printed form of (C) as informational rows.
///
/// (C) enters the verdict as `α < 2h*/(s₀² + h*²)`, the case `d = 1` of the
/// threshold inequality; the variant `α < 2h*/(4/s₀² + h*²)` is reported
/// alongside as `C_printed`.
pub fn general_conditions_check(
    curve: &CurveData,
    m0: f64,
    h_star: f64,
    w: &WeingartenClass,
) -> Result<CertificationReport, CertifyError> {
    require_ordered(curve)?;
    if !(m0 < 0.0) {
        return Err(CertifyError::InvalidInput(format!("m0 must be negative, got {m0}")));
    }
    if !(h_star > 0.0 && h_star.is_finite()) {
        return Err(CertifyError::InvalidInput(format!("h* must be positive, got {h_star}")));
    }
    let beta = cmc_beta(w)?;
    let alpha = w.alpha();
    let r_gamma = curve.r_gamma()?;
    if m0 < -1.0 {
        let bound = r_gamma * catenoid::total_height(m0)?;
        if !(h_star < bound) {
            return Err(CertifyError::Precondition(format!(
                "h* = {h_star} must be below r(Γ)·𝔥(m0) = {bound}"
            )));
        }
    }
    let b = barrier_data(curve, m0, h_star, r_gamma)?;
    let small = curve.min_curvature;
    let big = curve.max_curvature;

    let mut report = CertificationReport::new(Mode::General);
    echo_curve(&mut report, curve);
    report.input("alpha", alpha);
    report.input("beta", beta);
    report.input("m0", m0);
    report.input("h_star", h_star);
    echo_barrier(&mut report, &b, curve);

    let h = h_star;
    let s0 = b.s0;
    let e = w.check_condition_e(m0, r_gamma)?;
    report.mid("E_upper", e.upper);
    if e.clamped {
        report
            .notes
            .push(format!("condition E checked up to b = {} instead of 1/r(Γ)", e.upper));
    }
    report
        .conditions
        .push(Condition::strict("A", 1.0 / alpha - 1.0 / small - 1.0 / beta));
    report.conditions.push(Condition::strict(
        "B",
        2.0 * h / (4.0 / (small * small) + h * h) - alpha,
    ));
    report
        .conditions
        .push(Condition::strict("C", 2.0 * h / (s0 * s0 + h * h) - alpha));
    report
        .conditions
        .push(Condition::strict("C_printed", 2.0 * h / (4.0 / (s0 * s0) + h * h) - alpha).info());
    report.conditions.push(Condition::strict("D", 2.0 / 3.0 - beta * h));
    report.conditions.push(Condition {
        name: "E".into(),
        holds: e.holds,
        margin: e.min_margin,
        informational: false,
    });
    let f_margin = (1.0 / beta - 1.5 * h).min(r_gamma - 1.0 / beta);
    report.conditions.push(Condition::strict("F", f_margin).info());
    let s0_merged = s0.max(2.0 / small);
    let g_margin = 1.0 / alpha - (1.0 / small + 1.0 / big).max((s0_merged * s0_merged + h * h) / (2.0 * h));
    report.conditions.push(Condition::strict("G", g_margin).info());
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weingarten::{Family, GSpec};

    fn cmc(h: f64) -> WeingartenClass {
        WeingartenClass::from_spec(&GSpec::Family(Family::LinearCmc { h })).unwrap()
    }

    fn ellipse_data() -> CurveData {
        CurveData {
            max_curvature: 2.0,
            min_curvature: 0.25,
            omega: 2.0,
        }
    }

    #[test]
    fn r_d_examples() {
        assert!((r_d_value(0.5 * 0.3, 0.5, 0.3).unwrap() - 0.3).abs() < 1e-15);
        assert_eq!(r_d_value(1.0, 1.0, 1.0).unwrap(), 1.0);
        assert!(matches!(
            r_d_value(0.1, 1.0, 1.0),
            Err(CertifyError::UndefinedRd { .. })
        ));
    }

    #[test]
    fn j_examples() {
        assert_eq!(j_value(2.0, 1.0).unwrap(), 0.0);
        assert!((j_value(4.0, 1.0).unwrap() - (8.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!(matches!(j_value(1.0, 1.0), Err(CertifyError::Domain { .. })));
    }

    #[test]
    fn s0_examples() {
        assert_eq!(s0_solve(1.5, 0.0).unwrap(), 3.0);
        assert!((s0_solve(1.0, (8.0f64 / 3.0).sqrt()).unwrap() - 4.0).abs() < 1e-12);
        let s = s0_solve(2.0, 4.09601).unwrap();
        assert!((s - 8.87).abs() < 0.01, "{s}");
        assert!(s0_solve(1.0, -1.0).is_err());
    }

    #[test]
    fn c_examples() {
        let c = c_constant(0.5, 0.25, 2.0).unwrap();
        assert!((c.value - 2.0 / 9.0).abs() < 1e-15);
        // 30-digit reference evaluation of the second branch
        assert!((c.second - 0.247_862_677_619_848).abs() < 1e-15, "{}", c.second);
        assert_eq!(c_constant(0.3, 3.0, 3.0).unwrap().first, 1.5);
        assert!(c_constant(0.7, 1.0, 1.0).is_err());
        assert!(c_constant(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn theorem1_ellipse() {
        let w = cmc(1.0);
        let a1 = w.check_assumption1(-1.0, 1e3).unwrap();
        let r = theorem1_threshold(&ellipse_data(), &w, -1.0, Some(&a1), None).unwrap();
        assert!(r.passed());
        let m = &r.intermediates;
        assert_eq!(m["dA"], 8.0);
        assert!((m["r_gamma"] - 0.176_776_695_296_636_9).abs() < 1e-15);
        assert!((m["r1"] - m["r_gamma"] * 1f64.cosh()).abs() < 1e-12);
        assert!((m["dD"] - 1.5 * 2.0 * m["r_gamma"]).abs() < 1e-15);
        assert_eq!(r.d0, Some(m["dC"]));
        assert!(theorem1_threshold(&ellipse_data(), &w, -1.0, None, None).is_err());
    }

    #[test]
    fn theorem1_needs_cmc() {
        let cgc = WeingartenClass::from_spec(&GSpec::Expression {
            expr: "1/t".into(),
            alpha: 1.0,
            b: None,
        })
        .unwrap();
        let a1 = cgc.check_assumption1(-1.0, 10.0).unwrap();
        assert!(matches!(
            theorem1_threshold(&ellipse_data(), &cgc, -1.0, Some(&a1), None),
            Err(CertifyError::NotCmcType { .. })
        ));
    }

    #[test]
    fn worked_example_orientations() {
        let base = PinchingInputs {
            max_curvature: 0.25,
            min_curvature: 2.0,
            epsilon: 0.5,
            alpha: 0.04,
            beta: 0.1,
            omega: None,
        };
        let r = theorem2_check(&base).unwrap();
        assert!(r.passed());
        assert!((r.intermediates["beta_lower"] - 0.088_388).abs() < 1e-6);
        assert!((r.intermediates["beta_upper"] - 0.117_851).abs() < 1e-6);
        assert!(!r.notes.is_empty());
        let swapped = theorem2_check(&PinchingInputs {
            max_curvature: 2.0,
            min_curvature: 0.25,
            ..base
        })
        .unwrap();
        assert!(!swapped.passed());
        assert!(swapped.condition("1_lower").unwrap().margin < 0.0);
    }

    #[test]
    fn pinching_upper_bound_is_strict() {
        let base = PinchingInputs {
            max_curvature: 0.25,
            min_curvature: 2.0,
            epsilon: 0.5,
            alpha: 0.04,
            beta: 0.1,
            omega: None,
        };
        let upper = theorem2_check(&base).unwrap().intermediates["beta_upper"];
        let r = theorem2_check(&PinchingInputs { beta: upper, ..base }).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn general_d_violation() {
        let curve = CurveData {
            max_curvature: 1.0,
            min_curvature: 1.0,
            omega: 1.0,
        };
        let w = cmc(0.5);
        // beta = 1, h* = 1 → beta·h* = 1
        let r = general_conditions_check(&curve, -1.0, 1.0, &w).unwrap();
        let d = r.condition("D").unwrap();
        assert!(!d.holds);
        assert!((d.margin + 1.0 / 3.0).abs() < 1e-15);
        assert!(!r.passed());
    }

    #[test]
    fn sweep_rows() {
        let base = PinchingInputs {
            max_curvature: 0.25,
            min_curvature: 2.0,
            epsilon: 0.5,
            alpha: 0.04,
            beta: 0.1,
            omega: None,
        };
        let rows = sweep_epsilon(&base, 0.1, 0.6, 6).unwrap();
        assert_eq!(rows.len(), 6);
        assert!((rows[5].epsilon - 0.6).abs() < 1e-15);
        assert!(rows.iter().any(|r| r.pass));
    }
}
