//! Command-line front end. Every subcommand reads one JSON file, prints a
//! JSON report to stdout and writes it, plus any figures, to the output
//! directory.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catenoid::{self, CatenoidProfile, NeckDiagram};
use crate::certify::{self, CurveData, PinchingInputs};
use crate::curve::{CurveSpec, Point};
use crate::limacon::{self, InnerLoopDisk, Limacon, LoopType};
use crate::report::{round_sig, to_json, SIGNIFICANT_DIGITS};
use crate::svg;
use crate::weingarten::{GSpec, WeingartenClass};

#[derive(Debug, Parser)]
#[command(
    name = "swcert",
    version,
    about = "Certification toolkit for special Weingarten surfaces with convex planar boundary"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Curvature extremes, enclosing radius and graph radius bounds of a convex curve.
    ///
    /// Input: {"kind":"ellipse","A":1,"B":2} or {"kind":"points","data":[[x,y],...]}.
    AnalyzeCurve {
        #[command(flatten)]
        common: CommonArgs,
        /// Also write curve.svg with the enclosing and osculating circles.
        #[arg(long)]
        svg: bool,
    },
    /// Classify a limaçon and compute its inner-loop disks; always writes limacon.svg.
    ///
    /// Input: {"a":5,"c":2}.
    Limacon {
        #[command(flatten)]
        common: CommonArgs,
        /// Relative distance from the cusp below which a near-cusp flag is raised.
        #[arg(long, default_value_t = limacon::NEAR_CUSP_TOLERANCE)]
        cusp_tol: f64,
    },
    /// Height bounds, profile CSV and optional OBJ mesh of the catenoid κ₂ = m₀κ₁.
    ///
    /// Input: {"m0":-2,"r0":1,"height_cap":1,"nu":32,"nv":64,"mirror":false};
    /// all but m0 and r0 are optional.
    Catenoid {
        #[command(flatten)]
        common: CommonArgs,
        /// Also write catenoid.obj.
        #[arg(long)]
        obj: bool,
    },
    /// Check the hypotheses of one of the disk-type theorems.
    ///
    /// Input keys: curve (curve spec) or curvature {"Lambda","lambda","omega"},
    /// g (expression or family), alpha, beta, m0, epsilon, h_star, horizon, d.
    /// Exit status 0 on PASS, 1 on FAIL, 2 on input errors.
    Certify {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum)]
        mode: CertifyMode,
        /// Sweep epsilon over lo:hi:n (theorem2 mode) and write sweep.csv.
        #[arg(long, value_parser = parse_sweep)]
        sweep_eps: Option<Sweep>,
        /// Upper end of the grid check of the assumption on g (theorem1 mode).
        #[arg(long)]
        horizon: Option<f64>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Input JSON file.
    #[arg(long)]
    pub input: PathBuf,
    /// Output directory, created if absent.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Seed of the enclosing-circle shuffle.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CertifyMode {
    Theorem1,
    Theorem2,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

fn parse_sweep(s: &str) -> Result<Sweep, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts[..] else {
        return Err(format!("expected lo:hi:n, got {s:?}"));
    };
    let lo: f64 = lo.parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: f64 = hi.parse().map_err(|e| format!("bad upper bound: {e}"))?;
    let n: usize = n.parse().map_err(|e| format!("bad count: {e}"))?;
    if n == 0 || !(lo <= hi) {
        return Err(format!("empty sweep range {s:?}"));
    }
    Ok(Sweep { lo, hi, n })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubcommandKind {
    AnalyzeCurve,
    Limacon,
    Catenoid,
    Certify(CertifyMode),
}

/// Everything a run depends on.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub subcommand: SubcommandKind,
    pub input: PathBuf,
    pub out: PathBuf,
    pub svg: bool,
    pub obj: bool,
    pub cusp_tol: f64,
    pub horizon: Option<f64>,
    pub sweep: Option<Sweep>,
    pub seed: u64,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let (subcommand, common) = match &cli.command {
            Command::AnalyzeCurve { common, .. } => (SubcommandKind::AnalyzeCurve, common),
            Command::Limacon { common, .. } => (SubcommandKind::Limacon, common),
            Command::Catenoid { common, .. } => (SubcommandKind::Catenoid, common),
            Command::Certify { common, mode, .. } => (SubcommandKind::Certify(*mode), common),
        };
        let mut cfg = RunConfig {
            subcommand,
            input: common.input.clone(),
            out: common.out.clone(),
            svg: false,
            obj: false,
            cusp_tol: limacon::NEAR_CUSP_TOLERANCE,
            horizon: None,
            sweep: None,
            seed: common.seed,
        };
        match cli.command {
            Command::AnalyzeCurve { svg, .. } => cfg.svg = svg,
            Command::Limacon { cusp_tol, .. } => cfg.cusp_tol = cusp_tol,
            Command::Catenoid { obj, .. } => cfg.obj = obj,
            Command::Certify { sweep_eps, horizon, .. } => {
                cfg.sweep = sweep_eps;
                cfg.horizon = horizon;
            }
        }
        cfg
    }
}

/// Result of a successful run, mapped to exit status 0 or 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub passed: bool,
    pub json: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let text = fs::read_to_string(&cfg.input).with_context(|| format!("cannot read {}", cfg.input.display()))?;
    fs::create_dir_all(&cfg.out).with_context(|| format!("cannot create {}", cfg.out.display()))?;
    match cfg.subcommand {
        SubcommandKind::AnalyzeCurve => analyze_curve(cfg, &text),
        SubcommandKind::Limacon => limacon_cmd(cfg, &text),
        SubcommandKind::Catenoid => catenoid_cmd(cfg, &text),
        SubcommandKind::Certify(mode) => certify_cmd(cfg, mode, &text),
    }
}

fn parse_input<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).context("malformed input JSON")
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<()> {
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn emit<T: Serialize>(cfg: &RunConfig, name: &str, value: &T, passed: bool) -> Result<Outcome> {
    let json = to_json(value)?;
    write_file(&cfg.out, name, &json)?;
    Ok(Outcome { passed, json })
}

#[derive(Debug, Serialize)]
struct CurveReport {
    kind: &'static str,
    samples: usize,
    #[serde(rename = "Lambda")]
    max_curvature: f64,
    #[serde(rename = "lambda")]
    min_curvature: f64,
    omega: f64,
    enclosing_center: Point,
    max_curvature_point: Point,
    min_curvature_point: Point,
    r_gamma_lower: f64,
    r_gamma_upper: f64,
    circle: bool,
    strictly_convex: bool,
    seed: u64,
}

fn analyze_curve(cfg: &RunConfig, text: &str) -> Result<Outcome> {
    let spec: CurveSpec = parse_input(text)?;
    let curve = spec.build(cfg.seed)?;
    let radius = limacon::graph_lemma_radius(curve.max_curvature(), curve.min_curvature())?;
    let (pmax, pmin) = curve.extreme_points();
    let report = CurveReport {
        kind: match spec {
            CurveSpec::Ellipse { .. } => "ellipse",
            CurveSpec::Points { .. } => "points",
        },
        samples: curve.samples().len(),
        max_curvature: curve.max_curvature(),
        min_curvature: curve.min_curvature(),
        omega: curve.omega(),
        enclosing_center: curve.enclosing_circle().center,
        max_curvature_point: pmax,
        min_curvature_point: pmin,
        r_gamma_lower: radius.r_lower,
        r_gamma_upper: radius.r_upper,
        circle: curve.is_circle(),
        strictly_convex: true,
        seed: cfg.seed,
    };
    if cfg.svg {
        write_file(&cfg.out, "curve.svg", &svg::curve_svg(&curve))?;
    }
    emit(cfg, "curve.json", &report, true)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LimaconInput {
    a: f64,
    c: f64,
}

#[derive(Debug, Serialize)]
struct LimaconReport {
    a: f64,
    c: f64,
    loop_type: LoopType,
    near_cusp: bool,
    inner_loop: Option<InnerLoopDisk>,
}

fn limacon_cmd(cfg: &RunConfig, text: &str) -> Result<Outcome> {
    let input: LimaconInput = parse_input(text)?;
    let l = Limacon::new(input.a, input.c)?;
    let report = LimaconReport {
        a: l.a(),
        c: l.c(),
        loop_type: l.loop_type(),
        near_cusp: l.is_near_cusp(cfg.cusp_tol),
        inner_loop: limacon::inner_loop_disk(l.a(), l.c()).ok(),
    };
    write_file(&cfg.out, "limacon.svg", &svg::limacon_svg(&l))?;
    emit(cfg, "limacon.json", &report, true)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatenoidInput {
    m0: f64,
    r0: f64,
    height_cap: Option<f64>,
    nu: Option<usize>,
    nv: Option<usize>,
    #[serde(default)]
    mirror: bool,
}

#[derive(Debug, Serialize)]
struct CatenoidReport {
    m0: f64,
    r0: f64,
    /// `𝔥(m₀)`, null when the height is unbounded.
    h_total: Option<f64>,
    divergent: bool,
    /// `𝔥*(m₀)`.
    hstar: f64,
    /// `r₀·𝔥*(m₀)` and the section radius at that height.
    h_star: f64,
    r1: f64,
    height_cap: f64,
    boundary_radius: f64,
    neck_diagram: NeckDiagram,
    notes: Vec<String>,
}

fn catenoid_cmd(cfg: &RunConfig, text: &str) -> Result<Outcome> {
    let input: CatenoidInput = parse_input(text)?;
    let profile = CatenoidProfile::new(input.m0, input.r0)?;
    let hstar = catenoid::hstar(input.m0)?;
    let h_star = input.r0 * hstar;
    let h_total = if input.m0 < -1.0 {
        Some(catenoid::total_height(input.m0)?)
    } else {
        None
    };
    let cap = input.height_cap.unwrap_or(h_star);
    let boundary_radius = profile.radius_at_height(cap)?;
    let report = CatenoidReport {
        m0: input.m0,
        r0: input.r0,
        h_total,
        divergent: h_total.is_none(),
        hstar,
        h_star,
        r1: profile.radius_at_height(h_star)?,
        height_cap: cap,
        boundary_radius,
        neck_diagram: catenoid::neck_diagram(input.m0, input.r0)?,
        notes: vec!["neck diagram endpoint written as (m0/r0, 1/r0)".into()],
    };
    let rows = profile.profile_rows(cap, input.nu.unwrap_or(32).max(2))?;
    let mut csv = Vec::new();
    catenoid::write_profile_csv(&rows, &mut csv)?;
    write_file(&cfg.out, "catenoid_profile.csv", &String::from_utf8(csv)?)?;
    if cfg.obj {
        let mesh = profile.revolve_mesh(cap, input.nu.unwrap_or(32), input.nv.unwrap_or(64), input.mirror)?;
        let mut obj = Vec::new();
        mesh.write_obj(&mut obj)?;
        write_file(&cfg.out, "catenoid.obj", &String::from_utf8(obj)?)?;
    }
    emit(cfg, "catenoid.json", &report, true)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurvatureInput {
    #[serde(rename = "Lambda")]
    max_curvature: f64,
    #[serde(rename = "lambda")]
    min_curvature: f64,
    omega: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertifyInput {
    curve: Option<CurveSpec>,
    curvature: Option<CurvatureInput>,
    g: Option<GSpec>,
    alpha: Option<f64>,
    beta: Option<f64>,
    m0: Option<f64>,
    epsilon: Option<f64>,
    h_star: Option<f64>,
    horizon: Option<f64>,
    d: Option<f64>,
}

/// `(Λ, λ, ω)` from either a curve or explicit curvature values.
fn curvature_data(input: &CertifyInput, seed: u64) -> Result<(f64, f64, Option<f64>)> {
    match (&input.curve, &input.curvature) {
        (Some(_), Some(_)) => bail!("give either curve or curvature, not both"),
        (Some(spec), None) => {
            let c = spec.build(seed)?;
            Ok((c.max_curvature(), c.min_curvature(), Some(c.omega())))
        }
        (None, Some(k)) => Ok((k.max_curvature, k.min_curvature, k.omega)),
        (None, None) => bail!("missing curve or curvature"),
    }
}

fn full_curve_data(input: &CertifyInput, seed: u64) -> Result<CurveData> {
    let (big, small, omega) = curvature_data(input, seed)?;
    let omega = omega.ok_or_else(|| anyhow!("omega is required in this mode"))?;
    Ok(CurveData {
        max_curvature: big,
        min_curvature: small,
        omega,
    })
}

fn weingarten(input: &CertifyInput) -> Result<WeingartenClass> {
    let spec = input.g.as_ref().ok_or_else(|| anyhow!("g is required in this mode"))?;
    Ok(WeingartenClass::from_spec(spec)?)
}

fn certify_cmd(cfg: &RunConfig, mode: CertifyMode, text: &str) -> Result<Outcome> {
    let input: CertifyInput = parse_input(text)?;
    let (report, name) = match mode {
        CertifyMode::Theorem1 => {
            let curve = full_curve_data(&input, cfg.seed)?;
            let w = weingarten(&input)?;
            let m0 = input.m0.ok_or_else(|| anyhow!("m0 is required in theorem1 mode"))?;
            let horizon = match cfg.horizon.or(input.horizon) {
                Some(h) => h,
                None if w.b().is_finite() => w.b(),
                None => w.alpha() + 1e3 * w.alpha().max(1.0),
            };
            let check = w.check_assumption1(m0, horizon)?;
            (
                certify::theorem1_threshold(&curve, &w, m0, Some(&check), input.d)?,
                "certify_theorem1.json",
            )
        }
        CertifyMode::Theorem2 => {
            let (big, small, omega) = curvature_data(&input, cfg.seed)?;
            let epsilon = input
                .epsilon
                .ok_or_else(|| anyhow!("epsilon is required in theorem2 mode"))?;
            let (alpha, beta) = match (&input.g, input.alpha, input.beta) {
                (None, Some(a), Some(b)) => (a, b),
                (Some(_), None, None) => {
                    let w = weingarten(&input)?;
                    let beta = w.beta().ok_or_else(|| anyhow!("g has no zero, so beta is undefined"))?;
                    (w.alpha(), beta)
                }
                _ => bail!("give either g or both alpha and beta"),
            };
            let p = PinchingInputs {
                max_curvature: big,
                min_curvature: small,
                epsilon,
                alpha,
                beta,
                omega,
            };
            if let Some(sw) = cfg.sweep {
                let rows = certify::sweep_epsilon(&p, sw.lo, sw.hi, sw.n)?;
                let mut csv = String::from("epsilon,beta_upper,C,pass\n");
                for r in rows {
                    let [e, u, c] = [r.epsilon, r.beta_upper, r.c_value].map(|x| round_sig(x, SIGNIFICANT_DIGITS));
                    csv.push_str(&format!("{e},{u},{c},{}\n", r.pass));
                }
                write_file(&cfg.out, "sweep.csv", &csv)?;
            }
            (certify::theorem2_check(&p)?, "certify_theorem2.json")
        }
        CertifyMode::General => {
            let curve = full_curve_data(&input, cfg.seed)?;
            let w = weingarten(&input)?;
            let m0 = input.m0.unwrap_or(-1.0);
            let h_star = match (input.h_star, input.epsilon) {
                (Some(h), None) => h,
                (None, Some(eps)) => eps * curve.r_gamma()?,
                _ => bail!("give exactly one of h_star and epsilon"),
            };
            (
                certify::general_conditions_check(&curve, m0, h_star, &w)?,
                "certify_general.json",
            )
        }
    };
    let passed = report.passed();
    emit(cfg, name, &report, passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_parsing() {
        assert_eq!(parse_sweep("0.1:0.6:6").unwrap(), Sweep { lo: 0.1, hi: 0.6, n: 6 });
        assert!(parse_sweep("0.1:0.6").is_err());
        assert!(parse_sweep("0.6:0.1:3").is_err());
        assert!(parse_sweep("0.1:0.6:0").is_err());
    }

    #[test]
    fn config_from_args() {
        let cli = Cli::try_parse_from([
            "swcert",
            "certify",
            "--input",
            "in.json",
            "--mode",
            "theorem2",
            "--sweep-eps",
            "0.1:0.5:5",
        ])
        .unwrap();
        let cfg = RunConfig::from(cli);
        assert_eq!(cfg.subcommand, SubcommandKind::Certify(CertifyMode::Theorem2));
        assert_eq!(cfg.seed, 0);
        assert_eq!(cfg.out, PathBuf::from("."));
        assert!(cfg.sweep.is_some());
    }
}
