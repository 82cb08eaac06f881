//! Cross-module checks of the theorem checkers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use swcert::certify::{
    c_constant, general_conditions_check, theorem1_threshold, theorem2_check, threshold_inequalities, CertifyError,
    CurveData, PinchingInputs, ThresholdInputs, Thresholds,
};
use swcert::weingarten::{Family, GSpec, WeingartenClass};

fn class(spec: GSpec) -> WeingartenClass {
    WeingartenClass::from_spec(&spec).unwrap()
}

/// The linear class through `(α, α)` vanishing at `β`.
fn linear_through(alpha: f64, beta: f64) -> WeingartenClass {
    class(GSpec::Family(Family::LinearWeingarten {
        alpha,
        c: -alpha / (beta - alpha),
    }))
}

#[test]
fn pinching_pass_implies_general_pass() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 100 {
        let small: f64 = rng.gen_range(0.05..4.0);
        let big = small * rng.gen_range(1.0..10.0);
        let epsilon = rng.gen_range(0.01..0.66);
        let root = (big.powi(3) / small).sqrt();
        let beta = root * rng.gen_range(1.0..2.0 / (3.0 * epsilon));
        let alpha = c_constant(epsilon, big, small).unwrap().value * rng.gen_range(0.01..1.0);
        let omega = rng.gen_range(1.0 / big..=1.0 / small);
        let p = PinchingInputs {
            max_curvature: big,
            min_curvature: small,
            epsilon,
            alpha,
            beta,
            omega: Some(omega),
        };
        let t2 = theorem2_check(&p).unwrap();
        if !t2.passed() || beta <= alpha {
            continue;
        }
        let w = linear_through(alpha, beta);
        let curve = CurveData {
            max_curvature: big,
            min_curvature: small,
            omega,
        };
        let h_star = epsilon * curve.r_gamma().unwrap();
        let general = general_conditions_check(&curve, -1.0, h_star, &w).unwrap();
        assert!(general.passed(), "{p:?}\n{general:#?}");
        // bisection root never exceeds the closed-form choice
        assert!(t2.intermediates["s0"] <= t2.intermediates["s0_analytic"]);
        checked += 1;
    }
}

#[test]
fn general_pass_from_sufficient_choices() {
    let curve = CurveData {
        max_curvature: 2.0,
        min_curvature: 0.25,
        omega: 2.0,
    };
    let epsilon = 0.5;
    let r = curve.r_gamma().unwrap();
    let beta = 1.2 / r;
    let alpha = 0.5 * c_constant(epsilon, 2.0, 0.25).unwrap().value;
    let report = general_conditions_check(&curve, -1.0, epsilon * r, &linear_through(alpha, beta)).unwrap();
    assert!(report.passed(), "{report:#?}");
    for name in ["A", "B", "C", "D", "E"] {
        assert!(report.condition(name).unwrap().holds, "{name}");
    }
    assert!(report.condition("F").unwrap().informational);
    assert!(report.condition("G").unwrap().holds);
}

#[test]
fn general_requires_compatible_height() {
    let curve = CurveData {
        max_curvature: 1.0,
        min_curvature: 1.0,
        omega: 1.0,
    };
    let w = class(GSpec::Family(Family::LinearCmc { h: 0.01 }));
    // r(Γ) = 1 and 𝔥(-2) ≈ 1.311
    assert!(matches!(
        general_conditions_check(&curve, -2.0, 1.4, &w),
        Err(CertifyError::Precondition(_))
    ));
    assert!(general_conditions_check(&curve, -2.0, 1.2, &w).is_ok());
}

#[test]
fn theorem1_source_inequalities_on_random_curves() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let small: f64 = rng.gen_range(0.1..3.0);
        let big = small * rng.gen_range(1.0..8.0);
        let omega = rng.gen_range(1.0 / big..=1.0 / small);
        let h = rng.gen_range(0.05..3.0);
        // 2h - t stays above the line of slope m0 through (h, h) iff m0 <= -1
        let m0 = -rng.gen_range(1.0..3.0);
        let curve = CurveData {
            max_curvature: big,
            min_curvature: small,
            omega,
        };
        let w = class(GSpec::Family(Family::LinearCmc { h }));
        let a1 = w.check_assumption1(m0, 100.0 * h).unwrap();
        assert!(a1.holds);
        let report = theorem1_threshold(&curve, &w, m0, Some(&a1), None).unwrap();
        let m = &report.intermediates;
        let p = ThresholdInputs {
            alpha: h,
            beta: 2.0 * h,
            min_curvature: small,
            h_star: m["h_star"],
            s0: m["s0"],
        };
        let t = Thresholds::from_inputs(&p);
        let d0 = report.d0.unwrap();
        assert_eq!(t.d0(), d0);
        assert!(threshold_inequalities(d0 * (1.0 + 1e-6), &p).iter().all(|c| c.holds));
        let binding = t.binding();
        let below = threshold_inequalities(d0 * (1.0 - 1e-6), &p);
        assert!(!below.iter().find(|c| c.name == binding).unwrap().holds);
        // D implies the weaker requirements on d
        let d = t.d_d * (1.0 + 1e-12);
        assert!(d > 2.0 * h * m["h_star"] && d > h * m["h_star"] / 2.0);

        let with_d = theorem1_threshold(&curve, &w, m0, Some(&a1), Some(d0 * 1.001)).unwrap();
        assert!(with_d.passed());
        let without = theorem1_threshold(&curve, &w, m0, Some(&a1), Some(d0 * 0.999)).unwrap();
        assert!(!without.passed());
    }
}

#[test]
fn theorem1_rejects_mismatched_or_failed_assumption() {
    let curve = CurveData {
        max_curvature: 2.0,
        min_curvature: 0.25,
        omega: 2.0,
    };
    let w = class(GSpec::Family(Family::LinearCmc { h: 1.0 }));
    let a1 = w.check_assumption1(-2.0, 10.0).unwrap();
    assert!(matches!(
        theorem1_threshold(&curve, &w, -1.0, Some(&a1), None),
        Err(CertifyError::MissingHypothesis(_))
    ));
    let p = class(GSpec::Expression {
        expr: "(40*t-4)/(375*t-75)".into(),
        alpha: 0.04,
        b: Some(0.2),
    });
    let a1 = p.check_assumption1(-1.0, 0.199).unwrap();
    let report = theorem1_threshold(&curve, &p, -1.0, Some(&a1), None).unwrap();
    assert!(!report.passed());
    assert!(!report.condition("assumption1").unwrap().holds);
}

#[test]
fn theorem1_homothety_covariance() {
    let curve = CurveData {
        max_curvature: 3.0,
        min_curvature: 0.5,
        omega: 1.5,
    };
    let w = class(GSpec::Expression {
        expr: "(40*t-4)/(375*t-75)".into(),
        alpha: 0.04,
        b: Some(0.2),
    });
    // the assumption fails for this class; thresholds are still reported
    let a1 = w.check_assumption1(-1.5, 0.19).unwrap();
    let base = theorem1_threshold(&curve, &w, -1.5, Some(&a1), None)
        .unwrap()
        .d0
        .unwrap();
    for d in [0.5, 2.0, 10.0] {
        let wd = w.homothety(d).unwrap();
        let ad = wd.check_assumption1(-1.5, 0.19 / d).unwrap();
        let dd = theorem1_threshold(&curve, &wd, -1.5, Some(&ad), None)
            .unwrap()
            .d0
            .unwrap();
        assert!((dd - base / d).abs() <= 1e-9 * base / d);
    }
}
