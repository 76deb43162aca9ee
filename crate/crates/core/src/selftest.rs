//! Invariant suites run by `bcl selftest`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fmt;

use rand::Rng;

use crate::bazaikin::{
    canonical_form, classify_curvature, gcd_condition, h_prime_basis, is_effectively_free,
    orbit_invariants, BazaikinTuple, CohomTwoParams, CurvatureClass, FrameCoord,
};
use crate::certify::{certify_point, equation_residuals, solve_params};
use crate::cheeger::CheegerChain;
use crate::linalg::mat::I;
use crate::linalg::random::{
    random_group_element_from, random_s_element, random_sp2, random_su_element, rng_from_seed,
    SeededRng,
};
use crate::linalg::{bracket, inner0, subalgebra, SuElement, SubalgebraTag};
use crate::wilking::horizontal_space;

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

type Suite = fn(&mut SeededRng, f64) -> (bool, String);

const SUITES: &[(&str, Suite)] = &[
    ("subalgebra_closure", subalgebra_closure),
    ("empty_chain_commutation", empty_chain_commutation),
    ("phi_round_trip", phi_round_trip),
    ("orbit_walk", orbit_walk),
    ("canonical_form", canonical),
    ("horizontal_dimension", horizontal_dimension),
    ("exact_certificate", exact_certificate),
    ("classifier", classifier),
    ("freeness_closed_form", freeness_closed_form),
    ("equation_audit", equation_audit),
];

/// Run every suite with its own stream derived from `seed`.
pub fn run_all(seed: u64, tol: f64) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .enumerate()
        .map(|(k, (name, suite))| {
            let mut rng = rng_from_seed(seed.wrapping_add(k as u64));
            let (passed, detail) = suite(&mut rng, tol);
            SuiteResult {
                name,
                passed,
                detail,
            }
        })
        .collect()
}

fn subalgebra_closure(_: &mut SeededRng, tol: f64) -> (bool, String) {
    let worst = SubalgebraTag::ALL
        .iter()
        .map(|&t| subalgebra(t).closure_residual())
        .fold(0.0, f64::max);
    (worst < tol, format!("max closure residual {worst:.2e}"))
}

fn empty_chain_commutation(rng: &mut SeededRng, tol: f64) -> (bool, String) {
    let chain = CheegerChain::empty();
    let mut disagreements = 0;
    for k in 0..1000 {
        let x = random_su_element(rng);
        // every other pair commutes
        let y = if k % 2 == 0 {
            random_su_element(rng)
        } else {
            commuting_partner(&x).add(&x.scale(0.3))
        };
        let Ok(rep) = chain.chain_flat(&x, &y) else {
            continue;
        };
        if rep.flat != (normalized_bracket(&x, &y) < tol) {
            disagreements += 1;
        }
    }
    (
        disagreements == 0,
        format!("{disagreements} disagreements in 1000 pairs"),
    )
}

/// `i(x² − tr(x²)/5)`, which commutes with `x`.
pub(crate) fn commuting_partner(x: &SuElement) -> SuElement {
    let mut m = (*x.mat() * *x.mat()) * I;
    let t = m.trace() / 5.0;
    for k in 0..5 {
        m[(k, k)] -= t;
    }
    SuElement::new(m).expect("i times a Hermitian traceless matrix")
}

/// `‖[x, y]‖` for the orthonormalized pair.
pub(crate) fn normalized_bracket(x: &SuElement, y: &SuElement) -> f64 {
    let u = x.scale(1.0 / x.norm());
    let w = y.axpy(-inner0(y, &u), &u);
    bracket(&u, &w).norm() / w.norm()
}

fn phi_round_trip(rng: &mut SeededRng, tol: f64) -> (bool, String) {
    let chain = CheegerChain::from_tags(&[SubalgebraTag::U4, SubalgebraTag::P2h], vec![0.6, 0.25])
        .expect("valid chain");
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let x = random_su_element(rng);
        worst = worst.max(chain.phi(&chain.phi_inverse(&x)).sub(&x).norm() / x.norm());
    }
    (worst < tol, format!("max round-trip error {worst:.2e}"))
}

fn orbit_walk(rng: &mut SeededRng, tol: f64) -> (bool, String) {
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let mut a = random_group_element_from(rng);
        let (f, nu) = orbit_invariants(&a);
        for step in 0..50 {
            a = if step % 2 == 0 {
                random_s_element(rng).compose(&a)
            } else {
                a.compose(&random_sp2(rng).inverse())
            };
            let (fs, ns) = orbit_invariants(&a);
            worst = worst.max((f - fs).abs()).max((nu - ns).abs());
        }
    }
    (
        worst < tol.max(1e-9),
        format!("max invariant drift {worst:.2e}"),
    )
}

fn canonical(rng: &mut SeededRng, _: f64) -> (bool, String) {
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        match canonical_form(&random_group_element_from(rng)) {
            Ok(cf) => worst = worst.max(cf.residual),
            Err(e) => return (false, e.to_string()),
        }
    }
    (
        worst < 1e-9,
        format!("max reconstruction residual {worst:.2e}"),
    )
}

fn horizontal_dimension(rng: &mut SeededRng, _: f64) -> (bool, String) {
    for (q1, omega) in [(1, -1), (3, 1)] {
        let h = h_prime_basis(&CohomTwoParams::new(q1, omega).expect("valid"));
        for _ in 0..20 {
            match horizontal_space(&random_group_element_from(rng), &h) {
                Ok(b) if b.len() == 13 => {}
                Ok(b) => return (false, format!("dimension {}", b.len())),
                Err(e) => return (false, e.to_string()),
            }
        }
    }
    (true, "dimension 13 at 40 random points".to_string())
}

fn exact_certificate(_: &mut SeededRng, tol: f64) -> (bool, String) {
    let c = FrameCoord {
        theta: FRAC_PI_4,
        alpha: FRAC_PI_4,
    };
    match certify_point(1, -1, &c) {
        Ok(cert) => {
            let p = cert.params;
            let ok = (p.lambda + 0.4).abs() < 1e-12
                && (p.z1 - 2.0).abs() < 1e-12
                && (p.im_x12 + 1.0).abs() < 1e-12
                && (p.gap - 1.0).abs() < 1e-12
                && cert.report.max_residual() < tol;
            (
                ok,
                format!(
                    "gap {:.15}, max residual {:.2e}",
                    p.gap,
                    cert.report.max_residual()
                ),
            )
        }
        Err(e) => (false, e.to_string()),
    }
}

fn classifier(_: &mut SeededRng, _: f64) -> (bool, String) {
    use CurvatureClass::*;
    let cases = [
        ([1, 1, 1, 1, 1], PositivelyCurved),
        ([1, 1, 1, 1, -1], AlmostPositive),
        ([1, 1, 1, -1, -3], FlatPlaneEverywhere),
        ([3, 3, 3, -1, -1], QuasiPositiveOnly),
        ([1, 1, 1, -1, -1], NotFree),
    ];
    for (q, want) in cases {
        let got = classify_curvature(&BazaikinTuple::new(q).expect("valid"));
        if got != want {
            return (false, format!("{q:?}: {got:?}, expected {want:?}"));
        }
    }
    (true, "5 reference tuples".to_string())
}

fn freeness_closed_form(_: &mut SeededRng, _: f64) -> (bool, String) {
    let odd: Vec<i64> = (-15..=15).filter(|v| v % 2 != 0).collect();
    for &a in &odd {
        for &b in &odd {
            let q = [a, a, a, b, b];
            let free = match BazaikinTuple::new(q) {
                Ok(t) => is_effectively_free(&t),
                Err(_) => gcd_condition(&q),
            };
            if free != ((a + b).abs() == 2) {
                return (false, format!("{q:?}"));
            }
        }
    }
    (true, format!("{} tuples", odd.len() * odd.len()))
}

fn equation_audit(rng: &mut SeededRng, _: f64) -> (bool, String) {
    let mut worst: f64 = 0.0;
    let mut n = 0;
    while n < 300 {
        let q1 = 2 * rng.gen_range(0..8) + 1;
        let omega = if rng.gen_bool(0.5) { 1 } else { -1 };
        let c = FrameCoord {
            theta: rng.gen_range(0.0..FRAC_PI_2),
            alpha: rng.gen_range(0.0..FRAC_PI_2),
        };
        let Ok(p) = solve_params(q1, omega, &c) else {
            continue;
        };
        let e = equation_residuals(q1, omega, &c, &p);
        worst = worst.max(e.xtrace).max(e.ytrace).max(e.ad);
        if p.re_x12.is_some() {
            worst = worst.max(e.brack1).max(e.brack2);
        }
        n += 1;
    }
    (
        worst < 1e-12,
        format!("max residual {worst:.2e} over {n} points"),
    )
}
