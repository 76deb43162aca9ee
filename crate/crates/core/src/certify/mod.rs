//! Explicit zero-curvature planes over the fundamental domain.
//!
//! For `(q₁, ω)` and a point `(θ, α)` the parameters `λ, z₁, z₂, x₁₂` have
//! closed forms. When `z₁ − Im(x₁₂)² ≥ 0` they define matrices `X, Y` whose
//! span is checked to be a flat plane of the main Wilking metric at
//! `frame_matrix(θ, α)⁻¹`.

mod scan;

pub use scan::{
    certified_clusters, read_scan_csv, scan_grid, scan_point, scan_region,
    scan_region_with_threads, thread_count, write_scan_csv, ScanRow,
};

use serde::{Deserialize, Serialize};

use crate::bazaikin::{frame_matrix, h_prime_basis, CohomTwoParams, FrameCoord};
use crate::error::{Error, Result};
use crate::linalg::mat::{Complex, I, ZERO};
use crate::linalg::{GroupElement, Mat5, SuElement};
use crate::tolerance::{TAU_DEN, TAU_RES};
use crate::wilking::{main_metric_flat, PlaneReport};

/// `θ₀ ∈ (0, π/2)` with `cos²θ₀ = 2/(q₁+1)`.
pub fn theta0(q1: i64) -> Result<f64> {
    if q1 <= 1 {
        return Err(Error::OutOfDomain(format!("theta0 needs q1 > 1, got {q1}")));
    }
    Ok((2.0 / (q1 as f64 + 1.0)).sqrt().acos())
}

/// `α₀(θ)` with `cos²α₀ = ((q₁−ω)sin²θ − ω)/(q₁−ω)`, when that lies in (0, 1).
pub fn alpha0(q1: i64, omega: i64, theta: f64) -> Option<f64> {
    let k = (q1 - omega) as f64;
    if k == 0.0 {
        return None;
    }
    let c2 = (k * theta.sin().powi(2) - omega as f64) / k;
    (c2 > 0.0 && c2 < 1.0).then(|| c2.sqrt().acos())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateParams {
    pub lambda: f64,
    pub z1: f64,
    pub z2: f64,
    pub im_x12: f64,
    /// `+√gap`, absent when the gap is negative.
    pub re_x12: Option<f64>,
    /// `z₁ − Im(x₁₂)²`
    pub gap: f64,
}

impl CertificateParams {
    pub fn require_real(&self) -> Result<f64> {
        self.re_x12.ok_or(Error::NotReal { gap: self.gap })
    }

    pub fn x12(&self) -> Option<Complex> {
        self.re_x12.map(|re| Complex::new(re, self.im_x12))
    }
}

/// Evaluate the closed forms in order: `λ`, `z₁`, `z₂ = 1`, `Im(x₁₂)`, `Re(x₁₂)`.
pub fn solve_params(q1: i64, omega: i64, c: &FrameCoord) -> Result<CertificateParams> {
    let p = CohomTwoParams::new(q1, omega)?;
    c.validate()?;
    let (q1, w) = (p.q1 as f64, p.omega as f64);
    let (st, ct) = c.theta.sin_cos();
    let (sa, ca) = c.alpha.sin_cos();
    let (ct2, ca2, sa2) = (ct * ct, ca * ca, sa * sa);

    let den = ct2 * (w - q1) - 2.0 * w;
    if den.abs() < TAU_DEN {
        return Err(Error::SingularDenominator("lambda"));
    }
    if ct.abs() < TAU_DEN {
        return Err(Error::SingularDenominator("z1"));
    }
    if (ca * sa).abs() < TAU_DEN {
        return Err(Error::SingularDenominator("im_x12"));
    }

    let lambda = 2.0 * ct * st * (w - q1) / (5.0 * den);
    let z1 = -(5.0 * ct * st * lambda + 2.0 * ct2 - 1.0) / ct2;
    let z2 = 1.0;
    let im_x12 = (z1 * (-ca2 * w - sa2 * q1 + (q1 - w) * ct2 + 2.0 * w) + ca2 * w + sa2 * q1)
        / (2.0 * ca * sa * (q1 - w));
    let gap = z1 - im_x12 * im_x12;
    let re_x12 = (gap >= 0.0).then(|| gap.sqrt());
    Ok(CertificateParams {
        lambda,
        z1,
        z2,
        im_x12,
        re_x12,
        gap,
    })
}

/// The matrices `X` and `Y` built from the parameters.
pub fn build_xy(p: &CertificateParams) -> Result<(SuElement, SuElement)> {
    let x12 = p.x12().ok_or(Error::GapNegative)?;
    let x11 = I * ((3.0 * p.z1 - 2.0 * p.z2) / 5.0);
    let x22 = -I * ((2.0 * p.z1 - 3.0 * p.z2) / 5.0);
    let z = ZERO;
    let x = Mat5::from_rows([
        [x11, x12, z, z, z],
        [-x12.conj(), x22, z, z, z],
        [z, z, x11, -x12.conj(), z],
        [z, z, x12, x22, z],
        [z, z, z, z, (x11 + x22) * -2.0],
    ]);
    let li = I * p.lambda;
    let y = Mat5::from_rows([
        [li, z, z, z, I],
        [z, li, z, z, x12.conj()],
        [z, z, li, z, z],
        [z, z, z, li, z],
        [I, -x12, z, z, li * -4.0],
    ]);
    Ok((SuElement::new(x)?, SuElement::new(y)?))
}

/// `|Σ terms| / max(1, max |term|)`: absolute for O(1) terms, relative when
/// the parameters blow up near a singular denominator.
fn relative_residual(terms: &[f64]) -> f64 {
    let scale = terms.iter().fold(1.0_f64, |m, t| m.max(t.abs()));
    terms.iter().sum::<f64>().abs() / scale
}

/// Residuals of the five defining equations. `xtrace_typeset` keeps the final
/// coefficient `(ω − q₁) − 2ω` as printed, `xtrace` uses `(ω − q₁)cos²θ − 2ω`,
/// the form consistent with horizontality and with the `Im(x₁₂)` formula.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquationResiduals {
    pub xtrace: f64,
    pub xtrace_typeset: f64,
    pub ytrace: f64,
    pub brack1: f64,
    pub brack2: f64,
    pub ad: f64,
}

impl EquationResiduals {
    /// Largest residual among the equations the certificate relies on.
    pub fn max_applicable(&self) -> f64 {
        [self.xtrace, self.ytrace, self.brack1, self.brack2, self.ad]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

pub fn equation_residuals(
    q1: i64,
    omega: i64,
    c: &FrameCoord,
    p: &CertificateParams,
) -> EquationResiduals {
    let (q1, w) = (q1 as f64, omega as f64);
    let (st, ct) = c.theta.sin_cos();
    let (sa, ca) = c.alpha.sin_cos();
    let (ct2, ca2, sa2) = (ct * ct, ca * ca, sa * sa);
    let (z1, z2, lambda, im) = (p.z1, p.z2, p.lambda, p.im_x12);

    let xtrace_head = [
        (z1 - z2) * w * ca2,
        2.0 * im * (q1 - w) * ca * sa,
        q1 * (z1 - z2) * sa2,
    ];
    let xtrace_with = |last: f64| {
        let mut t = xtrace_head.to_vec();
        t.push(last);
        relative_residual(&t)
    };
    let xtrace = xtrace_with(z1 * ((w - q1) * ct2 - 2.0 * w));
    let xtrace_typeset = xtrace_with(z1 * ((w - q1) - 2.0 * w));

    let ytrace = relative_residual(&[
        -5.0 * lambda * (q1 - w) * ct2,
        2.0 * (q1 - w) * st * ct,
        -10.0 * w * lambda,
    ]);

    let (brack1, brack2) = match p.x12() {
        Some(x12) => (
            relative_residual(&[-z1, x12.norm_sqr()]),
            (x12.norm() * (z2 - 1.0)).abs() / x12.norm().max(1.0),
        ),
        None => (f64::NAN, f64::NAN),
    };

    // the factor multiplying i·conj(x₁₂)·sin θ
    let ad = relative_residual(&[(z1 + 2.0) * ct2, 5.0 * lambda * ct * st, -z2]);

    EquationResiduals {
        xtrace,
        xtrace_typeset,
        ytrace,
        brack1,
        brack2,
        ad,
    }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub q1: i64,
    pub omega: i64,
    pub point: FrameCoord,
    pub params: CertificateParams,
    pub x_mat: SuElement,
    pub y_mat: SuElement,
    /// `frame_matrix(point)⁻¹`
    pub base: GroupElement,
    pub report: PlaneReport,
    pub equation_residuals: EquationResiduals,
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    q1: i64,
    omega: i64,
    theta: f64,
    alpha: f64,
    params: &'a CertificateParams,
    #[serde(rename = "X")]
    x: &'a SuElement,
    #[serde(rename = "Y")]
    y: &'a SuElement,
    residuals: ResidualsJson<'a>,
}

#[derive(Serialize)]
struct ResidualsJson<'a> {
    #[serde(flatten)]
    plane: &'a PlaneReport,
    #[serde(flatten)]
    equations: &'a EquationResiduals,
}

impl Certificate {
    pub fn to_json(&self) -> Result<String> {
        let view = CertificateJson {
            q1: self.q1,
            omega: self.omega,
            theta: self.point.theta,
            alpha: self.point.alpha,
            params: &self.params,
            x: &self.x_mat,
            y: &self.y_mat,
            residuals: ResidualsJson {
                plane: &self.report,
                equations: &self.equation_residuals,
            },
        };
        Ok(serde_json::to_string_pretty(&view)?)
    }
}

/// Solve, build `X, Y`, and check flatness at `frame_matrix(c)⁻¹`.
pub fn certify_point(q1: i64, omega: i64, c: &FrameCoord) -> Result<Certificate> {
    let params = solve_params(q1, omega, c)?;
    params.require_real()?;
    let (x_mat, y_mat) = build_xy(&params)?;
    let base = frame_matrix(c)?.inverse();
    let h = h_prime_basis(&CohomTwoParams::new(q1, omega)?);
    let report = main_metric_flat(&base, &h, &x_mat, &y_mat)?;
    let equation_residuals = equation_residuals(q1, omega, c, &params);
    let worst = report
        .max_residual()
        .max(equation_residuals.max_applicable());
    if !report.flat || !(worst < TAU_RES) {
        return Err(Error::FlatnessFailed {
            max_residual: worst,
        });
    }
    Ok(Certificate {
        q1,
        omega,
        point: *c,
        params,
        x_mat,
        y_mat,
        base,
        report,
        equation_residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{inner0, subalgebra, SubalgebraTag};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    fn pt(t: f64, a: f64) -> FrameCoord {
        FrameCoord::new(t, a).unwrap()
    }

    #[test]
    fn theta0_values() {
        assert!((theta0(3).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert!((theta0(7).unwrap() - FRAC_PI_3).abs() < 1e-15);
        assert!(matches!(theta0(1), Err(Error::OutOfDomain(_))));
        for q1 in (3..100).step_by(2) {
            let c2 = theta0(q1).unwrap().cos().powi(2);
            assert!(c2 > 0.0 && c2 < 1.0);
        }
    }

    #[test]
    fn alpha0_values() {
        for q1 in [3, 5, 9] {
            let a = alpha0(q1, -1, theta0(q1).unwrap()).unwrap();
            let want = q1 as f64 / (q1 as f64 + 1.0);
            assert!((a.cos().powi(2) - want).abs() < 1e-12);
            let near = alpha0(q1, 1, FRAC_PI_2 - 1e-7).unwrap();
            let want = (q1 as f64 - 2.0) / (q1 as f64 - 1.0);
            assert!((near.cos().powi(2) - want).abs() < 1e-10);
            let edge = (1.0 / (q1 as f64 - 1.0)).sqrt().asin();
            assert_eq!(alpha0(q1, 1, edge * 0.99), None);
        }
        assert_eq!(alpha0(1, 1, 0.5), None);
    }

    #[test]
    fn exact_point() {
        let p = solve_params(1, -1, &pt(FRAC_PI_4, FRAC_PI_4)).unwrap();
        assert!((p.lambda + 0.4).abs() < 1e-12);
        assert!((p.z1 - 2.0).abs() < 1e-12);
        assert!((p.im_x12 + 1.0).abs() < 1e-12);
        assert!((p.gap - 1.0).abs() < 1e-12);
        assert_eq!(p.z2, 1.0);
        let (x, _) = build_xy(&p).unwrap();
        assert!((x.mat()[(0, 0)] - Complex::new(0.0, 0.8)).norm() < 1e-12);
        assert!((x.mat()[(1, 1)] - Complex::new(0.0, -0.2)).norm() < 1e-12);
    }

    #[test]
    fn singular_denominators() {
        for q1 in [3, 5, 7] {
            let t0 = theta0(q1).unwrap();
            assert!(matches!(
                solve_params(q1, -1, &pt(t0, 0.5)),
                Err(Error::SingularDenominator("lambda"))
            ));
            // never singular for ω = 1
            for i in 1..50 {
                assert!(solve_params(q1, 1, &pt(i as f64 * FRAC_PI_2 / 50.0, 0.5)).is_ok());
            }
        }
        assert!(solve_params(3, 1, &pt(0.5, 0.0)).is_err());
        assert!(solve_params(3, 1, &pt(FRAC_PI_2, 0.5)).is_err());
        assert!(matches!(
            solve_params(1, 1, &pt(0.5, 0.5)),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn negative_gap() {
        let p = solve_params(3, -1, &pt(0.1, 0.1)).unwrap();
        assert!(p.gap < 0.0 && p.re_x12.is_none());
        assert!(matches!(build_xy(&p), Err(Error::GapNegative)));
        assert!(matches!(
            certify_point(3, -1, &pt(0.1, 0.1)),
            Err(Error::NotReal { .. })
        ));
    }

    #[test]
    fn x_and_y_are_traceless_and_x_is_orthogonal_to_sp2() {
        let p = solve_params(5, 1, &pt(1.4, 0.5)).unwrap();
        let p = CertificateParams {
            re_x12: Some(0.7),
            ..p
        };
        let (x, y) = build_xy(&p).unwrap();
        assert!(x.mat().trace().norm() < 1e-12 && y.mat().trace().norm() < 1e-12);
        for b in &subalgebra(SubalgebraTag::Sp2).basis {
            assert!(inner0(&x, b).abs() < 1e-12);
        }
    }

    #[test]
    fn equation_residuals_at_exact_point() {
        let c = pt(FRAC_PI_4, FRAC_PI_4);
        let p = solve_params(1, -1, &c).unwrap();
        let e = equation_residuals(1, -1, &c, &p);
        assert!(e.max_applicable() < 1e-12);
        // typeset terms: −½, −2, ½ and 2·((−1 − 1) + 2) = 0, summing to −2;
        // the largest term has size 2, so the relative residual is 1
        assert!((e.xtrace_typeset - 1.0).abs() < 1e-12);
    }

    #[test]
    fn certificates() {
        let cert = certify_point(1, -1, &pt(FRAC_PI_4, FRAC_PI_4)).unwrap();
        assert!(cert.report.flat);
        assert!((cert.params.gap - 1.0).abs() < 1e-12);
        let t = theta0(3).unwrap() + 0.05;
        let a = alpha0(3, -1, t).unwrap();
        let cert = certify_point(3, -1, &pt(t, a)).unwrap();
        assert!(cert.params.gap > 0.0);
        // gap ≈ 1.0094 here, despite z₁ = −1 at θ = 0 for other parameters
        let cert = certify_point(1, -1, &pt(0.1, 0.1)).unwrap();
        assert!(cert.params.gap > 1.0);
    }

    #[test]
    fn certificate_json() {
        let cert = certify_point(1, -1, &pt(FRAC_PI_4, FRAC_PI_4)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&cert.to_json().unwrap()).unwrap();
        for key in [
            "q1",
            "omega",
            "theta",
            "alpha",
            "params",
            "X",
            "Y",
            "residuals",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["q1"], 1);
        assert_eq!(v["residuals"]["flat"], true);
        assert!(v["residuals"]["xtrace_typeset"].as_f64().unwrap() > 0.1);
        let x: Mat5 = serde_json::from_value(v["X"].clone()).unwrap();
        assert_eq!(x, *cert.x_mat.mat());
    }
}
