//! Zero-curvature planes of Wilking metrics on the biquotient.
//!
//! A plane spanned by `x, y` at the point `g` is flat when it is horizontal
//! for the h′ action (condition 1) and passes the chain criterion for the
//! right factor (condition 2) and, after `Ad_{g⁻¹}`, for the left factor
//! (condition 3).

use serde::{Deserialize, Serialize};

use crate::bazaikin::HPrimeAlgebra;
use crate::cheeger::{admissible_chain, orthonormal_pair, CheegerChain, Side};
use crate::error::{Error, Result};
use crate::linalg::{
    ad_action, bracket, inner0, orthonormalize, subalgebra, GroupElement, SuElement, SubalgebraTag,
};
use crate::tolerance::{TAU_RANK, TAU_RES};

#[derive(Clone, Debug)]
pub struct WilkingMetric {
    left_chain: CheegerChain,
    right_chain: CheegerChain,
}

impl WilkingMetric {
    pub fn new(left_chain: CheegerChain, right_chain: CheegerChain) -> Result<Self> {
        if !admissible_chain(&left_chain, Side::Left) {
            return Err(Error::BadChain(format!(
                "left chain {:?} is not admissible",
                left_chain.tags()
            )));
        }
        if !admissible_chain(&right_chain, Side::Right) {
            return Err(Error::BadChain(format!(
                "right chain {:?} is not admissible",
                right_chain.tags()
            )));
        }
        Ok(Self {
            left_chain,
            right_chain,
        })
    }

    pub fn left_chain(&self) -> &CheegerChain {
        &self.left_chain
    }

    pub fn right_chain(&self) -> &CheegerChain {
        &self.right_chain
    }
}

/// Left chain `[s]`, right chain `[u4]`.
pub fn main_metric(sigma_left: f64, sigma_right: f64) -> Result<WilkingMetric> {
    for (name, s) in [("sigma_left", sigma_left), ("sigma_right", sigma_right)] {
        if !(s > 0.0 && s < 1.0) {
            return Err(Error::OutOfRange(format!("{name} = {s} is outside (0, 1)")));
        }
    }
    WilkingMetric::new(
        CheegerChain::from_tags(&[SubalgebraTag::S], vec![sigma_left])?,
        CheegerChain::from_tags(&[SubalgebraTag::U4], vec![sigma_right])?,
    )
}

/// Every pairing of a single-link (or empty) admissible left chain with a
/// single-link (or empty) admissible right chain.
pub fn single_link_metrics(sigma_left: f64, sigma_right: f64) -> Result<Vec<WilkingMetric>> {
    let chains = |side: Side, sigma: f64| -> Result<Vec<CheegerChain>> {
        std::iter::once(Ok(CheegerChain::empty()))
            .chain(
                side.admissible_tags()
                    .iter()
                    .map(|&t| CheegerChain::from_tags(&[t], vec![sigma])),
            )
            .collect()
    };
    let lefts = chains(Side::Left, sigma_left)?;
    let rights = chains(Side::Right, sigma_right)?;
    let mut out = Vec::with_capacity(lefts.len() * rights.len());
    for l in &lefts {
        for r in &rights {
            out.push(WilkingMetric::new(l.clone(), r.clone())?);
        }
    }
    Ok(out)
}

/// Unit vectors `Ad_g H₁ − H₂` normal to the horizontal space.
fn constraint_vectors(g: &GroupElement, h: &HPrimeAlgebra) -> Vec<SuElement> {
    h.generators()
        .iter()
        .map(|p| {
            let c = ad_action(g, &p.left).sub(&p.right);
            c.scale(1.0 / c.norm())
        })
        .collect()
}

/// Orthonormal basis of `{X : ⟨X, Ad_g H₁ − H₂⟩₀ = 0 for all (H₁, H₂) ∈ h′}`.
pub fn horizontal_space(g: &GroupElement, h: &HPrimeAlgebra) -> Result<Vec<SuElement>> {
    let constraints = constraint_vectors(g, h);
    let normal = orthonormalize(&constraints, TAU_RANK);
    if normal.len() != constraints.len() {
        return Err(Error::DegenerateConstraints {
            rank: normal.len(),
            expected: constraints.len(),
        });
    }
    let span: Vec<SuElement> = normal
        .iter()
        .chain(&subalgebra(SubalgebraTag::Full).basis)
        .copied()
        .collect();
    Ok(orthonormalize(&span, TAU_RANK).split_off(normal.len()))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneReport {
    #[serde(rename = "cond1")]
    pub cond1_res: f64,
    #[serde(rename = "cond2")]
    pub cond2_res: f64,
    #[serde(rename = "cond3")]
    pub cond3_res: f64,
    pub flat: bool,
}

impl PlaneReport {
    fn new(cond1_res: f64, cond2_res: f64, cond3_res: f64) -> Self {
        let flat = cond1_res.max(cond2_res).max(cond3_res) < TAU_RES;
        Self {
            cond1_res,
            cond2_res,
            cond3_res,
            flat,
        }
    }

    pub fn max_residual(&self) -> f64 {
        self.cond1_res.max(self.cond2_res).max(self.cond3_res)
    }
}

fn horizontality_residual(
    g: &GroupElement,
    h: &HPrimeAlgebra,
    u: &SuElement,
    v: &SuElement,
) -> f64 {
    constraint_vectors(g, h)
        .iter()
        .flat_map(|c| [inner0(u, c).abs(), inner0(v, c).abs()])
        .fold(0.0, f64::max)
}

/// The three conditions for the plane spanned by `x, y` at `g`.
pub fn plane_flat(
    metric: &WilkingMetric,
    g: &GroupElement,
    h: &HPrimeAlgebra,
    x: &SuElement,
    y: &SuElement,
) -> Result<PlaneReport> {
    let (u, v) = orthonormal_pair(x, y)?;
    let cond1 = horizontality_residual(g, h, &u, &v);

    let right = &metric.right_chain;
    let cond2 = right
        .chain_flat(&right.phi_inverse(&u), &right.phi_inverse(&v))?
        .max_residual();

    let left = &metric.left_chain;
    let gi = g.inverse();
    let (au, av) = (ad_action(&gi, &u), ad_action(&gi, &v));
    let cond3 = left
        .chain_flat(&left.phi_inverse(&au), &left.phi_inverse(&av))?
        .max_residual();

    Ok(PlaneReport::new(cond1, cond2, cond3))
}

/// The main-metric specialization: `[x,y]`, `[x_u4, y_u4]`, `[Ad x, Ad y]` and
/// `[(Ad x)_s, (Ad y)_s]` with `Ad = Ad_{g⁻¹}`, on an orthonormal basis of the plane.
pub fn main_metric_flat(
    g: &GroupElement,
    h: &HPrimeAlgebra,
    x: &SuElement,
    y: &SuElement,
) -> Result<PlaneReport> {
    let (u, v) = orthonormal_pair(x, y)?;
    let cond1 = horizontality_residual(g, h, &u, &v);

    let u4 = subalgebra(SubalgebraTag::U4);
    let cond2 = bracket(&u, &v)
        .norm()
        .max(bracket(&u4.project(&u), &u4.project(&v)).norm());

    let s = subalgebra(SubalgebraTag::S);
    let gi = g.inverse();
    let (au, av) = (ad_action(&gi, &u), ad_action(&gi, &v));
    let cond3 = bracket(&au, &av)
        .norm()
        .max(bracket(&s.project(&au), &s.project(&av)).norm());

    Ok(PlaneReport::new(cond1, cond2, cond3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bazaikin::{frame_matrix, h_prime_basis, CohomTwoParams, FrameCoord};
    use crate::linalg::random::{random_group_element_from, rng_from_seed};
    use crate::linalg::{Mat5, PairElement};
    use rand::Rng;
    use std::f64::consts::FRAC_PI_4;

    fn h(q1: i64, omega: i64) -> HPrimeAlgebra {
        h_prime_basis(&CohomTwoParams::new(q1, omega).unwrap())
    }

    #[test]
    fn main_metric_shape() {
        let m = main_metric(0.5, 0.5).unwrap();
        assert_eq!(m.left_chain().decomposition().dimensions(), vec![12, 12]);
        assert_eq!(m.right_chain().decomposition().dimensions(), vec![8, 16]);
        assert!(matches!(main_metric(1.0, 0.5), Err(Error::OutOfRange(_))));
        assert!(main_metric(0.5, 0.0).is_err());
        assert_eq!(single_link_metrics(0.5, 0.5).unwrap().len(), 63);
    }

    #[test]
    fn inadmissible_metric() {
        let su3 = CheegerChain::from_tags(&[SubalgebraTag::Su3], vec![0.5]).unwrap();
        assert!(WilkingMetric::new(CheegerChain::empty(), su3).is_err());
    }

    #[test]
    fn horizontal_dimension_at_frame_point() {
        let g = frame_matrix(&FrameCoord::new(FRAC_PI_4, FRAC_PI_4).unwrap()).unwrap();
        let hp = h(1, -1);
        let basis = horizontal_space(&g, &hp).unwrap();
        assert_eq!(basis.len(), 13);
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((inner0(a, b) - want).abs() < 1e-12);
            }
        }
        for p in hp.generators() {
            let c = ad_action(&g, &p.left).sub(&p.right);
            for b in &basis {
                assert!(inner0(b, &c).abs() < TAU_RES);
            }
        }
    }

    #[test]
    fn horizontal_dimension_random() {
        let mut rng = rng_from_seed(17);
        let hp = h(3, 1);
        for _ in 0..100 {
            let g = random_group_element_from(&mut rng);
            assert_eq!(horizontal_space(&g, &hp).unwrap().len(), 13);
        }
    }

    #[test]
    fn rank_deficient_constraints() {
        // duplicate a generator so the constraints are dependent
        let mut hp = h(1, -1);
        let dup: PairElement = hp.sp2_part[0];
        hp.sp2_part.push(dup);
        let err = horizontal_space(&GroupElement::identity(), &hp).unwrap_err();
        assert!(matches!(
            err,
            Error::DegenerateConstraints {
                rank: 11,
                expected: 12
            }
        ));
    }

    #[test]
    fn abelian_plane_passes_bracket_conditions() {
        let x = SuElement::new(Mat5::imag_diag(&[1.0, -1.0, 0.0, 0.0, 0.0])).unwrap();
        let y = SuElement::new(Mat5::imag_diag(&[0.0, 0.0, 1.0, 1.0, -2.0])).unwrap();
        let rep = plane_flat(
            &main_metric(0.4, 0.6).unwrap(),
            &GroupElement::identity(),
            &h(1, -1),
            &x,
            &y,
        )
        .unwrap();
        assert!(rep.cond2_res < TAU_RES && rep.cond3_res < TAU_RES);
    }

    #[test]
    fn random_horizontal_planes_are_not_flat_and_paths_agree() {
        let mut rng = rng_from_seed(99);
        let hp = h(3, -1);
        let metrics = [
            main_metric(0.5, 0.5).unwrap(),
            main_metric(0.3, 0.7).unwrap(),
        ];
        for _ in 0..20 {
            let g = random_group_element_from(&mut rng);
            let basis = horizontal_space(&g, &hp).unwrap();
            let mut comb = || {
                basis.iter().fold(SuElement::zero(), |acc, b| {
                    acc.axpy(rng.gen_range(-1.0..1.0), b)
                })
            };
            let (x, y) = (comb(), comb());
            let fast = main_metric_flat(&g, &hp, &x, &y).unwrap();
            assert!(fast.cond1_res < TAU_RES);
            assert!(!fast.flat && fast.cond2_res > TAU_RES);
            for m in &metrics {
                assert_eq!(plane_flat(m, &g, &hp, &x, &y).unwrap().flat, fast.flat);
            }
        }
    }

    #[test]
    fn dependent_pair() {
        let x = SuElement::new(Mat5::imag_diag(&[1.0, -1.0, 0.0, 0.0, 0.0])).unwrap();
        let err = main_metric_flat(&GroupElement::identity(), &h(1, -1), &x, &x.scale(2.0));
        assert!(matches!(err, Err(Error::DependentVectors { .. })));
    }

    #[test]
    fn report_json() {
        let rep = PlaneReport::new(0.0, 1e-12, 2e-11);
        let s = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            s,
            r#"{"cond1":0.0,"cond2":1e-12,"cond3":2e-11,"flat":true}"#
        );
    }
}
