//! Reduction of an arbitrary SU(5) element into F.
//!
//! `S(U(3)×U(2))` acts by left multiplication and Sp(2) by right
//! multiplication with an inverse. Each step multiplies the working matrix
//! by one factor and records the result.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use super::frame::{frame_matrix, FrameCoord};
use crate::error::Result;
use crate::linalg::mat::Complex;
use crate::linalg::quaternion::{norm4, quaternionic_partner, sp2_with_first_row};
use crate::linalg::{GroupElement, Mat5};

/// Below this norm a row prefix is treated as zero.
const DEGENERATE: f64 = 1e-14;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub coord: FrameCoord,
    /// Left factor in S(U(3)×U(2)).
    pub s: GroupElement,
    /// Sp(2) factor, with `s·a·p⁻¹ = frame_matrix(coord)`.
    pub p: GroupElement,
    /// The working matrix after each step, all in the orbit of the input.
    pub steps: Vec<Mat5>,
    /// `‖s·a·p⁻¹ − frame_matrix(coord)‖`, max-entry norm.
    pub residual: f64,
}

pub fn canonical_form(a: &GroupElement) -> Result<CanonicalForm> {
    let a = GroupElement::new(*a.mat())?;
    let mut m = *a.mat();
    let mut s = Mat5::identity();
    let mut r = Mat5::identity();
    let mut steps = Vec::new();
    let mut left = |g: Mat5, m: &mut Mat5, steps: &mut Vec<Mat5>| {
        *m = g * *m;
        s = g * s;
        steps.push(*m);
    };
    let mut right = |g: Mat5, m: &mut Mat5, steps: &mut Vec<Mat5>| {
        *m = *m * g;
        r = r * g;
        steps.push(*m);
    };

    // SU(2) on rows 4, 5 moving (a45, a55) to (cos θ, 0)
    let (v1, v2) = (m[(3, 4)], m[(4, 4)]);
    let nv = (v1.norm_sqr() + v2.norm_sqr()).sqrt();
    let theta = if nv > DEGENERATE {
        let mut u = Mat5::identity();
        u[(3, 3)] = v1.conj() / nv;
        u[(3, 4)] = v2.conj() / nv;
        u[(4, 3)] = -v2 / nv;
        u[(4, 4)] = v1 / nv;
        left(u, &mut m, &mut steps);
        nv.min(1.0).acos()
    } else {
        FRAC_PI_2
    };

    let row4: [Complex; 4] = std::array::from_fn(|k| m[(3, k)]);
    let alpha = if norm4(&row4) > DEGENERATE {
        // Sp(2) moving the row-4 prefix to (sin θ, 0, 0, 0)
        right(sp2_with_first_row(&row4).adjoint(), &mut m, &mut steps);

        // phase making a53 real and non-negative
        let a53 = m[(4, 2)];
        if a53.norm() > DEGENERATE {
            let u = a53 / a53.norm();
            let mut d = Mat5::identity();
            d[(0, 0)] = u;
            d[(4, 4)] = u.conj();
            left(d, &mut m, &mut steps);
        }

        // Sp(1) on coordinates 2, 4 (the stabilizer of the first row)
        // clearing a52 and making a54 real and non-negative
        let (w1, w2) = (m[(4, 1)], m[(4, 3)]);
        let n = (w1.norm_sqr() + w2.norm_sqr()).sqrt();
        if n > DEGENERATE {
            let (ca, cb) = (w2 / n, w1.conj() / n);
            let mut q = Mat5::identity();
            q[(1, 1)] = ca;
            q[(1, 3)] = cb;
            q[(3, 1)] = -cb.conj();
            q[(3, 3)] = ca.conj();
            right(q, &mut m, &mut steps);
        }
        m[(4, 2)].re.atan2(n)
    } else {
        // θ = 0: rows 4, 5 are (0,0,0,0,1) and (y, 0). One Sp(2) element sends
        // y to (0,0,1,0), the representative with α = π/2.
        let y: [Complex; 4] = std::array::from_fn(|k| m[(4, k)]);
        let first = quaternionic_partner(&y).map(|z| -z);
        right(sp2_with_first_row(&first).adjoint(), &mut m, &mut steps);
        FRAC_PI_2
    };

    let coord = FrameCoord::new(theta.clamp(0.0, FRAC_PI_2), alpha.clamp(0.0, FRAC_PI_2))?;
    let target = frame_matrix(&coord)?;

    // SU(3) on the first three rows: the upper-left block of T·M*
    let tm = *target.mat() * m.adjoint();
    let mut s3 = Mat5::identity();
    for i in 0..3 {
        for j in 0..3 {
            s3[(i, j)] = tm[(i, j)];
        }
    }
    left(s3, &mut m, &mut steps);

    let residual = (m - *target.mat()).max_abs();
    let s = GroupElement::new(s)?;
    let p = GroupElement::new(r.adjoint())?;
    Ok(CanonicalForm {
        coord,
        s,
        p,
        steps,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bazaikin::frame::{invariants_of, orbit_invariants};
    use crate::linalg::quaternion::sp2_structure_residual;
    use crate::linalg::random_group_element;

    fn check(a: &GroupElement) -> CanonicalForm {
        let cf = canonical_form(a).unwrap();
        let rebuilt = *cf.s.mat() * *a.mat() * cf.p.mat().adjoint();
        let target = *frame_matrix(&cf.coord).unwrap().mat();
        assert!(
            (rebuilt - target).max_abs() < 1e-9,
            "residual {}",
            cf.residual
        );
        assert!(cf.residual < 1e-9);
        let s = cf.s.mat();
        for i in 0..3 {
            for j in 3..5 {
                assert!(s[(i, j)].norm() < 1e-12 && s[(j, i)].norm() < 1e-12);
            }
        }
        assert!(sp2_structure_residual(cf.p.mat()) < 1e-12);
        let (f, nu) = orbit_invariants(a);
        for m in &cf.steps {
            let (fs, ns) = invariants_of(m);
            assert!((f - fs).abs() < 1e-9 && (nu - ns).abs() < 1e-9);
        }
        let (t, al) = (cf.coord.theta, cf.coord.alpha);
        assert!((t.cos().powi(2) - f).abs() < 1e-9);
        assert!((t.sin() * al.sin() - nu).abs() < 1e-9);
        cf
    }

    #[test]
    fn random_inputs_reduce() {
        for seed in 0..100 {
            check(&random_group_element(seed));
        }
    }

    #[test]
    fn frame_points_are_fixed() {
        for i in 1..8 {
            for j in 1..8 {
                let c = FrameCoord::new(i as f64 * 0.19, j as f64 * 0.19).unwrap();
                let cf = check(&frame_matrix(&c).unwrap());
                assert!((cf.coord.theta - c.theta).abs() < 1e-9);
                assert!((cf.coord.alpha - c.alpha).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn degenerate_corners() {
        for (t, a) in [
            (0.0, 0.3),
            (FRAC_PI_2, 0.3),
            (0.4, 0.0),
            (0.4, FRAC_PI_2),
            (0.0, 0.0),
        ] {
            let g = frame_matrix(&FrameCoord::new(t, a).unwrap()).unwrap();
            check(&g);
            let h = random_group_element(3);
            check(&h.compose(&g));
            check(&g.compose(&h));
        }
    }
}
