//! The two-parameter family F of orbit representatives and the orbit invariants.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{GroupElement, Mat5};
use crate::tolerance::TAU_RES;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrameCoord {
    pub theta: f64,
    pub alpha: f64,
}

impl FrameCoord {
    pub fn new(theta: f64, alpha: f64) -> Result<Self> {
        let c = Self { theta, alpha };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("theta", self.theta), ("alpha", self.alpha)] {
            if !(0.0..=FRAC_PI_2).contains(&v) {
                return Err(Error::OutOfRange(format!(
                    "{name} = {v} is outside [0, pi/2]"
                )));
            }
        }
        Ok(())
    }
}

/// The element of F with coordinates `(θ, α)`.
pub fn frame_matrix(c: &FrameCoord) -> Result<GroupElement> {
    c.validate()?;
    let (st, ct) = c.theta.sin_cos();
    let (sa, ca) = c.alpha.sin_cos();
    let m = Mat5::from_real_rows([
        [0.0, -1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, ca, -sa, 0.0],
        [ct, 0.0, 0.0, 0.0, -st],
        [st, 0.0, 0.0, 0.0, ct],
        [0.0, 0.0, sa, ca, 0.0],
    ]);
    Ok(GroupElement::from_mat_unchecked(m))
}

/// `(|a₄₅|² + |a₅₅|², |a₄₃a₅₁ + a₄₄a₅₂ − a₄₁a₅₃ − a₄₂a₅₄|)`
pub fn orbit_invariants(a: &GroupElement) -> (f64, f64) {
    invariants_of(a.mat())
}

pub(crate) fn invariants_of(m: &Mat5) -> (f64, f64) {
    let f = m[(3, 4)].norm_sqr() + m[(4, 4)].norm_sqr();
    let nu = m[(3, 2)] * m[(4, 0)] + m[(3, 3)] * m[(4, 1)]
        - m[(3, 0)] * m[(4, 2)]
        - m[(3, 1)] * m[(4, 3)];
    (f, nu.norm())
}

/// Whether `a` and `b` lie in the same orbit of the cohomogeneity-two action.
pub fn orbit_equivalent(a: &GroupElement, b: &GroupElement) -> bool {
    let (fa, na) = orbit_invariants(a);
    let (fb, nb) = orbit_invariants(b);
    let close = |x: f64, y: f64| (x - y).abs() < TAU_RES;
    (close(fa, 1.0) && close(fb, 1.0)) || (close(fa, fb) && close(na, nb))
}
