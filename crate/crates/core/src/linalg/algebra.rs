//! SU(5), its Lie algebra su(5), and the bi-invariant inner product.

use serde::{Deserialize, Serialize};

use super::mat::Mat5;
use crate::error::{Error, Result};
use crate::tolerance::TAU_UNITARY;

/// An element of SU(5).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(Mat5);

impl GroupElement {
    pub fn new(m: Mat5) -> Result<Self> {
        let residual = m.special_unitary_residual();
        if residual > TAU_UNITARY {
            return Err(Error::NonUnitary { residual });
        }
        Ok(Self(m))
    }

    /// Wrap a matrix that is special unitary by construction.
    pub(crate) fn from_mat_unchecked(m: Mat5) -> Self {
        Self(m)
    }

    pub fn identity() -> Self {
        Self(Mat5::identity())
    }

    pub fn mat(&self) -> &Mat5 {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn compose(&self, other: &GroupElement) -> Self {
        Self(self.0 * other.0)
    }
}

/// A traceless skew-Hermitian 5×5 matrix.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SuElement(Mat5);

impl SuElement {
    /// Checks the invariants relative to the size of the entries.
    pub fn new(m: Mat5) -> Result<Self> {
        let residual = m.skew_traceless_residual() / m.max_abs().max(1.0);
        if residual > TAU_UNITARY {
            return Err(Error::NotInAlgebra { residual });
        }
        Ok(Self(m))
    }

    pub(crate) fn from_mat_unchecked(m: Mat5) -> Self {
        Self(m)
    }

    pub fn zero() -> Self {
        Self(Mat5::zeros())
    }

    pub fn mat(&self) -> &Mat5 {
        &self.0
    }

    /// `sqrt(inner0(x, x))`, which is the Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0 * s)
    }

    pub fn add(&self, other: &SuElement) -> Self {
        Self(self.0 + other.0)
    }

    pub fn sub(&self, other: &SuElement) -> Self {
        Self(self.0 - other.0)
    }

    /// `self + s * other`
    pub fn axpy(&self, s: f64, other: &SuElement) -> Self {
        Self(self.0 + other.0 * s)
    }
}

/// An element of su(5) ⊕ su(5).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairElement {
    pub left: SuElement,
    pub right: SuElement,
}

/// `⟨x, y⟩₀ = −Re tr(xy)`.
pub fn inner0(x: &SuElement, y: &SuElement) -> f64 {
    let (a, b) = (&x.0.entries, &y.0.entries);
    let mut tr = 0.0;
    for r in 0..5 {
        for k in 0..5 {
            let p = a[r][k] * b[k][r];
            tr += p.re;
        }
    }
    -tr
}

/// Matrix commutator `xy − yx`.
pub fn bracket(x: &SuElement, y: &SuElement) -> SuElement {
    SuElement(x.0 * y.0 - y.0 * x.0)
}

/// `g x g⁻¹`.
pub fn ad_action(g: &GroupElement, x: &SuElement) -> SuElement {
    SuElement(g.0 * x.0 * g.0.adjoint())
}

/// Gram–Schmidt with a second pass. Inputs shorter than `tol` (after removing
/// earlier directions) relative to their original length are dropped.
pub fn orthonormalize(vectors: &[SuElement], tol: f64) -> Vec<SuElement> {
    let mut out: Vec<SuElement> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let scale = v.norm();
        if scale == 0.0 {
            continue;
        }
        let mut w = *v;
        for _ in 0..2 {
            for o in &out {
                w = w.axpy(-inner0(&w, o), o);
            }
        }
        let n = w.norm();
        if n > tol * scale {
            out.push(w.scale(1.0 / n));
        }
    }
    out
}

/// Normalized Gram determinant of a pair, the squared sine of the angle between them.
pub fn normalized_gram(x: &SuElement, y: &SuElement) -> f64 {
    let (xx, yy, xy) = (inner0(x, x), inner0(y, y), inner0(x, y));
    if xx == 0.0 || yy == 0.0 {
        return 0.0;
    }
    1.0 - (xy * xy) / (xx * yy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::mat::{Complex, I, ONE};

    fn e12() -> SuElement {
        let mut m = Mat5::zeros();
        m[(0, 1)] = ONE;
        m[(1, 0)] = -ONE;
        SuElement::new(m).unwrap()
    }

    #[test]
    fn inner0_of_circle_generator_is_twenty() {
        let x = SuElement::new(Mat5::imag_diag(&[1.0, 1.0, 1.0, 1.0, -4.0])).unwrap();
        assert!((inner0(&x, &x) - 20.0).abs() < 1e-14);
        assert_eq!(inner0(&x, &SuElement::zero()), 0.0);
    }

    #[test]
    fn off_diagonal_is_orthogonal_to_diagonal() {
        let d = SuElement::new(Mat5::imag_diag(&[0.3, -1.0, 2.0, -0.5, -0.8])).unwrap();
        assert_eq!(inner0(&e12(), &d), 0.0);
    }

    #[test]
    fn bracket_with_diagonal() {
        let h = SuElement::new(Mat5::imag_diag(&[1.0, -1.0, 0.0, 0.0, 0.0])).unwrap();
        let b = bracket(&h, &e12());
        let mut expected = Mat5::zeros();
        expected[(0, 1)] = Complex::new(0.0, 2.0);
        expected[(1, 0)] = Complex::new(0.0, 2.0);
        assert!((*b.mat() - expected).max_abs() < 1e-15);
        assert_eq!(bracket(&h, &h), SuElement::zero());
    }

    #[test]
    fn invariant_checks_reject_bad_matrices() {
        let mut m = Mat5::zeros();
        m[(0, 1)] = ONE;
        assert!(matches!(SuElement::new(m), Err(Error::NotInAlgebra { .. })));
        assert!(matches!(
            SuElement::new(Mat5::imag_diag(&[1.0, 0.0, 0.0, 0.0, 0.0])),
            Err(Error::NotInAlgebra { .. })
        ));
        assert!(matches!(
            GroupElement::new(Mat5::identity() * 2.0),
            Err(Error::NonUnitary { .. })
        ));
        // unitary but det = i
        assert!(GroupElement::new(Mat5::from_diag(&[I, ONE, ONE, ONE, ONE])).is_err());
    }

    #[test]
    fn ad_identity() {
        let x = e12();
        assert_eq!(ad_action(&GroupElement::identity(), &x), x);
    }
}
