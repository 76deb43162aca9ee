//! Quaternions and their complex 2×2 embedding, used to build Sp(2) inside SU(5).
//!
//! A quaternion `w + xi + yj + zk` is written `a + bj` with `a = w + xi` and
//! `b = y + zi`, and maps to `[[a, b], [-conj(b), conj(a)]]`. For a 2×2
//! quaternionic matrix `A + Bj` the same rule gives the 4×4 complex block
//! `[[A, B], [-conj(B), conj(A)]]`.

use std::ops::{Add, Mul, Neg, Sub};

use super::mat::{Complex, Mat5, ONE, ZERO};

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    /// Build `a + bj` from its complex parts.
    pub fn from_complex_pair(a: Complex, b: Complex) -> Self {
        Self::new(a.re, a.im, b.re, b.im)
    }

    /// The pair `(a, b)` with `self = a + bj`.
    pub fn complex_pair(&self) -> (Complex, Complex) {
        (Complex::new(self.w, self.x), Complex::new(self.y, self.z))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn to_complex2(&self) -> [[Complex; 2]; 2] {
        let (a, b) = self.complex_pair();
        [[a, b], [-b.conj(), a.conj()]]
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

/// 2×2 quaternionic matrix `q` as an element of SU(5): the 4×4 complex block
/// in the upper-left corner and 1 at (5,5).
pub fn embed_quaternion_matrix(q: &[[Quaternion; 2]; 2]) -> Mat5 {
    let mut block = [[ZERO; 4]; 4];
    for r in 0..2 {
        for c in 0..2 {
            let (a, b) = q[r][c].complex_pair();
            block[r][c] = a;
            block[r][c + 2] = b;
            block[r + 2][c] = -b.conj();
            block[r + 2][c + 2] = a.conj();
        }
    }
    Mat5::from_block4(&block, ONE)
}

/// The quaternionic structure map on row vectors of C⁴:
/// `(a1, a2, b1, b2) ↦ (-conj b1, -conj b2, conj a1, conj a2)`.
///
/// Rows 3 and 4 of an Sp(2) matrix are the images of rows 1 and 2.
pub fn quaternionic_partner(v: &[Complex; 4]) -> [Complex; 4] {
    [-v[2].conj(), -v[3].conj(), v[0].conj(), v[1].conj()]
}

/// Residual of the Sp(2) block structure `[[A, B], [-conj B, conj A]]` on the
/// upper-left 4×4 block, plus the trivial fifth row and column.
pub fn sp2_structure_residual(m: &Mat5) -> f64 {
    let mut res: f64 = 0.0;
    for r in 0..2 {
        for c in 0..2 {
            res = res.max((m[(r + 2, c + 2)] - m[(r, c)].conj()).norm());
            res = res.max((m[(r + 2, c)] + m[(r, c + 2)].conj()).norm());
        }
    }
    for k in 0..4 {
        res = res.max(m[(4, k)].norm()).max(m[(k, 4)].norm());
    }
    res.max((m[(4, 4)] - ONE).norm())
}

/// Row-vector helpers on C⁴ used by the Sp(2) constructions.
pub(crate) fn hermitian_dot(a: &[Complex; 4], b: &[Complex; 4]) -> Complex {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

pub(crate) fn norm4(a: &[Complex; 4]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// An Sp(2) element (embedded in SU(5)) whose first row is the unit vector `e`.
///
/// The second row is completed by Gram–Schmidt against `e` and its partner,
/// starting from the standard basis vector least aligned with both.
pub fn sp2_with_first_row(e: &[Complex; 4]) -> Mat5 {
    let n = norm4(e);
    let e: [Complex; 4] = std::array::from_fn(|k| e[k] / n);
    let je = quaternionic_partner(&e);
    let mut best: Option<([Complex; 4], f64)> = None;
    for k in 0..4 {
        let mut f = [ZERO; 4];
        f[k] = ONE;
        for _ in 0..2 {
            for v in [&e, &je] {
                let d = hermitian_dot(&f, v);
                for i in 0..4 {
                    f[i] -= d * v[i];
                }
            }
        }
        let nf = norm4(&f);
        if best.as_ref().is_none_or(|(_, b)| nf > *b) {
            best = Some((f, nf));
        }
    }
    let (f, nf) = best.unwrap();
    let f: [Complex; 4] = std::array::from_fn(|k| f[k] / nf);
    let jf = quaternionic_partner(&f);
    let rows = [e, f, je, jf];
    let mut block = [[ZERO; 4]; 4];
    block.copy_from_slice(&rows);
    Mat5::from_block4(&block, ONE)
}
