//! Fixed-size 5×5 complex matrices.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Complex = Complex64;

pub const N: usize = 5;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat5 {
    pub entries: [[Complex; N]; N],
}

impl Default for Mat5 {
    fn default() -> Self {
        Self::zeros()
    }
}

impl Mat5 {
    pub const fn zeros() -> Self {
        Self {
            entries: [[ZERO; N]; N],
        }
    }

    pub fn identity() -> Self {
        Self::from_diag(&[ONE; N])
    }

    pub fn from_rows(entries: [[Complex; N]; N]) -> Self {
        Self { entries }
    }

    pub fn from_real_rows(rows: [[f64; N]; N]) -> Self {
        let mut m = Self::zeros();
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.entries[r][c] = Complex::new(v, 0.0);
            }
        }
        m
    }

    pub fn from_diag(d: &[Complex; N]) -> Self {
        let mut m = Self::zeros();
        for (i, &v) in d.iter().enumerate() {
            m.entries[i][i] = v;
        }
        m
    }

    /// `i * diag(d)`, the usual way diagonal Lie algebra elements are written.
    pub fn imag_diag(d: &[f64; N]) -> Self {
        let mut m = Self::zeros();
        for (i, &v) in d.iter().enumerate() {
            m.entries[i][i] = Complex::new(0.0, v);
        }
        m
    }

    /// Embed a 4×4 block in the upper-left corner, with `corner` at (5,5).
    pub fn from_block4(block: &[[Complex; 4]; 4], corner: Complex) -> Self {
        let mut m = Self::zeros();
        for r in 0..4 {
            m.entries[r][..4].copy_from_slice(&block[r]);
        }
        m.entries[4][4] = corner;
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for r in 0..N {
            for c in 0..N {
                m.entries[c][r] = self.entries[r][c].conj();
            }
        }
        m
    }

    pub fn conj(&self) -> Self {
        let mut m = *self;
        m.entries.iter_mut().flatten().for_each(|z| *z = z.conj());
        m
    }

    pub fn trace(&self) -> Complex {
        (0..N).map(|i| self.entries[i][i]).sum()
    }

    pub fn scale(&self, s: Complex) -> Self {
        let mut m = *self;
        m.entries.iter_mut().flatten().for_each(|z| *z *= s);
        m
    }

    pub fn scale_re(&self, s: f64) -> Self {
        let mut m = *self;
        m.entries.iter_mut().flatten().for_each(|z| *z *= s);
        m
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Complex {
        let mut a = self.entries;
        let mut det = ONE;
        for col in 0..N {
            let pivot = (col..N)
                .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
                .unwrap();
            if a[pivot][col].norm() == 0.0 {
                return ZERO;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col];
            det *= p;
            for r in (col + 1)..N {
                let f = a[r][col] / p;
                if f != ZERO {
                    for c in col..N {
                        let v = a[col][c];
                        a[r][c] -= f * v;
                    }
                }
            }
        }
        det
    }

    /// `‖M M* − I‖` and `|det M − 1|`, the larger of the two.
    pub fn special_unitary_residual(&self) -> f64 {
        let u = (*self * self.adjoint() - Self::identity()).max_abs();
        let d = (self.det() - ONE).norm();
        u.max(d)
    }

    /// `‖M* + M‖` and `|tr M|`, the larger of the two.
    pub fn skew_traceless_residual(&self) -> f64 {
        let s = (self.adjoint() + *self).max_abs();
        s.max(self.trace().norm())
    }

    pub fn row(&self, r: usize) -> [Complex; N] {
        self.entries[r]
    }
}

impl Index<(usize, usize)> for Mat5 {
    type Output = Complex;
    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        &self.entries[r][c]
    }
}

impl IndexMut<(usize, usize)> for Mat5 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        &mut self.entries[r][c]
    }
}

impl Add for Mat5 {
    type Output = Mat5;
    fn add(mut self, rhs: Mat5) -> Mat5 {
        self += rhs;
        self
    }
}

impl AddAssign for Mat5 {
    fn add_assign(&mut self, rhs: Mat5) {
        for r in 0..N {
            for c in 0..N {
                self.entries[r][c] += rhs.entries[r][c];
            }
        }
    }
}

impl Sub for Mat5 {
    type Output = Mat5;
    fn sub(mut self, rhs: Mat5) -> Mat5 {
        for r in 0..N {
            for c in 0..N {
                self.entries[r][c] -= rhs.entries[r][c];
            }
        }
        self
    }
}

impl Neg for Mat5 {
    type Output = Mat5;
    fn neg(self) -> Mat5 {
        self.scale_re(-1.0)
    }
}

impl Mul for Mat5 {
    type Output = Mat5;
    fn mul(self, rhs: Mat5) -> Mat5 {
        let mut out = Mat5::zeros();
        for r in 0..N {
            for k in 0..N {
                let a = self.entries[r][k];
                if a == ZERO {
                    continue;
                }
                for c in 0..N {
                    out.entries[r][c] += a * rhs.entries[k][c];
                }
            }
        }
        out
    }
}

impl Mul<f64> for Mat5 {
    type Output = Mat5;
    fn mul(self, rhs: f64) -> Mat5 {
        self.scale_re(rhs)
    }
}

impl Mul<Complex> for Mat5 {
    type Output = Mat5;
    fn mul(self, rhs: Complex) -> Mat5 {
        self.scale(rhs)
    }
}

// JSON: 5×5 nested arrays of [re, im] pairs.
impl Serialize for Mat5 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat5 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<[f64; 2]>> = Vec::deserialize(deserializer)?;
        if rows.len() != N || rows.iter().any(|r| r.len() != N) {
            return Err(D::Error::custom("expected a 5x5 array of [re, im] pairs"));
        }
        let mut m = Mat5::zeros();
        for (r, row) in rows.iter().enumerate() {
            for (c, &[re, im]) in row.iter().enumerate() {
                m.entries[r][c] = Complex::new(re, im);
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_of_permutation_and_diagonal() {
        // (123)(45) is odd
        let p = Mat5::from_real_rows([
            [0.0, 1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 0.0, 1.0, 0.0],
        ]);
        assert!((p.det() + ONE).norm() < 1e-15);
        let d = Mat5::from_diag(&[I, I, ONE, -I, Complex::new(2.0, 0.0)]);
        assert!((d.det() - Complex::new(0.0, 2.0)).norm() < 1e-15);
        assert_eq!(Mat5::zeros().det(), ZERO);
    }

    #[test]
    fn det_is_multiplicative() {
        let mut a = Mat5::zeros();
        let mut b = Mat5::zeros();
        for r in 0..N {
            for c in 0..N {
                a[(r, c)] = Complex::new((r * 3 + c) as f64 % 7.0 - 3.0, (r + 2 * c) as f64 % 5.0);
                b[(r, c)] = Complex::new((r + c * c) as f64 % 4.0, (r * c) as f64 % 3.0 - 1.0);
            }
        }
        let lhs = (a * b).det();
        let rhs = a.det() * b.det();
        assert!((lhs - rhs).norm() < 1e-9 * rhs.norm().max(1.0));
    }

    #[test]
    fn json_round_trip() {
        let m = Mat5::imag_diag(&[1.0, 2.0, -0.5, 0.25, -2.75]) + Mat5::identity();
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.starts_with("[[[1.0,1.0],[0.0,0.0]"));
        let back: Mat5 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Mat5>("[[[1.0,0.0]]]").is_err());
    }
}
