//! Seeded random sampling of group and algebra elements.
//!
//! Haar-random unitaries come from orthonormalizing the columns of a complex
//! Gaussian matrix. Modified Gram–Schmidt plays the role of QR, and the
//! column phases it fixes are the same ones a QR-with-positive-diagonal fixes,
//! so the result is Haar on U(n). Dividing by a fifth root of the determinant
//! then lands in SU(5).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::algebra::{GroupElement, SuElement};
use super::mat::{Complex, Mat5};
use super::quaternion::sp2_with_first_row;

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(re, im)
}

/// Haar-random n×n unitary (n ≤ 5) as a dense row-major vector.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Vec<Complex>> {
    let mut cols: Vec<Vec<Complex>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<Complex> = (0..n).map(|_| gaussian(rng)).collect();
        for _ in 0..2 {
            for c in &cols {
                let d: Complex = v.iter().zip(c).map(|(a, b)| a * b.conj()).sum();
                v.iter_mut().zip(c).for_each(|(a, b)| *a -= d * b);
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            continue;
        }
        v.iter_mut().for_each(|z| *z /= norm);
        cols.push(v);
    }
    (0..n)
        .map(|r| (0..n).map(|c| cols[c][r]).collect())
        .collect()
}

/// Haar-random element of SU(5).
pub fn random_group_element_from<R: Rng + ?Sized>(rng: &mut R) -> GroupElement {
    let u = haar_unitary(rng, 5);
    let mut m = Mat5::zeros();
    for r in 0..5 {
        for c in 0..5 {
            m[(r, c)] = u[r][c];
        }
    }
    let root = Complex::from_polar(1.0, -m.det().arg() / 5.0);
    GroupElement::from_mat_unchecked(m * root)
}

/// Haar-random element of SU(5), deterministic in `seed`.
pub fn random_group_element(seed: u64) -> GroupElement {
    random_group_element_from(&mut rng_from_seed(seed))
}

/// Gaussian element of su(5): `(G − G*)/2` with the trace removed.
pub fn random_su_element<R: Rng + ?Sized>(rng: &mut R) -> SuElement {
    let mut g = Mat5::zeros();
    for r in 0..5 {
        for c in 0..5 {
            g[(r, c)] = gaussian(rng);
        }
    }
    let mut x = (g - g.adjoint()) * 0.5;
    let t = x.trace() / 5.0;
    for i in 0..5 {
        x[(i, i)] -= t;
    }
    SuElement::from_mat_unchecked(x)
}

/// Random element of Sp(2), embedded with trivial fifth row and column.
pub fn random_sp2<R: Rng + ?Sized>(rng: &mut R) -> GroupElement {
    let e: [Complex; 4] = std::array::from_fn(|_| gaussian(rng));
    let first = sp2_with_first_row(&e);
    // mix the second quaternionic row as well, so the sample is not biased
    // toward the Gram–Schmidt completion
    let phase: [Complex; 2] = [gaussian(rng), gaussian(rng)];
    let n = (phase[0].norm_sqr() + phase[1].norm_sqr()).sqrt();
    let (a, b) = (phase[0] / n, phase[1] / n);
    let mut sp1 = Mat5::identity();
    sp1[(1, 1)] = a;
    sp1[(1, 3)] = b;
    sp1[(3, 1)] = -b.conj();
    sp1[(3, 3)] = a.conj();
    GroupElement::from_mat_unchecked(sp1 * first)
}

/// Random element of S(U(3) × U(2)), block diagonal.
pub fn random_s_element<R: Rng + ?Sized>(rng: &mut R) -> GroupElement {
    let u3 = haar_unitary(rng, 3);
    let u2 = haar_unitary(rng, 2);
    let mut m = Mat5::zeros();
    for r in 0..3 {
        for c in 0..3 {
            m[(r, c)] = u3[r][c];
        }
    }
    for r in 0..2 {
        for c in 0..2 {
            m[(r + 3, c + 3)] = u2[r][c];
        }
    }
    // push the determinant correction into the last column of the U(2) block
    let fix = m.det().conj();
    for r in 3..5 {
        m[(r, 4)] *= fix;
    }
    GroupElement::from_mat_unchecked(m)
}

/// Random element of the SU(2) factor acting on rows 4 and 5.
pub fn random_su2_block<R: Rng + ?Sized>(rng: &mut R) -> GroupElement {
    let (a, b) = (gaussian(rng), gaussian(rng));
    let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let (a, b) = (a / n, b / n);
    let mut m = Mat5::identity();
    m[(3, 3)] = a;
    m[(3, 4)] = b;
    m[(4, 3)] = -b.conj();
    m[(4, 4)] = a.conj();
    GroupElement::from_mat_unchecked(m)
}
