//! Named subalgebras of su(5) with inner0-orthonormal bases.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::algebra::{bracket, inner0, orthonormalize, SuElement};
use super::mat::{Complex, Mat5, ONE};
use crate::tolerance::TAU_RANK;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubalgebraTag {
    /// sp(2) in the upper-left 4×4 block.
    Sp2,
    /// Spanned by i·diag(1,1,1,1,−4).
    CircleRight,
    /// sp2 ⊕ circle_right, the Lie algebra of the right projection of H′.
    P2h,
    Su4,
    /// u(4) embedded as X ↦ diag(X, −tr X).
    U4,
    Su3,
    /// su(2) in the lower-right 2×2 block.
    Su2,
    /// Spanned by i·diag(2,2,2,−3,−3).
    CircleLeft,
    CircleSu3,
    CircleSu2,
    /// su(3) ⊕ su(2).
    SPrime,
    /// s(u(3) ⊕ u(2)).
    S,
    Full,
}

impl SubalgebraTag {
    pub const ALL: [SubalgebraTag; 13] = [
        SubalgebraTag::Sp2,
        SubalgebraTag::CircleRight,
        SubalgebraTag::P2h,
        SubalgebraTag::Su4,
        SubalgebraTag::U4,
        SubalgebraTag::Su3,
        SubalgebraTag::Su2,
        SubalgebraTag::CircleLeft,
        SubalgebraTag::CircleSu3,
        SubalgebraTag::CircleSu2,
        SubalgebraTag::SPrime,
        SubalgebraTag::S,
        SubalgebraTag::Full,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SubalgebraTag::Sp2 => "sp2",
            SubalgebraTag::CircleRight => "circle_right",
            SubalgebraTag::P2h => "p2h",
            SubalgebraTag::Su4 => "su4",
            SubalgebraTag::U4 => "u4",
            SubalgebraTag::Su3 => "su3",
            SubalgebraTag::Su2 => "su2",
            SubalgebraTag::CircleLeft => "circle_left",
            SubalgebraTag::CircleSu3 => "circle_su3",
            SubalgebraTag::CircleSu2 => "circle_su2",
            SubalgebraTag::SPrime => "s_prime",
            SubalgebraTag::S => "s",
            SubalgebraTag::Full => "full",
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            SubalgebraTag::Sp2 => 10,
            SubalgebraTag::CircleRight | SubalgebraTag::CircleLeft => 1,
            SubalgebraTag::P2h => 11,
            SubalgebraTag::Su4 => 15,
            SubalgebraTag::U4 => 16,
            SubalgebraTag::Su3 => 8,
            SubalgebraTag::Su2 => 3,
            SubalgebraTag::CircleSu3 => 9,
            SubalgebraTag::CircleSu2 => 4,
            SubalgebraTag::SPrime => 11,
            SubalgebraTag::S => 12,
            SubalgebraTag::Full => 24,
        }
    }
}

impl fmt::Display for SubalgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubalgebraTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        SubalgebraTag::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown subalgebra tag `{s}`"))
    }
}

#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub tag: Option<SubalgebraTag>,
    pub basis: Vec<SuElement>,
}

impl Subalgebra {
    /// An unnamed subspace spanned by (an orthonormalization of) `vectors`.
    pub fn from_span(vectors: &[SuElement]) -> Self {
        Self {
            tag: None,
            basis: orthonormalize(vectors, TAU_RANK),
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn name(&self) -> String {
        self.tag
            .map_or_else(|| "unnamed".to_string(), |t| t.to_string())
    }

    /// Orthogonal projection of `x` onto the span of the basis.
    pub fn project(&self, x: &SuElement) -> SuElement {
        if self.tag == Some(SubalgebraTag::Full) {
            return *x;
        }
        self.basis
            .iter()
            .fold(SuElement::zero(), |acc, b| acc.axpy(inner0(x, b), b))
    }

    /// Norm of the component of `x` orthogonal to this subspace.
    pub fn distance(&self, x: &SuElement) -> f64 {
        x.sub(&self.project(x)).norm()
    }

    /// Whether every basis vector of `other` lies in this span.
    pub fn contains(&self, other: &Subalgebra, tol: f64) -> bool {
        other.basis.iter().all(|b| self.distance(b) < tol)
    }

    /// Largest distance of `[b_i, b_j]` from the span, over basis pairs.
    pub fn closure_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                worst = worst.max(self.distance(&bracket(a, b)));
            }
        }
        worst
    }
}

pub fn project(x: &SuElement, k: &Subalgebra) -> SuElement {
    k.project(x)
}

/// Skew-Hermitian elements `E_ab − E_ba` and `i(E_ab + E_ba)` over index pairs in `idx`.
fn off_diagonal(idx: &[usize]) -> Vec<SuElement> {
    let mut out = Vec::new();
    for (n, &a) in idx.iter().enumerate() {
        for &b in &idx[n + 1..] {
            let mut re = Mat5::zeros();
            re[(a, b)] = ONE;
            re[(b, a)] = -ONE;
            let mut im = Mat5::zeros();
            im[(a, b)] = Complex::new(0.0, 1.0);
            im[(b, a)] = Complex::new(0.0, 1.0);
            out.push(SuElement::from_mat_unchecked(re));
            out.push(SuElement::from_mat_unchecked(im));
        }
    }
    out
}

fn diag(d: [f64; 5]) -> SuElement {
    SuElement::from_mat_unchecked(Mat5::imag_diag(&d))
}

/// Traceless diagonal elements supported on `idx`: `i(E_aa − E_bb)` for consecutive pairs.
fn cartan(idx: &[usize]) -> Vec<SuElement> {
    idx.windows(2)
        .map(|w| {
            let mut d = [0.0; 5];
            d[w[0]] = 1.0;
            d[w[1]] = -1.0;
            diag(d)
        })
        .collect()
}

/// Generators of sp(2): `[[A, B], [-conj B, conj A]]` with `A` skew-Hermitian
/// and `B` complex symmetric (2×2), padded with a zero fifth row and column.
fn sp2_generators() -> Vec<SuElement> {
    let mut out = vec![
        diag([1.0, 0.0, -1.0, 0.0, 0.0]),
        diag([0.0, 1.0, 0.0, -1.0, 0.0]),
    ];
    let embed = |a: [[Complex; 2]; 2], b: [[Complex; 2]; 2]| {
        let mut m = Mat5::zeros();
        for r in 0..2 {
            for c in 0..2 {
                m[(r, c)] = a[r][c];
                m[(r, c + 2)] = b[r][c];
                m[(r + 2, c)] = -b[r][c].conj();
                m[(r + 2, c + 2)] = a[r][c].conj();
            }
        }
        SuElement::from_mat_unchecked(m)
    };
    let zero = [[Complex::new(0.0, 0.0); 2]; 2];
    for u in [Complex::new(1.0, 0.0), Complex::new(0.0, 1.0)] {
        out.push(embed([[zero[0][0], u], [-u.conj(), zero[0][0]]], zero));
        for (p, q) in [(0, 0), (0, 1), (1, 1)] {
            let mut b = zero;
            b[p][q] = u;
            b[q][p] = u;
            out.push(embed(zero, b));
        }
    }
    out
}

fn generators(tag: SubalgebraTag) -> Vec<SuElement> {
    let circle_right = diag([1.0, 1.0, 1.0, 1.0, -4.0]);
    let circle_left = diag([2.0, 2.0, 2.0, -3.0, -3.0]);
    let su3 = || [off_diagonal(&[0, 1, 2]), cartan(&[0, 1, 2])].concat();
    let su2 = || [off_diagonal(&[3, 4]), cartan(&[3, 4])].concat();
    let su4 = || [off_diagonal(&[0, 1, 2, 3]), cartan(&[0, 1, 2, 3])].concat();
    match tag {
        SubalgebraTag::Sp2 => sp2_generators(),
        SubalgebraTag::CircleRight => vec![circle_right],
        SubalgebraTag::P2h => [sp2_generators(), vec![circle_right]].concat(),
        SubalgebraTag::Su4 => su4(),
        SubalgebraTag::U4 => [su4(), vec![circle_right]].concat(),
        SubalgebraTag::Su3 => su3(),
        SubalgebraTag::Su2 => su2(),
        SubalgebraTag::CircleLeft => vec![circle_left],
        SubalgebraTag::CircleSu3 => [vec![circle_left], su3()].concat(),
        SubalgebraTag::CircleSu2 => [vec![circle_left], su2()].concat(),
        SubalgebraTag::SPrime => [su3(), su2()].concat(),
        SubalgebraTag::S => [su3(), su2(), vec![circle_left]].concat(),
        SubalgebraTag::Full => [off_diagonal(&[0, 1, 2, 3, 4]), cartan(&[0, 1, 2, 3, 4])].concat(),
    }
}

fn build(tag: SubalgebraTag) -> Subalgebra {
    Subalgebra {
        tag: Some(tag),
        basis: orthonormalize(&generators(tag), TAU_RANK),
    }
}

/// Shared reference to the cached basis of a named subalgebra.
pub fn subalgebra(tag: SubalgebraTag) -> &'static Subalgebra {
    static CACHE: OnceLock<Vec<Subalgebra>> = OnceLock::new();
    let all = CACHE.get_or_init(|| SubalgebraTag::ALL.iter().map(|&t| build(t)).collect());
    let idx = SubalgebraTag::ALL.iter().position(|&t| t == tag).unwrap();
    &all[idx]
}

pub fn make_subalgebra(tag: SubalgebraTag) -> Subalgebra {
    subalgebra(tag).clone()
}
