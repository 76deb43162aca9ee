//! The Lie algebra h′ = sp(2) ⊕ R of the acting group, embedded in su(5) ⊕ su(5).

use serde::{Deserialize, Serialize};

use super::{BazaikinTuple, CohomTwoParams};
use crate::linalg::{subalgebra, Mat5, PairElement, SuElement, SubalgebraTag};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HPrimeAlgebra {
    pub circle_gen: PairElement,
    pub sp2_part: Vec<PairElement>,
}

impl HPrimeAlgebra {
    /// Circle generator `(i·diag(5qᵢ − q), i·diag(−q,−q,−q,−q,4q))` and
    /// `0 ⊕ sp(2)`.
    pub fn from_tuple(t: &BazaikinTuple) -> Self {
        let q = t.q_sum() as f64;
        let left = Mat5::imag_diag(&t.q().map(|qi| 5.0 * qi as f64 - q));
        let right = Mat5::imag_diag(&[-q, -q, -q, -q, 4.0 * q]);
        let circle_gen = PairElement {
            left: SuElement::new(left).expect("exponents sum to zero"),
            right: SuElement::new(right).expect("traceless"),
        };
        let sp2_part = subalgebra(SubalgebraTag::Sp2)
            .basis
            .iter()
            .map(|b| PairElement {
                left: SuElement::zero(),
                right: *b,
            })
            .collect();
        Self {
            circle_gen,
            sp2_part,
        }
    }

    /// All 11 generators, circle first.
    pub fn generators(&self) -> Vec<PairElement> {
        std::iter::once(self.circle_gen)
            .chain(self.sp2_part.iter().copied())
            .collect()
    }
}

pub fn h_prime_basis(p: &CohomTwoParams) -> HPrimeAlgebra {
    HPrimeAlgebra::from_tuple(&p.tuple())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{inner0, orthonormalize};

    #[test]
    fn circle_generator_for_one_minus_three() {
        let h = h_prime_basis(&CohomTwoParams::new(1, -1).unwrap());
        // q = -3: 5·1 + 3 = 8 and 5·(-3) + 3 = -12
        let want = Mat5::imag_diag(&[8.0, 8.0, 8.0, -12.0, -12.0]);
        assert!((*h.circle_gen.left.mat() - want).max_abs() < 1e-15);
        let want = Mat5::imag_diag(&[3.0, 3.0, 3.0, 3.0, -12.0]);
        assert!((*h.circle_gen.right.mat() - want).max_abs() < 1e-15);
        assert_eq!(h.generators().len(), 11);
    }

    #[test]
    fn circle_left_is_multiple_of_two_two_two_minus_three() {
        for q1 in [1, 3, 5, 7] {
            for omega in [-1, 1] {
                let Ok(p) = CohomTwoParams::new(q1, omega) else {
                    continue;
                };
                let h = h_prime_basis(&p);
                let k = 2.0 * (q1 - omega) as f64;
                let want = Mat5::imag_diag(&[2.0, 2.0, 2.0, -3.0, -3.0]) * k;
                assert!((*h.circle_gen.left.mat() - want).max_abs() < 1e-13);
                assert!(h.circle_gen.left.mat().trace().norm() < 1e-13);
            }
        }
    }

    #[test]
    fn generators_are_independent() {
        let h = h_prime_basis(&CohomTwoParams::new(3, 1).unwrap());
        for g in &h.sp2_part {
            assert_eq!(g.left, SuElement::zero());
            assert!(inner0(&g.right, &h.circle_gen.right).abs() < 1e-13);
        }
        let rights: Vec<SuElement> = h.generators().iter().map(|g| g.right).collect();
        assert_eq!(orthonormalize(&rights, 1e-9).len(), 11);
    }
}
