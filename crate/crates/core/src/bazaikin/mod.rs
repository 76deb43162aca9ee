//! Bazaikin parameter tuples and the Sp(2)·S¹ biquotient data they define.

mod canonical;
mod frame;
mod hprime;

pub use canonical::{canonical_form, CanonicalForm};
pub use frame::{frame_matrix, orbit_equivalent, orbit_invariants, FrameCoord};
pub use hprime::{h_prime_basis, HPrimeAlgebra};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Five odd integers with gcd 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TupleJson", into = "TupleJson")]
pub struct BazaikinTuple {
    q: [i64; 5],
}

#[derive(Serialize, Deserialize)]
struct TupleJson {
    q: Vec<i64>,
}

impl TryFrom<TupleJson> for BazaikinTuple {
    type Error = Error;
    fn try_from(t: TupleJson) -> Result<Self> {
        let q: [i64; 5] = t.q.try_into().map_err(|v: Vec<i64>| {
            Error::InvalidTuple(format!("expected 5 entries, got {}", v.len()))
        })?;
        Self::new(q)
    }
}

impl From<BazaikinTuple> for TupleJson {
    fn from(t: BazaikinTuple) -> Self {
        TupleJson { q: t.q.to_vec() }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl BazaikinTuple {
    pub fn new(q: [i64; 5]) -> Result<Self> {
        if let Some(even) = q.iter().find(|v| *v % 2 == 0) {
            return Err(Error::InvalidTuple(format!("entry {even} is even")));
        }
        let g = q.iter().fold(0, |g, &v| gcd(g, v));
        if g != 1 {
            return Err(Error::InvalidTuple(format!("gcd of {q:?} is {g}")));
        }
        Ok(Self { q })
    }

    pub fn q(&self) -> [i64; 5] {
        self.q
    }

    pub fn q_sum(&self) -> i64 {
        self.q.iter().sum()
    }

    pub fn negated(&self) -> Self {
        Self {
            q: self.q.map(|v| -v),
        }
    }
}

impl fmt::Display for BazaikinTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.q.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for BazaikinTuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let q: Vec<i64> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::InvalidTuple(format!("cannot parse {p:?} as an integer")))
            })
            .collect::<Result<_>>()?;
        TupleJson { q }.try_into()
    }
}

/// The gcd condition on every pair of disjoint index pairs, for any integer
/// 5-tuple (not only valid Bazaikin tuples).
pub fn gcd_condition(q: &[i64; 5]) -> bool {
    for a in 0..5 {
        for b in a + 1..5 {
            for c in 0..5 {
                for d in c + 1..5 {
                    if [c, d].iter().any(|i| *i == a || *i == b) {
                        continue;
                    }
                    if gcd(q[a] + q[b], q[c] + q[d]) != 2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn is_effectively_free(t: &BazaikinTuple) -> bool {
    gcd_condition(&t.q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurvatureClass {
    PositivelyCurved,
    AlmostPositive,
    FlatPlaneEverywhere,
    QuasiPositiveOnly,
    NotFree,
}

impl CurvatureClass {
    pub fn name(&self) -> &'static str {
        match self {
            CurvatureClass::PositivelyCurved => "PositivelyCurved",
            CurvatureClass::AlmostPositive => "AlmostPositive",
            CurvatureClass::FlatPlaneEverywhere => "FlatPlaneEverywhere",
            CurvatureClass::QuasiPositiveOnly => "QuasiPositiveOnly",
            CurvatureClass::NotFree => "NotFree",
        }
    }
}

fn is_signed_permutation_of(q: &[i64; 5], pattern: [i64; 5]) -> bool {
    let mut sorted = *q;
    sorted.sort_unstable();
    [pattern, pattern.map(|v| -v)].iter().any(|p| {
        let mut p = *p;
        p.sort_unstable();
        p == sorted
    })
}

/// Curvature of the Bazaikin metric, by the four-case classification.
pub fn classify_curvature(t: &BazaikinTuple) -> CurvatureClass {
    if !is_effectively_free(t) {
        return CurvatureClass::NotFree;
    }
    let q = &t.q;
    let sums: Vec<i64> = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| q[i] + q[j]))
        .collect();
    if sums.iter().all(|&s| s > 0) || sums.iter().all(|&s| s < 0) {
        CurvatureClass::PositivelyCurved
    } else if is_signed_permutation_of(q, [1, 1, 1, 1, -1]) {
        CurvatureClass::AlmostPositive
    } else if is_signed_permutation_of(q, [1, 1, 1, -1, -3]) {
        CurvatureClass::FlatPlaneEverywhere
    } else {
        CurvatureClass::QuasiPositiveOnly
    }
}

/// Normalized parameters of a cohomogeneity-two tuple `(q₁,q₁,q₁,q₄,q₄)`
/// with `q₁ > 0` and `q₁ + q₄ = 2ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomTwoParams {
    pub q1: i64,
    pub omega: i64,
    pub q4: i64,
}

impl CohomTwoParams {
    /// Rejects even or non-positive `q1`, `ω ∉ {±1}`, and the homogeneous
    /// case `q1 = q4`, which is `(1, 1)`.
    pub fn new(q1: i64, omega: i64) -> Result<Self> {
        if q1 <= 0 || q1 % 2 == 0 {
            return Err(Error::OutOfDomain(format!(
                "q1 must be odd and positive, got {q1}"
            )));
        }
        if omega != 1 && omega != -1 {
            return Err(Error::OutOfDomain(format!(
                "omega must be 1 or -1, got {omega}"
            )));
        }
        let q4 = 2 * omega - q1;
        if q4 == q1 {
            return Err(Error::OutOfDomain(
                "(q1, omega) = (1, 1) is the homogeneous case".to_string(),
            ));
        }
        Ok(Self { q1, omega, q4 })
    }

    /// `q = 3q₁ + 2q₄ = q₁ + 4ω`
    pub fn q_sum(&self) -> i64 {
        3 * self.q1 + 2 * self.q4
    }

    pub fn tuple(&self) -> BazaikinTuple {
        BazaikinTuple::new([self.q1, self.q1, self.q1, self.q4, self.q4])
            .expect("q1 and q4 are odd and coprime")
    }
}

/// Recognize a free tuple of shape `(a,a,a,b,b)` up to permutation and sign.
pub fn cohom_two(t: &BazaikinTuple) -> Option<CohomTwoParams> {
    if !is_effectively_free(t) {
        return None;
    }
    let mut values = t.q.to_vec();
    values.sort_unstable();
    values.dedup();
    if values.len() != 2 {
        return None;
    }
    let count = |v: i64| t.q.iter().filter(|&&x| x == v).count();
    let (a, b) = match (count(values[0]), count(values[1])) {
        (3, 2) => (values[0], values[1]),
        (2, 3) => (values[1], values[0]),
        _ => return None,
    };
    let (q1, q4) = if a < 0 { (-a, -b) } else { (a, b) };
    if (q1 + q4).abs() != 2 {
        return None;
    }
    CohomTwoParams::new(q1, (q1 + q4) / 2).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use CurvatureClass::*;

    fn t(q: [i64; 5]) -> BazaikinTuple {
        BazaikinTuple::new(q).unwrap()
    }

    #[test]
    fn tuple_validation() {
        assert!(BazaikinTuple::new([1, 1, 1, 1, 2]).is_err());
        assert!(BazaikinTuple::new([3, 3, 3, 9, -3]).is_err());
        assert_eq!(t([1, 1, 1, -3, -3]).q_sum(), -3);
        assert_eq!(
            "1,1,1,-1,-3".parse::<BazaikinTuple>().unwrap(),
            t([1, 1, 1, -1, -3])
        );
        assert!("1,1,1".parse::<BazaikinTuple>().is_err());
        let json = serde_json::to_string(&t([3, 3, 3, -1, -1])).unwrap();
        assert_eq!(json, r#"{"q":[3,3,3,-1,-1]}"#);
        assert_eq!(
            serde_json::from_str::<BazaikinTuple>(&json).unwrap(),
            t([3, 3, 3, -1, -1])
        );
        assert!(serde_json::from_str::<BazaikinTuple>(r#"{"q":[2,1,1,1,1]}"#).is_err());
    }

    #[test]
    fn freeness_examples() {
        assert!(is_effectively_free(&t([1, 1, 1, 1, 1])));
        assert!(is_effectively_free(&t([1, 1, 1, -3, -3])));
        assert!(!is_effectively_free(&t([1, 1, 1, -1, -1])));
        assert!(!gcd_condition(&[3, 3, 3, 3, 3]));
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(classify_curvature(&t([1, 1, 1, 1, 1])), PositivelyCurved);
        assert_eq!(classify_curvature(&t([1, 1, 1, 1, -1])), AlmostPositive);
        assert_eq!(classify_curvature(&t([-1, 1, -1, -1, -1])), AlmostPositive);
        assert_eq!(
            classify_curvature(&t([1, 1, 1, -1, -3])),
            FlatPlaneEverywhere
        );
        assert_eq!(
            classify_curvature(&t([3, -1, 1, -1, -1])),
            FlatPlaneEverywhere
        );
        assert_eq!(classify_curvature(&t([3, 3, 3, -1, -1])), QuasiPositiveOnly);
        assert_eq!(classify_curvature(&t([1, 1, 1, -1, -1])), NotFree);
    }

    #[test]
    fn cohom_two_examples() {
        assert_eq!(
            cohom_two(&t([1, 1, 1, -3, -3])),
            Some(CohomTwoParams {
                q1: 1,
                omega: -1,
                q4: -3
            })
        );
        assert_eq!(
            cohom_two(&t([-3, -3, 1, 1, -3])),
            Some(CohomTwoParams {
                q1: 3,
                omega: 1,
                q4: -1
            })
        );
        assert_eq!(cohom_two(&t([1, 1, 1, 1, -1])), None);
        assert_eq!(cohom_two(&t([1, 1, 1, 1, 1])), None);
        // shape matches but not free
        assert_eq!(cohom_two(&t([1, 1, 1, 5, 5])), None);
    }

    #[test]
    fn cohom_two_params_validation() {
        assert!(CohomTwoParams::new(1, 1).is_err());
        assert!(CohomTwoParams::new(2, 1).is_err());
        assert!(CohomTwoParams::new(-3, 1).is_err());
        assert!(CohomTwoParams::new(3, 0).is_err());
        let p = CohomTwoParams::new(5, -1).unwrap();
        assert_eq!((p.q4, p.q_sum()), (-7, 1));
        assert_eq!(cohom_two(&p.tuple()), Some(p));
    }
}
