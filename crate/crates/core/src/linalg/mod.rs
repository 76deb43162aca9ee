//! Dense 5×5 complex linear algebra, the Lie algebra su(5) with its
//! bi-invariant inner product, and named subalgebras.

pub mod algebra;
pub mod mat;
pub mod quaternion;
pub mod random;
pub mod subalgebra;

pub use algebra::{
    ad_action, bracket, inner0, normalized_gram, orthonormalize, GroupElement, PairElement,
    SuElement,
};
pub use mat::{Complex, Mat5};
pub use quaternion::Quaternion;
pub use random::{random_group_element, rng_from_seed};
pub use subalgebra::{make_subalgebra, project, subalgebra, Subalgebra, SubalgebraTag};
