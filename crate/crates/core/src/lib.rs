//! Numerical Lie theory for Wilking metrics on cohomogeneity-two Bazaikin
//! spaces: Cheeger deformations, horizontal spaces, canonical forms for the
//! S(U(3)×U(2)) × Sp(2) action on SU(5), and explicit zero-curvature
//! certificates over the (θ, α) fundamental domain.

pub mod bazaikin;
pub mod certify;
pub mod cheeger;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod selftest;
pub mod tolerance;
pub mod wilking;

pub use error::{Error, Result};
