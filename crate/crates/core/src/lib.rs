//! Explicit Gorenstein-linear minimal free resolutions.
//!
//! Given a Macaulay inverse system φ of socle degree 2n−2 in d ≥ 3 variables
//! whose catalecticant determinant δ is nonzero, this crate writes down the
//! minimal homogeneous resolution of A = S/ann(φ) in closed form, in a fixed
//! standard basis, and checks it with independent exact linear algebra.

pub mod differentials;
pub mod error;
pub mod hookbasis;
pub mod invsys;
pub mod ringcore;
pub mod verify;

pub use differentials::{build_resolution, build_resolution_via_elementary, PairingMatrix, Resolution};
pub use error::{Error, Result};
pub use hookbasis::{BasisElement, Kind, OrderedBasis};
pub use invsys::{random_invsys, Catalecticant, DualElement, InverseSystem};
pub use verify::{run_checks, Check, CheckOutcome, Report};
pub use ringcore::{Monomial, PolyMatrix, Polynomial, RatMatrix, Rational};
