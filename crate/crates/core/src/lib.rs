//! Braid groups, Garside theory and braided satellites.
//!
//! Braid words, the Artin action on the free group, Garside normal forms and
//! super summit sets, round reductions and regular forms, satellite
//! construction with its full-twist criteria, and Alexander polynomials.

pub mod braid;
pub mod curves;
pub mod error;
pub mod fdtc;
pub mod free_group;
pub mod garside;
pub mod invariants;
pub mod reduction;
pub mod satellite;

pub use braid::{BraidWord, ClosureComponent, Permutation};
pub use curves::{CurveClass, RoundBlockPartition};
pub use error::{BraidError, Result};
pub use fdtc::FdtcVerdict;
pub use free_group::FreeWord;
pub use garside::{GarsideNormalForm, SummitSet, DEFAULT_SSS_BUDGET};
pub use invariants::LaurentPoly;
pub use reduction::{RegularForm, RoundReduction};
pub use satellite::SatelliteSpec;
