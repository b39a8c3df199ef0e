//! Zero-modulus bounds for one-sided quaternionic polynomials, with an
//! independent root-modulus oracle to check them.

pub mod bench;
pub mod bounds;
mod eigen;
pub mod error;
pub mod io;
pub mod matrix;
pub mod optimize;
pub mod oracle;
pub mod poly;
pub mod quaternion;
pub mod selector;

pub use bounds::{
    all_bounds, AnnulusBound, BoundInput, BoundKind, BoundOptions, BoundReport, BoundValue,
    OpferChoice, OpferVariant, Theorem3Variant, WeightVector,
};
pub use error::{Error, Result};
pub use matrix::{
    block_bound, Ball, CompanionKind, GershgorinVariant, InclusionRegion, NormKind, QMatrix,
};
pub use optimize::Bracket;
pub use oracle::{root_moduli, verify, ModulusSpectrum, VerificationResult};
pub use poly::{random_poly, AuxPolynomial, QPolynomial, Side};
pub use quaternion::Quaternion;
pub use selector::{classify, select, Profile, ProfileTag, SelectOptions, SelectionResult};
