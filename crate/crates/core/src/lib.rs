//! Exact arithmetic for real and complexified Clifford algebras `Cl(p,q)`.
//!
//! Coefficients are Gaussian rationals, so every identity checked by this
//! crate holds exactly. Besides multivector arithmetic the crate classifies
//! algebras, builds primitive idempotents and minimal left ideals, verifies
//! tensor factorizations by explicit generator witnesses, and carries a small
//! symbolic calculus for state labels `|K,b,l,s⟩`.

pub mod algebra;
pub mod automorphisms;
pub mod classification;
pub mod cone;
pub mod error;
pub mod factorization;
pub mod ideals;
pub mod linalg;
pub mod multivector;
pub mod report;
pub mod scalar;
pub mod signature;
pub mod states;

pub use algebra::{BasisAlgebra, Complexified, TensorSignature};
pub use classification::{classify, AlgebraType, DivisionRing, RingTag};
pub use error::{CliffordError, IsoFailure};
pub use ideals::{Idempotent, LeftIdealBasis};
pub use multivector::Multivector;
pub use scalar::Scalar;
pub use signature::{Blade, Signature};
