//! Exact twisted Alexander invariants of knot groups under symmetric powers
//! of an SL(2) representation, and the volume estimates built from them.

pub mod check;
pub mod error;
pub mod field;
pub mod group;
pub mod invariant;
pub mod job;
pub mod laurent;
pub mod matrix;
pub mod rep;
pub mod scalar;
pub mod volume;

pub use error::{Error, Result};
pub use field::{BigComplex, NfElement, NumberField, Rational};
pub use group::{fox_derivative, GroupRingElement, Letter, Presentation, Word};
pub use invariant::{twisted_alexander, Column, TwistConfig, TwistedAlexander};
pub use job::Job;
pub use laurent::{LaurentPoly, PolyMatrix, RationalFunction, Unit};
pub use matrix::Matrix;
pub use rep::{check_relations, symmetric_power, RepSl2};
pub use scalar::Scalar;
pub use volume::{parse_reference, volume_table, VolumeConfig, VolumeReport, VolumeRow};

/// Matrices over a number field.
pub type NfMatrix = Matrix<NfElement>;
/// Matrices over the rationals.
pub type QMatrix = Matrix<Rational>;
/// Laurent polynomials over a number field.
pub type NfLaurent = LaurentPoly<NfElement>;
/// Laurent polynomials over the rationals.
pub type QLaurent = LaurentPoly<Rational>;
