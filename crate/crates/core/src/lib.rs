//! Signature-based Gröbner bases that also deliver representations of the
//! basis elements, and of any ideal member, over the input generators.
//!
//! The pipeline runs a signature engine ([`engine`]), recovers the leading
//! coefficients of the hidden cofactor vectors and then the vectors
//! themselves ([`convert`]), and answers membership queries with cofactors
//! ([`detach`]). [`oracle`] holds the independent reference implementations
//! used in tests.

pub mod coeff;
pub mod convert;
pub mod detach;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod labeled;
pub mod module;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod ring;

pub use coeff::{Coeff, Field};
pub use detach::{prepare, verify_representation, DetachResult, GBWithReps};
pub use error::{Error, Result};
pub use labeled::{FullLabeledPoly, LabeledBasis, MonoLabeledPoly, SigLabeledPoly};
pub use module::{ModuleMonomial, ModuleVector};
pub use parse::{parse_poly, SystemFile};
pub use poly::Polynomial;
pub use ring::{Monomial, Ring, TermOrder};
