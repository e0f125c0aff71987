//! Exact discrimination of complete multiplicity structures.
//!
//! Given a degree-`n` polynomial with symbolic coefficients `a0..an`, the
//! crate generates one Boolean condition on the coefficients per possible
//! pattern of real and imaginary root multiplicities, built from non-nested
//! subresultants of the derivative tower and their discriminant sequences.
//! The classical nested (repeated-gcd) construction is included as a
//! baseline, together with numeric classification, independent oracles and
//! size metrics.

pub mod discriminate;
pub mod error;
pub mod evaluate;
pub mod metrics;
pub mod oracle;
pub mod param;
pub mod parse;
pub mod partitions;
pub mod ring;
pub mod signs;
pub mod sylvester;
pub mod xpoly;

pub use error::{Error, Result};
pub use param::ParamPoly;
pub use ring::Ring;
pub use xpoly::{NumPoly, SymPoly, XPoly};
