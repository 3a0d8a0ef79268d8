//! Binary cyclic codes built from trace sequences over GF(2^m).
//!
//! The crate covers finite-field arithmetic, cyclotomic cosets and their
//! parity functionals, the two sequence families and their linear
//! complexity, code construction, BCH bounds found by multiplier search, and
//! exact minimum distance.

pub mod bounds;
pub mod codes;
pub mod cosets;
pub mod defset;
pub mod distance;
pub mod error;
pub mod gf2m;
pub mod gf2poly;
pub mod report;
pub mod sequences;
pub mod verify;

pub use codes::{BinaryCyclicCode, CodeId, DefiningSet, DualConvention, Family};
pub use bounds::{BchCertificate, MultiplierSearch};
pub use cosets::CosetTable;
pub use distance::{DistanceOptions, DistanceResult, Engine};
pub use error::{Error, Result};
pub use gf2m::{FieldElement, FieldSpec};
pub use gf2poly::Gf2Poly;
pub use report::CodeReport;
pub use sequences::BinarySequence;
