//! Exact arithmetic for tilings of regular polygons by similar right
//! triangles: constructors, a certifying verifier, and per-N uniqueness
//! certificates.
//!
//! All decisions are made in exact rational or cyclotomic arithmetic.
//! Floating point never decides anything: it only appears inside rigorous
//! interval enclosures (always paired with an exact fallback) and in
//! rendered output.
//!
//! ```
//! use tritile::certify::certify_uniqueness;
//! use tritile::tiling::{canonical_tiling, verify_tiling};
//! use tritile::vertex::TrianglePair;
//!
//! // the 14-tile dissection of the regular heptagon passes every check
//! let tiling = canonical_tiling(7);
//! let pair = TrianglePair::canonical_for(7);
//! assert!(verify_tiling(&tiling, &pair).unwrap().verdict);
//!
//! // and that tile shape is the only right triangle that works
//! let cert = certify_uniqueness(7).unwrap();
//! assert_eq!(cert.unique_pair, pair);
//! ```

pub mod certify;
pub mod error;
pub mod field;
pub mod tiling;
pub mod vertex;

pub use error::{Error, Result};
pub use field::{CycloNum, PiAngle, Rational, Sign};
pub use tiling::{Tiling, VerificationReport};
pub use vertex::TrianglePair;
