//! Exact arithmetic underneath the certificates: arbitrary-precision
//! rationals, the quadratic extension Q(√2), dense polynomials with
//! Sturm-sequence root counting, and outward-rounded rational interval
//! arithmetic.
//!
//! Everything in this module is deterministic and bit-exact; floating point
//! appears only in the `approx_f64` conveniences used for reporting.

pub mod field;
pub mod interval;
pub mod poly;

pub use field::{FieldElement, OrderedField, Rational};
pub use interval::RatInterval;
pub use poly::{Polynomial, RootCount, SturmError};
