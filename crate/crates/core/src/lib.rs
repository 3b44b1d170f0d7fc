//! Exact search and classification of degree-four permutation rational
//! functions of the projective line over finite fields.

pub mod field;
pub mod poly;
pub mod criteria;
pub mod ratmap;
pub mod classify;

pub use field::{Extension, Fe, FieldCtx, FieldError, P1Point};
pub use poly::{BiPoly, PolyError, UniPoly};
pub use ratmap::{compose, equivalent_small_q, from_trace_form, Moebius, RatMap, RatMapError};
