//! Univariate and bivariate polynomial algebra over a [`FieldCtx`], plus the
//! difference-quotient numerator `F(X, Y)` of the degree-four family, its
//! symmetric reduction `G`, the linear-root criterion on `G`, and exhaustive
//! point counting.

mod bi;
mod count;
mod linear_root;
mod numerator;
mod symmetric;
mod uni;

pub use bi::BiPoly;
pub use count::{count_affine_points, count_points_at_infinity, count_projective_points, PointCounts};
pub use linear_root::{
    find_linear_root, is_linear_root, linear_root_by_formula, linear_root_by_solve,
    LinearRootWitness,
};
pub use numerator::{build_numerator, difference_numerator, roots_in_cubic_extension};
pub use symmetric::{compose_symmetric, symmetric_reduce};
pub use uni::UniPoly;

use thiserror::Error;

use crate::field::FieldError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivideByZeroPoly,
    #[error("polynomial is zero or constant")]
    ZeroOrConstant,
    #[error("exact division failed")]
    NotDivisible,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("a, b, c are all zero")]
    AllZeroAbc,
    #[error("denominator must be a monic cubic")]
    QNotCubicMonic,
    #[error("polynomial is not an irreducible cubic")]
    NotIrreducibleCubic,
    #[error("the linear coefficient in v vanishes at u")]
    DenominatorVanishes,
    #[error("field of order {0} is too large for exhaustive counting")]
    FieldTooLargeForCount(u64),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}
