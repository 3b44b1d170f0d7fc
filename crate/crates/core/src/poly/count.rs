use super::{BiPoly, PolyError, UniPoly};
use crate::field::FieldCtx;

/// Largest field order accepted by the quadratic-time counters.
pub const COUNT_LIMIT: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointCounts {
    pub affine: u64,
    /// `|{x : F(x, x) = 0}|`
    pub diagonal: u64,
    pub off_diagonal: u64,
}

/// Exhaustive count of zeros of `F` on `F_q^2`.
pub fn count_affine_points(f: &BiPoly, k: &FieldCtx) -> Result<PointCounts, PolyError> {
    if k.order() > COUNT_LIMIT {
        return Err(PolyError::FieldTooLargeForCount(k.order()));
    }
    let mut affine = 0u64;
    let mut diagonal = 0u64;
    for x in k.elements() {
        let row = f.eval_x(x, k);
        for y in k.elements() {
            if row.eval(y, k).is_zero() {
                affine += 1;
                if x == y {
                    diagonal += 1;
                }
            }
        }
    }
    Ok(PointCounts {
        affine,
        diagonal,
        off_diagonal: affine - diagonal,
    })
}

/// Zeros of the homogenization of `F` on the line at infinity `Z = 0`.
pub fn count_points_at_infinity(f: &BiPoly, k: &FieldCtx) -> u64 {
    let top = f.top_form();
    if top.is_empty() {
        return 0;
    }
    // (1 : y : 0) for every y, plus (0 : 1 : 0)
    let on_chart = UniPoly::from_coeffs(top.clone());
    let finite = k.elements().filter(|&y| on_chart.eval(y, k).is_zero()).count() as u64;
    let at_y_axis = u64::from(top.last().is_some_and(|c| c.is_zero()));
    finite + at_y_axis
}

/// Projective count of the homogenization `F̄(X, Y, Z)` on `P^2(F_q)`.
pub fn count_projective_points(f: &BiPoly, k: &FieldCtx) -> Result<u64, PolyError> {
    Ok(count_affine_points(f, k)?.affine + count_points_at_infinity(f, k))
}
