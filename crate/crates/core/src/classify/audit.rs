//! Empirical check of the plane-curve point-count lower bound on the
//! numerator curves `F(X, Y) = 0`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{search, ClassifyError};
use crate::criteria::ParamTuple;
use crate::field::{Extension, Fe, FieldCtx};
use crate::poly::{count_affine_points, count_points_at_infinity, find_linear_root, symmetric_reduce, BiPoly};

/// `q + 1 - 2(d1-1)(d2-1)√q - (d2-1)(d-1)(d-2)/2`, the lower bound on the
/// projective points of an absolutely irreducible curve whose homogeneous
/// equation has partial degrees `d1 ≤ d2 ≤ d3` and total degree `d`.
pub fn lemma_bound(q: u64, d1: usize, d2: usize, d: usize) -> f64 {
    let (d1, d2, d) = (d1 as f64, d2 as f64, d as f64);
    q as f64 + 1.0 - 2.0 * (d1 - 1.0) * (d2 - 1.0) * (q as f64).sqrt() - 0.5 * (d2 - 1.0) * (d - 1.0) * (d - 2.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundAuditRecord {
    pub q: u64,
    /// The parameter tuple, in `a,b,c,d,e@q` form.
    pub curve: String,
    /// Sorted partial degrees of the homogenized numerator.
    pub d1: usize,
    pub d2: usize,
    pub d3: usize,
    pub d: usize,
    pub points: u64,
    pub at_infinity: u64,
    /// Affine points on the diagonal `X = Y`.
    pub diagonal: u64,
    pub bound: f64,
    /// False when a linear factor was found, so the bound does not apply.
    /// Otherwise the check is advisory: no line `Y = uX + v` on the curve
    /// is evidence of, not a proof of, absolute irreducibility.
    pub applicable: bool,
    pub pass: bool,
}

/// Partial degrees of the homogenization `F̄(X, Y, Z)`, sorted, and the
/// total degree.
fn homogeneous_degrees(f: &BiPoly) -> ([usize; 3], usize) {
    let d = f.total_degree().unwrap_or(0);
    let low = f.terms().map(|(i, j, _)| i + j).min().unwrap_or(0);
    let mut ds = [f.deg_x().unwrap_or(0), f.deg_y().unwrap_or(0), d - low];
    ds.sort_unstable();
    (ds, d)
}

/// Counts the projective points of the tuple's numerator curve and compares
/// with [`lemma_bound`]. `ext` must be the cubic extension of `k`.
pub fn hasse_weil_audit(t: &ParamTuple, k: &FieldCtx, ext: &Extension) -> Result<BoundAuditRecord, ClassifyError> {
    let f = t.numerator(k)?;
    let g = symmetric_reduce(&f, k)?;
    let applicable = find_linear_root(&g, ext).is_none();
    let counts = count_affine_points(&f, k)?;
    let at_infinity = count_points_at_infinity(&f, k);
    let ([d1, d2, d3], d) = homogeneous_degrees(&f);
    let bound = lemma_bound(k.order(), d1, d2, d);
    let points = counts.affine + at_infinity;
    Ok(BoundAuditRecord {
        q: k.order(),
        curve: t.format(k),
        d1,
        d2,
        d3,
        d,
        points,
        at_infinity,
        diagonal: counts.diagonal,
        bound,
        applicable,
        pass: !applicable || points as f64 >= bound,
    })
}

/// Audits `count` random general-family tuples over `F_q` that are not PRs
/// and whose curve has no linear root, drawn reproducibly from `seed`.
pub fn audit_sample(q: u64, count: usize, seed: u64) -> Result<Vec<BoundAuditRecord>, ClassifyError> {
    let k = Arc::new(FieldCtx::of_order(q)?);
    let ext = Extension::new(Arc::clone(&k), 3)?;
    let cubics = search::irreducible_general(&k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let max_attempts = 20 * count + 100;
    for _ in 0..max_attempts {
        if out.len() == count {
            break;
        }
        let (d, e) = cubics[rng.gen_range(0..cubics.len())];
        let mut pick = || Fe::from_index(rng.gen_range(0..q));
        let (a, b, c) = (pick(), pick(), pick());
        if a.is_zero() && b.is_zero() && c.is_zero() {
            continue;
        }
        let t = ParamTuple::general(a, b, c, d, e);
        if t.to_ratmap(&k)?.is_permutation(&k)? {
            continue;
        }
        let rec = hasse_weil_audit(&t, &k, &ext)?;
        if rec.applicable {
            out.push(rec);
        }
    }
    Ok(out)
}
