//! PRs `P/Q` with `deg P = 4`, `deg Q = 2`.

use std::sync::Arc;

use rayon::prelude::*;

use super::{run_in_pool, ClassifyError};
use crate::field::{Fe, FieldCtx};
use crate::poly::UniPoly;
use crate::ratmap::RatMap;

pub const DEGQ2_LIMIT: u64 = 13;

/// All PRs `P/Q` over `F_q` with `P` a monic quartic and `Q` a monic
/// quadratic without roots in `F_q`, `gcd(P, Q) = 1`. Every such PR is
/// equivalent to one of this shape: scaling fixes `P` monic, and a root of
/// `Q` would collide with the fixed point at infinity.
pub fn degq2_existence_scan(q: u64, width: usize) -> Result<Vec<RatMap>, ClassifyError> {
    if q > DEGQ2_LIMIT {
        return Err(ClassifyError::FieldTooLarge(q));
    }
    let k = Arc::new(FieldCtx::of_order(q)?);
    let quadratics: Vec<UniPoly> = k
        .elements()
        .flat_map(|c1| k.elements().map(move |c0| (c0, c1)))
        .map(|(c0, c1)| UniPoly::from_coeffs(vec![c0, c1, Fe::ONE]))
        .filter(|qq| qq.roots(&k).is_empty())
        .collect();
    let kk = Arc::clone(&k);
    let found: Vec<Vec<RatMap>> = run_in_pool(width, move || {
        quadratics
            .into_par_iter()
            .map(|den| scan_denominator(&kk, &den))
            .collect()
    });
    let mut out: Vec<RatMap> = found.into_iter().flatten().collect();
    out.sort_by_key(|f| (f.num().coeffs().to_vec(), f.den().coeffs().to_vec()));
    Ok(out)
}

fn scan_denominator(k: &FieldCtx, den: &UniPoly) -> Vec<RatMap> {
    let q = k.order() as usize;
    let xs: Vec<Fe> = k.elements().collect();
    let pw: Vec<[Fe; 5]> = xs
        .iter()
        .map(|&x| {
            let x2 = k.square(x);
            [Fe::ONE, x, x2, k.mul(x2, x), k.square(x2)]
        })
        .collect();
    let inv_den: Vec<Fe> = xs.iter().map(|&x| k.inv(den.eval(x, k)).expect("root-free")).collect();
    let mut seen = vec![0u32; q];
    let mut stamp = 0u32;
    let mut out = Vec::new();
    for p3 in k.elements() {
        for p2 in k.elements() {
            for p1 in k.elements() {
                'p0: for p0 in k.elements() {
                    stamp += 1;
                    for (i, w) in pw.iter().enumerate() {
                        let mut v = w[4];
                        for (&c, &x) in [p3, p2, p1, p0].iter().zip([w[3], w[2], w[1], w[0]].iter()) {
                            v = k.add(v, k.mul(c, x));
                        }
                        let img = k.mul(v, inv_den[i]).index() as usize;
                        if seen[img] == stamp {
                            continue 'p0;
                        }
                        seen[img] = stamp;
                    }
                    let num = UniPoly::from_coeffs(vec![p0, p1, p2, p3, Fe::ONE]);
                    // Q irreducible, so gcd(P, Q) != 1 means Q | P; then
                    // P/Q is a quadratic polynomial and not of degree four
                    if num.rem(den, k).expect("nonzero divisor").is_zero() {
                        continue;
                    }
                    out.push(RatMap::new(num, den.clone(), k).expect("coprime, nonzero denominator"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn results_are_degree_four_permutations() {
        for q in [2u64, 3, 4] {
            let k = FieldCtx::of_order(q).unwrap();
            for f in degq2_existence_scan(q, 2).unwrap() {
                assert_eq!(f.degree(), 4);
                assert_eq!(f.den().degree(), Some(2));
                assert!(f.is_permutation(&k).unwrap());
            }
        }
    }

    #[test]
    fn exhaustive_against_ratmap_at_three() {
        let k = FieldCtx::of_order(3).unwrap();
        let mut count = 0;
        for idx in 0..3u64.pow(6) {
            let digit = |i: u32| Fe::from_index(idx / 3u64.pow(i) % 3);
            let den = UniPoly::from_coeffs(vec![digit(0), digit(1), Fe::ONE]);
            let num = UniPoly::from_coeffs(vec![digit(2), digit(3), digit(4), digit(5), Fe::ONE]);
            if !den.roots(&k).is_empty() || num.gcd(&den, &k).degree() != Some(0) {
                continue;
            }
            if RatMap::new(num, den, &k).unwrap().is_permutation(&k).unwrap() {
                count += 1;
            }
        }
        assert_eq!(degq2_existence_scan(3, 1).unwrap().len(), count);
    }

    #[test]
    fn rejects_large_q() {
        assert!(degq2_existence_scan(16, 1).is_err());
    }
}
