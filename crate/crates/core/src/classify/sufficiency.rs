//! The infinite families are PRs, and their numerator curves split into
//! lines over the cubic extension.

use std::sync::Arc;

use serde::Serialize;

use super::{condition_set, ClassifyError};
use crate::criteria::Family;
use crate::field::{Extension, Fe, FieldCtx};
use crate::poly::{roots_in_cubic_extension, symmetric_reduce, BiPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SufficiencyEntry {
    pub q: u64,
    pub family: String,
    pub tuple: String,
    pub is_pr: bool,
    /// `G` equals the predicted product of three lines, coefficient by
    /// coefficient, over `F_{q^3}`.
    pub g_factors: bool,
    /// Same for `F` and the product of its symmetric factors.
    pub f_factors: bool,
}

impl SufficiencyEntry {
    pub fn ok(&self) -> bool {
        self.is_pr && self.g_factors && self.f_factors
    }
}

fn product(factors: impl IntoIterator<Item = BiPoly>, k: &FieldCtx) -> BiPoly {
    factors
        .into_iter()
        .fold(BiPoly::from_terms(&[(0, 0, Fe::ONE)], k), |acc, f| acc.mul(&f, k))
}

/// Checks every condition tuple of `family` over `ext.base()`.
fn check_family(ext: &Extension, family: Family) -> Result<Vec<SufficiencyEntry>, ClassifyError> {
    let k = ext.base();
    let big = ext.ext();
    let mut out = Vec::new();
    for t in condition_set(k, family, false)? {
        let f = t.numerator(k)?;
        let g = symmetric_reduce(&f, k)?;
        let us = roots_in_cubic_extension(&t.cubic(), ext)?;
        // the constant term of the i-th line: -d - 2u^2, resp. u + u^2
        let konst = |u: Fe| match family {
            Family::General => big.neg(big.add(ext.embed(t.d), big.mul_int(big.square(u), 2))),
            Family::Char3X2 => big.add(u, big.square(u)),
        };
        let g_pred = product(
            us.iter()
                .map(|&u| BiPoly::from_terms(&[(0, 1, Fe::ONE), (1, 0, big.neg(u)), (0, 0, konst(u))], big)),
            big,
        );
        let f_pred = product(
            us.iter().map(|&u| {
                let mu = big.neg(u);
                BiPoly::from_terms(&[(1, 1, Fe::ONE), (1, 0, mu), (0, 1, mu), (0, 0, konst(u))], big)
            }),
            big,
        );
        out.push(SufficiencyEntry {
            q: k.order(),
            family: family.name().to_string(),
            tuple: t.format(k),
            is_pr: t.to_ratmap(k)?.is_permutation(k)?,
            g_factors: g.map_coeffs(|c| ext.embed(c)) == g_pred,
            f_factors: f.map_coeffs(|c| ext.embed(c)) == f_pred,
        });
    }
    Ok(out)
}

/// The general family over `F_q`, plus the characteristic-3 family when
/// `3 | q`.
pub fn verify_sufficiency_at(q: u64) -> Result<Vec<SufficiencyEntry>, ClassifyError> {
    let k = Arc::new(FieldCtx::of_order(q)?);
    let ext = Extension::new(Arc::clone(&k), 3)?;
    let mut out = check_family(&ext, Family::General)?;
    if k.characteristic() == 3 {
        out.extend(check_family(&ext, Family::Char3X2)?);
    }
    Ok(out)
}

pub fn verify_sufficiency(qs: &[u64]) -> Result<Vec<SufficiencyEntry>, ClassifyError> {
    let mut out = Vec::new();
    for &q in qs {
        out.extend(verify_sufficiency_at(q)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::ParamTuple;

    #[test]
    fn small_fields_all_hold() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let entries = verify_sufficiency_at(q).unwrap();
            assert!(!entries.is_empty());
            for e in &entries {
                assert!(e.ok(), "{e:?}");
            }
        }
    }

    #[test]
    fn example_at_five() {
        let entries = verify_sufficiency_at(5).unwrap();
        // X + (2X^2 + X + 1)/(X^3 + X + 1)
        assert!(entries.iter().any(|e| e.tuple == "2,1,1,1,1@5" && e.ok()));
    }

    #[test]
    fn char3_family_at_three() {
        let entries = verify_sufficiency_at(3).unwrap();
        let c3: Vec<_> = entries.iter().filter(|e| e.family == "char3x2").collect();
        assert_eq!(c3.len(), 1);
        assert_eq!(c3[0].tuple, "1,0,0,2@3^1");
        assert!(c3[0].ok());
    }

    #[test]
    fn trace_family_at_27() {
        let k = FieldCtx::of_order(27).unwrap();
        let minus_one = k.neg(Fe::ONE);
        for b in k.elements() {
            let t = ParamTuple::general(Fe::ZERO, Fe::ZERO, Fe::ONE, minus_one, b);
            let irreducible = t.cubic().is_irreducible(&k).unwrap();
            assert_eq!(irreducible, !k.trace_to_subfield(b, 3).unwrap().is_zero());
            if irreducible {
                assert!(super::super::theorem21_condition(&t, &k));
                assert!(t.to_ratmap(&k).unwrap().is_permutation(&k).unwrap());
            }
        }
    }
}
