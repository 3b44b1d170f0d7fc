use super::{BiPoly, PolyError, UniPoly};
use crate::field::{Extension, Fe, FieldCtx};

/// A line `Y = uX + v` contained in the curve `G = 0`, with `u, v` in the
/// extension field. Its existence shows `G` is not absolutely irreducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearRootWitness {
    pub u: Fe,
    pub v: Fe,
}

/// Coefficients of `G(X, uX + v)` in `X`, each a polynomial in `v`.
fn substituted(g: &BiPoly, u: Fe, k: &FieldCtx) -> Vec<UniPoly> {
    let deg = g.total_degree().unwrap_or(0);
    let mut out = vec![UniPoly::zero(); deg + 1];
    let binom = binomials(g.deg_y().unwrap_or(0), k);
    for (i, j, c) in g.terms() {
        // (uX + v)^j = Σ_t C(j, t) u^t X^t v^(j-t)
        let mut upow = Fe::ONE;
        for t in 0..=j {
            let coeff = k.mul(k.mul(c, binom[j][t]), upow);
            let term = UniPoly::monomial(coeff, j - t);
            out[i + t] = out[i + t].add(&term, k);
            upow = k.mul(upow, u);
        }
    }
    out
}

fn binomials(n: usize, k: &FieldCtx) -> Vec<Vec<Fe>> {
    let mut rows: Vec<Vec<Fe>> = vec![vec![Fe::ONE]];
    for r in 1..=n {
        let prev = &rows[r - 1];
        let mut row = vec![Fe::ONE; r + 1];
        for t in 1..r {
            row[t] = k.add(prev[t - 1], prev[t]);
        }
        rows.push(row);
    }
    rows
}

/// Solves the second-highest coefficient of `G(X, uX + v)` (linear in `v`)
/// for `v` and checks that every coefficient vanishes.
///
/// Returns `Ok(None)` if the resulting line is not a root, and
/// [`PolyError::DenominatorVanishes`] if the linear coefficient of `v` is
/// zero at this `u`.
pub fn linear_root_by_formula(g: &BiPoly, u: Fe, k: &FieldCtx) -> Result<Option<Fe>, PolyError> {
    let coeffs = substituted(g, u, k);
    let top = coeffs.len() - 1;
    if top == 0 {
        return Ok(None);
    }
    let lin = &coeffs[top - 1];
    let slope = lin.coeff(1);
    if slope.is_zero() {
        return Err(PolyError::DenominatorVanishes);
    }
    let v = k.neg(k.div(lin.coeff(0), slope)?);
    let ok = coeffs.iter().all(|c| c.eval(v, k).is_zero());
    Ok(ok.then_some(v))
}

/// Direct solve of `G(X, uX + v) ≡ 0` for `v` in `k`: the common roots of
/// all coefficient polynomials. Returns the smallest such `v`.
pub fn linear_root_by_solve(g: &BiPoly, u: Fe, k: &FieldCtx) -> Option<Fe> {
    let coeffs = substituted(g, u, k);
    if coeffs.iter().any(|c| c.degree() == Some(0)) {
        return None;
    }
    let common = coeffs
        .iter()
        .fold(UniPoly::zero(), |acc, c| acc.gcd(c, k));
    if common.is_zero() {
        return Some(Fe::ZERO);
    }
    common.roots(k).first().copied()
}

/// Searches for a line `Y = uX + v` on `G = 0` over the extension.
///
/// `u` must annihilate the top-degree form of `G` at `(1, u)`; for the
/// degree-four families this is the cubic denominator, so `u` runs over its
/// roots. `v` comes from [`linear_root_by_formula`], falling back to
/// [`linear_root_by_solve`] when the linear coefficient vanishes.
pub fn find_linear_root(g: &BiPoly, ext: &Extension) -> Option<LinearRootWitness> {
    let big = ext.ext();
    let lifted = g.map_coeffs(|c| ext.embed(c));
    let top = UniPoly::from_coeffs(lifted.top_form());
    if top.degree().unwrap_or(0) == 0 {
        return None;
    }
    for u in top.roots(big) {
        let v = match linear_root_by_formula(&lifted, u, big) {
            Ok(v) => v,
            Err(_) => linear_root_by_solve(&lifted, u, big),
        };
        if let Some(v) = v {
            return Some(LinearRootWitness { u, v });
        }
    }
    None
}

/// Whether `G(X, uX + v)` is the zero polynomial.
pub fn is_linear_root(g: &BiPoly, w: LinearRootWitness, ext: &Extension) -> bool {
    let big = ext.ext();
    let lifted = g.map_coeffs(|c| ext.embed(c));
    substituted(&lifted, w.u, big)
        .iter()
        .all(|c| c.eval(w.v, big).is_zero())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::poly::{build_numerator, symmetric_reduce};

    fn family_g(t: [i64; 5], k: &FieldCtx) -> BiPoly {
        let [a, b, c, d, e] = t;
        let q = UniPoly::from_ints(&[e, d, 0, 1], k);
        let f = build_numerator(k.from_int(a), k.from_int(b), k.from_int(c), &q, k).unwrap();
        symmetric_reduce(&f, k).unwrap()
    }

    #[test]
    fn condition_tuple_has_predicted_witness() {
        let k = Arc::new(FieldCtx::new(5, 1).unwrap());
        let ext = Extension::new(Arc::clone(&k), 3).unwrap();
        let big = ext.ext();
        let (d, e) = (1, 1);
        let g = family_g([-3 * d, -9 * e, d * d, d, e], &k);
        let w = find_linear_root(&g, &ext).expect("condition tuple factors");
        assert!(is_linear_root(&g, w, &ext));
        let predicted = big.add(big.from_int(d), big.mul_int(big.square(w.u), 2));
        assert_eq!(w.v, predicted);
    }

    #[test]
    fn char3_condition_tuple_has_predicted_witness() {
        let k = Arc::new(FieldCtx::new(3, 1).unwrap());
        let ext = Extension::new(Arc::clone(&k), 3).unwrap();
        let big = ext.ext();
        let q = UniPoly::from_ints(&[2, 0, 1, 1], &k);
        let f = build_numerator(Fe::ONE, Fe::ZERO, Fe::ZERO, &q, &k).unwrap();
        let g = symmetric_reduce(&f, &k).unwrap();
        let w = find_linear_root(&g, &ext).expect("condition tuple factors");
        assert!(is_linear_root(&g, w, &ext));
        assert_eq!(w.v, big.neg(big.add(w.u, big.square(w.u))));
    }

    #[test]
    fn no_witness_for_generic_tuple_at_q7() {
        let k = Arc::new(FieldCtx::new(7, 1).unwrap());
        let ext = Extension::new(Arc::clone(&k), 3).unwrap();
        let big = ext.ext();
        let q = UniPoly::from_ints(&[5, 0, 0, 1], &k);
        assert!(q.is_irreducible(&k).unwrap());
        let g = family_g([1, 1, 1, 0, 5], &k);
        assert_eq!(find_linear_root(&g, &ext), None);
        // exhaustive oracle over all (u, v) in F_{7^3}^2 restricted to u on
        // the top form, which is forced by the X^3 coefficient
        let lifted = g.map_coeffs(|c| ext.embed(c));
        let top = UniPoly::from_coeffs(lifted.top_form());
        for u in big.elements().filter(|&u| top.eval(u, big).is_zero()) {
            for v in big.elements() {
                let w = LinearRootWitness { u, v };
                assert!(!is_linear_root(&g, w, &ext));
            }
        }
    }

    #[test]
    fn solve_agrees_with_formula() {
        let k = Arc::new(FieldCtx::new(5, 1).unwrap());
        let ext = Extension::new(Arc::clone(&k), 3).unwrap();
        let big = ext.ext();
        let g = family_g([-3, -9, 1, 1, 1], &k);
        let lifted = g.map_coeffs(|c| ext.embed(c));
        let top = UniPoly::from_coeffs(lifted.top_form());
        for u in top.roots(big) {
            let by_formula = linear_root_by_formula(&lifted, u, big).unwrap();
            assert_eq!(by_formula, linear_root_by_solve(&lifted, u, big));
        }
    }

    #[test]
    fn vanishing_denominator_is_reported() {
        // G = Y^2: u = 0 is a double root of the top form
        let k = FieldCtx::new(5, 1).unwrap();
        let g = BiPoly::from_int_terms(&[(0, 2, 1)], &k);
        assert_eq!(
            linear_root_by_formula(&g, Fe::ZERO, &k),
            Err(PolyError::DenominatorVanishes)
        );
        assert_eq!(linear_root_by_solve(&g, Fe::ZERO, &k), Some(Fe::ZERO));
    }
}
