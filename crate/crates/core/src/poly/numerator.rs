use super::{BiPoly, PolyError, UniPoly};
use crate::field::{Extension, Fe, FieldCtx};

/// `(P(X)Q(Y) - P(Y)Q(X)) / (X - Y)`.
///
/// For `f = P/Q` this is the numerator of `(f(X) - f(Y)) / (X - Y)` over the
/// denominator `Q(X)Q(Y)`; its zeros off the diagonal are the collisions
/// `f(x) = f(y)` with `Q(x)Q(y) != 0`.
pub fn difference_numerator(p: &UniPoly, q: &UniPoly, k: &FieldCtx) -> BiPoly {
    let px = BiPoly::from_uni_x(p);
    let py = BiPoly::from_uni_y(p);
    let qx = BiPoly::from_uni_x(q);
    let qy = BiPoly::from_uni_y(q);
    let cross = px.mul(&qy, k).sub(&py.mul(&qx, k), k);
    cross
        .div_x_minus_y(k)
        .expect("antisymmetric polynomials are divisible by X - Y")
}

/// `F(X, Y)` for `f = X + (aX^2 + bX + c) / Q(X)` with `Q` a monic cubic.
pub fn build_numerator(a: Fe, b: Fe, c: Fe, cubic: &UniPoly, k: &FieldCtx) -> Result<BiPoly, PolyError> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(PolyError::AllZeroAbc);
    }
    if cubic.degree() != Some(3) || !cubic.is_monic() {
        return Err(PolyError::QNotCubicMonic);
    }
    let num = UniPoly::from_coeffs(vec![c, b, a]);
    let p = UniPoly::x().mul(cubic, k).add(&num, k);
    Ok(difference_numerator(&p, cubic, k))
}

/// The three roots of an irreducible cubic over the base field, as the
/// Frobenius orbit `(u, u^q, u^{q^2})` starting from the smallest root.
pub fn roots_in_cubic_extension(cubic: &UniPoly, ext: &Extension) -> Result<[Fe; 3], PolyError> {
    if cubic.degree() != Some(3) || !cubic.is_irreducible(ext.base())? || ext.degree() != 3 {
        return Err(PolyError::NotIrreducibleCubic);
    }
    let lifted = ext.embed_poly(cubic);
    let roots = lifted.roots(ext.ext());
    let u1 = *roots.first().ok_or(PolyError::NotIrreducibleCubic)?;
    let u2 = ext.frobenius(u1, 1);
    let u3 = ext.frobenius(u2, 1);
    Ok([u1, u2, u3])
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::poly::symmetric_reduce;

    fn cubic(d: i64, e: i64, k: &FieldCtx) -> UniPoly {
        UniPoly::from_ints(&[e, d, 0, 1], k)
    }

    /// The printed expansion of `F(X, Y)` for `Q = X^3 + dX + e`, as
    /// `(i, j, coefficient)` with coefficient a function of `(a,b,c,d,e)`.
    fn printed_f(a: i64, b: i64, c: i64, d: i64, e: i64) -> Vec<(usize, usize, i64)> {
        vec![
            (0, 0, -c * d + b * e + e * e),
            (1, 0, a * e + d * e),
            (2, 0, -c),
            (3, 0, e),
            (0, 1, a * e + d * e),
            (1, 1, -c + a * d + d * d),
            (2, 1, -b),
            (3, 1, d),
            (0, 2, -c),
            (1, 2, -b),
            (2, 2, -a),
            (0, 3, e),
            (1, 3, d),
            (3, 3, 1),
        ]
    }

    #[test]
    fn general_family_matches_printed_expansion() {
        let k = FieldCtx::new(7, 1).unwrap();
        for (a, b, c, d, e) in [(1, 2, 3, 4, 5), (6, 0, 1, 2, 3), (0, 0, 1, 1, 1)] {
            let f = build_numerator(k.from_int(a), k.from_int(b), k.from_int(c), &cubic(d, e, &k), &k)
                .unwrap();
            let expected = BiPoly::from_int_terms(&printed_f(a, b, c, d, e), &k);
            assert_eq!(f, expected);
            assert!(f.is_symmetric());
            assert_eq!(f.total_degree(), Some(6));
        }
    }

    #[test]
    fn zeros_are_collisions() {
        let k = FieldCtx::new(7, 1).unwrap();
        for (a, b, c, d, e) in [(1, 2, 3, 1, 1), (3, 3, 0, 0, 3), (0, 1, 0, 2, 2)] {
            let q = cubic(d, e, &k);
            if !q.is_irreducible(&k).unwrap() {
                continue;
            }
            let (a, b, c) = (k.from_int(a), k.from_int(b), k.from_int(c));
            let f = build_numerator(a, b, c, &q, &k).unwrap();
            let map = |x: Fe| {
                let n = UniPoly::from_coeffs(vec![c, b, a]).eval(x, &k);
                k.add(x, k.div(n, q.eval(x, &k)).unwrap())
            };
            for x in k.elements() {
                for y in k.elements() {
                    if x != y {
                        assert_eq!(f.eval(x, y, &k).is_zero(), map(x) == map(y));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let k = FieldCtx::new(5, 1).unwrap();
        let z = Fe::ZERO;
        assert_eq!(
            build_numerator(z, z, z, &cubic(1, 1, &k), &k),
            Err(PolyError::AllZeroAbc)
        );
        let not_monic = UniPoly::from_ints(&[1, 1, 0, 2], &k);
        assert_eq!(
            build_numerator(Fe::ONE, z, z, &not_monic, &k),
            Err(PolyError::QNotCubicMonic)
        );
    }

    #[test]
    fn sufficiency_factorization_over_f5() {
        // a = -3d, b = -9e, c = d^2 with (d, e) = (1, 1)
        let k = Arc::new(FieldCtx::new(5, 1).unwrap());
        let ext = Extension::new(Arc::clone(&k), 3).unwrap();
        let big = ext.ext();
        let (d, e) = (1, 1);
        let q = cubic(d, e, &k);
        let f = build_numerator(k.from_int(-3 * d), k.from_int(-9 * e), k.from_int(d * d), &q, &k)
            .unwrap();
        let roots = roots_in_cubic_extension(&q, &ext).unwrap();
        let dd = big.from_int(d);
        let mut prod = BiPoly::from_terms(&[(0, 0, Fe::ONE)], big);
        for &u in &roots {
            // XY - u(X+Y) - d - 2u^2
            let c0 = big.neg(big.add(dd, big.mul_int(big.square(u), 2)));
            let factor = BiPoly::from_terms(
                &[(1, 1, Fe::ONE), (1, 0, big.neg(u)), (0, 1, big.neg(u)), (0, 0, c0)],
                big,
            );
            prod = prod.mul(&factor, big);
        }
        assert_eq!(prod, f.map_coeffs(|c| ext.embed(c)));
        // and the reduced form factors into the lines Y - uX - d - 2u^2
        let g = symmetric_reduce(&f, &k).unwrap();
        let mut lines = BiPoly::from_terms(&[(0, 0, Fe::ONE)], big);
        for &u in &roots {
            let c0 = big.neg(big.add(dd, big.mul_int(big.square(u), 2)));
            let line = BiPoly::from_terms(&[(0, 1, Fe::ONE), (1, 0, big.neg(u)), (0, 0, c0)], big);
            lines = lines.mul(&line, big);
        }
        assert_eq!(lines, g.map_coeffs(|c| ext.embed(c)));
    }

    #[test]
    fn cubic_roots_form_frobenius_orbit() {
        let k = Arc::new(FieldCtx::new(5, 1).unwrap());
        let ext = Extension::new(Arc::clone(&k), 3).unwrap();
        let big = ext.ext();
        let q = cubic(1, 1, &k);
        let [u1, u2, u3] = roots_in_cubic_extension(&q, &ext).unwrap();
        assert!(u1 != u2 && u2 != u3 && u1 != u3);
        let e1 = big.add(big.add(u1, u2), u3);
        let e2 = big.add(big.add(big.mul(u1, u2), big.mul(u2, u3)), big.mul(u3, u1));
        let e3 = big.mul(big.mul(u1, u2), u3);
        assert_eq!(e1, Fe::ZERO);
        assert_eq!(e2, big.from_int(1));
        assert_eq!(e3, big.from_int(-1));
        assert_eq!(ext.frobenius(u3, 1), u1);

        let k3 = Arc::new(FieldCtx::new(3, 1).unwrap());
        let ext3 = Extension::new(Arc::clone(&k3), 3).unwrap();
        let q3 = UniPoly::from_ints(&[2, 0, 1, 1], &k3);
        let r = roots_in_cubic_extension(&q3, &ext3).unwrap();
        let b3 = ext3.ext();
        assert_eq!(b3.add(b3.add(r[0], r[1]), r[2]), b3.from_int(-1));
        for u in r {
            assert!(ext3.embed_poly(&q3).eval(u, b3).is_zero());
        }
        let reducible = cubic(0, 1, &k3);
        assert_eq!(
            roots_in_cubic_extension(&reducible, &ext3),
            Err(PolyError::NotIrreducibleCubic)
        );
    }
}
