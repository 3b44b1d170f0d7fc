use super::{BiPoly, PolyError};
use crate::field::{Fe, FieldCtx};

/// Finds the unique `G` with `F(X, Y) = G(X + Y, XY)`.
///
/// Classical leading-term elimination: the lex-leading term `c X^i Y^j` of a
/// symmetric polynomial has `i >= j` and is the leading term of
/// `c (X+Y)^(i-j) (XY)^j`.
pub fn symmetric_reduce(f: &BiPoly, k: &FieldCtx) -> Result<BiPoly, PolyError> {
    if !f.is_symmetric() {
        return Err(PolyError::NotSymmetric);
    }
    let s = BiPoly::from_terms(&[(1, 0, Fe::ONE), (0, 1, Fe::ONE)], k);
    let p = BiPoly::from_terms(&[(1, 1, Fe::ONE)], k);
    let mut rest = f.clone();
    let mut g_terms = Vec::new();
    while let Some((i, j, c)) = lex_leading(&rest) {
        debug_assert!(i >= j);
        let basis = s.pow((i - j) as u32, k).mul(&p.pow(j as u32, k), k);
        rest = rest.sub(&basis.scale(c, k), k);
        g_terms.push((i - j, j, c));
    }
    Ok(BiPoly::from_terms(&g_terms, k))
}

/// `G(X + Y, XY)`.
pub fn compose_symmetric(g: &BiPoly, k: &FieldCtx) -> BiPoly {
    let s = BiPoly::from_terms(&[(1, 0, Fe::ONE), (0, 1, Fe::ONE)], k);
    let p = BiPoly::from_terms(&[(1, 1, Fe::ONE)], k);
    g.terms().fold(BiPoly::zero(), |acc, (i, j, c)| {
        let mono = s.pow(i as u32, k).mul(&p.pow(j as u32, k), k).scale(c, k);
        acc.add(&mono, k)
    })
}

fn lex_leading(f: &BiPoly) -> Option<(usize, usize, Fe)> {
    let i = f.deg_x()?;
    (0..=f.deg_y()?)
        .rev()
        .map(|j| (i, j, f.coeff(i, j)))
        .find(|t| !t.2.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::build_numerator;
    use crate::poly::UniPoly;
    use proptest::prelude::*;

    #[test]
    fn newton_examples() {
        let k = FieldCtx::new(5, 1).unwrap();
        let s = BiPoly::from_int_terms(&[(1, 0, 1), (0, 1, 1)], &k);
        assert_eq!(
            symmetric_reduce(&s, &k).unwrap(),
            BiPoly::from_int_terms(&[(1, 0, 1)], &k)
        );
        let sq = BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, 1)], &k);
        assert_eq!(
            symmetric_reduce(&sq, &k).unwrap(),
            BiPoly::from_int_terms(&[(2, 0, 1), (0, 1, -2)], &k)
        );
        let asym = BiPoly::from_int_terms(&[(1, 0, 1)], &k);
        assert_eq!(symmetric_reduce(&asym, &k), Err(PolyError::NotSymmetric));
    }

    /// Printed reduced form for `Q = X^3 + dX + e`.
    fn printed_g(a: i64, b: i64, c: i64, d: i64, e: i64) -> Vec<(usize, usize, i64)> {
        vec![
            (0, 0, -c * d + b * e + e * e),
            (1, 0, a * e + d * e),
            (2, 0, -c),
            (3, 0, e),
            (0, 1, c + a * d + d * d),
            (1, 1, -b - 3 * e),
            (2, 1, d),
            (0, 2, -a - 2 * d),
            (0, 3, 1),
        ]
    }

    /// Printed reduced form for `Q = X^3 + X^2 + e` in characteristic 3.
    fn printed_g_char3(a: i64, b: i64, c: i64, e: i64) -> Vec<(usize, usize, i64)> {
        vec![
            (0, 0, b * e + e * e),
            (1, 0, -c + a * e),
            (2, 0, -c + e),
            (3, 0, e),
            (0, 1, c - b + e),
            (1, 1, -b),
            (0, 2, -a + 1),
            (1, 2, 1),
            (0, 3, 1),
        ]
    }

    #[test]
    fn general_family_matches_printed_reduction() {
        let k = FieldCtx::new(5, 1).unwrap();
        for (a, b, c, d, e) in [(1, 1, 1, 1, 1), (2, 0, 3, 4, 1), (0, 4, 0, 0, 2)] {
            let q = UniPoly::from_ints(&[e, d, 0, 1], &k);
            let f = build_numerator(k.from_int(a), k.from_int(b), k.from_int(c), &q, &k).unwrap();
            let g = symmetric_reduce(&f, &k).unwrap();
            assert_eq!(g, BiPoly::from_int_terms(&printed_g(a, b, c, d, e), &k));
            assert_eq!(compose_symmetric(&g, &k), f);
        }
    }

    #[test]
    fn char3_family_matches_printed_reduction() {
        let k = FieldCtx::new(3, 2).unwrap();
        for (a, b, c, e) in [(1, 0, 0, 2), (2, 1, 2, 1), (0, 2, 1, 2)] {
            let q = UniPoly::from_ints(&[e, 0, 1, 1], &k);
            let f = build_numerator(k.from_int(a), k.from_int(b), k.from_int(c), &q, &k).unwrap();
            let g = symmetric_reduce(&f, &k).unwrap();
            assert_eq!(g, BiPoly::from_int_terms(&printed_g_char3(a, b, c, e), &k));
        }
    }

    fn random_symmetric(seed: &[u64], k: &FieldCtx) -> BiPoly {
        let mut terms = Vec::new();
        let mut it = seed.iter();
        for i in 0..5usize {
            for j in 0..=i {
                let c = Fe::from_index(it.next().copied().unwrap_or(0) % k.order());
                terms.push((i, j, c));
                if i != j {
                    terms.push((j, i, c));
                }
            }
        }
        BiPoly::from_terms(&terms, k)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn round_trip_is_identity(
            seed in proptest::collection::vec(0u64..1000, 15),
            which in 0usize..6,
        ) {
            let q = [2u64, 3, 4, 5, 7, 9][which];
            let k = FieldCtx::of_order(q).unwrap();
            let f = random_symmetric(&seed, &k);
            let g = symmetric_reduce(&f, &k).unwrap();
            prop_assert_eq!(compose_symmetric(&g, &k), f);
        }
    }
}
