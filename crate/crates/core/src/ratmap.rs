//! Rational functions acting on the projective line, and the two-sided
//! action of `PGL(2, F_q)` on them.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::field::{Extension, Fe, FieldCtx, FieldError, P1Point, DEFAULT_ORDER_BOUND};
use crate::poly::{PolyError, UniPoly};

/// Largest `q` for the exhaustive equivalence search.
pub const EQUIVALENCE_LIMIT: u64 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RatMapError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("field of order {0} is too large for a permutation test")]
    FieldTooLarge(u64),
    #[error("field of order {0} is too large for the equivalence search")]
    FieldTooLargeForEquivalence(u64),
    #[error("maps have different degrees")]
    DegreeMismatch,
    #[error("Moebius entries have zero determinant")]
    SingularMoebius,
    #[error("r does not have degree 3 over the base field")]
    RNotDegreeThree,
    #[error("trace-form residue must be nonzero")]
    ZeroResidue,
    #[error("coefficient does not descend to the base field")]
    CoefficientNotRational,
    #[error("cannot parse rational map: {0}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `P/Q` in lowest terms with `Q` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMap {
    num: UniPoly,
    den: UniPoly,
}

impl RatMap {
    /// Reduces `num/den` to lowest terms and makes the denominator monic.
    pub fn new(num: UniPoly, den: UniPoly, k: &FieldCtx) -> Result<RatMap, RatMapError> {
        if den.is_zero() {
            return Err(RatMapError::ZeroDenominator);
        }
        let g = num.gcd(&den, k);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (num.divmod(&g, k)?.0, den.divmod(&g, k)?.0)
        } else {
            (num, den)
        };
        let lead_inv = k.inv(den.lead())?;
        num = num.scale(lead_inv, k);
        den = den.scale(lead_inv, k);
        Ok(RatMap { num, den })
    }

    pub fn identity() -> RatMap {
        RatMap {
            num: UniPoly::x(),
            den: UniPoly::one(),
        }
    }

    /// `X + (aX^2 + bX + c) / cubic`.
    pub fn family(a: Fe, b: Fe, c: Fe, cubic: &UniPoly, k: &FieldCtx) -> Result<RatMap, RatMapError> {
        let tail = UniPoly::from_coeffs(vec![c, b, a]);
        let num = UniPoly::x().mul(cubic, k).add(&tail, k);
        RatMap::new(num, cubic.clone(), k)
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// `max(deg P, deg Q)`; the zero map has degree 0.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn eval_p1(&self, x: P1Point, k: &FieldCtx) -> P1Point {
        match x {
            P1Point::Finite(x) => {
                let d = self.den.eval(x, k);
                if d.is_zero() {
                    P1Point::Infinity
                } else {
                    P1Point::Finite(k.div(self.num.eval(x, k), d).expect("nonzero"))
                }
            }
            P1Point::Infinity => {
                let dp = self.num.degree();
                let dq = self.den.degree().expect("nonzero denominator");
                match dp {
                    None => P1Point::Finite(Fe::ZERO),
                    Some(dp) if dp > dq => P1Point::Infinity,
                    Some(dp) if dp < dq => P1Point::Finite(Fe::ZERO),
                    Some(_) => P1Point::Finite(k.div(self.num.lead(), self.den.lead()).expect("monic")),
                }
            }
        }
    }

    /// Bijectivity on `P^1(F_q)` by marking images in `q + 1` slots.
    pub fn is_permutation(&self, k: &FieldCtx) -> Result<bool, RatMapError> {
        let q = k.order();
        if q > DEFAULT_ORDER_BOUND {
            return Err(RatMapError::FieldTooLarge(q));
        }
        let mut seen = vec![false; q as usize + 1];
        let points = k.elements().map(P1Point::Finite).chain([P1Point::Infinity]);
        for x in points {
            let slot = self.eval_p1(x, k).slot(q);
            if std::mem::replace(&mut seen[slot], true) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coefficients of `P_h(ψ)` and `Q_h(ψ)` where `_h` homogenizes to the
    /// map's degree; this is `f∘ψ` before reduction.
    fn substitute(&self, psi: &Moebius, k: &FieldCtx) -> (UniPoly, UniPoly) {
        let deg = self.degree();
        let lin_num = UniPoly::from_coeffs(vec![psi.b, psi.a]);
        let lin_den = UniPoly::from_coeffs(vec![psi.d, psi.c]);
        let mut num_pows = vec![UniPoly::one()];
        let mut den_pows = vec![UniPoly::one()];
        for i in 1..=deg {
            num_pows.push(num_pows[i - 1].mul(&lin_num, k));
            den_pows.push(den_pows[i - 1].mul(&lin_den, k));
        }
        let homogenize = |f: &UniPoly| {
            f.coeffs()
                .iter()
                .enumerate()
                .fold(UniPoly::zero(), |acc, (i, &c)| {
                    acc.add(&num_pows[i].mul(&den_pows[deg - i], k).scale(c, k), k)
                })
        };
        (homogenize(&self.num), homogenize(&self.den))
    }

    /// The row space of `(P, Q)` in reduced echelon form, columns ordered
    /// from the top degree down. Two maps of degree `D` differ by a left
    /// Moebius factor iff these agree.
    fn left_canonical(num: &UniPoly, den: &UniPoly, deg: usize, k: &FieldCtx) -> Vec<Fe> {
        let row = |f: &UniPoly| (0..=deg).rev().map(|i| f.coeff(i)).collect::<Vec<_>>();
        let mut rows = [row(num), row(den)];
        let mut pivot_row = 0;
        for col in 0..=deg {
            if pivot_row == 2 {
                break;
            }
            let Some(r) = (pivot_row..2).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(pivot_row, r);
            let inv = k.inv(rows[pivot_row][col]).expect("nonzero pivot");
            for v in rows[pivot_row].iter_mut() {
                *v = k.mul(*v, inv);
            }
            let other = 1 - pivot_row;
            let factor = rows[other][col];
            if !factor.is_zero() {
                let pivot = rows[pivot_row].clone();
                for (v, p) in rows[other].iter_mut().zip(pivot) {
                    *v = k.sub(*v, k.mul(factor, p));
                }
            }
            pivot_row += 1;
        }
        rows.concat()
    }

    /// Canonical text form `P | Q`, coefficients low degree first.
    pub fn format(&self, k: &FieldCtx) -> String {
        format!("{} | {}", self.num.format(k), self.den.format(k))
    }

    pub fn parse(s: &str, k: &FieldCtx) -> Result<RatMap, RatMapError> {
        let (p, q) = s
            .split_once('|')
            .ok_or_else(|| RatMapError::Parse(s.to_string()))?;
        RatMap::new(UniPoly::parse(p.trim(), k)?, UniPoly::parse(q.trim(), k)?, k)
    }
}

/// `(aX + b) / (cX + d)` with `ad - bc != 0`, scaled so the first nonzero
/// entry is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Moebius {
    a: Fe,
    b: Fe,
    c: Fe,
    d: Fe,
}

impl Moebius {
    pub fn new(a: Fe, b: Fe, c: Fe, d: Fe, k: &FieldCtx) -> Result<Moebius, RatMapError> {
        if k.sub(k.mul(a, d), k.mul(b, c)).is_zero() {
            return Err(RatMapError::SingularMoebius);
        }
        let lead = [a, b, c, d].into_iter().find(|x| !x.is_zero()).expect("nonsingular");
        let s = k.inv(lead)?;
        Ok(Moebius {
            a: k.mul(a, s),
            b: k.mul(b, s),
            c: k.mul(c, s),
            d: k.mul(d, s),
        })
    }

    pub fn identity() -> Moebius {
        Moebius {
            a: Fe::ONE,
            b: Fe::ZERO,
            c: Fe::ZERO,
            d: Fe::ONE,
        }
    }

    pub fn entries(&self) -> [Fe; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn apply(&self, x: P1Point, k: &FieldCtx) -> P1Point {
        match x {
            P1Point::Finite(x) => {
                let den = k.add(k.mul(self.c, x), self.d);
                if den.is_zero() {
                    P1Point::Infinity
                } else {
                    let num = k.add(k.mul(self.a, x), self.b);
                    P1Point::Finite(k.div(num, den).expect("nonzero"))
                }
            }
            P1Point::Infinity if self.c.is_zero() => P1Point::Infinity,
            P1Point::Infinity => P1Point::Finite(k.div(self.a, self.c).expect("nonzero")),
        }
    }

    pub fn as_ratmap(&self, k: &FieldCtx) -> RatMap {
        let num = UniPoly::from_coeffs(vec![self.b, self.a]);
        let den = UniPoly::from_coeffs(vec![self.d, self.c]);
        RatMap::new(num, den, k).expect("nonsingular")
    }

    /// All `q^3 - q` elements of `PGL(2, F_q)` in canonical scaling, in
    /// enumeration order of `(a, b, c, d)`.
    pub fn enumerate(k: &FieldCtx) -> Vec<Moebius> {
        let mut out = Vec::new();
        for c in k.elements().skip(1) {
            for d in k.elements() {
                out.push(Moebius { a: Fe::ZERO, b: Fe::ONE, c, d });
            }
        }
        for b in k.elements() {
            for c in k.elements() {
                for d in k.elements() {
                    if let Ok(m) = Moebius::new(Fe::ONE, b, c, d, k) {
                        out.push(m);
                    }
                }
            }
        }
        out
    }
}

/// `φ ∘ f ∘ ψ`, reduced, with monic denominator.
pub fn compose(phi: &Moebius, f: &RatMap, psi: &Moebius, k: &FieldCtx) -> RatMap {
    let (n1, d1) = f.substitute(psi, k);
    let num = n1.scale(phi.a, k).add(&d1.scale(phi.b, k), k);
    let den = n1.scale(phi.c, k).add(&d1.scale(phi.d, k), k);
    RatMap::new(num, den, k).expect("Moebius maps are invertible")
}

/// `X + Σ_i b^{q^i} / (X - r^{q^i})` over the Frobenius orbit, brought to
/// a single fraction and descended to the base field.
pub fn from_trace_form(b: Fe, r: Fe, ext: &Extension) -> Result<RatMap, RatMapError> {
    if ext.degree() != 3 || ext.frobenius(r, 1) == r {
        return Err(RatMapError::RNotDegreeThree);
    }
    if b.is_zero() {
        return Err(RatMapError::ZeroResidue);
    }
    let big = ext.ext();
    let rs: Vec<Fe> = (0..3).map(|i| ext.frobenius(r, i)).collect();
    let bs: Vec<Fe> = (0..3).map(|i| ext.frobenius(b, i)).collect();
    let lin = |root: Fe| UniPoly::from_coeffs(vec![big.neg(root), Fe::ONE]);
    let q = rs.iter().fold(UniPoly::one(), |acc, &ri| acc.mul(&lin(ri), big));
    let mut p = UniPoly::x().mul(&q, big);
    for i in 0..3 {
        let cofactor = (0..3)
            .filter(|&j| j != i)
            .fold(UniPoly::constant(bs[i]), |acc, j| acc.mul(&lin(rs[j]), big));
        p = p.add(&cofactor, big);
    }
    let descend = |f: &UniPoly| -> Result<UniPoly, RatMapError> {
        let cs = f
            .coeffs()
            .iter()
            .map(|&c| ext.descend(c).ok_or(RatMapError::CoefficientNotRational))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::from_coeffs(cs))
    };
    RatMap::new(descend(&p)?, descend(&q)?, ext.base())
}

/// Whether `f = φ∘g∘ψ` for some `φ, ψ ∈ PGL(2, F_q)`, by exhaustive search
/// over `ψ` with a left-action canonical form.
pub fn equivalent_small_q(f: &RatMap, g: &RatMap, k: &FieldCtx) -> Result<bool, RatMapError> {
    if k.order() > EQUIVALENCE_LIMIT {
        return Err(RatMapError::FieldTooLargeForEquivalence(k.order()));
    }
    let deg = f.degree();
    if deg != g.degree() {
        return Err(RatMapError::DegreeMismatch);
    }
    let target: HashSet<Vec<Fe>> =
        HashSet::from([RatMap::left_canonical(&f.num, &f.den, deg, k)]);
    Ok(Moebius::enumerate(k).par_iter().any(|psi| {
        let (n, d) = g.substitute(psi, k);
        target.contains(&RatMap::left_canonical(&n, &d, deg, k))
    }))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn ints(v: &[i64], k: &FieldCtx) -> UniPoly {
        UniPoly::from_ints(v, k)
    }

    fn random_moebius(rng: &mut ChaCha8Rng, k: &FieldCtx) -> Moebius {
        let all = Moebius::enumerate(k);
        all[rng.gen_range(0..all.len())]
    }

    fn random_map(rng: &mut ChaCha8Rng, k: &FieldCtx) -> RatMap {
        loop {
            let mut q: Vec<Fe> = (0..3).map(|_| Fe::from_index(rng.gen_range(0..k.order()))).collect();
            q.push(Fe::ONE);
            let t: Vec<Fe> = (0..3).map(|_| Fe::from_index(rng.gen_range(0..k.order()))).collect();
            let q = UniPoly::from_coeffs(q);
            if let Ok(f) = RatMap::family(t[2], t[1], t[0], &q, k) {
                if f.degree() == 4 {
                    return f;
                }
            }
        }
    }

    #[test]
    fn evaluation_on_the_projective_line() {
        let k = FieldCtx::new(7, 1).unwrap();
        let id = RatMap::identity();
        for x in k.elements() {
            assert_eq!(id.eval_p1(P1Point::Finite(x), &k), P1Point::Finite(x));
        }
        let f = RatMap::family(Fe::ZERO, k.from_int(2), Fe::ZERO, &ints(&[5, 0, 0, 1], &k), &k).unwrap();
        assert_eq!(f.eval_p1(P1Point::Infinity, &k), P1Point::Infinity);
        let recip = RatMap::new(UniPoly::one(), UniPoly::x(), &k).unwrap();
        assert_eq!(recip.eval_p1(P1Point::Finite(Fe::ZERO), &k), P1Point::Infinity);
        assert_eq!(recip.eval_p1(P1Point::Infinity, &k), P1Point::Finite(Fe::ZERO));
        let mobius = RatMap::new(ints(&[1, 3], &k), ints(&[2, 1], &k), &k).unwrap();
        assert_eq!(mobius.eval_p1(P1Point::Infinity, &k), P1Point::Finite(k.from_int(3)));
    }

    #[test]
    fn lowest_terms_and_monic_denominator() {
        let k = FieldCtx::new(5, 1).unwrap();
        // (X^2 - 1) / (2X - 2) = (X + 1) / 2
        let f = RatMap::new(ints(&[-1, 0, 1], &k), ints(&[-2, 2], &k), &k).unwrap();
        assert_eq!(f.den(), &UniPoly::one());
        assert_eq!(f.num(), &ints(&[3, 3], &k));
        assert_eq!(
            RatMap::new(UniPoly::one(), UniPoly::zero(), &k),
            Err(RatMapError::ZeroDenominator)
        );
    }

    #[test]
    fn permutation_examples() {
        let k3 = FieldCtx::new(3, 1).unwrap();
        assert!(RatMap::identity().is_permutation(&k3).unwrap());
        let sq = RatMap::new(ints(&[0, 0, 1], &k3), UniPoly::one(), &k3).unwrap();
        assert!(!sq.is_permutation(&k3).unwrap());
        let k2 = FieldCtx::new(2, 1).unwrap();
        let f = RatMap::family(Fe::ZERO, Fe::ZERO, Fe::ONE, &ints(&[1, 1, 0, 1], &k2), &k2).unwrap();
        assert!(f.is_permutation(&k2).unwrap());
    }

    #[test]
    fn compose_examples() {
        let k = FieldCtx::new(5, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = random_map(&mut rng, &k);
        let id = Moebius::identity();
        assert_eq!(compose(&id, &f, &id, &k), f);

        let inv = Moebius::new(Fe::ZERO, Fe::ONE, Fe::ONE, Fe::ZERO, &k).unwrap();
        let x4 = RatMap::new(ints(&[0, 0, 0, 0, 1], &k), UniPoly::one(), &k).unwrap();
        let g = compose(&inv, &x4, &id, &k);
        assert_eq!(g, RatMap::new(UniPoly::one(), ints(&[0, 0, 0, 0, 1], &k), &k).unwrap());
        assert_eq!(g.degree(), 4);
    }

    #[test]
    fn scaling_substitution_moves_family_parameters() {
        // φ = tX, ψ = X/t turns X + (aX^2+bX+c)/(X^3+dX+e) into the same
        // shape with (t^2 a, t^3 b, t^4 c, t^2 d, t^3 e)
        let k = FieldCtx::new(5, 1).unwrap();
        let t = k.from_int(2);
        let t_inv = k.inv(t).unwrap();
        let phi = Moebius::new(t, Fe::ZERO, Fe::ZERO, Fe::ONE, &k).unwrap();
        let psi = Moebius::new(t_inv, Fe::ZERO, Fe::ZERO, Fe::ONE, &k).unwrap();
        let [a, b, c, d, e] = [1, 2, 3, 1, 1].map(|v| k.from_int(v));
        let f = RatMap::family(a, b, c, &UniPoly::from_coeffs(vec![e, d, Fe::ZERO, Fe::ONE]), &k).unwrap();
        let g = compose(&phi, &f, &psi, &k);
        let tp = |i: u64| k.pow(t, i);
        let expected = RatMap::family(
            k.mul(tp(2), a),
            k.mul(tp(3), b),
            k.mul(tp(4), c),
            &UniPoly::from_coeffs(vec![k.mul(tp(3), e), k.mul(tp(2), d), Fe::ZERO, Fe::ONE]),
            &k,
        )
        .unwrap();
        assert_eq!(g, expected);
        // (d, e) = (1, 1) goes to (4, 3)
        assert_eq!(g.den(), &ints(&[3, 4, 0, 1], &k));
    }

    #[test]
    fn composition_is_pointwise_and_preserves_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let k = FieldCtx::of_order(q).unwrap();
            for _ in 0..8 {
                let f = random_map(&mut rng, &k);
                let phi = random_moebius(&mut rng, &k);
                let psi = random_moebius(&mut rng, &k);
                let g = compose(&phi, &f, &psi, &k);
                assert_eq!(g.degree(), f.degree());
                let points = k.elements().map(P1Point::Finite).chain([P1Point::Infinity]);
                for x in points {
                    let direct = phi.apply(f.eval_p1(psi.apply(x, &k), &k), &k);
                    assert_eq!(g.eval_p1(x, &k), direct);
                }
                assert_eq!(g.is_permutation(&k).unwrap(), f.is_permutation(&k).unwrap());
            }
        }
    }

    #[test]
    fn pgl2_has_expected_size() {
        for q in [2u64, 3, 4, 5] {
            let k = FieldCtx::of_order(q).unwrap();
            let all = Moebius::enumerate(&k);
            assert_eq!(all.len() as u64, q * q * q - q);
            let distinct: HashSet<_> = all.iter().map(|m| m.as_ratmap(&k)).collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn singular_moebius_is_rejected() {
        let k = FieldCtx::new(3, 1).unwrap();
        assert_eq!(
            Moebius::new(Fe::ONE, Fe::ONE, Fe::ONE, Fe::ONE, &k),
            Err(RatMapError::SingularMoebius)
        );
    }

    fn char3_trace_setup() -> (Arc<FieldCtx>, Extension, UniPoly, Fe) {
        let k = Arc::new(FieldCtx::new(3, 1).unwrap());
        let ext = Extension::new(Arc::clone(&k), 3).unwrap();
        let q = ints(&[1, -1, 0, 1], &k);
        let r = ext.embed_poly(&q).roots(ext.ext())[0];
        (k, ext, q, r)
    }

    #[test]
    fn trace_form_in_characteristic_three() {
        let (k, ext, q, r) = char3_trace_setup();
        let f = from_trace_form(Fe::ONE, r, &ext).unwrap();
        // Σ 1/(X - r_i) = Q'/Q = -1/Q
        let expected = RatMap::new(UniPoly::x().mul(&q, &k).sub(&UniPoly::one(), &k), q.clone(), &k).unwrap();
        assert_eq!(f, expected);
        assert!(f.is_permutation(&k).unwrap());
        assert_eq!(
            from_trace_form(Fe::ONE, ext.embed(Fe::ONE), &ext),
            Err(RatMapError::RNotDegreeThree)
        );
        assert_eq!(from_trace_form(Fe::ZERO, r, &ext), Err(RatMapError::ZeroResidue));
    }

    #[test]
    fn trace_form_with_rational_residue_is_log_derivative() {
        let k = Arc::new(FieldCtx::new(5, 1).unwrap());
        let ext = Extension::new(Arc::clone(&k), 3).unwrap();
        let q = ints(&[1, 1, 0, 1], &k);
        let r = ext.embed_poly(&q).roots(ext.ext())[0];
        for b in k.elements().skip(1) {
            let f = from_trace_form(ext.embed(b), r, &ext).unwrap();
            let num = UniPoly::x().mul(&q, &k).add(&q.derivative(&k).scale(b, &k), &k);
            assert_eq!(f, RatMap::new(num, q.clone(), &k).unwrap());
        }
    }

    #[test]
    fn trace_form_with_full_degree_residue_descends() {
        let k = Arc::new(FieldCtx::new(5, 1).unwrap());
        let ext = Extension::new(Arc::clone(&k), 3).unwrap();
        let q = ints(&[1, 1, 0, 1], &k);
        let r = ext.embed_poly(&q).roots(ext.ext())[0];
        let b = ext.ext().generator();
        assert!(!ext.is_base(b));
        let f = from_trace_form(b, r, &ext).unwrap();
        assert_eq!(f.den(), &q);
        assert_eq!(f.num().degree(), Some(4));
        assert!(q.is_irreducible(&k).unwrap());
    }

    #[test]
    fn equivalence_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for q in [3u64, 4, 5] {
            let k = FieldCtx::of_order(q).unwrap();
            let f = random_map(&mut rng, &k);
            assert!(equivalent_small_q(&f, &f, &k).unwrap());
            let phi = random_moebius(&mut rng, &k);
            let psi = random_moebius(&mut rng, &k);
            let g = compose(&phi, &f, &psi, &k);
            assert!(equivalent_small_q(&f, &g, &k).unwrap());
            assert!(equivalent_small_q(&g, &f, &k).unwrap());
        }
        let k = FieldCtx::new(17, 1).unwrap();
        let f = RatMap::identity();
        assert_eq!(
            equivalent_small_q(&f, &f, &k),
            Err(RatMapError::FieldTooLargeForEquivalence(17))
        );
        let k = FieldCtx::new(5, 1).unwrap();
        let x2 = RatMap::new(ints(&[0, 0, 1], &k), UniPoly::one(), &k).unwrap();
        assert_eq!(equivalent_small_q(&f, &x2, &k), Err(RatMapError::DegreeMismatch));
    }

    #[test]
    fn equivalence_matches_orbit_enumeration() {
        // oracle: the full two-sided orbit of g, compared as reduced maps
        let k = FieldCtx::new(3, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let all = Moebius::enumerate(&k);
        for i in 0..6 {
            let f = random_map(&mut rng, &k);
            let g = if i % 2 == 0 {
                random_map(&mut rng, &k)
            } else {
                let (phi, psi) = (random_moebius(&mut rng, &k), random_moebius(&mut rng, &k));
                compose(&phi, &f, &psi, &k)
            };
            let in_orbit = all
                .iter()
                .any(|phi| all.iter().any(|psi| compose(phi, &g, psi, &k) == f));
            assert_eq!(equivalent_small_q(&f, &g, &k).unwrap(), in_orbit);
        }
    }

    #[test]
    fn text_round_trip() {
        let k = FieldCtx::new(3, 2).unwrap();
        let f = RatMap::parse("1+u,0,2 | 2,1", &k).unwrap();
        assert_eq!(RatMap::parse(&f.format(&k), &k).unwrap(), f);
        assert!(matches!(RatMap::parse("1,2", &k), Err(RatMapError::Parse(_))));
    }

    #[test]
    fn plus_and_minus_reciprocal_cubic_are_inequivalent_at_three() {
        // X ± 1/(X^3 - X + 1)
        let k = FieldCtx::new(3, 1).unwrap();
        let plus = RatMap::parse("1,1,2,0,1 | 1,2,0,1", &k).unwrap();
        let minus = RatMap::parse("2,1,2,0,1 | 1,2,0,1", &k).unwrap();
        assert!(plus.is_permutation(&k).unwrap() && minus.is_permutation(&k).unwrap());
        assert!(!equivalent_small_q(&plus, &minus, &k).unwrap());
    }
}
