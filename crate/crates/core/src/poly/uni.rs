use std::fmt;

use super::PolyError;
use crate::field::{Fe, FieldCtx};

/// Dense univariate polynomial, low degree first, with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly {
    coeffs: Vec<Fe>,
}

impl UniPoly {
    pub fn from_coeffs(mut coeffs: Vec<Fe>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Integer coefficients mapped into the prime subfield.
    pub fn from_ints(ints: &[i64], k: &FieldCtx) -> UniPoly {
        UniPoly::from_coeffs(ints.iter().map(|&v| k.from_int(v)).collect())
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(Fe::ONE)
    }

    pub fn x() -> UniPoly {
        UniPoly::from_coeffs(vec![Fe::ZERO, Fe::ONE])
    }

    pub fn constant(c: Fe) -> UniPoly {
        UniPoly::from_coeffs(vec![c])
    }

    /// `c · X^i`.
    pub fn monomial(c: Fe, i: usize) -> UniPoly {
        let mut v = vec![Fe::ZERO; i + 1];
        v[i] = c;
        UniPoly::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Fe::ONE
    }

    pub fn add(&self, other: &UniPoly, k: &FieldCtx) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::from_coeffs(
            (0..len)
                .map(|i| k.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly, k: &FieldCtx) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::from_coeffs(
            (0..len)
                .map(|i| k.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, k: &FieldCtx) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|&c| k.neg(c)).collect())
    }

    pub fn scale(&self, c: Fe, k: &FieldCtx) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|&x| k.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &UniPoly, k: &FieldCtx) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, e: u32, k: &FieldCtx) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self, k);
        }
        acc
    }

    pub fn divmod(&self, divisor: &UniPoly, k: &FieldCtx) -> Result<(UniPoly, UniPoly), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivideByZeroPoly)?;
        let lead_inv = k.inv(divisor.lead()).expect("non-zero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = k.mul(rem[i + dd], lead_inv);
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = k.sub(rem[i + j], k.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &UniPoly, k: &FieldCtx) -> Result<UniPoly, PolyError> {
        Ok(self.divmod(divisor, k)?.1)
    }

    pub fn monic(&self, k: &FieldCtx) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = k.inv(self.lead()).expect("non-zero leading coefficient");
        self.scale(inv, k)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly, k: &FieldCtx) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, k).expect("b is non-zero");
            a = b;
            b = r;
        }
        a.monic(k)
    }

    pub fn eval(&self, x: Fe, k: &FieldCtx) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
    }

    pub fn derivative(&self, k: &FieldCtx) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| k.mul_int(c, i as i64))
                .collect(),
        )
    }

    /// `self(inner(X))`.
    pub fn compose(&self, inner: &UniPoly, k: &FieldCtx) -> UniPoly {
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, &c| {
            acc.mul(inner, k).add(&UniPoly::constant(c), k)
        })
    }

    /// `base^e mod modulus`.
    pub fn powmod(&self, e: u64, modulus: &UniPoly, k: &FieldCtx) -> Result<UniPoly, PolyError> {
        let mut base = self.rem(modulus, k)?;
        let mut acc = UniPoly::one().rem(modulus, k)?;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, k).rem(modulus, k)?;
            }
            base = base.mul(&base, k).rem(modulus, k)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Irreducibility over `k`. Degrees 2 and 3 use a root scan when the
    /// field is small enough; otherwise `gcd(X^{q^i} - X, f) = 1` for all
    /// `i <= deg/2`.
    pub fn is_irreducible(&self, k: &FieldCtx) -> Result<bool, PolyError> {
        let deg = match self.degree() {
            None | Some(0) => return Err(PolyError::ZeroOrConstant),
            Some(d) => d,
        };
        if deg == 1 {
            return Ok(true);
        }
        if deg <= 3 && k.order() <= 1 << 20 {
            return Ok(k.elements().all(|x| !self.eval(x, k).is_zero()));
        }
        let f = self.monic(k);
        let x = UniPoly::x();
        let mut xp = x.clone();
        for _ in 0..deg / 2 {
            xp = xp.powmod(k.order(), &f, k)?;
            if f.gcd(&xp.sub(&x, k), k).degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Distinct roots in `k`, ascending by index. Uses `gcd(f, X^q - X)`
    /// followed by equal-degree splitting over a deterministic sequence of
    /// shifts.
    pub fn roots(&self, k: &FieldCtx) -> Vec<Fe> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let f = self.monic(k);
        let mut roots = Vec::new();
        if f.coeff(0).is_zero() {
            roots.push(Fe::ZERO);
        }
        // strip the factor X so splitting only sees non-zero roots
        let mut g = f;
        while g.coeff(0).is_zero() && !g.is_zero() {
            g = UniPoly::from_coeffs(g.coeffs[1..].to_vec());
        }
        if g.degree().unwrap_or(0) > 0 {
            let xq = UniPoly::x()
                .powmod(k.order(), &g, k)
                .expect("g is non-zero");
            let split = g.gcd(&xq.sub(&UniPoly::x(), k), k);
            split_linear(&split, k, &mut roots);
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// Text form: comma-separated coefficients, low degree first, each in
    /// the short element form.
    pub fn format(&self, k: &FieldCtx) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|&c| k.format_short(c))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(s: &str, k: &FieldCtx) -> Result<UniPoly, PolyError> {
        let coeffs = s
            .split(',')
            .map(|t| k.parse_short(t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::from_coeffs(coeffs))
    }

    pub fn display<'a>(&'a self, k: &'a FieldCtx) -> impl fmt::Display + 'a {
        DisplayPoly { f: self, k }
    }
}

struct DisplayPoly<'a> {
    f: &'a UniPoly,
    k: &'a FieldCtx,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in self.f.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let cs = self.k.format_short(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            match (i, cs.as_str()) {
                (0, _) => write!(out, "{cs}")?,
                (1, "1") => write!(out, "X")?,
                (1, _) => write!(out, "{cs}*X")?,
                (_, "1") => write!(out, "X^{i}")?,
                _ => write!(out, "{cs}*X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Splits a squarefree product of distinct linear factors.
fn split_linear(g: &UniPoly, k: &FieldCtx, out: &mut Vec<Fe>) {
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            let g = g.monic(k);
            out.push(k.neg(g.coeff(0)));
            return;
        }
        _ => {}
    }
    let q = k.order();
    let p = k.characteristic();
    for delta in k.elements().skip(if p == 2 { 1 } else { 0 }) {
        let h = if p == 2 {
            // absolute trace of delta*X, which is 0 or 1 at every root
            let m = q.trailing_zeros();
            let base = UniPoly::monomial(delta, 1).rem(g, k).expect("g non-zero");
            let mut term = base.clone();
            let mut acc = base;
            for _ in 1..m {
                term = term.mul(&term, k).rem(g, k).expect("g non-zero");
                acc = acc.add(&term, k);
            }
            acc
        } else {
            let shifted = UniPoly::from_coeffs(vec![delta, Fe::ONE]);
            shifted
                .powmod((q - 1) / 2, g, k)
                .expect("g non-zero")
                .sub(&UniPoly::one(), k)
        };
        let d = g.gcd(&h, k);
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && Some(dd) < g.degree() {
            let (other, _) = g.divmod(&d, k).expect("d non-zero");
            split_linear(&d, k, out);
            split_linear(&other, k, out);
            return;
        }
    }
    unreachable!("distinct roots are separated by some shift")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> FieldCtx {
        FieldCtx::new(5, 1).unwrap()
    }

    #[test]
    fn gcd_is_monic() {
        let k = f5();
        let a = UniPoly::from_ints(&[-1, 0, 1], &k);
        let b = UniPoly::from_ints(&[-1, 1], &k);
        assert_eq!(a.gcd(&b, &k), b);
        let b2 = b.scale(Fe::from_index(3), &k);
        assert_eq!(a.gcd(&b2, &k), b);
    }

    #[test]
    fn eval_and_derivative() {
        let k = f5();
        let f = UniPoly::from_ints(&[1, 1, 0, 1], &k);
        assert_eq!(f.eval(Fe::from_index(2), &k), Fe::from_index(1));
        let k3 = FieldCtx::new(3, 1).unwrap();
        let g = UniPoly::from_ints(&[2, 1, 0, 1], &k3);
        assert_eq!(g.derivative(&k3), UniPoly::constant(Fe::from_index(1)));
    }

    #[test]
    fn irreducibility_examples() {
        let k = f5();
        let f = UniPoly::from_ints(&[1, 1, 0, 1], &k);
        let values: Vec<u64> = k.elements().map(|x| f.eval(x, &k).index()).collect();
        assert_eq!(values, vec![1, 3, 1, 1, 4]);
        assert!(f.is_irreducible(&k).unwrap());

        let k3 = FieldCtx::new(3, 1).unwrap();
        for e in 0..3 {
            let g = UniPoly::from_ints(&[e, 0, 0, 1], &k3);
            assert!(!g.is_irreducible(&k3).unwrap());
        }
        let k2 = FieldCtx::new(2, 1).unwrap();
        assert!(UniPoly::from_ints(&[1, 1, 1], &k2).is_irreducible(&k2).unwrap());
        assert_eq!(
            UniPoly::constant(Fe::ONE).is_irreducible(&k2),
            Err(PolyError::ZeroOrConstant)
        );
    }

    #[test]
    fn divide_by_zero_poly() {
        let k = f5();
        assert_eq!(
            UniPoly::x().divmod(&UniPoly::zero(), &k),
            Err(PolyError::DivideByZeroPoly)
        );
    }

    fn monic_polys(k: &FieldCtx, deg: usize) -> Vec<UniPoly> {
        let q = k.order();
        let count = q.pow(deg as u32);
        (0..count)
            .map(|mut idx| {
                let mut c = Vec::with_capacity(deg + 1);
                for _ in 0..deg {
                    c.push(Fe::from_index(idx % q));
                    idx /= q;
                }
                c.push(Fe::ONE);
                UniPoly::from_coeffs(c)
            })
            .collect()
    }

    #[test]
    fn irreducible_matches_trial_division() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let k = FieldCtx::of_order(q).unwrap();
            let max_deg = if q <= 3 { 5 } else { 4 };
            for deg in 2..=max_deg {
                if q.pow(deg as u32) > 20_000 {
                    continue;
                }
                let divisors: Vec<UniPoly> =
                    (1..=deg / 2).flat_map(|d| monic_polys(&k, d)).collect();
                for f in monic_polys(&k, deg) {
                    let brute = divisors
                        .iter()
                        .all(|g| !f.rem(g, &k).unwrap().is_zero());
                    assert_eq!(f.is_irreducible(&k).unwrap(), brute, "q={q} f={f:?}");
                }
            }
        }
    }

    #[test]
    fn roots_match_scan() {
        for q in [2u64, 3, 4, 7, 8, 9, 16, 27] {
            let k = FieldCtx::of_order(q).unwrap();
            for f in monic_polys(&k, 3).into_iter().step_by(7) {
                let scan: Vec<Fe> = k.elements().filter(|&x| f.eval(x, &k).is_zero()).collect();
                assert_eq!(f.roots(&k), scan, "q={q} f={f:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn divmod_round_trip(
            a in proptest::collection::vec(0u64..7, 0..9),
            b in proptest::collection::vec(0u64..7, 1..6),
        ) {
            let k = FieldCtx::new(7, 1).unwrap();
            let f = UniPoly::from_coeffs(a.into_iter().map(Fe::from_index).collect());
            let g = UniPoly::from_coeffs(b.into_iter().map(Fe::from_index).collect());
            prop_assume!(!g.is_zero());
            let (quo, rem) = f.divmod(&g, &k).unwrap();
            prop_assert_eq!(quo.mul(&g, &k).add(&rem, &k), f);
            prop_assert!(rem.degree() < g.degree());
        }
    }
}
