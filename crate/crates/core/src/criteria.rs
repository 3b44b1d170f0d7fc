//! Necessary conditions for the degree-four families: power sums, the
//! reciprocal power-sum identity, fixed integer polynomials in the family
//! parameters, and the linear-root relations.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::field::{parse_order, Extension, Fe, FieldCtx, FieldError};
use crate::poly::{build_numerator, BiPoly, PolyError, UniPoly};
use crate::ratmap::{RatMap, RatMapError};

/// Largest field for the quadratic-time Hermite test.
pub const HERMITE_LIMIT: u64 = 1 << 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("map has a pole in the base field")]
    PoleInBaseField,
    #[error("field of order {0} is too large for the Hermite test")]
    FieldTooLarge(u64),
    #[error("r lies in the base field")]
    RInBaseField,
    #[error("operation requires characteristic 3")]
    WrongCharacteristic,
    #[error("exponent {0} out of range")]
    ExponentOutOfRange(u64),
    #[error("unknown family `{0}`")]
    InvalidFamily(String),
    #[error("cannot parse parameter tuple: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    RatMap(#[from] RatMapError),
}

/// `General`: `X + (aX^2+bX+c)/(X^3+dX+e)`.
/// `Char3X2`: `X + (aX^2+bX+c)/(X^3+X^2+e)` over `F_{3^n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    General,
    Char3X2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::General => "general",
            Family::Char3X2 => "char3x2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CriteriaError;

    fn from_str(s: &str) -> Result<Family, CriteriaError> {
        match s {
            "general" => Ok(Family::General),
            "char3x2" => Ok(Family::Char3X2),
            _ => Err(CriteriaError::InvalidFamily(s.to_string())),
        }
    }
}

/// Parameters of one family member. For `Char3X2`, `d` is unused and kept 0.
/// The derived order (`family, a, b, c, d, e` by element index) is the
/// canonical order of reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamTuple {
    pub family: Family,
    pub a: Fe,
    pub b: Fe,
    pub c: Fe,
    pub d: Fe,
    pub e: Fe,
}

impl ParamTuple {
    pub fn general(a: Fe, b: Fe, c: Fe, d: Fe, e: Fe) -> ParamTuple {
        ParamTuple { family: Family::General, a, b, c, d, e }
    }

    pub fn char3x2(a: Fe, b: Fe, c: Fe, e: Fe) -> ParamTuple {
        ParamTuple { family: Family::Char3X2, a, b, c, d: Fe::ZERO, e }
    }

    /// `(a, b, c, d, e)`.
    pub fn values(&self) -> [Fe; 5] {
        [self.a, self.b, self.c, self.d, self.e]
    }

    pub fn cubic(&self) -> UniPoly {
        match self.family {
            Family::General => UniPoly::from_coeffs(vec![self.e, self.d, Fe::ZERO, Fe::ONE]),
            Family::Char3X2 => UniPoly::from_coeffs(vec![self.e, Fe::ZERO, Fe::ONE, Fe::ONE]),
        }
    }

    pub fn to_ratmap(&self, k: &FieldCtx) -> Result<RatMap, CriteriaError> {
        Ok(RatMap::family(self.a, self.b, self.c, &self.cubic(), k)?)
    }

    /// The difference-quotient numerator `F(X, Y)`.
    pub fn numerator(&self, k: &FieldCtx) -> Result<BiPoly, CriteriaError> {
        Ok(build_numerator(self.a, self.b, self.c, &self.cubic(), k)?)
    }

    /// `a,b,c,d,e@q` for the general family, `a,b,c,e@3^n` for `Char3X2`.
    pub fn format(&self, k: &FieldCtx) -> String {
        let s = |x: Fe| k.format_short(x);
        match self.family {
            Family::General => format!(
                "{},{},{},{},{}@{}",
                s(self.a),
                s(self.b),
                s(self.c),
                s(self.d),
                s(self.e),
                k.order()
            ),
            Family::Char3X2 => format!(
                "{},{},{},{}@3^{}",
                s(self.a),
                s(self.b),
                s(self.c),
                s(self.e),
                k.degree()
            ),
        }
    }

    /// Parses either text form; five entries select the general family and
    /// four the `Char3X2` family.
    pub fn parse(s: &str) -> Result<(FieldCtx, ParamTuple), CriteriaError> {
        let err = || CriteriaError::Parse(s.to_string());
        let (body, field) = s.trim().split_once('@').ok_or_else(err)?;
        let q = parse_order(field).ok_or_else(err)?;
        let k = FieldCtx::of_order(q)?;
        let vals = body
            .split(',')
            .map(|t| k.parse_short(t))
            .collect::<Result<Vec<_>, _>>()?;
        let t = match vals[..] {
            [a, b, c, d, e] => ParamTuple::general(a, b, c, d, e),
            [a, b, c, e] if k.characteristic() == 3 => ParamTuple::char3x2(a, b, c, e),
            [_, _, _, _] => return Err(CriteriaError::WrongCharacteristic),
            _ => return Err(err()),
        };
        Ok((k, t))
    }
}

/// `Σ_{x ∈ F_q} f(x)^s`.
pub fn power_sum(f: &RatMap, s: u64, k: &FieldCtx) -> Result<Fe, CriteriaError> {
    if s == 0 || s >= k.order() {
        return Err(CriteriaError::ExponentOutOfRange(s));
    }
    let vals = affine_values(f, k)?;
    Ok(vals.iter().fold(Fe::ZERO, |acc, &v| k.add(acc, k.pow(v, s))))
}

fn affine_values(f: &RatMap, k: &FieldCtx) -> Result<Vec<Fe>, CriteriaError> {
    k.elements()
        .map(|x| {
            let d = f.den().eval(x, k);
            if d.is_zero() {
                Err(CriteriaError::PoleInBaseField)
            } else {
                Ok(k.div(f.num().eval(x, k), d)?)
            }
        })
        .collect()
}

/// Hermite's criterion: `f` permutes `F_q` iff its power sums vanish for
/// `1 <= s <= q-2` and equal `-1` at `s = q-1`.
pub fn hermite_test(f: &RatMap, k: &FieldCtx) -> Result<bool, CriteriaError> {
    let q = k.order();
    if q > HERMITE_LIMIT {
        return Err(CriteriaError::FieldTooLarge(q));
    }
    let vals = affine_values(f, k)?;
    let mut powers = vals.clone();
    for s in 1..q {
        let sum = powers.iter().fold(Fe::ZERO, |acc, &v| k.add(acc, v));
        let expected = if s == q - 1 { k.neg(Fe::ONE) } else { Fe::ZERO };
        if sum != expected {
            return Ok(false);
        }
        for (p, &v) in powers.iter_mut().zip(&vals) {
            *p = k.mul(*p, v);
        }
    }
    Ok(true)
}

/// Checks `Σ_{x ∈ F_q} (x - r)^{-k} = (r^q - r)^{-k}` for `r` outside the
/// base field, evaluated in the extension.
pub fn carlitz_rps_check(r: Fe, exp: u64, ext: &Extension) -> Result<bool, CriteriaError> {
    if ext.is_base(r) {
        return Err(CriteriaError::RInBaseField);
    }
    let q = ext.base().order();
    if exp == 0 || exp > q {
        return Err(CriteriaError::ExponentOutOfRange(exp));
    }
    let big = ext.ext();
    let mut lhs = Fe::ZERO;
    for x in ext.base().elements() {
        let t = big.inv(big.sub(ext.embed(x), r))?;
        lhs = big.add(lhs, big.pow(t, exp));
    }
    let rhs = big.pow(big.inv(big.sub(ext.frobenius(r, 1), r))?, exp);
    Ok(lhs == rhs)
}

/// Exponent vector of `a^i b^j c^k d^l e^m`.
pub type Exponents = [u8; 5];

/// Polynomial in `(a, b, c, d, e)` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    terms: Vec<(i64, Exponents)>,
}

impl IntPoly {
    pub fn new(terms: Vec<(i64, Exponents)>) -> IntPoly {
        IntPoly { terms }
    }

    /// Reads lines `coeff ea eb ec ed ee`; blank lines and `#` comments are
    /// skipped.
    pub fn parse_table(text: &str) -> Result<IntPoly, CriteriaError> {
        let mut terms = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = || CriteriaError::Parse(line.to_string());
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(err());
            }
            let coeff: i64 = fields[0].parse().map_err(|_| err())?;
            let mut exps = [0u8; 5];
            for (slot, f) in exps.iter_mut().zip(&fields[1..]) {
                *slot = f.parse().map_err(|_| err())?;
            }
            terms.push((coeff, exps));
        }
        Ok(IntPoly { terms })
    }

    pub fn terms(&self) -> &[(i64, Exponents)] {
        &self.terms
    }

    pub fn max_exponents(&self) -> Exponents {
        let mut m = [0u8; 5];
        for (_, e) in &self.terms {
            for i in 0..5 {
                m[i] = m[i].max(e[i]);
            }
        }
        m
    }

    /// Reduces the coefficients into `k`.
    pub fn bind(&self, k: &FieldCtx) -> BoundPoly {
        BoundPoly {
            terms: self
                .terms
                .iter()
                .map(|&(c, e)| (k.from_int(c), e))
                .filter(|(c, _)| !c.is_zero())
                .collect(),
            max: self.max_exponents(),
        }
    }

    pub fn eval(&self, vals: [Fe; 5], k: &FieldCtx) -> Fe {
        self.bind(k).eval(vals, k)
    }
}

const MAX_EXP: usize = 16;

/// An [`IntPoly`] with coefficients reduced into a field.
#[derive(Clone, Debug)]
pub struct BoundPoly {
    terms: Vec<(Fe, Exponents)>,
    max: Exponents,
}

impl BoundPoly {
    pub fn terms(&self) -> &[(Fe, Exponents)] {
        &self.terms
    }

    /// Allocation-free evaluation.
    pub fn eval(&self, vals: [Fe; 5], k: &FieldCtx) -> Fe {
        let mut pows = [[Fe::ONE; MAX_EXP]; 5];
        for v in 0..5 {
            for i in 1..=self.max[v] as usize {
                pows[v][i] = k.mul(pows[v][i - 1], vals[v]);
            }
        }
        self.terms.iter().fold(Fe::ZERO, |acc, (c, e)| {
            let mut t = *c;
            for v in 0..5 {
                t = k.mul(t, pows[v][e[v] as usize]);
            }
            k.add(acc, t)
        })
    }
}

fn term_list(raw: &[(i64, u8, u8, u8, u8, u8)]) -> IntPoly {
    IntPoly::new(raw.iter().map(|&(c, a, b, cc, d, e)| (c, [a, b, cc, d, e])).collect())
}

/// The degree-one power-sum condition for the general family (9 terms).
pub fn eq51() -> &'static IntPoly {
    static P: OnceLock<IntPoly> = OnceLock::new();
    P.get_or_init(|| {
        term_list(&[
            (9, 0, 0, 2, 3, 0),
            (9, 0, 2, 0, 4, 0),
            (6, 1, 0, 1, 4, 0),
            (1, 2, 0, 0, 5, 0),
            (81, 0, 1, 1, 2, 1),
            (-27, 1, 1, 0, 3, 1),
            (243, 0, 0, 2, 0, 2),
            (-81, 1, 0, 1, 1, 2),
            (27, 2, 0, 0, 2, 2),
        ])
    })
}

const EQ52_TABLE: &str = include_str!("../data/eq52_terms.txt");

/// The degree-two power-sum condition for the general family, loaded from
/// the shipped term table.
pub fn eq52() -> &'static IntPoly {
    static P: OnceLock<IntPoly> = OnceLock::new();
    P.get_or_init(|| IntPoly::parse_table(EQ52_TABLE).expect("shipped table parses"))
}

/// The raw shipped term table.
pub fn eq52_table_text() -> &'static str {
    EQ52_TABLE
}

/// The degree-two condition for the characteristic-3 family, in `(a, b, c)`.
pub fn eq55() -> &'static IntPoly {
    static P: OnceLock<IntPoly> = OnceLock::new();
    P.get_or_init(|| {
        term_list(&[
            (1, 1, 6, 0, 0, 0),
            (1, 0, 7, 0, 0, 0),
            (1, 1, 4, 1, 0, 0),
            (2, 0, 5, 1, 0, 0),
            (2, 1, 5, 1, 0, 0),
            (1, 0, 6, 1, 0, 0),
            (2, 2, 2, 2, 0, 0),
            (1, 3, 2, 2, 0, 0),
            (2, 1, 3, 2, 0, 0),
            (1, 2, 3, 2, 0, 0),
            (1, 2, 0, 3, 0, 0),
            (1, 3, 0, 3, 0, 0),
            (1, 4, 0, 3, 0, 0),
            (2, 0, 2, 3, 0, 0),
        ])
    })
}

pub fn eval_eq51(t: &ParamTuple, k: &FieldCtx) -> Fe {
    eq51().eval(t.values(), k)
}

pub fn eval_eq52(t: &ParamTuple, k: &FieldCtx) -> Fe {
    eq52().eval(t.values(), k)
}

/// `(c^2 + b^2 e, eq55(a, b, c))` for the characteristic-3 family.
pub fn eval_lemma52(a: Fe, b: Fe, c: Fe, e: Fe, k: &FieldCtx) -> Result<(Fe, Fe), CriteriaError> {
    if k.characteristic() != 3 {
        return Err(CriteriaError::WrongCharacteristic);
    }
    let first = k.add(k.square(c), k.mul(k.square(b), e));
    let second = eq55().eval([a, b, c, Fe::ZERO, Fe::ZERO], k);
    Ok((first, second))
}

/// Relations forced by a linear root `Y = uX + v` of the reduced form.
///
/// General family: `(A0', A1', A2', bd - 3ae, 3c + ad)`.
/// `Char3X2`: `(b, c, A0)` where `A0` reduces to `a^2 e^2 (a - 1)` once
/// `b = c = 0`.
pub fn case1_relations(t: &ParamTuple, k: &FieldCtx) -> Vec<Fe> {
    let ints = |terms: &[(i64, u8, u8, u8, u8, u8)]| term_list(terms).eval(t.values(), k);
    match t.family {
        Family::General => vec![
            ints(&[
                (1, 0, 0, 2, 0, 0),
                (-1, 1, 0, 1, 1, 0),
                (-1, 0, 0, 1, 2, 0),
                (1, 1, 0, 0, 3, 0),
                (1, 1, 1, 0, 0, 1),
                (9, 1, 0, 0, 0, 2),
            ]),
            ints(&[
                (2, 0, 1, 1, 0, 0),
                (-2, 0, 1, 0, 2, 0),
                (2, 2, 0, 0, 0, 1),
                (6, 1, 0, 0, 1, 1),
            ]),
            ints(&[
                (1, 0, 2, 0, 0, 0),
                (-1, 1, 0, 1, 0, 0),
                (1, 2, 0, 0, 1, 0),
                (-3, 0, 0, 1, 1, 0),
                (3, 1, 0, 0, 2, 0),
                (9, 0, 1, 0, 0, 1),
            ]),
            ints(&[(1, 0, 1, 0, 1, 0), (-3, 1, 0, 0, 0, 1)]),
            ints(&[(3, 0, 0, 1, 0, 0), (1, 1, 0, 0, 1, 0)]),
        ],
        Family::Char3X2 => vec![
            t.b,
            t.c,
            ints(&[
                (1, 0, 0, 3, 0, 0),
                (-1, 0, 3, 0, 0, 1),
                (-1, 1, 2, 0, 0, 1),
                (1, 2, 0, 1, 0, 1),
                (-1, 2, 1, 0, 0, 1),
                (-1, 0, 1, 1, 0, 1),
                (-1, 0, 2, 0, 0, 1),
                (-1, 1, 0, 1, 0, 1),
                (1, 1, 1, 0, 0, 1),
                (1, 3, 0, 0, 0, 2),
                (-1, 2, 0, 0, 0, 2),
            ]),
        ],
    }
}
