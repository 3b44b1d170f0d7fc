//! Finite fields `F_{p^n}` in a polynomial basis.
//!
//! Elements are packed as base-`p` integers: coefficient `i` of the basis
//! power `t^i` is digit `i`. Index order is therefore the coefficient
//! lexicographic order with the low coefficient varying fastest, and the
//! zero element has index 0.

mod tower;

pub use tower::Extension;

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::poly::UniPoly;

/// Default cap on `p^n` for [`FieldCtx::new`].
pub const DEFAULT_ORDER_BOUND: u64 = 1 << 20;
/// Largest extension degree accepted for a base field.
pub const MAX_BASE_DEGREE: u32 = 12;
/// Largest degree accepted for internally realized extension fields.
pub const MAX_TOWER_DEGREE: u32 = 40;
/// Fields up to this order get exp/log tables.
const TABLE_LIMIT: u64 = 1 << 20;
const MAX_DIGITS: usize = MAX_TOWER_DEGREE as usize;
/// Odd-characteristic extension fields up to this order get addition and
/// negation tables.
const ADD_TABLE_LIMIT: u64 = 1 << 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} out of range")]
    DegreeOutOfRange(u32),
    #[error("field order {p}^{n} exceeds the bound {bound}")]
    FieldTooLarge { p: u64, n: u32, bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element or subfield does not belong to this field")]
    FieldMismatch,
    #[error("cannot parse element: {0}")]
    Parse(String),
}

/// A field element, packed as a base-`p` integer (see module docs).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(u64);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Wraps a raw index without range checking. Use [`FieldCtx::elem`]
    /// for a checked conversion.
    #[inline]
    pub const fn from_index(i: u64) -> Fe {
        Fe(i)
    }

    #[inline]
    pub const fn index(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A point of the projective line `F_q ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P1Point {
    Finite(Fe),
    Infinity,
}

impl P1Point {
    /// Slot in `0..=q`: finite points by enumeration index, `∞` at `q`.
    #[inline]
    pub fn slot(self, q: u64) -> usize {
        match self {
            P1Point::Finite(x) => x.0 as usize,
            P1Point::Infinity => q as usize,
        }
    }

    pub fn from_slot(slot: usize, q: u64) -> P1Point {
        if slot as u64 == q {
            P1Point::Infinity
        } else {
            P1Point::Finite(Fe(slot as u64))
        }
    }
}

/// Binary and unary operations accepted by [`FieldCtx::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
    Pow,
}

/// Right-hand operand of [`FieldCtx::arith`].
#[derive(Clone, Debug)]
pub enum Operand {
    Elem(Fe),
    Int(BigUint),
    None,
}

struct Tables {
    // exp has length 2(q-1) so that log a + log b never needs a reduction
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A realized finite field `F_p[t]/(m(t))`. Immutable after construction.
pub struct FieldCtx {
    p: u64,
    n: u32,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
    // row-major q x q sums, and negatives
    add_table: Option<(Vec<u16>, Vec<u16>)>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `m`, ascending.
pub(crate) fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Splits `q` into `(p, n)` with `q = p^n`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut n = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        n += 1;
    }
    Some((p, n))
}

fn checked_order(p: u64, n: u32) -> Option<u64> {
    let mut q: u64 = 1;
    for _ in 0..n {
        q = q.checked_mul(p)?;
    }
    (q < (1u64 << 62)).then_some(q)
}

impl FieldCtx {
    /// `F_{p^n}` with the default order bound.
    pub fn new(p: u64, n: u32) -> Result<FieldCtx, FieldError> {
        FieldCtx::with_bound(p, n, DEFAULT_ORDER_BOUND)
    }

    /// `F_{p^n}` with a caller-chosen bound on `p^n`.
    ///
    /// The modulus is the smallest monic irreducible polynomial of degree
    /// `n` when the coefficient tuples `(c_0, …, c_{n-1})` are compared
    /// lexicographically.
    pub fn with_bound(p: u64, n: u32, bound: u64) -> Result<FieldCtx, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 || n > MAX_BASE_DEGREE {
            return Err(FieldError::DegreeOutOfRange(n));
        }
        match checked_order(p, n) {
            Some(q) if q <= bound => {}
            _ => return Err(FieldError::FieldTooLarge { p, n, bound }),
        }
        FieldCtx::realize(p, n)
    }

    /// Parses `q` as a prime power and builds the field.
    pub fn of_order(q: u64) -> Result<FieldCtx, FieldError> {
        let (p, n) = prime_power(q).ok_or(FieldError::NotPrime(q))?;
        FieldCtx::new(p, n)
    }

    /// Tower fields (e.g. `F_{q^3}`) skip the base-field caps but must fit
    /// the packed representation.
    pub(crate) fn realize(p: u64, n: u32) -> Result<FieldCtx, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 || n > MAX_TOWER_DEGREE {
            return Err(FieldError::DegreeOutOfRange(n));
        }
        let q = checked_order(p, n).ok_or(FieldError::FieldTooLarge {
            p,
            n,
            bound: 1 << 62,
        })?;
        let modulus = if n == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, n)
        };
        let mut ctx = FieldCtx {
            p,
            n,
            q,
            modulus,
            tables: None,
            add_table: None,
        };
        if q <= TABLE_LIMIT && q > 2 {
            ctx.tables = Some(ctx.build_tables());
        }
        if n > 1 && p != 2 && q <= ADD_TABLE_LIMIT {
            let sums = (0..q)
                .flat_map(|x| (0..q).map(move |y| (x, y)))
                .map(|(x, y)| ctx.add_digits(Fe(x), Fe(y)).0 as u16)
                .collect();
            let negs = (0..q).map(|x| ctx.neg_digits(Fe(x)).0 as u16).collect();
            ctx.add_table = Some((sums, negs));
        }
        Ok(ctx)
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.q
    }

    /// Monic modulus, low degree first (length `n + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    #[inline]
    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    #[inline]
    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// The basis generator `t` (for `n = 1` this is the root of `X`, i.e. 0).
    pub fn generator(&self) -> Fe {
        if self.n == 1 {
            Fe(0)
        } else {
            Fe(self.p)
        }
    }

    pub fn elem(&self, index: u64) -> Result<Fe, FieldError> {
        if index < self.q {
            Ok(Fe(index))
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    #[inline]
    pub fn contains(&self, x: Fe) -> bool {
        x.0 < self.q
    }

    /// Image of an integer in the prime subfield.
    #[inline]
    pub fn from_int(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u64)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fe, FieldError> {
        if coeffs.len() != self.n as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(FieldError::FieldMismatch);
        }
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = acc * self.p + c;
        }
        Ok(Fe(acc))
    }

    /// Coefficient list of `x` (length `n`, low basis power first).
    pub fn coeffs(&self, x: Fe) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n as usize);
        let mut v = x.0;
        for _ in 0..self.n {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    /// All elements in index order, starting with 0.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q).map(Fe)
    }

    #[inline]
    pub fn add(&self, x: Fe, y: Fe) -> Fe {
        if self.n == 1 {
            let s = x.0 + y.0;
            return Fe(if s >= self.p { s - self.p } else { s });
        }
        if self.p == 2 {
            return Fe(x.0 ^ y.0);
        }
        if let Some((sums, _)) = &self.add_table {
            return Fe(sums[(x.0 * self.q + y.0) as usize] as u64);
        }
        self.add_digits(x, y)
    }

    fn add_digits(&self, x: Fe, y: Fe) -> Fe {
        let p = self.p;
        let (mut a, mut b) = (x.0, y.0);
        let (mut r, mut place) = (0u64, 1u64);
        while a | b != 0 {
            let mut s = a % p + b % p;
            if s >= p {
                s -= p;
            }
            r += s * place;
            place *= p;
            a /= p;
            b /= p;
        }
        Fe(r)
    }

    #[inline]
    pub fn neg(&self, x: Fe) -> Fe {
        if self.n == 1 {
            return Fe(if x.0 == 0 { 0 } else { self.p - x.0 });
        }
        if self.p == 2 {
            return x;
        }
        if let Some((_, negs)) = &self.add_table {
            return Fe(negs[x.0 as usize] as u64);
        }
        self.neg_digits(x)
    }

    fn neg_digits(&self, x: Fe) -> Fe {
        let p = self.p;
        let mut a = x.0;
        let (mut r, mut place) = (0u64, 1u64);
        while a != 0 {
            let d = a % p;
            if d != 0 {
                r += (p - d) * place;
            }
            place *= p;
            a /= p;
        }
        Fe(r)
    }

    #[inline]
    pub fn sub(&self, x: Fe, y: Fe) -> Fe {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Fe, y: Fe) -> Fe {
        if self.n == 1 {
            return self.mul_prime(x, y);
        }
        if let Some(t) = &self.tables {
            if x.0 == 0 || y.0 == 0 {
                return Fe(0);
            }
            return Fe(t.exp[(t.log[x.0 as usize] + t.log[y.0 as usize]) as usize] as u64);
        }
        self.mul_slow(x, y)
    }

    /// Multiplication by an integer from the prime subfield.
    #[inline]
    pub fn mul_int(&self, x: Fe, k: i64) -> Fe {
        self.mul(x, self.from_int(k))
    }

    #[inline]
    pub fn square(&self, x: Fe) -> Fe {
        self.mul(x, x)
    }

    pub fn inv(&self, x: Fe) -> Result<Fe, FieldError> {
        if x.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(t) = &self.tables {
            let l = t.log[x.0 as usize] as u64;
            return Ok(Fe(t.exp[((self.q - 1 - l) % (self.q - 1)) as usize] as u64));
        }
        Ok(self.pow(x, self.q - 2))
    }

    pub fn div(&self, x: Fe, y: Fe) -> Result<Fe, FieldError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^e` by square-and-multiply (exponent reduced mod `q - 1` when a
    /// log table is available).
    pub fn pow(&self, x: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe(1);
        }
        if x.0 == 0 {
            return Fe(0);
        }
        if let Some(t) = &self.tables {
            let l = t.log[x.0 as usize] as u128;
            let k = (l * (e % (self.q - 1)) as u128) % (self.q - 1) as u128;
            return Fe(t.exp[k as usize] as u64);
        }
        let mut base = x;
        let mut acc = Fe(1);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x^e` for an arbitrary-precision exponent.
    pub fn pow_big(&self, x: Fe, e: &BigUint) -> Fe {
        if e.bits() == 0 {
            return Fe(1);
        }
        if x.0 == 0 {
            return Fe(0);
        }
        let r = (e % BigUint::from(self.q - 1)).to_u64().unwrap_or(0);
        if r == 0 {
            Fe(1)
        } else {
            self.pow(x, r)
        }
    }

    /// Checked dispatcher over the basic operations; validates operands.
    pub fn arith(&self, op: ArithOp, x: Fe, y: Operand) -> Result<Fe, FieldError> {
        if !self.contains(x) {
            return Err(FieldError::FieldMismatch);
        }
        let elem = |y: &Operand| match y {
            Operand::Elem(v) if self.contains(*v) => Ok(*v),
            _ => Err(FieldError::FieldMismatch),
        };
        match op {
            ArithOp::Add => Ok(self.add(x, elem(&y)?)),
            ArithOp::Sub => Ok(self.sub(x, elem(&y)?)),
            ArithOp::Mul => Ok(self.mul(x, elem(&y)?)),
            ArithOp::Neg => Ok(self.neg(x)),
            ArithOp::Inv => self.inv(x),
            ArithOp::Pow => match y {
                Operand::Int(e) => Ok(self.pow_big(x, &e)),
                _ => Err(FieldError::FieldMismatch),
            },
        }
    }

    /// Order `q0 = p^j` of a subfield, returning `j`.
    fn subfield_degree(&self, q0: u64) -> Result<u32, FieldError> {
        let mut j = 0;
        let mut r = 1u64;
        while r < q0 {
            r = r.saturating_mul(self.p);
            j += 1;
        }
        if r != q0 || j == 0 || self.n % j != 0 {
            return Err(FieldError::FieldMismatch);
        }
        Ok(j)
    }

    /// `x^(q0^k)` where `q0` is the order of a subfield.
    pub fn frobenius(&self, x: Fe, q0: u64, k: u32) -> Result<Fe, FieldError> {
        let j = self.subfield_degree(q0)?;
        let steps = k % (self.n / j);
        let mut y = x;
        for _ in 0..steps {
            y = self.pow(y, q0);
        }
        Ok(y)
    }

    /// `Tr_{F_self / F_q0}(x) = x + x^q0 + … + x^(q0^(m-1))`.
    pub fn trace_to_subfield(&self, x: Fe, q0: u64) -> Result<Fe, FieldError> {
        let j = self.subfield_degree(q0)?;
        let m = self.n / j;
        let mut acc = Fe(0);
        let mut y = x;
        for _ in 0..m {
            acc = self.add(acc, y);
            y = self.pow(y, q0);
        }
        Ok(acc)
    }

    /// Whether `x` lies in the subfield of order `q0`.
    pub fn in_subfield(&self, x: Fe, q0: u64) -> Result<bool, FieldError> {
        self.subfield_degree(q0)?;
        Ok(self.pow(x, q0) == x)
    }

    /// Smallest element (index order) that is not a square; `None` in
    /// characteristic 2.
    pub fn first_nonsquare(&self) -> Option<Fe> {
        if self.p == 2 {
            return None;
        }
        let half = (self.q - 1) / 2;
        self.elements()
            .skip(1)
            .find(|&x| self.pow(x, half) != Fe(1))
    }

    fn mul_slow(&self, x: Fe, y: Fe) -> Fe {
        let p = self.p;
        let n = self.n as usize;
        let a = self.unpack(x);
        let b = self.unpack(y);
        let mut t = [0u64; 2 * MAX_DIGITS];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                t[i + j] = (t[i + j] + a[i] * b[j]) % p;
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = t[k];
            if c == 0 {
                continue;
            }
            t[k] = 0;
            let neg_c = p - c;
            for i in 0..n {
                t[k - n + i] = (t[k - n + i] + neg_c * self.modulus[i]) % p;
            }
        }
        let mut acc = 0u64;
        for i in (0..n).rev() {
            acc = acc * p + t[i];
        }
        Fe(acc)
    }

    fn unpack(&self, x: Fe) -> [u64; MAX_DIGITS] {
        let mut d = [0u64; MAX_DIGITS];
        let mut v = x.0;
        for slot in d.iter_mut().take(self.n as usize) {
            *slot = v % self.p;
            v /= self.p;
        }
        d
    }

    fn build_tables(&self) -> Tables {
        let order = self.q - 1;
        let factors = prime_factors(order);
        let slow_pow = |x: Fe, mut e: u64| {
            let mut base = x;
            let mut acc = Fe(1);
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.mul_slow_any(acc, base);
                }
                base = self.mul_slow_any(base, base);
                e >>= 1;
            }
            acc
        };
        let g = (1..self.q)
            .map(Fe)
            .find(|&g| factors.iter().all(|&l| slow_pow(g, order / l) != Fe(1)))
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut cur = Fe(1);
        for i in 0..order as usize {
            exp[i] = cur.0 as u32;
            exp[i + order as usize] = cur.0 as u32;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_slow_any(cur, g);
        }
        Tables { exp, log }
    }

    #[inline]
    fn mul_prime(&self, x: Fe, y: Fe) -> Fe {
        if self.p < (1 << 32) {
            Fe(x.0 * y.0 % self.p)
        } else {
            Fe(((x.0 as u128 * y.0 as u128) % self.p as u128) as u64)
        }
    }

    fn mul_slow_any(&self, x: Fe, y: Fe) -> Fe {
        if self.n == 1 {
            self.mul_prime(x, y)
        } else {
            self.mul_slow(x, y)
        }
    }

    /// Canonical text form `c0,c1,…,c_{n-1}@p^n`.
    pub fn format_elem(&self, x: Fe) -> String {
        let cs: Vec<String> = self.coeffs(x).iter().map(u64::to_string).collect();
        format!("{}@{}^{}", cs.join(","), self.p, self.n)
    }

    /// Parses the `c0,…,c_{n-1}@p^n` form, rejecting a different field.
    pub fn parse_elem(&self, s: &str) -> Result<Fe, FieldError> {
        let (body, field) = s
            .trim()
            .split_once('@')
            .ok_or_else(|| FieldError::Parse(s.to_string()))?;
        let q = parse_order(field).ok_or_else(|| FieldError::Parse(s.to_string()))?;
        if q != self.q {
            return Err(FieldError::FieldMismatch);
        }
        let cs = body
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| FieldError::Parse(s.to_string()))?;
        self.from_coeffs(&cs)
    }

    /// Short form used inside parameter tuples: an integer for prime
    /// fields, otherwise a polynomial in the generator `u` written low
    /// degree first (`1+u`, `2+u^2`).
    pub fn format_short(&self, x: Fe) -> String {
        if self.n == 1 {
            return x.0.to_string();
        }
        if x.0 == 0 {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs(x).into_iter().enumerate() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            let mono = match i {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{i}"),
            };
            terms.push(format!("{coef}{mono}"));
        }
        terms.join("+")
    }

    /// Inverse of [`format_short`](Self::format_short); also accepts any
    /// integer (mapped into the prime subfield) and a leading `-`.
    pub fn parse_short(&self, s: &str) -> Result<Fe, FieldError> {
        let s = s.trim();
        let err = || FieldError::Parse(s.to_string());
        if s.is_empty() {
            return Err(err());
        }
        if let Some(rest) = s.strip_prefix('-') {
            return Ok(self.neg(self.parse_short(rest)?));
        }
        let mut acc = Fe(0);
        for term in s.split('+') {
            let term = term.trim();
            let (coef, power) = match term.find('u') {
                None => (term, 0u32),
                Some(pos) => {
                    let (c, mono) = term.split_at(pos);
                    let power = match mono.strip_prefix("u^") {
                        Some(e) => e.parse::<u32>().map_err(|_| err())?,
                        None if mono == "u" => 1,
                        None => return Err(err()),
                    };
                    (c.trim_end_matches('*'), power)
                }
            };
            let coef = if coef.is_empty() {
                Fe(1)
            } else {
                self.from_int(coef.parse::<i64>().map_err(|_| err())?)
            };
            let mono = self.pow(self.generator(), power as u64);
            acc = self.add(acc, self.mul(coef, mono));
        }
        Ok(acc)
    }
}

/// Parses a field order written as `q`, `p^n`.
pub fn parse_order(s: &str) -> Option<u64> {
    let s = s.trim();
    match s.split_once('^') {
        Some((p, n)) => {
            let p: u64 = p.trim().parse().ok()?;
            let n: u32 = n.trim().parse().ok()?;
            checked_order(p, n)
        }
        None => s.parse().ok(),
    }
}

/// Lexicographically smallest monic irreducible of degree `n >= 2` over
/// `F_p`, comparing `(c_0, …, c_{n-1})` as integer tuples.
fn smallest_irreducible(p: u64, n: u32) -> Vec<u64> {
    let prime = FieldCtx::realize(p, 1).expect("prime field");
    let total = checked_order(p, n).expect("checked by caller");
    // every candidate with c_0 = 0 is divisible by X
    let start = total / p;
    for k in start..total {
        // c_{n-1} is the least significant digit of k
        let mut coeffs = vec![Fe(0); n as usize + 1];
        let mut v = k;
        for i in (0..n as usize).rev() {
            coeffs[i] = Fe(v % p);
            v /= p;
        }
        coeffs[n as usize] = Fe(1);
        let f = UniPoly::from_coeffs(coeffs);
        if f.is_irreducible(&prime).unwrap_or(false) {
            return f.coeffs().iter().map(|c| c.index()).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
