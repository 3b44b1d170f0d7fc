//! The inner search loops. Everything here works on one denominator at a
//! time so that workers share nothing but the field.

use crate::criteria::{eq51, eq52, eq55, BoundPoly, ParamTuple};
use crate::field::{Fe, FieldCtx};

/// Per-denominator tallies.
#[derive(Debug, Default)]
pub(super) struct Hits {
    pub scanned: u64,
    pub survivors: u64,
    pub prs: Vec<ParamTuple>,
}

/// Injectivity of `x ↦ x + (ax^2 + bx + c)/Q(x)` on `F_q` for a fixed
/// root-free `Q`. The point at infinity is fixed because `deg P > deg Q`,
/// so this decides permutation of `P^1`.
pub(super) struct BijectionTester {
    x2: Vec<Fe>,
    inv_q: Vec<Fe>,
    seen: Vec<u32>,
    stamp: u32,
}

impl BijectionTester {
    pub fn new(cubic: [Fe; 4], k: &FieldCtx) -> BijectionTester {
        let q = k.order() as usize;
        let eval = |x: Fe| {
            cubic
                .iter()
                .rev()
                .fold(Fe::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
        };
        BijectionTester {
            x2: k.elements().map(|x| k.square(x)).collect(),
            inv_q: k
                .elements()
                .map(|x| k.inv(eval(x)).expect("denominator has no roots"))
                .collect(),
            seen: vec![0; q],
            stamp: 0,
        }
    }

    pub fn is_bijective(&mut self, a: Fe, b: Fe, c: Fe, k: &FieldCtx) -> bool {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.fill(0);
            self.stamp = 1;
        }
        for (i, (&x2, &iq)) in self.x2.iter().zip(&self.inv_q).enumerate() {
            let x = Fe::from_index(i as u64);
            let num = k.add(k.add(k.mul(a, x2), k.mul(b, x)), c);
            let v = k.add(x, k.mul(num, iq)).index() as usize;
            if self.seen[v] == self.stamp {
                return false;
            }
            self.seen[v] = self.stamp;
        }
        true
    }
}

/// A polynomial in `(a, b, c, d, e)` with `a, d, e` substituted: entry
/// `[i][j]` is the coefficient of `b^i c^j`.
struct BcPoly {
    coeffs: [[Fe; 5]; 5],
}

impl BcPoly {
    fn specialize(p: &BoundPoly, a: Fe, d: Fe, e: Fe, k: &FieldCtx) -> BcPoly {
        let powers = |x: Fe| {
            let mut t = [Fe::ONE; 16];
            for i in 1..16 {
                t[i] = k.mul(t[i - 1], x);
            }
            t
        };
        let (pa, pd, pe) = (powers(a), powers(d), powers(e));
        let mut coeffs = [[Fe::ZERO; 5]; 5];
        for &(c, [ea, eb, ec, ed, ee]) in p.terms() {
            let t = k.mul(k.mul(c, pa[ea as usize]), k.mul(pd[ed as usize], pe[ee as usize]));
            let slot = &mut coeffs[eb as usize][ec as usize];
            *slot = k.add(*slot, t);
        }
        BcPoly { coeffs }
    }

    /// The polynomial in `c` at a fixed `b`, low degree first.
    fn at_b(&self, b: Fe, k: &FieldCtx) -> [Fe; 5] {
        let mut row = [Fe::ZERO; 5];
        for j in 0..5 {
            row[j] = (0..5)
                .rev()
                .fold(Fe::ZERO, |acc, i| k.add(k.mul(acc, b), self.coeffs[i][j]));
        }
        row
    }
}

fn horner(row: &[Fe; 5], c: Fe, k: &FieldCtx) -> Fe {
    row.iter().rev().fold(Fe::ZERO, |acc, &r| k.add(k.mul(acc, c), r))
}

/// The characteristic-3 normal form under `X ↦ vX + w`, which keeps the
/// shape `X^3 + dX + e` when `3 = 0`: `(a, b) = (0, 0)`, `(a, b, c) =
/// (0, 1, 0)`, or `a ≠ 0` and `b = 0`.
pub(super) fn char3_normal(a: Fe, b: Fe, c: Fe) -> bool {
    if a.is_zero() {
        b.is_zero() || (b == Fe::ONE && c.is_zero())
    } else {
        b.is_zero()
    }
}

/// Scans `X + (aX^2+bX+c)/(X^3+dX+e)` over `a ∈ a_values` and all `b, c`,
/// or only the [`char3_normal`] tuples when `char3` is set.
pub(super) fn scan_general(k: &FieldCtx, d: Fe, e: Fe, a_values: &[Fe], char3: bool, prefilter: bool) -> Hits {
    let q = k.order();
    let use51 = prefilter && q > 2;
    let use52 = prefilter && q > 3;
    let p51 = eq51().bind(k);
    let p52 = eq52().bind(k);
    let mut tester = BijectionTester::new([e, d, Fe::ZERO, Fe::ONE], k);
    let mut hits = Hits::default();
    for &a in a_values {
        let s51 = BcPoly::specialize(&p51, a, d, e, k);
        let s52 = BcPoly::specialize(&p52, a, d, e, k);
        for b in k.elements() {
            let r51 = s51.at_b(b, k);
            let r52 = use52.then(|| s52.at_b(b, k));
            for c in k.elements() {
                if (a.is_zero() && b.is_zero() && c.is_zero()) || (char3 && !char3_normal(a, b, c)) {
                    continue;
                }
                hits.scanned += 1;
                if use51 && !horner(&r51, c, k).is_zero() {
                    continue;
                }
                if let Some(r52) = &r52 {
                    if !horner(r52, c, k).is_zero() {
                        continue;
                    }
                }
                hits.survivors += 1;
                if tester.is_bijective(a, b, c, k) {
                    hits.prs.push(ParamTuple::general(a, b, c, d, e));
                }
            }
        }
    }
    hits
}

/// Scans `X + (aX^2+bX+c)/(X^3+X^2+e)` over all `a, b, c`, `q = 3^n`.
pub(super) fn scan_char3x2(k: &FieldCtx, e: Fe, prefilter: bool) -> Hits {
    let q = k.order();
    let use55 = prefilter && k.degree() > 1;
    let p55 = eq55().bind(k);
    let mut tester = BijectionTester::new([e, Fe::ZERO, Fe::ONE, Fe::ONE], k);
    let mut hits = Hits {
        scanned: q * q * q - 1,
        ..Hits::default()
    };
    for b in k.elements() {
        for c in k.elements() {
            if prefilter && !k.add(k.square(c), k.mul(k.square(b), e)).is_zero() {
                continue;
            }
            for a in k.elements() {
                if a.is_zero() && b.is_zero() && c.is_zero() {
                    continue;
                }
                if use55 && !p55.eval([a, b, c, Fe::ZERO, Fe::ZERO], k).is_zero() {
                    continue;
                }
                hits.survivors += 1;
                if tester.is_bijective(a, b, c, k) {
                    hits.prs.push(ParamTuple::char3x2(a, b, c, e));
                }
            }
        }
    }
    hits
}

/// `(d, e)` with `X^3 + dX + e` irreducible, in enumeration order. A cubic
/// is irreducible iff it has no root, and `r` is a root iff
/// `e = -r^3 - dr`.
pub(super) fn irreducible_general(k: &FieldCtx) -> Vec<(Fe, Fe)> {
    let q = k.order() as usize;
    let mut out = Vec::new();
    let mut has_root = vec![false; q];
    for d in k.elements() {
        has_root.fill(false);
        for r in k.elements() {
            let e = k.neg(k.add(k.mul(k.square(r), r), k.mul(d, r)));
            has_root[e.index() as usize] = true;
        }
        out.extend(
            k.elements()
                .filter(|e| !has_root[e.index() as usize])
                .map(|e| (d, e)),
        );
    }
    out
}

/// `e` with `X^3 + X^2 + e` irreducible.
pub(super) fn irreducible_char3x2(k: &FieldCtx) -> Vec<Fe> {
    let mut has_root = vec![false; k.order() as usize];
    for r in k.elements() {
        let e = k.neg(k.add(k.mul(k.square(r), r), k.square(r)));
        has_root[e.index() as usize] = true;
    }
    k.elements()
        .filter(|e| !has_root[e.index() as usize])
        .collect()
}
