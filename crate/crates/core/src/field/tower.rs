//! `F_q ⊂ F_{q^m}` with both fields realized over the prime field.

use std::collections::HashMap;
use std::sync::Arc;

use super::{Fe, FieldCtx, FieldError};
use crate::poly::UniPoly;

/// An explicit embedding of a base field into a degree-`m` extension.
///
/// The extension is `F_{p^{nm}}` with its own smallest irreducible modulus;
/// the base generator is sent to the smallest root (index order) of the
/// base modulus inside the extension.
#[derive(Debug)]
pub struct Extension {
    base: Arc<FieldCtx>,
    ext: Arc<FieldCtx>,
    degree: u32,
    theta: Fe,
    images: Vec<Fe>,
    preimages: HashMap<Fe, Fe>,
}

impl Extension {
    pub fn new(base: Arc<FieldCtx>, degree: u32) -> Result<Extension, FieldError> {
        if degree == 0 {
            return Err(FieldError::DegreeOutOfRange(0));
        }
        let ext = Arc::new(FieldCtx::realize(
            base.characteristic(),
            base.degree() * degree,
        )?);
        // prime-subfield elements share their index in both fields
        let modulus = UniPoly::from_coeffs(base.modulus().iter().map(|&c| Fe(c)).collect());
        let theta = if base.degree() == 1 {
            Fe(0)
        } else {
            *modulus
                .roots(&ext)
                .first()
                .expect("base modulus splits in the extension")
        };
        let n = base.degree() as usize;
        let mut powers = Vec::with_capacity(n);
        let mut cur = ext.one();
        for _ in 0..n {
            powers.push(cur);
            cur = ext.mul(cur, theta);
        }
        let mut images = Vec::with_capacity(base.order() as usize);
        let mut preimages = HashMap::with_capacity(base.order() as usize);
        for x in base.elements() {
            let img = base
                .coeffs(x)
                .iter()
                .zip(&powers)
                .fold(ext.zero(), |acc, (&c, &pw)| {
                    ext.add(acc, ext.mul(Fe(c), pw))
                });
            images.push(img);
            preimages.insert(img, x);
        }
        Ok(Extension {
            base,
            ext,
            degree,
            theta,
            images,
            preimages,
        })
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn ext(&self) -> &FieldCtx {
        &self.ext
    }

    pub fn base_arc(&self) -> Arc<FieldCtx> {
        Arc::clone(&self.base)
    }

    pub fn ext_arc(&self) -> Arc<FieldCtx> {
        Arc::clone(&self.ext)
    }

    /// Relative degree `[F_{q^m} : F_q]`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Image of the base generator.
    pub fn theta(&self) -> Fe {
        self.theta
    }

    #[inline]
    pub fn embed(&self, x: Fe) -> Fe {
        self.images[x.index() as usize]
    }

    /// Preimage of an extension element lying in the base field.
    pub fn descend(&self, y: Fe) -> Option<Fe> {
        self.preimages.get(&y).copied()
    }

    pub fn embed_poly(&self, f: &UniPoly) -> UniPoly {
        UniPoly::from_coeffs(f.coeffs().iter().map(|&c| self.embed(c)).collect())
    }

    /// `y^(q^k)` with `q` the base order.
    pub fn frobenius(&self, y: Fe, k: u32) -> Fe {
        self.ext
            .frobenius(y, self.base.order(), k)
            .expect("base order is a subfield order")
    }

    /// Relative trace down to the base field, returned as a base element.
    pub fn trace(&self, y: Fe) -> Fe {
        let t = self
            .ext
            .trace_to_subfield(y, self.base.order())
            .expect("base order is a subfield order");
        self.descend(t).expect("trace lies in the base field")
    }

    /// Whether `y` already lies in the base field.
    pub fn is_base(&self, y: Fe) -> bool {
        self.preimages.contains_key(&y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        for (p, n, m) in [(2, 2, 3), (3, 2, 3), (5, 1, 3), (2, 3, 2), (3, 1, 2)] {
            let base = Arc::new(FieldCtx::new(p, n).unwrap());
            let ext = Extension::new(Arc::clone(&base), m).unwrap();
            let big = ext.ext();
            for x in base.elements() {
                for y in base.elements() {
                    assert_eq!(
                        ext.embed(base.mul(x, y)),
                        big.mul(ext.embed(x), ext.embed(y))
                    );
                    assert_eq!(
                        ext.embed(base.add(x, y)),
                        big.add(ext.embed(x), ext.embed(y))
                    );
                }
                assert_eq!(ext.descend(ext.embed(x)), Some(x));
                assert!(big.in_subfield(ext.embed(x), base.order()).unwrap());
            }
        }
    }

    #[test]
    fn relative_trace_lands_in_base() {
        let base = Arc::new(FieldCtx::new(3, 1).unwrap());
        let ext = Extension::new(base, 3).unwrap();
        let mut nonzero = 0;
        for y in ext.ext().elements() {
            let t = ext.trace(y);
            if !t.is_zero() {
                nonzero += 1;
            }
        }
        // trace is a surjective linear map F_27 -> F_3
        assert_eq!(nonzero, 18);
    }
}
