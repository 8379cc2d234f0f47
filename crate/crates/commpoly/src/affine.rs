//! Invertible affine maps `z -> a*z + b` and their conjugation action on
//! polynomials: `C_a(R) = a o R(a^-1(z_1), ..., a^-1(z_nu))`.

use thiserror::Error;

use crate::poly::{MultiPoly, UniPoly};
use crate::scalar::Scalar;

#[derive(Debug, Error, PartialEq)]
pub enum AffineError {
    #[error("affine map must have a != 0")]
    SingularMap,
    #[error("a and b must use the same scalar backend")]
    BackendMismatch,
}

/// `z -> a*z + b` with `a != 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap {
    a: Scalar,
    b: Scalar,
}

impl AffineMap {
    pub fn new(a: Scalar, b: Scalar) -> Result<Self, AffineError> {
        if a.is_zero() {
            return Err(AffineError::SingularMap);
        }
        if !a.same_backend(&b) {
            return Err(AffineError::BackendMismatch);
        }
        Ok(AffineMap { a, b })
    }

    pub fn identity() -> Self {
        AffineMap { a: Scalar::one(), b: Scalar::zero() }
    }

    /// `z -> z - r`.
    pub fn shift(r: &Scalar) -> Self {
        AffineMap { a: r.one_like(), b: r.neg() }
    }

    /// `z -> c*z`; `c` must be nonzero.
    pub fn scaling(c: Scalar) -> Result<Self, AffineError> {
        let b = c.zero_like();
        AffineMap::new(c, b)
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn apply(&self, z: &Scalar) -> Scalar {
        self.a.mul(z).add(&self.b)
    }

    pub fn inverse(&self) -> Self {
        let a = self.a.one_like().div(&self.a);
        let b = self.b.neg().div(&self.a);
        AffineMap { a, b }
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        AffineMap {
            a: self.a.mul(&other.a),
            b: self.a.mul(&other.b).add(&self.b),
        }
    }

    /// The conjugation action on a polynomial of any arity.
    pub fn conjugate(&self, r: &MultiPoly) -> MultiPoly {
        let arity = r.arity();
        let inv = self.inverse();
        let subs: Vec<MultiPoly> = (0..arity)
            .map(|v| {
                // a^-1(x_v) = inv.a * x_v + inv.b as a polynomial
                let mut p = MultiPoly::zero(arity);
                p.add_term(crate::poly::MultiIndex::unit(arity, v), inv.a.clone());
                p.add_term(crate::poly::MultiIndex::zero(arity), inv.b.clone());
                p
            })
            .collect();
        let inner = r.substitute(&subs).expect("matching arity");
        inner
            .scale(&self.a)
            .expect("matching backend")
            .add(&MultiPoly::constant(arity, self.b.clone()))
            .expect("matching backend")
    }

    pub fn conjugate_uni(&self, p: &UniPoly) -> UniPoly {
        UniPoly::from_multi(self.conjugate(p.as_multi())).expect("arity preserved")
    }
}
