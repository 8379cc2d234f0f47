//! Sparse multivariate polynomials over [`Scalar`] coefficients.
//!
//! A polynomial is a finite map from multi-indices to nonzero coefficients.
//! Terms are kept in a `BTreeMap` ordered by graded lexicographic order, so
//! iteration (and therefore printing) is deterministic. The zero polynomial
//! is the empty map and has total degree "-inf" ([`Degree::NegInf`]).
//!
//! Arity is a fixed property of every polynomial; operations on polynomials
//! of different arity or different coefficient backends return an error.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use thiserror::Error;

use crate::scalar::{Backend, Scalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("coefficient backend mismatch")]
    BackendMismatch,
    #[error("evaluation point has arity {0}, polynomial has arity {1}")]
    PointArity(usize, usize),
    #[error("expected a univariate polynomial, got arity {0}")]
    NotUnivariate(usize),
    #[error("variable index {0} out of range for arity {1}")]
    VarOutOfRange(usize, usize),
}

/// Exponent tuple `(a_1, ..., a_nu)`; `x^a = x_1^{a_1} ... x_nu^{a_nu}`.
///
/// Ordered graded-lexicographically ascending: first by total degree, then
/// lexicographically on the exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exps: Vec<u32>) -> Self {
        MultiIndex(exps)
    }

    pub fn zero(arity: usize) -> Self {
        MultiIndex(vec![0; arity])
    }

    pub fn unit(arity: usize, var: usize) -> Self {
        let mut e = vec![0; arity];
        e[var] = 1;
        MultiIndex(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, o: &Self) -> Self {
        MultiIndex(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn scale(&self, n: u32) -> Self {
        MultiIndex(self.0.iter().map(|e| e * n).collect())
    }

    fn with(&self, var: usize, e: u32) -> Self {
        let mut v = self.0.clone();
        v[var] = e;
        MultiIndex(v)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree with the zero polynomial's sentinel.
/// `NegInf` is absorbing under addition and minimal in the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInf,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn add(self, o: Degree) -> Degree {
        match (self, o) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

/// Sparse multivariate polynomial in canonical form: no stored coefficient
/// is zero, and every key has length `arity`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "arity must be at least 1");
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(arity);
        p.add_term(MultiIndex::zero(arity), c);
        p
    }

    pub fn var(arity: usize, var: usize) -> Self {
        assert!(var < arity, "variable index out of range");
        let mut p = MultiPoly::zero(arity);
        p.add_term(MultiIndex::unit(arity, var), Scalar::one());
        p
    }

    pub fn monomial(arity: usize, exps: &[u32], c: Scalar) -> Self {
        assert_eq!(exps.len(), arity);
        let mut p = MultiPoly::zero(arity);
        p.add_term(MultiIndex::new(exps.to_vec()), c);
        p
    }

    /// Accumulate a term, keeping canonical form.
    pub fn add_term(&mut self, idx: MultiIndex, c: Scalar) {
        assert_eq!(idx.arity(), self.arity, "multi-index arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&idx) {
            None => {
                self.terms.insert(idx, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(idx, s);
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.is_constant())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &MultiIndex) -> Option<&Scalar> {
        self.terms.get(idx)
    }

    pub fn constant_term(&self) -> Option<&Scalar> {
        self.terms.get(&MultiIndex::zero(self.arity))
    }

    /// The backend of the coefficients; `None` for the zero polynomial,
    /// which is compatible with either backend.
    pub fn backend(&self) -> Option<Backend> {
        self.terms.values().next().map(Scalar::backend)
    }

    fn check_compat(&self, o: &Self) -> Result<(), PolyError> {
        if self.arity != o.arity {
            return Err(PolyError::ArityMismatch(self.arity, o.arity));
        }
        if let (Some(a), Some(b)) = (self.backend(), o.backend()) {
            if a != b {
                return Err(PolyError::BackendMismatch);
            }
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, PolyError> {
        self.check_compat(o)?;
        let mut r = self.clone();
        for (k, v) in &o.terms {
            r.add_term(k.clone(), v.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, PolyError> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, PolyError> {
        self.check_compat(o)?;
        let mut r = MultiPoly::zero(self.arity);
        for (ka, va) in &self.terms {
            for (kb, vb) in &o.terms {
                r.add_term(ka.add(kb), va.mul(vb));
            }
        }
        Ok(r)
    }

    pub fn pow_nat(&self, k: u32) -> Self {
        let one = match self.backend() {
            Some(Backend::Float) => {
                let any = self.terms.values().next().unwrap();
                any.one_like()
            }
            _ => Scalar::one(),
        };
        let mut acc = MultiPoly::constant(self.arity, one);
        for _ in 0..k {
            acc = acc.mul(self).expect("same arity and backend");
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self, PolyError> {
        if let Some(b) = self.backend() {
            if b != c.backend() {
                return Err(PolyError::BackendMismatch);
            }
        }
        let mut r = MultiPoly::zero(self.arity);
        for (k, v) in &self.terms {
            r.add_term(k.clone(), v.mul(c));
        }
        Ok(r)
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|k| k.total_degree())
            .max()
            .map_or(Degree::NegInf, Degree::Finite)
    }

    pub fn degree_in(&self, var: usize) -> Degree {
        assert!(var < self.arity);
        self.terms
            .keys()
            .map(|k| k.get(var))
            .max()
            .map_or(Degree::NegInf, Degree::Finite)
    }

    /// `Some((c, alpha))` iff the polynomial has exactly one term.
    pub fn is_monomial(&self) -> Option<(&Scalar, &MultiIndex)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, v)| (v, k))
        } else {
            None
        }
    }

    pub fn depends_on(&self, var: usize) -> bool {
        assert!(var < self.arity);
        self.terms.keys().any(|k| k.get(var) > 0)
    }

    /// Variables the polynomial actually depends on.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.arity).filter(|&v| self.depends_on(v)).collect()
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar, PolyError> {
        if point.len() != self.arity {
            return Err(PolyError::PointArity(point.len(), self.arity));
        }
        let zero = point[0].zero_like();
        let mut acc = zero;
        for (k, v) in &self.terms {
            let mut t = v.clone();
            for (var, &e) in k.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[var].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Substitute `subs[j]` for variable `j`. All `subs` must share one arity,
    /// which becomes the arity of the result.
    pub fn substitute(&self, subs: &[MultiPoly]) -> Result<Self, PolyError> {
        if subs.len() != self.arity {
            return Err(PolyError::ArityMismatch(subs.len(), self.arity));
        }
        let out_arity = subs[0].arity;
        for s in subs {
            if s.arity != out_arity {
                return Err(PolyError::ArityMismatch(s.arity, out_arity));
            }
        }
        // power cache per variable, filled on demand
        let mut powers: Vec<Vec<MultiPoly>> = subs
            .iter()
            .map(|s| vec![MultiPoly::constant(out_arity, one_like_poly(s).unwrap_or_else(Scalar::one))])
            .collect();
        let mut acc = MultiPoly::zero(out_arity);
        for (k, v) in &self.terms {
            let mut term = MultiPoly::constant(out_arity, v.clone());
            for (var, &e) in k.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[var].len() <= e as usize {
                    let last = powers[var].last().unwrap().clone();
                    powers[var].push(last.mul(&subs[var])?);
                }
                term = term.mul(&powers[var][e as usize])?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Map every exponent tuple `alpha` to `n*alpha`; this is substitution of
    /// `x_j^n` for `x_j`.
    pub fn raise_exponents(&self, n: u32) -> Self {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.scale(n), v.clone())).collect(),
        }
    }

    /// Coefficient polynomials of `x_var`: returns `[Q_0, ..., Q_m]` with
    /// `Q = sum_i Q_i * x_var^i`, each `Q_i` free of `x_var`.
    pub fn coeff_polys_in(&self, var: usize) -> Result<Vec<MultiPoly>, PolyError> {
        if var >= self.arity {
            return Err(PolyError::VarOutOfRange(var, self.arity));
        }
        let m = self.degree_in(var).finite().unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(self.arity); m + 1];
        for (k, v) in &self.terms {
            let i = k.get(var) as usize;
            out[i].add_term(k.with(var, 0), v.clone());
        }
        Ok(out)
    }

    /// The top coefficient polynomial in `x_var` (free of `x_var`).
    pub fn leading_coeff_in(&self, var: usize) -> Result<MultiPoly, PolyError> {
        let mut cs = self.coeff_polys_in(var)?;
        Ok(cs.pop().expect("at least one coefficient"))
    }

    /// Decomposition into homogeneous parts `H_0, ..., H_m`.
    pub fn homogeneous_parts(&self) -> HomogeneousDecomposition {
        let m = match self.total_degree() {
            // the zero polynomial decomposes as a single zero part, keeping
            // the arity
            Degree::NegInf => {
                return HomogeneousDecomposition { parts: vec![MultiPoly::zero(self.arity)] }
            }
            Degree::Finite(d) => d as usize,
        };
        let mut parts = vec![MultiPoly::zero(self.arity); m + 1];
        for (k, v) in &self.terms {
            parts[k.total_degree() as usize].add_term(k.clone(), v.clone());
        }
        HomogeneousDecomposition { parts }
    }

    /// Split `Q = f(x_var) + g(rest) + x_var * q`, where `f` collects the
    /// terms depending only on `x_var` (with `f(0) = 0`; the constant term
    /// goes to `g`), `g` the terms free of `x_var`, and `q` the remainder
    /// divided by `x_var`. Every term of `x_var * q` involves `x_var` and at
    /// least one other variable.
    pub fn split_fgq(&self, var: usize) -> Result<(UniPoly, MultiPoly, MultiPoly), PolyError> {
        if var >= self.arity {
            return Err(PolyError::VarOutOfRange(var, self.arity));
        }
        let mut f = MultiPoly::zero(1);
        let mut g = MultiPoly::zero(self.arity);
        let mut q = MultiPoly::zero(self.arity);
        for (k, v) in &self.terms {
            let e = k.get(var);
            let pure = k.total_degree() == e;
            if e == 0 {
                g.add_term(k.clone(), v.clone());
            } else if pure {
                f.add_term(MultiIndex::new(vec![e]), v.clone());
            } else {
                q.add_term(k.with(var, e - 1), v.clone());
            }
        }
        Ok((UniPoly(f), g, q))
    }

    /// Reinterpret a univariate polynomial as a polynomial in `x_var` of the
    /// given arity.
    pub fn from_uni_in_var(p: &UniPoly, arity: usize, var: usize) -> Self {
        assert!(var < arity);
        let mut out = MultiPoly::zero(arity);
        for (k, v) in &p.0.terms {
            let mut e = vec![0u32; arity];
            e[var] = k.get(0);
            out.add_term(MultiIndex::new(e), v.clone());
        }
        out
    }

    /// Convert to the float backend.
    pub fn to_float(&self, prec: usize, eps: &astro_float::BigFloat) -> Self {
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.to_float(prec, eps)))
                .collect(),
        }
    }
}

fn one_like_poly(p: &MultiPoly) -> Option<Scalar> {
    p.terms.values().next().map(Scalar::one_like)
}

/// Homogeneous parts `H_0, ..., H_m` of a polynomial; part `k` is
/// homogeneous of degree `k` or zero, and the parts sum to the original.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousDecomposition {
    pub parts: Vec<MultiPoly>,
}

impl HomogeneousDecomposition {
    pub fn sum(&self) -> MultiPoly {
        let arity = self.parts.first().map_or(1, MultiPoly::arity);
        let mut acc = MultiPoly::zero(arity);
        for p in &self.parts {
            acc = acc.add(p).expect("uniform arity");
        }
        acc
    }

    /// Indices of nonzero parts.
    pub fn nonzero(&self) -> Vec<usize> {
        (0..self.parts.len()).filter(|&k| !self.parts[k].is_zero()).collect()
    }
}

/// A univariate polynomial: an arity-1 [`MultiPoly`] with coefficient-list
/// accessors.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly(MultiPoly);

impl UniPoly {
    pub fn from_multi(p: MultiPoly) -> Result<Self, PolyError> {
        if p.arity() != 1 {
            return Err(PolyError::NotUnivariate(p.arity()));
        }
        Ok(UniPoly(p))
    }

    /// Build from the coefficient list `a_0, ..., a_n` (zeros allowed).
    pub fn from_coeffs(coeffs: &[Scalar]) -> Self {
        let mut p = MultiPoly::zero(1);
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(MultiIndex::new(vec![k as u32]), c.clone());
        }
        UniPoly(p)
    }

    pub fn zero() -> Self {
        UniPoly(MultiPoly::zero(1))
    }

    /// The identity polynomial `x`.
    pub fn identity() -> Self {
        UniPoly(MultiPoly::var(1, 0))
    }

    /// `x^n` (exact backend).
    pub fn power(n: u32) -> Self {
        UniPoly(MultiPoly::monomial(1, &[n], Scalar::one()))
    }

    pub fn as_multi(&self) -> &MultiPoly {
        &self.0
    }

    pub fn into_multi(self) -> MultiPoly {
        self.0
    }

    pub fn degree(&self) -> Degree {
        self.0.total_degree()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn backend(&self) -> Option<Backend> {
        self.0.backend()
    }

    /// Coefficients `a_0, ..., a_n`; empty for the zero polynomial.
    pub fn coeffs(&self) -> Vec<Scalar> {
        let n = match self.degree() {
            Degree::NegInf => return vec![],
            Degree::Finite(d) => d as usize,
        };
        let zero = self.0.terms.values().next().unwrap().zero_like();
        let mut out = vec![zero; n + 1];
        for (k, v) in &self.0.terms {
            out[k.get(0) as usize] = v.clone();
        }
        out
    }

    pub fn coeff(&self, k: u32) -> Option<&Scalar> {
        self.0.coeff(&MultiIndex::new(vec![k]))
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.0.terms.iter().next_back().map(|(_, v)| v)
    }

    pub fn eval(&self, z: &Scalar) -> Scalar {
        self.0.evaluate(std::slice::from_ref(z)).expect("arity 1")
    }

    pub fn add(&self, o: &Self) -> Result<Self, PolyError> {
        Ok(UniPoly(self.0.add(&o.0)?))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, PolyError> {
        Ok(UniPoly(self.0.sub(&o.0)?))
    }

    pub fn mul(&self, o: &Self) -> Result<Self, PolyError> {
        Ok(UniPoly(self.0.mul(&o.0)?))
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self, PolyError> {
        Ok(UniPoly(self.0.scale(c)?))
    }

    pub fn to_float(&self, prec: usize, eps: &astro_float::BigFloat) -> Self {
        UniPoly(self.0.to_float(prec, eps))
    }
}

/// `P(Q(x_1,...,x_nu))`: substitute `Q` into the univariate `P` (Horner).
pub fn compose_outer(p: &UniPoly, q: &MultiPoly) -> MultiPoly {
    let coeffs = p.coeffs();
    let arity = q.arity();
    if coeffs.is_empty() {
        return MultiPoly::zero(arity);
    }
    let mut acc = MultiPoly::zero(arity);
    for a in coeffs.iter().rev() {
        acc = acc.mul(q).expect("matching arity");
        acc = acc
            .add(&MultiPoly::constant(arity, a.clone()))
            .expect("matching backend");
    }
    acc
}

/// `Q(P(x_1), ..., P(x_nu))`: substitute `P` into every variable slot of `Q`.
pub fn compose_each(q: &MultiPoly, p: &UniPoly) -> MultiPoly {
    let arity = q.arity();
    let subs: Vec<MultiPoly> = (0..arity)
        .map(|v| MultiPoly::from_uni_in_var(p, arity, v))
        .collect();
    q.substitute(&subs).expect("matching arity")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(2, 0)
    }

    fn y() -> MultiPoly {
        MultiPoly::var(2, 1)
    }

    fn xy() -> MultiPoly {
        x().mul(&y()).unwrap()
    }

    #[test]
    fn additive_inverse_gives_empty_map() {
        let p = xy();
        let s = p.add(&p.neg()).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.term_count(), 0);
        assert_eq!(s.total_degree(), Degree::NegInf);
    }

    #[test]
    fn binomial_square() {
        let p = x().add(&y()).unwrap().pow_nat(2);
        let mut expect = MultiPoly::zero(2);
        expect.add_term(MultiIndex::new(vec![2, 0]), Scalar::one());
        expect.add_term(MultiIndex::new(vec![1, 1]), Scalar::from_int(2));
        expect.add_term(MultiIndex::new(vec![0, 2]), Scalar::one());
        assert_eq!(p, expect);
    }

    #[test]
    fn product_of_shifted_vars() {
        // (x+1)(y+1) = xy + x + y + 1, expanded by hand
        let one = MultiPoly::constant(2, Scalar::one());
        let p = x().add(&one).unwrap().mul(&y().add(&one).unwrap()).unwrap();
        let expect = xy()
            .add(&x())
            .unwrap()
            .add(&y())
            .unwrap()
            .add(&one)
            .unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn pow_zero_is_one() {
        let p = xy().pow_nat(0);
        assert_eq!(p, MultiPoly::constant(2, Scalar::one()));
    }

    #[test]
    fn arity_mismatch_is_error() {
        let p = MultiPoly::var(2, 0);
        let q = MultiPoly::var(3, 0);
        assert_eq!(p.add(&q), Err(PolyError::ArityMismatch(2, 3)));
        assert_eq!(p.mul(&q), Err(PolyError::ArityMismatch(2, 3)));
    }

    #[test]
    fn backend_mismatch_is_error() {
        let p = xy();
        let eps = crate::scalar::FloatComplex::default_eps(64);
        let q = xy().to_float(64, &eps);
        assert_eq!(p.add(&q), Err(PolyError::BackendMismatch));
        assert_eq!(p.scale(&Scalar::one().to_float(64, &eps)), Err(PolyError::BackendMismatch));
    }

    #[test]
    fn compose_outer_square_of_xy() {
        let p = UniPoly::power(2);
        let r = compose_outer(&p, &xy());
        assert_eq!(r, MultiPoly::monomial(2, &[2, 2], Scalar::one()));
    }

    #[test]
    fn compose_outer_hand_expansion() {
        // P = x^2 + 2x, Q = xy + x + y
        // P(Q) = x^2y^2 + 2x^2y + 2xy^2 + x^2 + y^2 + 4xy + 2x + 2y
        let p = UniPoly::from_coeffs(&[Scalar::zero(), Scalar::from_int(2), Scalar::one()]);
        let q = xy().add(&x()).unwrap().add(&y()).unwrap();
        let r = compose_outer(&p, &q);
        let mut expect = MultiPoly::zero(2);
        for (e, c) in [
            ([2, 2], 1),
            ([2, 1], 2),
            ([1, 2], 2),
            ([2, 0], 1),
            ([0, 2], 1),
            ([1, 1], 4),
            ([1, 0], 2),
            ([0, 1], 2),
        ] {
            expect.add_term(MultiIndex::new(e.to_vec()), Scalar::from_int(c));
        }
        assert_eq!(r, expect);
        // the pair commutes: same polynomial from the other side
        assert_eq!(compose_each(&q, &p), expect);
    }

    #[test]
    fn compose_with_identity() {
        let q = xy().add(&x()).unwrap();
        assert_eq!(compose_outer(&UniPoly::identity(), &q), q);
        let s = x().add(&y()).unwrap();
        assert_eq!(compose_each(&s, &UniPoly::identity()), s);
    }

    #[test]
    fn degree_law() {
        let p = UniPoly::from_coeffs(&[Scalar::one(), Scalar::from_int(3), Scalar::one()]);
        let q = xy().add(&x()).unwrap();
        assert_eq!(
            compose_outer(&p, &q).total_degree(),
            Degree::Finite(4)
        );
        assert_eq!(
            compose_each(&q, &p).total_degree(),
            Degree::Finite(4)
        );
    }

    #[test]
    fn coeff_polys_examples() {
        // Q = xy + x + y in x: [y, y+1]
        let q = xy().add(&x()).unwrap().add(&y()).unwrap();
        let cs = q.coeff_polys_in(0).unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0], y());
        assert_eq!(cs[1], y().add(&MultiPoly::constant(2, Scalar::one())).unwrap());

        // Q = x^2 y^3 + x^2 in x: [0, 0, y^3 + 1]
        let q2 = MultiPoly::monomial(2, &[2, 3], Scalar::one())
            .add(&MultiPoly::monomial(2, &[2, 0], Scalar::one()))
            .unwrap();
        let cs2 = q2.coeff_polys_in(0).unwrap();
        assert_eq!(cs2.len(), 3);
        assert!(cs2[0].is_zero());
        assert!(cs2[1].is_zero());
        assert_eq!(
            cs2[2],
            MultiPoly::monomial(2, &[0, 3], Scalar::one())
                .add(&MultiPoly::constant(2, Scalar::one()))
                .unwrap()
        );

        // constant: [5]
        let five = MultiPoly::constant(2, Scalar::from_int(5));
        let cs3 = five.coeff_polys_in(0).unwrap();
        assert_eq!(cs3, vec![five.clone()]);

        // round trip
        for (qq, var) in [(q, 0usize), (q2, 0), (five, 1)] {
            let mut acc = MultiPoly::zero(2);
            for (i, c) in qq.coeff_polys_in(var).unwrap().iter().enumerate() {
                let xi = MultiPoly::var(2, var).pow_nat(i as u32);
                acc = acc.add(&c.mul(&xi).unwrap()).unwrap();
            }
            assert_eq!(acc, qq);
        }
    }

    #[test]
    fn homogeneous_parts_examples() {
        let q = xy().add(&x()).unwrap().add(&y()).unwrap();
        let h = q.homogeneous_parts();
        assert_eq!(h.parts.len(), 3);
        assert!(h.parts[0].is_zero());
        assert_eq!(h.parts[1], x().add(&y()).unwrap());
        assert_eq!(h.parts[2], xy());
        assert_eq!(h.sum(), q);

        let m = MultiPoly::monomial(2, &[2, 2], Scalar::one());
        let hm = m.homogeneous_parts();
        assert_eq!(hm.parts.len(), 5);
        assert_eq!(hm.nonzero(), vec![4]);

        let five = MultiPoly::constant(2, Scalar::from_int(5));
        assert_eq!(five.homogeneous_parts().parts, vec![five]);
    }

    #[test]
    fn split_fgq_examples() {
        // Q = xy + x + y, var x: f = x, g = y, q = y (x*q = xy)
        let q = xy().add(&x()).unwrap().add(&y()).unwrap();
        let (f, g, r) = q.split_fgq(0).unwrap();
        assert_eq!(f, UniPoly::identity());
        assert_eq!(g, y());
        assert_eq!(r, MultiPoly::monomial(2, &[0, 1], Scalar::one()));

        // Q = x^2 + y^2: separable
        let q2 = MultiPoly::monomial(2, &[2, 0], Scalar::one())
            .add(&MultiPoly::monomial(2, &[0, 2], Scalar::one()))
            .unwrap();
        let (f2, g2, r2) = q2.split_fgq(0).unwrap();
        assert_eq!(f2, UniPoly::power(2));
        assert_eq!(g2, MultiPoly::monomial(2, &[0, 2], Scalar::one()));
        assert!(r2.is_zero());

        // Q = x^2 y: f = 0, g = 0, q = xy
        let q3 = MultiPoly::monomial(2, &[2, 1], Scalar::one());
        let (f3, g3, r3) = q3.split_fgq(0).unwrap();
        assert!(f3.is_zero());
        assert!(g3.is_zero());
        assert_eq!(r3, xy());

        // constant goes to g, so f(0) = 0
        let q4 = q.add(&MultiPoly::constant(2, Scalar::from_int(7))).unwrap();
        let (f4, g4, _) = q4.split_fgq(0).unwrap();
        assert!(f4.coeff(0).is_none());
        assert_eq!(g4.constant_term(), Some(&Scalar::from_int(7)));

        // reassembly f + g + x*q = Q
        for (qq, var) in [(q, 0usize), (q2, 0), (q3, 0), (q4, 1)] {
            let (f, g, r) = qq.split_fgq(var).unwrap();
            let femb = MultiPoly::from_uni_in_var(&f, 2, var);
            let xr = MultiPoly::var(2, var).mul(&r).unwrap();
            assert_eq!(femb.add(&g).unwrap().add(&xr).unwrap(), qq);
        }
    }

    #[test]
    fn structure_queries() {
        let m = MultiPoly::monomial(2, &[2, 1], Scalar::from_int(3));
        let (c, a) = m.is_monomial().unwrap();
        assert_eq!(c, &Scalar::from_int(3));
        assert_eq!(a.exponents(), &[2, 1]);
        assert!(x().add(&y()).unwrap().is_monomial().is_none());

        // evaluate x^2 + 2x at -1
        let p = UniPoly::from_coeffs(&[Scalar::zero(), Scalar::from_int(2), Scalar::one()]);
        assert_eq!(p.eval(&Scalar::from_int(-1)), Scalar::from_int(-1));

        assert!(xy().depends_on(0) && xy().depends_on(1));
        assert!(!MultiPoly::monomial(2, &[2, 0], Scalar::one()).depends_on(1));
    }

    #[test]
    fn raise_exponents_is_power_substitution() {
        let q = xy().add(&x()).unwrap();
        let r = q.raise_exponents(3);
        let subs = vec![
            MultiPoly::monomial(2, &[3, 0], Scalar::one()),
            MultiPoly::monomial(2, &[0, 3], Scalar::one()),
        ];
        assert_eq!(r, q.substitute(&subs).unwrap());
    }
}
