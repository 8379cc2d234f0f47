//! Coefficient arithmetic for the polynomial kernel.
//!
//! Two backends:
//! - `Exact`: Gaussian rationals, i.e. `a + b*i` with `a`, `b` arbitrary
//!   precision rationals. Equality is decidable and exact.
//! - `Float`: arbitrary precision complex floats with an explicit comparison
//!   tolerance `eps`. Equality means `|a - b| <= eps`.
//!
//! Mixing backends in one arithmetic operation is a contract violation and
//! panics; container types check compatibility up front and surface a typed
//! error instead.

use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

const RM: RoundingMode = RoundingMode::ToEven;

/// Default mantissa precision (bits) for the float backend.
pub const DEFAULT_PREC: usize = 256;

/// Which coefficient representation a [`Scalar`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Float,
}

/// An element of Q(i): `re + im*i` with both parts exact rationals.
///
/// `BigRational` keeps itself in lowest terms with a positive denominator,
/// which gives us canonical representatives for free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn zero() -> Self {
        GaussRat::from_int(0)
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> Self {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, the rational norm.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Panics if `o` is zero.
    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        let n = o.norm();
        let t = self.mul(&o.conj());
        GaussRat::new(t.re / &n, t.im / &n)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRat::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Canonical order: by real part, then imaginary part.
    pub fn canon_cmp(&self, o: &Self) -> Ordering {
        self.re.cmp(&o.re).then_with(|| self.im.cmp(&o.im))
    }
}

/// Arbitrary precision complex float with a comparison tolerance.
#[derive(Debug, Clone)]
pub struct FloatComplex {
    pub re: BigFloat,
    pub im: BigFloat,
    pub prec: usize,
    pub eps: BigFloat,
}

/// Exact conversion of a `BigInt` to a `BigFloat` (powers of two only).
fn bigint_to_float(n: &BigInt, prec: usize) -> BigFloat {
    let (sign, digits) = n.to_u64_digits();
    let shift = BigFloat::from_u128(1u128 << 64, prec + 64);
    let mut acc = BigFloat::from_i8(0, prec + 64);
    for limb in digits.iter().rev() {
        acc = acc.mul(&shift, prec + 64, RM);
        acc = acc.add(&BigFloat::from_u64(*limb, prec + 64), prec + 64, RM);
    }
    if sign == num_bigint::Sign::Minus {
        acc = acc.neg();
    }
    acc
}

fn rational_to_float(r: &BigRational, prec: usize) -> BigFloat {
    let num = bigint_to_float(r.numer(), prec);
    let den = bigint_to_float(r.denom(), prec);
    num.div(&den, prec, RM)
}

impl FloatComplex {
    pub fn new(re: BigFloat, im: BigFloat, prec: usize, eps: BigFloat) -> Self {
        FloatComplex { re, im, prec, eps }
    }

    pub fn from_f64(re: f64, im: f64, prec: usize, eps: BigFloat) -> Self {
        FloatComplex::new(BigFloat::from_f64(re, prec), BigFloat::from_f64(im, prec), prec, eps)
    }

    /// The default tolerance, `10^-30`.
    pub fn default_eps(prec: usize) -> BigFloat {
        BigFloat::from_u8(10, prec).powi(30, prec, RM).reciprocal(prec, RM)
    }

    pub fn from_gauss(g: &GaussRat, prec: usize, eps: BigFloat) -> Self {
        FloatComplex::new(
            rational_to_float(&g.re, prec),
            rational_to_float(&g.im, prec),
            prec,
            eps,
        )
    }

    fn p(&self, o: &Self) -> usize {
        self.prec.max(o.prec)
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.p(o);
        FloatComplex::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM), p, self.eps.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.p(o);
        FloatComplex::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM), p, self.eps.clone())
    }

    pub fn neg(&self) -> Self {
        FloatComplex::new(self.re.neg(), self.im.neg(), self.prec, self.eps.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.p(o);
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        FloatComplex::new(re, im, p, self.eps.clone())
    }

    pub fn div(&self, o: &Self) -> Self {
        let p = self.p(o);
        let n = o.re.mul(&o.re, p, RM).add(&o.im.mul(&o.im, p, RM), p, RM);
        let re = self.re.mul(&o.re, p, RM).add(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.im.mul(&o.re, p, RM).sub(&self.re.mul(&o.im, p, RM), p, RM);
        FloatComplex::new(re.div(&n, p, RM), im.div(&n, p, RM), p, self.eps.clone())
    }

    /// `|z| = sqrt(re^2 + im^2)`.
    pub fn abs(&self) -> BigFloat {
        let p = self.prec;
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
            .sqrt(p, RM)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.abs().cmp(&self.eps), Some(c) if c <= 0)
    }

    pub fn approx_eq(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let one = FloatComplex::new(
            BigFloat::from_u8(1, self.prec),
            BigFloat::from_u8(0, self.prec),
            self.prec,
            self.eps.clone(),
        );
        let mut base = self.clone();
        let mut acc = one;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn canon_cmp(&self, o: &Self) -> Ordering {
        let c = self.re.cmp(&o.re).unwrap_or(0);
        if c != 0 {
            return c.cmp(&0);
        }
        self.im.cmp(&o.im).unwrap_or(0).cmp(&0)
    }
}

impl PartialEq for FloatComplex {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

/// A coefficient: exact Gaussian rational or tolerant complex float.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(GaussRat),
    Float(FloatComplex),
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Exact(_) => Backend::Exact,
            Scalar::Float(_) => Backend::Float,
        }
    }

    pub fn same_backend(&self, o: &Self) -> bool {
        self.backend() == o.backend()
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact(GaussRat::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Exact(GaussRat::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        ))
    }

    pub fn from_parts(re: BigRational, im: BigRational) -> Self {
        Scalar::Exact(GaussRat::new(re, im))
    }

    pub fn i() -> Self {
        Scalar::Exact(GaussRat::i())
    }

    pub fn zero() -> Self {
        Scalar::Exact(GaussRat::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(GaussRat::one())
    }

    pub fn zero_like(&self) -> Self {
        match self {
            Scalar::Exact(_) => Scalar::zero(),
            Scalar::Float(f) => Scalar::Float(FloatComplex::new(
                BigFloat::from_u8(0, f.prec),
                BigFloat::from_u8(0, f.prec),
                f.prec,
                f.eps.clone(),
            )),
        }
    }

    pub fn one_like(&self) -> Self {
        match self {
            Scalar::Exact(_) => Scalar::one(),
            Scalar::Float(f) => Scalar::Float(FloatComplex::new(
                BigFloat::from_u8(1, f.prec),
                BigFloat::from_u8(0, f.prec),
                f.prec,
                f.eps.clone(),
            )),
        }
    }

    /// Convert to the float backend (identity on float scalars).
    pub fn to_float(&self, prec: usize, eps: &BigFloat) -> Self {
        match self {
            Scalar::Exact(g) => Scalar::Float(FloatComplex::from_gauss(g, prec, eps.clone())),
            Scalar::Float(f) => Scalar::Float(f.clone()),
        }
    }

    pub fn as_exact(&self) -> Option<&GaussRat> {
        match self {
            Scalar::Exact(g) => Some(g),
            Scalar::Float(_) => None,
        }
    }

    pub fn as_float(&self) -> Option<&FloatComplex> {
        match self {
            Scalar::Float(f) => Some(f),
            Scalar::Exact(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(g) => g.is_zero(),
            Scalar::Float(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact(g) => g.sub(&GaussRat::one()).is_zero(),
            Scalar::Float(f) => {
                let one = FloatComplex::new(
                    BigFloat::from_u8(1, f.prec),
                    BigFloat::from_u8(0, f.prec),
                    f.prec,
                    f.eps.clone(),
                );
                f.approx_eq(&one)
            }
        }
    }

    fn binop(
        &self,
        o: &Self,
        fe: impl Fn(&GaussRat, &GaussRat) -> GaussRat,
        ff: impl Fn(&FloatComplex, &FloatComplex) -> FloatComplex,
    ) -> Self {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(fe(a, b)),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(ff(a, b)),
            _ => panic!("scalar backend mismatch"),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.binop(o, GaussRat::add, FloatComplex::add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.binop(o, GaussRat::sub, FloatComplex::sub)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.binop(o, GaussRat::mul, FloatComplex::mul)
    }

    /// Panics if `o` is zero (callers check first where it matters).
    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        self.binop(o, GaussRat::div, FloatComplex::div)
    }

    pub fn neg(&self) -> Self {
        match self {
            Scalar::Exact(g) => Scalar::Exact(g.neg()),
            Scalar::Float(f) => Scalar::Float(f.neg()),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        match self {
            Scalar::Exact(g) => Scalar::Exact(g.pow(k)),
            Scalar::Float(f) => Scalar::Float(f.pow(k)),
        }
    }

    /// Canonical total order: real part first, then imaginary part.
    /// Only meaningful between scalars of the same backend.
    pub fn canon_cmp(&self, o: &Self) -> Ordering {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.canon_cmp(b),
            (Scalar::Float(a), Scalar::Float(b)) => a.canon_cmp(b),
            _ => panic!("scalar backend mismatch"),
        }
    }

    /// Sign convention used by the pretty printer: a scalar "leads negative"
    /// when its real part is negative, or is zero with negative imaginary part.
    pub fn leads_negative(&self) -> bool {
        match self {
            Scalar::Exact(g) => {
                if !g.re.is_zero() {
                    g.re.is_negative()
                } else {
                    g.im.is_negative()
                }
            }
            Scalar::Float(f) => {
                if !f.re.is_zero() {
                    f.re.is_negative()
                } else {
                    f.im.is_negative()
                }
            }
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(g) => write!(f, "{g}"),
            Scalar::Float(c) => {
                if c.im.is_zero() {
                    write!(f, "{}", c.re)
                } else {
                    write!(f, "{}{}{}*i", c.re, if c.im.is_negative() { "-" } else { "+" }, {
                        let mut a = c.im.clone();
                        if a.is_negative() {
                            a = a.neg();
                        }
                        a
                    })
                }
            }
        }
    }
}

/// Convert a small exact rational scalar to `f64` if possible (diagnostics only).
pub fn scalar_to_f64_pair(s: &Scalar) -> Option<(f64, f64)> {
    match s {
        Scalar::Exact(g) => Some((g.re.to_f64()?, g.im.to_f64()?)),
        Scalar::Float(_) => None,
    }
}
