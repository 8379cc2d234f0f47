//! Root finding for univariate polynomials.
//!
//! Exact backend: all Q(i) roots with multiplicities, via Gaussian-integer
//! divisor candidates (the rational-root theorem over Z[i]) verified by
//! evaluation. Roots outside Q(i) are not found; callers learn this from the
//! residual degree after deflation.
//!
//! Float backend: Durand-Kerner iteration with cluster detection for
//! multiple roots.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::UniPoly;
use crate::scalar::{FloatComplex, GaussRat};

// ---------------------------------------------------------------------------
// Gaussian integers
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    fn from_i64(re: i64, im: i64) -> Self {
        GaussInt::new(BigInt::from(re), BigInt::from(im))
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn mul(&self, o: &Self) -> Self {
        GaussInt::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -self.im.clone())
    }

    /// Exact quotient `self / o` if `o` divides `self`.
    fn exact_div(&self, o: &Self) -> Option<Self> {
        let n = o.norm();
        let t = self.mul(&o.conj());
        let (qr, rr) = t.re.div_rem(&n);
        let (qi, ri) = t.im.div_rem(&n);
        if rr.is_zero() && ri.is_zero() {
            Some(GaussInt::new(qr, qi))
        } else {
            None
        }
    }

    /// Division with remainder, rounding each component to nearest.
    fn div_round(&self, o: &Self) -> Self {
        let n = o.norm();
        let t = self.mul(&o.conj());
        GaussInt::new(round_div(&t.re, &n), round_div(&t.im, &n))
    }

    fn sub(&self, o: &Self) -> Self {
        GaussInt::new(&self.re - &o.re, &self.im - &o.im)
    }
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    // round(a/b) for b > 0
    let two = BigInt::from(2);
    let (mut q, r) = a.div_rem(b);
    if &r * &two >= *b {
        q += 1;
    } else if &r * &two < -b.clone() {
        q -= 1;
    }
    q
}

pub(crate) fn gauss_gcd(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let q = x.div_round(&y);
        let r = x.sub(&q.mul(&y));
        x = y;
        y = r;
    }
    x
}

// ---------------------------------------------------------------------------
// Divisor enumeration
// ---------------------------------------------------------------------------

fn miller_rabin(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let bp = BigInt::from(p);
        if *n == bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n1 = n - &one;
    let mut d = n1.clone();
    let mut s = 0u32;
    while (&d % 2u8).is_zero() {
        d /= 2u8;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x.modpow(&BigInt::from(2u8), n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A Gaussian prime above the rational prime `p`.
fn gaussian_prime_above(p: &BigInt) -> Option<GaussInt> {
    if *p == BigInt::from(2) {
        return Some(GaussInt::from_i64(1, 1));
    }
    if (p % 4u8) == BigInt::from(3) {
        return Some(GaussInt::new(p.clone(), BigInt::zero()));
    }
    // p = 1 mod 4: find sqrt(-1) mod p, then gcd(p, x + i) has norm p
    let exp = (p - 1u8) / 4u8;
    let mut a = BigInt::from(2);
    loop {
        let x = a.modpow(&exp, p);
        let sq = x.modpow(&BigInt::from(2u8), p);
        if sq == p - 1u8 {
            let g = gauss_gcd(&GaussInt::new(p.clone(), BigInt::zero()), &GaussInt::new(x, BigInt::one()));
            return Some(g);
        }
        a += 1u8;
        if a > BigInt::from(1000) {
            return None; // never for genuine primes
        }
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Factor `n > 0` by trial division plus a primality test on the leftover.
/// Returns `(primes, fully_factored)`.
fn factor_norm(mut n: BigInt) -> (Vec<BigInt>, bool) {
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        if (&n % &bp).is_zero() {
            primes.push(bp.clone());
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        (primes, true)
    } else if miller_rabin(&n) {
        primes.push(n);
        (primes, true)
    } else {
        (primes, false)
    }
}

/// All divisors of `g` up to unit multiples. Returns `None` when the norm
/// cannot be fully factored (coefficients beyond desk scale).
fn gaussian_divisors(g: &GaussInt) -> Option<Vec<GaussInt>> {
    assert!(!g.is_zero());
    let (primes, complete) = factor_norm(g.norm());
    if !complete {
        return None;
    }
    // Gaussian prime powers dividing g
    let mut prime_powers: Vec<Vec<GaussInt>> = Vec::new();
    for p in &primes {
        let pi = gaussian_prime_above(p)?;
        for cand in [pi.clone(), pi.conj()] {
            let mut powers = vec![GaussInt::from_i64(1, 0)];
            let mut w = g.clone();
            let mut acc = GaussInt::from_i64(1, 0);
            while let Some(next) = w.exact_div(&cand) {
                if cand.is_unit() {
                    break;
                }
                acc = acc.mul(&cand);
                powers.push(acc.clone());
                w = next;
            }
            if powers.len() > 1 {
                prime_powers.push(powers);
            }
            if (p % 4u8) == BigInt::from(3) || *p == BigInt::from(2) {
                break; // inert and ramified primes have one prime above
            }
        }
    }
    let mut divisors = vec![GaussInt::from_i64(1, 0)];
    for powers in &prime_powers {
        let mut next = Vec::with_capacity(divisors.len() * powers.len());
        for d in &divisors {
            for q in powers {
                next.push(d.mul(q));
            }
        }
        divisors = next;
    }
    Some(divisors)
}

// ---------------------------------------------------------------------------
// Exact roots
// ---------------------------------------------------------------------------

fn eval_gauss(coeffs: &[GaussRat], z: &GaussRat) -> GaussRat {
    let mut acc = GaussRat::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(c);
    }
    acc
}

/// Deflate by `(x - r)`; `r` must be a root.
fn deflate(coeffs: &[GaussRat], r: &GaussRat) -> Vec<GaussRat> {
    let n = coeffs.len() - 1;
    let mut out = vec![GaussRat::zero(); n];
    let mut carry = coeffs[n].clone();
    for k in (1..=n).rev() {
        out[k - 1] = carry.clone();
        carry = coeffs[k - 1].add(&carry.mul(r));
    }
    debug_assert!(carry.is_zero(), "deflation by a non-root");
    out
}

fn trim(coeffs: &mut Vec<GaussRat>) {
    while coeffs.last().is_some_and(GaussRat::is_zero) {
        coeffs.pop();
    }
}

/// All Q(i) roots of an exact univariate polynomial with multiplicities.
/// The boolean is true when the found roots exhaust the degree.
pub fn exact_roots(u: &UniPoly) -> (Vec<(GaussRat, u32)>, bool) {
    let coeffs: Vec<GaussRat> = u
        .coeffs()
        .iter()
        .map(|c| c.as_exact().expect("exact backend").clone())
        .collect();
    let mut w = coeffs;
    trim(&mut w);
    assert!(w.len() >= 2, "root finding needs degree >= 1");

    let mut roots: Vec<(GaussRat, u32)> = Vec::new();

    // zero roots
    let k = w.iter().position(|c| !c.is_zero()).unwrap();
    if k > 0 {
        roots.push((GaussRat::zero(), k as u32));
        w.drain(..k);
    }

    if w.len() >= 3 {
        if let Some(cands) = rational_root_candidates(&w) {
            for r in cands {
                let mut mult = 0u32;
                while w.len() >= 2 && eval_gauss(&w, &r).is_zero() {
                    w = deflate(&w, &r);
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((r, mult));
                }
                if w.len() < 3 {
                    break;
                }
            }
        }
    }

    // a remaining linear factor is always solvable
    if w.len() == 2 {
        let r = w[0].neg().div(&w[1]);
        roots.push((r, 1));
        w = vec![w[1].clone()];
    }

    roots.sort_by(|a, b| a.0.canon_cmp(&b.0));
    (roots, w.len() == 1)
}

/// Candidates `u * d1 / d2` with `d1 | a_0`, `d2 | a_n` over Z[i], after
/// clearing denominators and content.
fn rational_root_candidates(w: &[GaussRat]) -> Option<Vec<GaussRat>> {
    // clear denominators
    let mut lcm = BigInt::one();
    for c in w {
        lcm = lcm.lcm(c.re.denom());
        lcm = lcm.lcm(c.im.denom());
    }
    let ints: Vec<GaussInt> = w
        .iter()
        .map(|c| {
            GaussInt::new(
                (&c.re * BigRational::from_integer(lcm.clone())).to_integer(),
                (&c.im * BigRational::from_integer(lcm.clone())).to_integer(),
            )
        })
        .collect();
    // content
    let mut content = GaussInt::from_i64(0, 0);
    for c in &ints {
        if !c.is_zero() {
            content = if content.is_zero() { c.clone() } else { gauss_gcd(&content, c) };
        }
    }
    let prim: Vec<GaussInt> = ints
        .iter()
        .map(|c| {
            if c.is_zero() {
                c.clone()
            } else {
                c.exact_div(&content).expect("content divides")
            }
        })
        .collect();
    let a0 = prim.first().unwrap();
    let an = prim.last().unwrap();
    let num_divs = gaussian_divisors(a0)?;
    let den_divs = gaussian_divisors(an)?;

    // cheap pre-filter: a root p/q (coprime) gives A(x) = (qx - p) C(x) over
    // Z[i], so N(q - p) | N(A(1)) and N(q + p) | N(A(-1))
    let at_one = prim.iter().fold(GaussInt::from_i64(0, 0), |acc, c| {
        GaussInt::new(acc.re + &c.re, acc.im + &c.im)
    });
    let at_minus_one = prim
        .iter()
        .enumerate()
        .fold(GaussInt::from_i64(0, 0), |acc, (k, c)| {
            if k % 2 == 0 {
                GaussInt::new(acc.re + &c.re, acc.im + &c.im)
            } else {
                GaussInt::new(acc.re - &c.re, acc.im - &c.im)
            }
        });
    let norm_at_one = (!at_one.is_zero()).then(|| at_one.norm());
    let norm_at_minus_one = (!at_minus_one.is_zero()).then(|| at_minus_one.norm());
    let admissible = |p: &GaussInt, q: &GaussInt| -> bool {
        if let Some(n1) = &norm_at_one {
            let t = q.sub(p).norm();
            if t.is_zero() || !(n1 % t).is_zero() {
                return false;
            }
        }
        if let Some(nm1) = &norm_at_minus_one {
            let t = GaussInt::new(&q.re + &p.re, &q.im + &p.im).norm();
            if t.is_zero() || !(nm1 % t).is_zero() {
                return false;
            }
        }
        true
    };

    let units = [
        GaussInt::from_i64(1, 0),
        GaussInt::from_i64(-1, 0),
        GaussInt::from_i64(0, 1),
        GaussInt::from_i64(0, -1),
    ];
    let mut seen: BTreeSet<(BigRational, BigRational)> = BTreeSet::new();
    let mut out = Vec::new();
    for d1 in &num_divs {
        for d2 in &den_divs {
            let g = gauss_gcd(d1, d2);
            let base = d1.exact_div(&g).expect("gcd divides");
            let q = d2.exact_div(&g).expect("gcd divides");
            let qn = q.norm();
            for u in &units {
                let p = u.mul(&base);
                if !admissible(&p, &q) {
                    continue;
                }
                let den_norm = BigRational::from_integer(qn.clone());
                let t = p.mul(&q.conj());
                let cand = GaussRat::new(
                    BigRational::from_integer(t.re) / den_norm.clone(),
                    BigRational::from_integer(t.im) / den_norm,
                );
                if seen.insert((cand.re.clone(), cand.im.clone())) {
                    out.push(cand);
                }
            }
        }
    }
    // deterministic candidate order
    out.sort_by(|a, b| a.canon_cmp(b));
    Some(out)
}

// ---------------------------------------------------------------------------
// Float roots (Durand-Kerner)
// ---------------------------------------------------------------------------

fn eval_fc(coeffs: &[FloatComplex], z: &FloatComplex) -> FloatComplex {
    let mut acc = coeffs.last().unwrap().clone();
    for c in coeffs.iter().rev().skip(1) {
        acc = acc.mul(z).add(c);
    }
    acc
}

/// Numeric roots with multiplicities, clustered at `sqrt(eps)` radius.
pub fn float_roots(u: &UniPoly) -> Vec<(FloatComplex, u32)> {
    let coeffs: Vec<FloatComplex> = u
        .coeffs()
        .iter()
        .map(|c| c.as_float().expect("float backend").clone())
        .collect();
    let n = coeffs.len() - 1;
    assert!(n >= 1, "root finding needs degree >= 1");
    let lead = coeffs.last().unwrap();
    let monic: Vec<FloatComplex> = coeffs.iter().map(|c| c.div(lead)).collect();
    let prec = lead.prec;
    let eps = lead.eps.clone();

    // initial guesses on a spiral
    let seed = FloatComplex::from_f64(0.4, 0.9, prec, eps.clone());
    let mut zs: Vec<FloatComplex> = (0..n).map(|k| seed.pow(k as u32 + 1)).collect();

    let tol = {
        // eps * 2^-20 as the iteration stop threshold
        let mut t = eps.clone();
        for _ in 0..20 {
            t = t.mul(&astro_float::BigFloat::from_f64(0.5, prec), prec, astro_float::RoundingMode::ToEven);
        }
        t
    };
    for _ in 0..500 {
        let mut max_delta = astro_float::BigFloat::from_f64(0.0, prec);
        for k in 0..n {
            let pk = eval_fc(&monic, &zs[k]);
            let mut denom = FloatComplex::from_f64(1.0, 0.0, prec, eps.clone());
            for j in 0..n {
                if j != k {
                    denom = denom.mul(&zs[k].sub(&zs[j]));
                }
            }
            if denom.abs().is_zero() {
                continue;
            }
            let delta = pk.div(&denom);
            zs[k] = zs[k].sub(&delta);
            let d = delta.abs();
            if matches!(d.cmp(&max_delta), Some(c) if c > 0) {
                max_delta = d;
            }
        }
        if matches!(max_delta.cmp(&tol), Some(c) if c < 0) {
            break;
        }
    }

    // cluster within sqrt(eps)
    let rm = astro_float::RoundingMode::ToEven;
    let radius = eps.sqrt(prec, rm);
    zs.sort_by(|a, b| a.canon_cmp(b));
    let mut out: Vec<(FloatComplex, u32)> = Vec::new();
    for z in zs {
        match out.last_mut() {
            Some((rep, m)) if matches!(rep.sub(&z).abs().cmp(&radius), Some(c) if c <= 0) => {
                *m += 1;
            }
            _ => out.push((z, 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Scalar, DEFAULT_PREC};

    fn uni(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(&cs.iter().map(|&c| Scalar::from_int(c)).collect::<Vec<_>>())
    }

    #[test]
    fn gauss_gcd_basic() {
        // gcd(5, 2+i) is 2+i up to a unit
        let g = gauss_gcd(&GaussInt::from_i64(5, 0), &GaussInt::from_i64(2, 1));
        assert_eq!(g.norm(), BigInt::from(5));
    }

    #[test]
    fn roots_of_factored_cubic() {
        // y^2 (y - 1) = y^3 - y^2
        let (roots, complete) = exact_roots(&uni(&[0, 0, -1, 1]));
        assert!(complete);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0], (GaussRat::zero(), 2));
        assert_eq!(roots[1], (GaussRat::one(), 1));
    }

    #[test]
    fn triple_root_at_minus_one() {
        // (y+1)^3 = y^3 + 3y^2 + 3y + 1
        let (roots, complete) = exact_roots(&uni(&[1, 3, 3, 1]));
        assert!(complete);
        assert_eq!(roots, vec![(GaussRat::from_int(-1), 3)]);
    }

    #[test]
    fn gaussian_pair_of_y2_plus_1() {
        let (roots, complete) = exact_roots(&uni(&[1, 0, 1]));
        assert!(complete);
        assert_eq!(roots.len(), 2);
        // canonical order: -i before i
        assert_eq!(roots[0], (GaussRat::i().neg(), 1));
        assert_eq!(roots[1], (GaussRat::i(), 1));
    }

    #[test]
    fn irrational_roots_marked_incomplete() {
        // y^2 - 2 has no Q(i) roots
        let (roots, complete) = exact_roots(&uni(&[-2, 0, 1]));
        assert!(roots.is_empty());
        assert!(!complete);
    }

    #[test]
    fn rational_non_integer_root() {
        // (2y - 3)(y + 5) = 2y^2 + 7y - 15
        let (roots, complete) = exact_roots(&uni(&[-15, 7, 2]));
        assert!(complete);
        assert_eq!(
            roots,
            vec![
                (GaussRat::from_int(-5), 1),
                (
                    GaussRat::new(BigRational::new(BigInt::from(3), BigInt::from(2)), BigRational::zero()),
                    1
                )
            ]
        );
    }

    #[test]
    fn float_quadratic() {
        let eps = FloatComplex::default_eps(DEFAULT_PREC);
        // x^2 - x: roots 0 and 1
        let p = uni(&[0, -1, 1]).to_float(DEFAULT_PREC, &eps);
        let roots = float_roots(&p);
        assert_eq!(roots.len(), 2);
        let zero = Scalar::zero().to_float(DEFAULT_PREC, &eps);
        let one = Scalar::one().to_float(DEFAULT_PREC, &eps);
        assert_eq!(Scalar::Float(roots[0].0.clone()), zero);
        assert_eq!(Scalar::Float(roots[1].0.clone()), one);
    }

    #[test]
    fn float_double_root() {
        let eps = FloatComplex::default_eps(DEFAULT_PREC);
        // (x - 2)^2 = x^2 - 4x + 4
        let p = uni(&[4, -4, 1]).to_float(DEFAULT_PREC, &eps);
        let roots = float_roots(&p);
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].1, 2);
    }
}
