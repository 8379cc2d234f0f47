//! Executable checks for the commutation equation `P(Q(x_1,...,x_nu)) =
//! Q(P(x_1),...,P(x_nu))` and the classification of commuting pairs into the
//! affine monomial normal form `(x^n, c*x^alpha)` with `c^{n-1} = 1`.

use thiserror::Error;

use crate::affine::AffineMap;
use crate::poly::{compose_each, compose_outer, Degree, MultiIndex, MultiPoly, UniPoly};
use crate::roots::{exact_roots, float_roots};
use crate::scalar::{Backend, Scalar};

#[derive(Debug, Error, PartialEq)]
pub enum AnalyzerError {
    #[error("the zero polynomial has no root profile")]
    ZeroPolynomial,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// `Q(P,...,P) - P(Q)`; zero iff the pair commutes.
pub fn commutator_residual(p: &UniPoly, q: &MultiPoly) -> MultiPoly {
    compose_each(q, p)
        .sub(&compose_outer(p, q))
        .expect("matching arity and backend")
}

/// True iff `Q` depends on at least two distinct variables. Constants and
/// single-variable polynomials are degenerate for the main theorem.
pub fn check_nondegeneracy(q: &MultiPoly) -> bool {
    q.support_vars().len() >= 2
}

/// All backend-representable solutions of `P(r) = r`, in canonical order
/// (by real part, then imaginary part).
///
/// For `P = x` every point is fixed; this returns the empty list, which no
/// caller with `deg P > 1` can reach.
pub fn fixed_points(p: &UniPoly) -> Vec<Scalar> {
    let diff = p
        .sub(&match p.backend() {
            Some(Backend::Float) => {
                let one = p.leading_coeff().unwrap().one_like();
                UniPoly::from_coeffs(&[one.zero_like(), one])
            }
            _ => UniPoly::identity(),
        })
        .expect("arity 1");
    distinct_roots(&diff)
}

/// Distinct roots of a univariate polynomial in the polynomial's backend;
/// empty if `deg < 1`.
fn distinct_roots(u: &UniPoly) -> Vec<Scalar> {
    match u.degree() {
        Degree::NegInf | Degree::Finite(0) => return vec![],
        _ => {}
    }
    match u.backend() {
        Some(Backend::Float) => float_roots(u)
            .into_iter()
            .map(|(r, _)| Scalar::Float(r))
            .collect(),
        _ => exact_roots(u)
            .0
            .into_iter()
            .map(|(r, _)| Scalar::Exact(r))
            .collect(),
    }
}

/// Solutions of `c^k = value` in the backend. `1` is listed first when it is
/// a solution (no rescaling beats any rescaling); the rest follow in
/// canonical order.
fn kth_roots(value: &Scalar, k: u32) -> Vec<Scalar> {
    if k == 0 {
        return vec![];
    }
    let one = value.one_like();
    let mut coeffs = vec![value.neg()];
    coeffs.extend(std::iter::repeat(value.zero_like()).take(k as usize - 1));
    coeffs.push(one);
    let mut roots = distinct_roots(&UniPoly::from_coeffs(&coeffs));
    if let Some(pos) = roots.iter().position(|r| r.is_one()) {
        let unit = roots.remove(pos);
        roots.insert(0, unit);
    }
    roots
}

/// Affine normalization: a map `lambda = (z -> c*z) o (z -> z - r)`
/// with `r` a fixed point of `P` and `c^{deg P - 1}` equal to the leading
/// coefficient, so that the conjugate is monic and vanishes at `0`. Among the
/// finitely many such maps, one whose conjugate is the pure power `x^d` wins
/// if it exists (fixed points in canonical order, `c = 1` first); otherwise
/// the canonically first pair is returned. `None` when no fixed point or no
/// suitable `c` exists in the backend.
pub fn normalize_unipoly(p: &UniPoly) -> Option<(AffineMap, UniPoly)> {
    let d = p
        .degree()
        .finite()
        .expect("normalization needs a nonzero polynomial");
    assert!(d > 1, "normalization needs deg P > 1");
    let fps = fixed_points(p);
    let pd = p.leading_coeff().unwrap();
    let scalings = kth_roots(pd, d - 1);
    let mut fallback = None;
    for r in &fps {
        for c in &scalings {
            let lambda = AffineMap::scaling(c.clone())
                .expect("root of a nonzero value is nonzero")
                .compose(&AffineMap::shift(r));
            let normalized = lambda.conjugate_uni(p);
            if normalized.as_multi() == monic_power(d, r).as_multi() {
                return Some((lambda, normalized));
            }
            if fallback.is_none() {
                fallback = Some((lambda, normalized));
            }
        }
    }
    fallback
}

/// Necessary condition extracted from equating top powers of `x_var`:
/// `Q_m^n = a_n^{m-1} * Q_m(P(...))` with `P` substituted componentwise.
/// Holds whenever `(P, Q)` commutes with `deg P > 1`; not sufficient.
pub fn leading_coeff_equation_check(p: &UniPoly, q: &MultiPoly, var: usize) -> bool {
    assert!(q.depends_on(var), "Q must depend on the chosen variable");
    let n = p.degree().finite().expect("P must be nonzero");
    let an = p.leading_coeff().unwrap();
    let m = q.degree_in(var).finite().unwrap();
    let qm = q.leading_coeff_in(var).expect("var in range");
    let lhs = qm.pow_nat(n);
    let rhs = compose_each(&qm, p)
        .scale(&an.pow(m - 1))
        .expect("matching backend");
    lhs == rhs
}

/// Roots with multiplicities of a univariate polynomial, plus the leading
/// coefficient. `complete` records whether the found roots exhaust the
/// degree (always true for the float backend).
#[derive(Debug, Clone, PartialEq)]
pub struct RootProfile {
    pub entries: Vec<(Scalar, u32)>,
    pub leading: Scalar,
    pub complete: bool,
}

impl RootProfile {
    pub fn distinct_root_count(&self) -> usize {
        self.entries.len()
    }

    /// `leading * prod (y - r)^{m(r)}`; only meaningful when complete.
    pub fn reconstruct(&self) -> UniPoly {
        let one = self.leading.one_like();
        let mut acc = UniPoly::from_coeffs(&[self.leading.clone()]);
        for (r, m) in &self.entries {
            let factor = UniPoly::from_coeffs(&[r.neg(), one.clone()]);
            for _ in 0..*m {
                acc = acc.mul(&factor).expect("arity 1");
            }
        }
        acc
    }
}

pub fn root_profile(u: &UniPoly) -> Result<RootProfile, AnalyzerError> {
    if u.is_zero() {
        return Err(AnalyzerError::ZeroPolynomial);
    }
    let leading = u.leading_coeff().unwrap().clone();
    let deg = u.degree().finite().unwrap();
    if deg == 0 {
        return Ok(RootProfile { entries: vec![], leading, complete: true });
    }
    match u.backend() {
        Some(Backend::Float) => {
            let entries = float_roots(u)
                .into_iter()
                .map(|(r, m)| (Scalar::Float(r), m))
                .collect();
            Ok(RootProfile { entries, leading, complete: true })
        }
        _ => {
            let (roots, complete) = exact_roots(u);
            let entries = roots.into_iter().map(|(r, m)| (Scalar::Exact(r), m)).collect();
            Ok(RootProfile { entries, leading, complete })
        }
    }
}

/// The unique `P` compatible with a single-root top coefficient: if the
/// profile has exactly one distinct root `r0`, returns
/// `P(y) = (y - r0)^n + r0`; with more than one root no `P` exists.
pub fn deduce_p_from_root_map(profile: &RootProfile, n: u32) -> Option<UniPoly> {
    assert!(n > 1);
    assert!(profile.complete, "deduction needs a complete profile");
    if profile.entries.len() != 1 {
        return None;
    }
    let r0 = &profile.entries[0].0;
    let one = r0.one_like();
    let linear = UniPoly::from_coeffs(&[r0.neg(), one]);
    let mut acc = UniPoly::from_coeffs(&[r0.one_like()]);
    for _ in 0..n {
        acc = acc.mul(&linear).expect("arity 1");
    }
    acc.add(&UniPoly::from_coeffs(&[r0.clone()])).ok()
}

/// Exact test of `Q(x_1^n, ..., x_nu^n) = Q(x_1, ..., x_nu)^n`.
pub fn check_power_equation(q: &MultiPoly, n: u32) -> bool {
    assert!(n > 1);
    q.raise_exponents(n) == q.pow_nat(n)
}

/// Evidence gathered by [`monomial_theorem_check`].
#[derive(Debug, Clone)]
pub struct MonomialEvidence {
    pub part_degree: u32,
    pub coeff: Scalar,
    pub alpha: MultiIndex,
    pub unity: bool,
}

#[derive(Debug, Clone)]
pub struct PowerEquationAudit {
    pub satisfies: bool,
    pub evidence: Option<MonomialEvidence>,
    /// A nonconstant power-equation solution that is not a monomial with
    /// `c^{n-1} = 1` would contradict the classification; must stay `None`.
    pub violation: Option<String>,
}

/// Audit: a nonconstant solution of the power equation must be a single
/// homogeneous part that is one term `c*x^alpha` with `c^{n-1} = 1`.
pub fn monomial_theorem_check(q: &MultiPoly, n: u32) -> PowerEquationAudit {
    assert!(n > 1);
    assert!(!q.is_constant(), "audit applies to nonconstant Q");
    if !check_power_equation(q, n) {
        return PowerEquationAudit { satisfies: false, evidence: None, violation: None };
    }
    let decomp = q.homogeneous_parts();
    let nonzero = decomp.nonzero();
    if nonzero.len() != 1 {
        return PowerEquationAudit {
            satisfies: true,
            evidence: None,
            violation: Some(format!(
                "power-equation solution with {} nonzero homogeneous parts",
                nonzero.len()
            )),
        };
    }
    let part_degree = nonzero[0] as u32;
    match q.is_monomial() {
        None => PowerEquationAudit {
            satisfies: true,
            evidence: None,
            violation: Some("homogeneous power-equation solution with several terms".into()),
        },
        Some((c, alpha)) => {
            let unity = c.pow(n - 1).is_one();
            let violation =
                (!unity).then(|| "monomial solution with c^(n-1) != 1".to_string());
            PowerEquationAudit {
                satisfies: true,
                evidence: Some(MonomialEvidence {
                    part_degree,
                    coeff: c.clone(),
                    alpha: alpha.clone(),
                    unity,
                }),
                violation,
            }
        }
    }
}

/// Theorem audit: for a commuting nondegenerate pair with `deg P > 1`, the
/// top coefficient polynomial of `Q` in every dependent variable is
/// non-constant. `Ok(false)` would indicate a bug, not a valid input.
pub fn check_leading_nonconstant(p: &UniPoly, q: &MultiPoly) -> Result<bool, AnalyzerError> {
    if !commutator_residual(p, q).is_zero() {
        return Err(AnalyzerError::PreconditionViolated("pair does not commute".into()));
    }
    if p.degree().finite().map_or(true, |d| d <= 1) {
        return Err(AnalyzerError::PreconditionViolated("deg P must exceed 1".into()));
    }
    if !check_nondegeneracy(q) {
        return Err(AnalyzerError::PreconditionViolated(
            "Q must depend on at least two variables".into(),
        ));
    }
    for var in q.support_vars() {
        if q.leading_coeff_in(var).expect("var in range").is_constant() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of a named pipeline check.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub name: String,
    pub pass: bool,
}

impl Diagnostic {
    fn new(name: &str, pass: bool) -> Self {
        Diagnostic { name: name.to_string(), pass }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    /// The pair is affinely conjugate to `(x^n, c*x^alpha)` with
    /// `c^{n-1} = 1`; `lambda` is the conjugating map.
    NormalForm {
        lambda: AffineMap,
        n: u32,
        alpha: MultiIndex,
        c: Scalar,
    },
    NotCommuting {
        residual: MultiPoly,
    },
    DegreeOneP,
    ConstantQ,
    DegenerateSingleVariable,
    /// The pair commutes and the theorem applies, but the conjugating map
    /// does not lie in the scalar backend.
    ExactBackendInsufficient,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub diagnostics: Vec<Diagnostic>,
}

impl ClassificationReport {
    pub fn is_normal_form(&self) -> bool {
        matches!(self.verdict, Verdict::NormalForm { .. })
    }

    /// A commuting verdict: anything except `NotCommuting`.
    pub fn commutes(&self) -> bool {
        !matches!(self.verdict, Verdict::NotCommuting { .. })
    }
}

/// Full classification pipeline.
pub fn classify(p: &UniPoly, q: &MultiPoly) -> ClassificationReport {
    let mut diagnostics = Vec::new();
    let residual = commutator_residual(p, q);
    let commutes = residual.is_zero();
    diagnostics.push(Diagnostic::new("commutation", commutes));
    if !commutes {
        return ClassificationReport { verdict: Verdict::NotCommuting { residual }, diagnostics };
    }
    let n = match p.degree() {
        Degree::Finite(d) if d > 1 => d,
        _ => {
            return ClassificationReport { verdict: Verdict::DegreeOneP, diagnostics };
        }
    };
    if q.is_constant() {
        return ClassificationReport { verdict: Verdict::ConstantQ, diagnostics };
    }
    let nondeg = check_nondegeneracy(q);
    diagnostics.push(Diagnostic::new("nondegeneracy", nondeg));
    if !nondeg {
        return ClassificationReport { verdict: Verdict::DegenerateSingleVariable, diagnostics };
    }
    let eq1 = q
        .support_vars()
        .into_iter()
        .all(|v| leading_coeff_equation_check(p, q, v));
    diagnostics.push(Diagnostic::new("eq1", eq1));

    let fps = fixed_points(p);
    diagnostics.push(Diagnostic::new("root_analysis", !fps.is_empty()));
    let pd = p.leading_coeff().unwrap();
    let scalings = kth_roots(pd, n - 1);
    for r in &fps {
        for c in &scalings {
            let lambda = AffineMap::scaling(c.clone())
                .expect("nonzero scaling")
                .compose(&AffineMap::shift(r));
            let pc = lambda.conjugate_uni(p);
            if pc.as_multi() != monic_power(n, r).as_multi() {
                continue;
            }
            let qc = lambda.conjugate(q);
            if let Some((coeff, alpha)) = qc.is_monomial() {
                let unity = coeff.pow(n - 1).is_one();
                diagnostics.push(Diagnostic::new("monomial_test", true));
                debug_assert!(unity, "commutation forces c^(n-1) = 1");
                if unity {
                    return ClassificationReport {
                        verdict: Verdict::NormalForm {
                            lambda,
                            n,
                            alpha: alpha.clone(),
                            c: coeff.clone(),
                        },
                        diagnostics,
                    };
                }
            }
        }
    }
    diagnostics.push(Diagnostic::new("monomial_test", false));
    ClassificationReport { verdict: Verdict::ExactBackendInsufficient, diagnostics }
}

/// `x^n` in the backend of the witness scalar.
fn monic_power(n: u32, like: &Scalar) -> UniPoly {
    let mut coeffs = vec![like.zero_like(); n as usize];
    coeffs.push(like.one_like());
    UniPoly::from_coeffs(&coeffs)
}
