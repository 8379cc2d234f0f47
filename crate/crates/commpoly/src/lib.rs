//! Exact-arithmetic toolkit for the commutation equation
//! `P(Q(x_1,...,x_nu)) = Q(P(x_1),...,P(x_nu))` with `P` univariate and `Q`
//! multivariate.
//!
//! The crate decides whether a pair `(P, Q)` commutes and, for `deg P > 1`
//! and nondegenerate `Q`, constructs the affine conjugation that reduces the
//! pair to the monomial normal form `(x^n, c*x^alpha)` with `c^{n-1} = 1`.
//! A brute-force search over finite coefficient grids independently verifies
//! the classification at small degrees.
//!
//! Modules:
//! - [`scalar`]: coefficients in Q(i) (exact) or arbitrary-precision complex
//!   floats with a tolerance.
//! - [`poly`]: sparse multivariate polynomials, composition, decompositions.
//! - [`affine`]: invertible affine maps and their conjugation action.
//! - [`roots`]: Q(i) root finding with multiplicities; numeric fallback.
//! - [`analyzer`]: commutation residual, normalization, classification.
//! - [`search`]: exhaustive grid enumeration and theorem audits.
//! - [`text`]: expression parser and canonical printer.
//! - [`report`]: deterministic JSON rendering of reports.

pub mod affine;
pub mod analyzer;
pub mod poly;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod search;
pub mod text;

pub use affine::{AffineError, AffineMap};
pub use analyzer::{
    check_leading_nonconstant, check_nondegeneracy, check_power_equation, classify,
    commutator_residual, deduce_p_from_root_map, fixed_points, leading_coeff_equation_check,
    monomial_theorem_check, normalize_unipoly, root_profile, AnalyzerError, ClassificationReport,
    Diagnostic, RootProfile, Verdict,
};
pub use poly::{
    compose_each, compose_outer, Degree, HomogeneousDecomposition, MultiIndex, MultiPoly,
    PolyError, UniPoly,
};
pub use scalar::{Backend, FloatComplex, GaussRat, Scalar};
pub use search::{
    exhaustive_search, perturbation_probe, power_equation_census, CommuterKind, SearchError,
    SearchSpec, SummaryEntry, VerificationSummary,
};
pub use text::{format_poly, format_scalar, parse_poly, ParseError};
