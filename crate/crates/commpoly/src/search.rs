//! Independent brute-force oracle: enumerate all polynomials with
//! coefficients from a finite exact grid up to a total-degree bound, find
//! every candidate commuting with a given `P`, and cross-check the
//! classifier against this exhaustive ground truth.
//!
//! Enumeration order is canonical and independent of the worker count; a
//! candidate is the base-`|grid|` decoding of its index over the graded-lex
//! ordered multi-index list.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::analyzer::{classify, commutator_residual, monomial_theorem_check, ClassificationReport};
use crate::poly::{MultiIndex, MultiPoly, UniPoly};
use crate::scalar::{Backend, Scalar};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum SearchError {
    #[error("grid must not be empty")]
    EmptyGrid,
    #[error("grid scalars must use the exact backend")]
    FloatGrid,
    #[error("candidate count {candidates} exceeds budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
    #[error("search needs deg P > 1")]
    DegreeTooSmall,
}

/// Parameters of one exhaustive enumeration.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub arity: usize,
    pub max_total_degree: u32,
    pub grid: Vec<Scalar>,
    pub worker_count: usize,
    pub budget: u64,
}

impl SearchSpec {
    pub fn new(arity: usize, max_total_degree: u32, grid: Vec<Scalar>) -> Self {
        SearchSpec {
            arity,
            max_total_degree,
            grid,
            worker_count: 1,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_workers(mut self, n: usize) -> Self {
        self.worker_count = n.max(1);
        self
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.grid.is_empty() {
            return Err(SearchError::EmptyGrid);
        }
        if self.grid.iter().any(|s| s.backend() != Backend::Exact) {
            return Err(SearchError::FloatGrid);
        }
        Ok(())
    }

    /// Multi-indices with `|alpha| <= max_total_degree`, graded-lex ascending.
    pub fn multi_indices(&self) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.arity];
        collect_indices(&mut cur, 0, self.max_total_degree, &mut out);
        out.sort();
        out
    }

    /// `|grid| ^ (number of multi-indices)`.
    pub fn candidate_count(&self) -> u128 {
        let k = self.multi_indices().len() as u32;
        (self.grid.len() as u128).saturating_pow(k)
    }

    fn checked_count(&self) -> Result<u64, SearchError> {
        self.validate()?;
        let candidates = self.candidate_count();
        if candidates > self.budget as u128 {
            return Err(SearchError::BudgetExceeded { candidates, budget: self.budget });
        }
        Ok(candidates as u64)
    }

    /// Decode candidate `idx` (little-endian base `|grid|` over the
    /// multi-index list).
    pub fn candidate(&self, mut idx: u64, indices: &[MultiIndex]) -> MultiPoly {
        let base = self.grid.len() as u64;
        let mut q = MultiPoly::zero(self.arity);
        for mi in indices {
            let digit = (idx % base) as usize;
            idx /= base;
            q.add_term(mi.clone(), self.grid[digit].clone());
        }
        q
    }

    /// All candidates in canonical order.
    pub fn enumerate_candidates(&self) -> Result<CandidateIter<'_>, SearchError> {
        let total = self.checked_count()?;
        Ok(CandidateIter { spec: self, indices: self.multi_indices(), next: 0, total })
    }
}

fn collect_indices(cur: &mut Vec<u32>, var: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if var == cur.len() {
        out.push(MultiIndex::new(cur.clone()));
        return;
    }
    for e in 0..=remaining {
        cur[var] = e;
        collect_indices(cur, var + 1, remaining - e, out);
    }
    cur[var] = 0;
}

pub struct CandidateIter<'a> {
    spec: &'a SearchSpec,
    indices: Vec<MultiIndex>,
    next: u64,
    total: u64,
}

impl Iterator for CandidateIter<'_> {
    type Item = MultiPoly;

    fn next(&mut self) -> Option<MultiPoly> {
        if self.next >= self.total {
            return None;
        }
        let q = self.spec.candidate(self.next, &self.indices);
        self.next += 1;
        Some(q)
    }
}

/// Which hypothesis bucket a commuting candidate falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommuterKind {
    /// Constant `Q`; commutes iff the constant is a fixed point of `P`.
    Constant,
    /// Depends on exactly one variable; outside the theorem's hypotheses.
    SingleVariable,
    /// Depends on at least two variables; the theorem applies.
    Nondegenerate,
}

pub fn commuter_kind(q: &MultiPoly) -> CommuterKind {
    match q.support_vars().len() {
        0 => CommuterKind::Constant,
        1 => CommuterKind::SingleVariable,
        _ => CommuterKind::Nondegenerate,
    }
}

#[derive(Debug, Clone)]
pub struct SummaryEntry {
    pub q: MultiPoly,
    pub kind: CommuterKind,
    pub report: Option<ClassificationReport>,
}

/// Result of an exhaustive run. `violations` must stay empty; a nonempty
/// list is a reportable defect in either the implementation or the
/// transcription of the theorem.
#[derive(Debug)]
pub struct VerificationSummary {
    pub total_candidates: u64,
    pub entries: Vec<SummaryEntry>,
    pub violations: Vec<String>,
    pub wall_time: Duration,
}

impl VerificationSummary {
    pub fn commuting_polys(&self) -> Vec<&MultiPoly> {
        self.entries.iter().map(|e| &e.q).collect()
    }

    pub fn nondegenerate(&self) -> impl Iterator<Item = &SummaryEntry> {
        self.entries.iter().filter(|e| e.kind == CommuterKind::Nondegenerate)
    }
}

fn run_partitioned<T: Send>(
    total: u64,
    workers: usize,
    work: impl Fn(u64) -> Option<T> + Sync,
) -> Vec<(u64, T)> {
    let workers = workers.clamp(1, 64);
    let chunk = total.div_ceil(workers as u64).max(1);
    let mut merged: Vec<(u64, T)> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let lo = chunk * w as u64;
            let hi = (lo + chunk).min(total);
            let work = &work;
            handles.push(scope.spawn(move || {
                let mut found = Vec::new();
                for idx in lo..hi {
                    if let Some(t) = work(idx) {
                        found.push((idx, t));
                    }
                }
                found
            }));
        }
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    merged.sort_by_key(|(idx, _)| *idx);
    merged
}

/// Find every grid candidate commuting with `P`, classify the survivors,
/// and assert the theorem on the nondegenerate ones.
pub fn exhaustive_search(p: &UniPoly, spec: &SearchSpec) -> Result<VerificationSummary, SearchError> {
    if p.degree().finite().map_or(true, |d| d <= 1) {
        return Err(SearchError::DegreeTooSmall);
    }
    let total = spec.checked_count()?;
    let indices = spec.multi_indices();
    let start = Instant::now();

    let hits = run_partitioned(total, spec.worker_count, |idx| {
        let q = spec.candidate(idx, &indices);
        commutator_residual(p, &q).is_zero().then_some(q)
    });

    let mut entries = Vec::with_capacity(hits.len());
    let mut violations = Vec::new();
    for (_, q) in hits {
        let kind = commuter_kind(&q);
        let report = classify(p, &q);
        match kind {
            CommuterKind::Constant => {
                // constants commuting with P are exactly its fixed points
                if let Some(c) = q.constant_term() {
                    if &p.eval(c) != c {
                        violations.push(format!(
                            "constant commuter {} is not a fixed point of P",
                            crate::text::format_poly(&q)
                        ));
                    }
                }
            }
            CommuterKind::SingleVariable => {}
            CommuterKind::Nondegenerate => {
                if !report.is_normal_form() {
                    violations.push(format!(
                        "nondegenerate commuter {} did not classify to a normal form: {:?}",
                        crate::text::format_poly(&q),
                        report.verdict
                    ));
                }
            }
        }
        entries.push(SummaryEntry { q, kind, report: Some(report) });
    }

    Ok(VerificationSummary {
        total_candidates: total,
        entries,
        violations,
        wall_time: start.elapsed(),
    })
}

/// For each `delta`, does `(P, Q + delta)` still commute?
pub fn perturbation_probe(
    p: &UniPoly,
    q: &MultiPoly,
    deltas: &[MultiPoly],
) -> Vec<(MultiPoly, bool)> {
    assert!(
        commutator_residual(p, q).is_zero(),
        "probe baseline must commute"
    );
    deltas
        .iter()
        .map(|d| {
            let perturbed = q.add(d).expect("matching arity");
            let ok = commutator_residual(p, &perturbed).is_zero();
            (d.clone(), ok)
        })
        .collect()
}

/// Enumerate candidates and keep those satisfying the power equation
/// `Q(x^n, ...) = Q^n`; audit that every nonconstant survivor is a monomial
/// with `c^{n-1} = 1` and every survivor with a nonzero constant part is
/// constant.
pub fn power_equation_census(n: u32, spec: &SearchSpec) -> Result<VerificationSummary, SearchError> {
    assert!(n > 1);
    let total = spec.checked_count()?;
    let indices = spec.multi_indices();
    let start = Instant::now();

    let hits = run_partitioned(total, spec.worker_count, |idx| {
        let q = spec.candidate(idx, &indices);
        crate::analyzer::check_power_equation(&q, n).then_some(q)
    });

    let mut entries = Vec::with_capacity(hits.len());
    let mut violations = Vec::new();
    for (_, q) in hits {
        let kind = commuter_kind(&q);
        if !q.is_constant() {
            let audit = monomial_theorem_check(&q, n);
            if let Some(v) = audit.violation {
                violations.push(format!("{}: {v}", crate::text::format_poly(&q)));
            }
            if q.constant_term().is_some() {
                violations.push(format!(
                    "{}: nonconstant survivor with nonzero constant part",
                    crate::text::format_poly(&q)
                ));
            }
        }
        entries.push(SummaryEntry { q, kind, report: None });
    }

    Ok(VerificationSummary {
        total_candidates: total,
        entries,
        violations,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(vals: &[i64]) -> Vec<Scalar> {
        vals.iter().map(|&v| Scalar::from_int(v)).collect()
    }

    #[test]
    fn counting_examples() {
        let s = SearchSpec::new(2, 1, grid(&[0, 1]));
        assert_eq!(s.multi_indices().len(), 3);
        assert_eq!(s.candidate_count(), 8);
        assert_eq!(s.enumerate_candidates().unwrap().count(), 8);

        let s2 = SearchSpec::new(2, 2, grid(&[-1, 0, 1]));
        assert_eq!(s2.multi_indices().len(), 6);
        assert_eq!(s2.candidate_count(), 729);
    }

    #[test]
    fn degenerate_grid_gives_only_zero() {
        let s = SearchSpec::new(2, 2, grid(&[0]));
        let cands: Vec<_> = s.enumerate_candidates().unwrap().collect();
        assert_eq!(cands.len(), 1);
        assert!(cands[0].is_zero());
    }

    #[test]
    fn enumeration_is_exhaustive_and_distinct() {
        let s = SearchSpec::new(2, 1, grid(&[0, 1, 2]));
        let cands: Vec<_> = s.enumerate_candidates().unwrap().collect();
        assert_eq!(cands.len(), 27);
        for i in 0..cands.len() {
            for j in i + 1..cands.len() {
                assert_ne!(cands[i], cands[j]);
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let mut s = SearchSpec::new(2, 2, grid(&[-1, 0, 1]));
        s.budget = 100;
        assert_eq!(
            s.enumerate_candidates().err(),
            Some(SearchError::BudgetExceeded { candidates: 729, budget: 100 })
        );
        assert!(exhaustive_search(&UniPoly::power(2), &s).is_err());
    }

    #[test]
    fn search_for_x_squared_small() {
        // P = x^2, deg <= 1, grid {0, 1}: commuting set {0, 1, x, y}
        let s = SearchSpec::new(2, 1, grid(&[0, 1]));
        let sum = exhaustive_search(&UniPoly::power(2), &s).unwrap();
        assert!(sum.violations.is_empty());
        let found: Vec<String> = sum
            .entries
            .iter()
            .map(|e| crate::text::format_poly(&e.q))
            .collect();
        let mut sorted = found.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["0", "1", "x1", "x2"]);
    }

    #[test]
    fn determinism_across_worker_counts() {
        let p = UniPoly::power(2);
        let s1 = SearchSpec::new(2, 2, grid(&[-1, 0, 1])).with_workers(1);
        let s3 = SearchSpec::new(2, 2, grid(&[-1, 0, 1])).with_workers(3);
        let a = exhaustive_search(&p, &s1).unwrap();
        let b = exhaustive_search(&p, &s3).unwrap();
        assert_eq!(a.total_candidates, b.total_candidates);
        assert_eq!(
            a.entries.iter().map(|e| e.q.clone()).collect::<Vec<_>>(),
            b.entries.iter().map(|e| e.q.clone()).collect::<Vec<_>>()
        );
        assert_eq!(a.violations, b.violations);
    }

    #[test]
    fn perturbation_examples() {
        let p = UniPoly::power(2);
        let xy = MultiPoly::monomial(2, &[1, 1], Scalar::one());
        let deltas = vec![
            MultiPoly::var(2, 0),
            MultiPoly::zero(2),
            xy.clone(),
        ];
        let probes = perturbation_probe(&p, &xy, &deltas);
        assert!(!probes[0].1); // Q + x breaks
        assert!(probes[1].1); // unchanged pair
        assert!(!probes[2].1); // 2xy has c = 2
    }

    #[test]
    fn census_examples() {
        // n = 2: survivors are 0 plus the coefficient-1 monomials
        let s = SearchSpec::new(2, 2, grid(&[-1, 0, 1]));
        let sum = power_equation_census(2, &s).unwrap();
        assert!(sum.violations.is_empty());
        let mut found: Vec<String> = sum
            .entries
            .iter()
            .map(|e| crate::text::format_poly(&e.q))
            .collect();
        found.sort();
        assert_eq!(found, vec!["0", "1", "x1", "x1*x2", "x1^2", "x2", "x2^2"]);

        // n = 3: -xy survives since (-1)^2 = 1
        let sum3 = power_equation_census(3, &s).unwrap();
        assert!(sum3.violations.is_empty());
        assert!(sum3
            .entries
            .iter()
            .any(|e| crate::text::format_poly(&e.q) == "-x1*x2"));

        // degenerate grid
        let s0 = SearchSpec::new(2, 2, grid(&[0]));
        let sum0 = power_equation_census(2, &s0).unwrap();
        assert_eq!(sum0.entries.len(), 1);
        assert!(sum0.entries[0].q.is_zero());
    }
}
