//! Case drivers for `d = n² − 7` and `d = n² − 8`, the classification table
//! and the lemma checks.

mod cases;
pub mod domains;
mod lemmas;
mod table;

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{bound_chain, exclusion_table, executed_pairs, claimed_region, tail_certificate};
use crate::cones::{interior_samples, lie_algebra_basis};
use crate::graded::{assoc_pair_space, graded_dims, orbit_rank, GradedDims, SiegelDomainSpec};
use crate::report::{Report, ReportItem, Status};

pub use lemmas::{
    boundary_component_checks, centralizer_sweep, eigenvalue_pair_configs, exceptional_form, lemma_matrix, lemma_matrix_rank,
    lemma_sweep, transitivity_probes, verify_lemma_suite, EigenPairConfig, LemmaParams, RowReduceCase, SweepResult,
};
pub use table::{classification_entries, verify_classification, ClassificationEntry, TableFactor};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
    #[error("unknown row-reduction case `{0}`")]
    UnknownLemmaCase(String),
}

/// Which of `d = n² − 7`, `d = n² − 8` is targeted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Minus7,
    Minus8,
}

impl Target {
    pub fn offset(self) -> usize {
        match self {
            Self::Minus7 => 7,
            Self::Minus8 => 8,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Self::Minus7 => "T1",
            Self::Minus8 => "T2",
        }
    }

    pub fn value(self, n: usize) -> usize {
        n * n - self.offset()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NRange {
    Exact(usize),
    AtLeast(usize),
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(n) => write!(f, "n = {n}"),
            Self::AtLeast(n) => write!(f, "n >= {n}"),
        }
    }
}

/// A domain examined inside a case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub label: String,
    pub n: usize,
    pub d: Option<usize>,
    pub target: usize,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Excluded(Vec<String>),
    Contributes { domain: String, d: usize },
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Excluded(_) => write!(f, "excluded"),
            Self::Contributes { domain, d } => write!(f, "contributes {domain} (d = {d})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRecord {
    pub target: Target,
    pub case_id: String,
    pub n: NRange,
    pub k: usize,
    pub candidates: Vec<Candidate>,
    pub assumptions: Vec<String>,
    /// Internal consistency failures (bound violations, disagreeing routes).
    pub problems: Vec<String>,
    pub outcome: Option<Outcome>,
}

impl CaseRecord {
    fn new(target: Target, idx: usize, n: NRange, k: usize) -> Self {
        Self {
            target,
            case_id: format!("{}-C{idx}", target.tag()),
            n,
            k,
            candidates: Vec::new(),
            assumptions: Vec::new(),
            problems: Vec::new(),
            outcome: None,
        }
    }
}

/// The eight cases for `n² − 7` followed by the nine for `n² − 8`.
pub fn registry() -> Vec<CaseRecord> {
    let pairs = [
        (NRange::AtLeast(4), 2),
        (NRange::Exact(4), 3),
        (NRange::Exact(5), 3),
        (NRange::Exact(6), 3),
        (NRange::Exact(7), 3),
        (NRange::Exact(4), 4),
        (NRange::Exact(5), 4),
        (NRange::Exact(5), 5),
        (NRange::Exact(6), 6),
    ];
    let mut out = Vec::new();
    for t in [Target::Minus7, Target::Minus8] {
        let count = if t == Target::Minus7 { 8 } else { 9 };
        for (i, &(n, k)) in pairs.iter().take(count).enumerate() {
            out.push(CaseRecord::new(t, i + 1, n, k));
        }
    }
    out
}

pub fn run_case(rec: CaseRecord) -> Result<CaseRecord, ClassifyError> {
    if !registry().iter().any(|r| r.case_id == rec.case_id) {
        return Err(ClassifyError::UnknownCase(rec.case_id));
    }
    Ok(cases::execute(rec))
}

pub fn run_case_id(id: &str) -> Result<CaseRecord, ClassifyError> {
    let rec = registry().into_iter().find(|r| r.case_id == id).ok_or_else(|| ClassifyError::UnknownCase(id.to_string()))?;
    run_case(rec)
}

/// Runs all cases of `target` concurrently; results are in case order.
pub fn run_target(target: Target) -> Vec<CaseRecord> {
    let mut recs: Vec<CaseRecord> = registry()
        .into_par_iter()
        .filter(|r| r.target == target)
        .map(|r| run_case(r).expect("registry ids are known"))
        .collect();
    recs.sort_by_key(|r| case_index(&r.case_id));
    recs
}

fn case_index(id: &str) -> usize {
    id.rsplit('C').next().and_then(|s| s.parse().ok()).unwrap_or(usize::MAX)
}

/// Expected outcomes: the contributing domain and `d`, or `None` if excluded.
pub fn expected_outcome(case_id: &str) -> Option<(&'static str, usize)> {
    match case_id {
        "T1-C7" => Some(("B2 x T3", 18)),
        "T1-C8" => Some(("B1 x T4", 18)),
        "T2-C1" => Some(("B2 x B6", 56)),
        "T2-C5" => Some(("B1 x B1 x B5", 41)),
        "T2-C7" => Some(("B1 x B1 x B1 x B2", 17)),
        "T2-C9" => Some(("T6", 28)),
        _ => None,
    }
}

pub fn case_report_item(rec: &CaseRecord) -> ReportItem {
    let expected = match expected_outcome(&rec.case_id) {
        Some((dom, d)) => Outcome::Contributes { domain: dom.to_string(), d },
        None => Outcome::Excluded(Vec::new()),
    };
    let got = rec.outcome.clone().unwrap_or_else(|| Outcome::Excluded(vec!["not run".into()]));
    let agree = match (&got, &expected) {
        (Outcome::Excluded(_), Outcome::Excluded(_)) => true,
        (a, b) => a == b,
    };
    let mut computed = format!("{} ({}, k = {}): {got}", rec.case_id, rec.n, rec.k);
    if let Outcome::Excluded(reasons) = &got {
        computed.push_str(&format!(" [{}]", reasons.join("; ")));
    }
    let mut assumptions = rec.assumptions.clone();
    assumptions.extend(rec.candidates.iter().map(|c| {
        let d = c.d.map_or("-".to_string(), |d| d.to_string());
        format!("candidate {} (n = {}): d = {d}, target {}; {}", c.label, c.n, c.target, c.note)
    }));
    assumptions.extend(rec.problems.iter().map(|p| format!("problem: {p}")));
    ReportItem::new(rec.case_id.clone(), Status::from_bool(agree && rec.problems.is_empty()), computed, expected.to_string())
        .with_assumptions(assumptions)
}

/// Exclusion-region check for one target up to `n_cap`.
pub fn exclusion_report(target: Target, n_cap: usize) -> ReportItem {
    let offset = target.offset() as u32;
    let label = format!("{}-exclusion", target.tag());
    let table = match exclusion_table(offset, n_cap) {
        Ok(t) => t,
        Err(e) => return ReportItem::new(label, Status::Fail, e.to_string(), "table"),
    };
    let mut mismatches = Vec::new();
    for n in 1..=n_cap {
        for k in 1..=n {
            if table.is_excluded(n, k) != claimed_region(offset, n, k) {
                mismatches.push((n, k));
            }
        }
    }
    let hit: Vec<_> = executed_pairs(offset, n_cap).into_iter().filter(|&(n, k)| table.is_excluded(n, k)).collect();
    let tail = tail_certificate(offset, 8);
    let ok = mismatches.is_empty() && hit.is_empty() && tail;
    ReportItem::new(
        label,
        Status::from_bool(ok),
        format!(
            "{} excluded pairs for n <= {n_cap}; region mismatches {:?}; executed pairs excluded {:?}; tail certificate from n = 8: {tail}",
            table.excluded.len(),
            mismatches,
            hit
        ),
        "region matches, no executed pair excluded, tail certified",
    )
}

/// Everything `verify --target n2-7|n2-8` reports.
pub fn verify_target(target: Target, n_cap: usize) -> Report {
    let mut items: Vec<ReportItem> = run_target(target).iter().map(case_report_item).collect();
    items.push(exclusion_report(target, n_cap));
    Report::new(items)
}

/// Union of contributing domains for a target.
pub fn contributions(recs: &[CaseRecord]) -> Vec<(String, usize)> {
    recs.iter()
        .filter_map(|r| match &r.outcome {
            Some(Outcome::Contributes { domain, d }) => Some((domain.clone(), *d)),
            _ => None,
        })
        .collect()
}

/// Graded data of a domain plus the bound checks that accompany it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    pub dims: GradedDims,
    pub s: usize,
    pub dim_h: usize,
    pub dim_g_omega: usize,
    /// `orbit_rank == k` at every sample interior point.
    pub full_rank_orbits: bool,
    /// `d ≤ estim2 ≤ estim3 ≤ estim4` and `dim g_0 = s + dim h`.
    pub bounds_ok: bool,
}

pub fn probe(spec: &SiegelDomainSpec) -> Probe {
    let dims = graded_dims(spec);
    let pairs = assoc_pair_space(spec);
    let dim_g_omega = lie_algebra_basis(&spec.cone).dim();
    let full_rank_orbits = interior_samples(&spec.cone).iter().all(|x| orbit_rank(spec, x) == Ok(spec.k));
    let b = bound_chain(spec.n, spec.k, pairs.dim_l, dim_g_omega);
    let d = crate::exactlin::int(dims.d as i64);
    let bounds_ok = d <= b.estim2_value
        && b.estim2_value <= b.estim3_value
        && b.estim3_value <= b.estim4_value
        && dims.within_bounds()
        && dims.g_0 == pairs.dim_l + pairs.dim_h
        && dims.g_0 == pairs.dim_pairs;
    Probe { dims, s: pairs.dim_l, dim_h: pairs.dim_h, dim_g_omega, full_rank_orbits, bounds_ok }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_seventeen_cases() {
        let r = registry();
        assert_eq!(r.len(), 17);
        assert_eq!(r[7].case_id, "T1-C8");
        assert_eq!(r[16].case_id, "T2-C9");
        let mut bad = r[0].clone();
        bad.case_id = "T3-C1".into();
        assert_eq!(run_case(bad), Err(ClassifyError::UnknownCase("T3-C1".into())));
    }

    #[test]
    fn headline_contributions() {
        let t1 = contributions(&run_target(Target::Minus7));
        assert_eq!(t1, vec![("B2 x T3".to_string(), 18), ("B1 x T4".to_string(), 18)]);
        let t2 = contributions(&run_target(Target::Minus8));
        let mut names: Vec<_> = t2.iter().map(|(n, _)| n.as_str()).collect();
        names.sort_unstable();
        assert_eq!(names, vec!["B1 x B1 x B1 x B2", "B1 x B1 x B5", "B2 x B6", "T6"]);
    }
}
