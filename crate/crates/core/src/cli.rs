//! Domain-spec files and the report-producing commands behind the binary.

use serde::Deserialize;
use thiserror::Error;

use crate::bounds::DEFAULT_N_CAP;
use crate::classify::{
    boundary_component_checks, centralizer_sweep, eigenvalue_pair_configs, lemma_matrix_rank, lemma_sweep, transitivity_probes,
    verify_classification, verify_lemma_suite, verify_target, ClassifyError, LemmaParams, RowReduceCase, Target,
};
use crate::cones::{lie_algebra_basis, ConeAlgebra, ConeSpec};
use crate::exactlin::{fmt_rational, parse_rational, GaussianRational, MatC, Rational};
use crate::graded::{graded_dims, phi_space_dim, GradedDims, SiegelDomainSpec};
use crate::hermitian::{compute_s, HermitianError, HermitianForm};
use crate::report::{Report, ReportItem, Status};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecFileError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("bad rational `{0}`")]
    Rational(String),
    #[error("hermitian component {0} is not Hermitian")]
    NotHermitian(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unknown cone name `{0}`")]
    UnknownCone(String),
}

impl SpecFileError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Self::Json(_) => "E_JSON",
            Self::Rational(_) => "E_RATIONAL",
            Self::NotHermitian(_) => "E_NOT_HERMITIAN",
            Self::Dimension(_) => "E_DIMENSION",
            Self::UnknownCone(_) => "E_UNKNOWN_CONE",
        }
    }
}

type Entry = [String; 2];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DomainSpecFile {
    n: usize,
    k: usize,
    cone: String,
    hermitian: Vec<Vec<Vec<Entry>>>,
}

fn parse_q(s: &str) -> Result<Rational, SpecFileError> {
    parse_rational(s).ok_or_else(|| SpecFileError::Rational(s.to_string()))
}

fn parse_entry(e: &Entry) -> Result<GaussianRational, SpecFileError> {
    Ok(GaussianRational::new(parse_q(&e[0])?, parse_q(&e[1])?))
}

/// Parses and validates a domain-spec JSON document. An empty `hermitian`
/// list with `n = k` denotes a tube domain.
pub fn parse_domain_spec(text: &str) -> Result<SiegelDomainSpec, SpecFileError> {
    let file: DomainSpecFile = serde_json::from_str(text).map_err(|e| SpecFileError::Json(e.to_string()))?;
    let cone = ConeSpec::parse(&file.cone).map_err(|_| SpecFileError::UnknownCone(file.cone.clone()))?;
    let (n, k) = (file.n, file.k);
    if k == 0 || k > n {
        return Err(SpecFileError::Dimension(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    if cone.ambient_dim() != k {
        return Err(SpecFileError::Dimension(format!("cone lives in dimension {}, k = {k}", cone.ambient_dim())));
    }
    let m = n - k;
    let h = if file.hermitian.is_empty() && m == 0 {
        HermitianForm::tube(k)
    } else {
        if file.hermitian.len() != k {
            return Err(SpecFileError::Dimension(format!("expected {k} hermitian components, got {}", file.hermitian.len())));
        }
        let mut comps = Vec::with_capacity(k);
        for (l, rows) in file.hermitian.iter().enumerate() {
            if rows.len() != m || rows.iter().any(|r| r.len() != m) {
                return Err(SpecFileError::Dimension(format!("component {l} must be {m}x{m}")));
            }
            let parsed = rows.iter().map(|r| r.iter().map(parse_entry).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
            comps.push(if m == 0 { MatC::zeros(0, 0) } else { MatC::from_rows(parsed) });
        }
        HermitianForm::new(m, comps).map_err(|e| match e {
            HermitianError::NotHermitian(i) => SpecFileError::NotHermitian(i),
            other => SpecFileError::Dimension(other.to_string()),
        })?
    };
    SiegelDomainSpec::new(n, k, cone, h).map_err(|e| SpecFileError::Dimension(e.to_string()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LemmaParamsFile {
    v: [String; 3],
    a2: Entry,
}

/// `{"v": ["v1","v2","v3"], "a2": ["re","im"]}`.
pub fn parse_lemma_params(text: &str) -> Result<LemmaParams, SpecFileError> {
    let f: LemmaParamsFile = serde_json::from_str(text).map_err(|e| SpecFileError::Json(e.to_string()))?;
    let v = [parse_q(&f.v[0])?, parse_q(&f.v[1])?, parse_q(&f.v[2])?];
    Ok(LemmaParams::new(v, parse_entry(&f.a2)?))
}

pub fn dims_text(d: &GradedDims) -> String {
    format!(
        "g_-1 = {}\ng_-1/2 = {}\ng_0 = {}\ng_1/2 = {}\ng_1 = {}\nd = {}",
        d.g_m1, d.g_mhalf, d.g_0, d.g_half, d.g_1, d.d
    )
}

pub fn dims_json(d: &GradedDims) -> String {
    serde_json::to_string_pretty(d).expect("dims serialize")
}

pub fn compute_dims(spec: &SiegelDomainSpec) -> GradedDims {
    graded_dims(spec)
}

/// `dim g(Ω)` followed by each basis matrix, rows separated by `;`.
pub fn cone_text(name: &str) -> Result<String, SpecFileError> {
    let cone = ConeSpec::parse(name).map_err(|_| SpecFileError::UnknownCone(name.to_string()))?;
    let alg: ConeAlgebra = lie_algebra_basis(&cone);
    let mut out = format!("cone {name}\ndim {}\n", alg.dim());
    for (i, b) in alg.basis.iter().enumerate() {
        let rows: Vec<String> =
            (0..b.rows()).map(|r| b.row(r).iter().map(fmt_rational).collect::<Vec<_>>().join(" ")).collect();
        out.push_str(&format!("E{i}: [{}]\n", rows.join("; ")));
    }
    Ok(out)
}

/// Names accepted by [`lemma_report`].
pub const LEMMA_IDS: [&str; 8] =
    ["rowreduce-i", "rowreduce-ii", "centralizer", "omega5-boundary", "exceptional-form", "eigen-pairs", "transitivity", "all"];

/// Runs one lemma check. With `params`, the row-reduction ids evaluate the
/// matrix at that point only.
pub fn lemma_report(id: &str, params: Option<&LemmaParams>) -> Result<Report, ClassifyError> {
    let items = match id {
        "rowreduce-i" | "rowreduce-ii" => {
            let case: RowReduceCase = id.parse()?;
            match params {
                Some(p) => {
                    let (r, exc) = lemma_matrix_rank(case, p);
                    let spec = SiegelDomainSpec::new(5, 3, ConeSpec::Lorentz(3), p.form(case)).expect("k = 3, m = 2");
                    let engine = phi_space_dim(&spec);
                    let ok = engine == 2 * (6 - r);
                    vec![ReportItem::new(
                        format!("lemma-{id}"),
                        Status::from_bool(ok),
                        format!("rank {r}, exceptional {exc}, engine Phi dim {engine}"),
                        "engine Phi dim = 2(6 - rank)",
                    )]
                }
                None => {
                    let s = lemma_sweep(case, 200, 7);
                    vec![ReportItem::new(
                        format!("lemma-{id}-sweep"),
                        Status::from_bool(s.ok()),
                        format!("{}/{} full rank", s.passed, s.samples),
                        "200/200 full rank",
                    )
                    .with_assumptions(s.failures)]
                }
            }
        }
        "centralizer" => {
            let s = centralizer_sweep();
            vec![ReportItem::new(
                "lemma-centralizer-sweep",
                Status::from_bool(s.ok()),
                format!("{}/{} agree", s.passed, s.samples),
                "dim = r^2 - 2p in every case",
            )
            .with_assumptions(s.failures)]
        }
        "omega5-boundary" => boundary_component_checks(),
        "exceptional-form" => {
            let spec = SiegelDomainSpec::new(5, 3, ConeSpec::Lorentz(3), crate::classify::exceptional_form()).expect("valid");
            vec![ReportItem::compare("lemma-exceptional-form", (compute_s(&spec.h), graded_dims(&spec).g_half), (1, 0))]
        }
        "eigen-pairs" => {
            let s: Vec<usize> = eigenvalue_pair_configs(4).iter().map(|c| compute_s(&c.spec().h)).collect();
            vec![ReportItem::compare("lemma-eigen-pairs", s, vec![2, 5, 3, 10, 8, 17])]
        }
        "transitivity" => transitivity_probes(11, 5),
        "all" => return Ok(verify_lemma_suite()),
        other => return Err(ClassifyError::UnknownLemmaCase(other.to_string())),
    };
    Ok(Report::new(items))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyTarget {
    Minus7,
    Minus8,
    Table,
    All,
}

impl std::str::FromStr for VerifyTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "n2-7" => Ok(Self::Minus7),
            "n2-8" => Ok(Self::Minus8),
            "table" => Ok(Self::Table),
            "all" => Ok(Self::All),
            other => Err(format!("unknown target `{other}` (expected n2-7, n2-8, table or all)")),
        }
    }
}

/// `SIEGEL_NCAP`, or the default cap when unset or unparsable.
pub fn n_cap_from_env() -> usize {
    std::env::var("SIEGEL_NCAP").ok().and_then(|s| s.parse().ok()).filter(|&n| n >= 8).unwrap_or(DEFAULT_N_CAP)
}

pub fn verify_report(target: VerifyTarget, n_cap: usize) -> Report {
    match target {
        VerifyTarget::Minus7 => verify_target(Target::Minus7, n_cap),
        VerifyTarget::Minus8 => verify_target(Target::Minus8, n_cap),
        VerifyTarget::Table => verify_classification(),
        VerifyTarget::All => Report::merge([
            verify_target(Target::Minus7, n_cap),
            verify_target(Target::Minus8, n_cap),
            verify_classification(),
            verify_lemma_suite(),
        ]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const D4: &str = r#"{"n":4,"k":3,"cone":"lorentz:3","hermitian":[[[["1/1","0/1"]]],[[["1/1","0/1"]]],[[["0/1","0/1"]]]]}"#;

    #[test]
    fn parses_d4_and_tube() {
        let d4 = parse_domain_spec(D4).unwrap();
        assert_eq!(compute_dims(&d4).d, 10);
        let t3 = parse_domain_spec(r#"{"n":3,"k":3,"cone":"lorentz:3","hermitian":[]}"#).unwrap();
        assert_eq!(t3.m(), 0);
    }

    #[test]
    fn error_codes_are_distinct() {
        let cases = [
            ("{", "E_JSON"),
            (r#"{"n":4,"k":3,"cone":"lorentz:2","hermitian":[]}"#, "E_UNKNOWN_CONE"),
            (r#"{"n":4,"k":3,"cone":"lorentz:3","hermitian":[]}"#, "E_DIMENSION"),
            (r#"{"n":4,"k":3,"cone":"lorentz:3","hermitian":[[[["x","0"]]],[[["1","0"]]],[[["0","0"]]]]}"#, "E_RATIONAL"),
            (r#"{"n":4,"k":3,"cone":"lorentz:3","hermitian":[[[["1","1"]]],[[["1","0"]]],[[["0","0"]]]]}"#, "E_NOT_HERMITIAN"),
        ];
        for (text, code) in cases {
            assert_eq!(parse_domain_spec(text).unwrap_err().code(), code, "{text}");
        }
    }

    #[test]
    fn lorentz5_cone_text() {
        assert!(cone_text("lorentz:5").unwrap().contains("dim 11"));
        assert!(cone_text("lorentz:2").is_err());
    }

    #[test]
    fn lemma_params_file() {
        let p = parse_lemma_params(r#"{"v":["1","0","0"],"a2":["0","1"]}"#).unwrap();
        assert!(lemma_matrix_rank(RowReduceCase::Interior, &p).1);
        assert!(lemma_report("nope", None).is_err());
    }
}
