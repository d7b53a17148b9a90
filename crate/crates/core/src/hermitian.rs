//! Vector-valued Hermitian forms `H = (H_1, …, H_k)` on `C^m`, the space of
//! simultaneously skew-Hermitian matrices, and eigenvalue multiplicity data.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::cones::{classify_point, ConeSpec, PointClass};
use crate::exactlin::{nullspace_basis, realify, ComplexEquation, GaussianRational, MatC, Rational, SolutionSpace, Term};
use crate::poly::hermitian_charpoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HermitianError {
    #[error("component {0} is not Hermitian")]
    NotHermitian(usize),
    #[error("component {index} is {rows}x{cols}, expected {m}x{m}")]
    Shape { index: usize, rows: usize, cols: usize, m: usize },
    #[error("expected {expected} entries, got {got}")]
    Length { expected: usize, got: usize },
}

/// `H(w, w') = (w* H_1 w', …, w* H_k w')`, conjugate-linear in `w`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianForm {
    k: usize,
    m: usize,
    components: Vec<MatC>,
}

impl HermitianForm {
    pub fn new(m: usize, components: Vec<MatC>) -> Result<Self, HermitianError> {
        for (index, h) in components.iter().enumerate() {
            if h.rows() != m || h.cols() != m {
                return Err(HermitianError::Shape { index, rows: h.rows(), cols: h.cols(), m });
            }
            if !h.is_hermitian() {
                return Err(HermitianError::NotHermitian(index));
            }
        }
        Ok(Self { k: components.len(), m, components })
    }

    /// The zero form on `C^0`, as for tube domains.
    pub fn tube(k: usize) -> Self {
        Self { k, m: 0, components: vec![MatC::zeros(0, 0); k] }
    }

    /// Diagonal real components from integer diagonals.
    pub fn diagonal(diags: &[&[i64]]) -> Self {
        let m = diags.first().map_or(0, |d| d.len());
        let comps = diags
            .iter()
            .map(|d| MatC::diag(d.iter().map(|&x| GaussianRational::from_ints(x, 0)).collect()))
            .collect();
        Self::new(m, comps).expect("diagonal real matrices are Hermitian")
    }

    /// `(v_1 I, …, v_k I)`, i.e. `H(w,w) = v‖w‖²`.
    pub fn scalar(v: &[i64], m: usize) -> Self {
        let diags: Vec<Vec<i64>> = v.iter().map(|&x| vec![x; m]).collect();
        let refs: Vec<&[i64]> = diags.iter().map(Vec::as_slice).collect();
        Self::diagonal(&refs)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn components(&self) -> &[MatC] {
        &self.components
    }

    pub fn component(&self, l: usize) -> &MatC {
        &self.components[l]
    }

    /// `H(w, w')`.
    pub fn eval(&self, w: &[GaussianRational], w2: &[GaussianRational]) -> Vec<GaussianRational> {
        self.components.iter().map(|h| h.sesq(w, w2)).collect()
    }

    /// `H(w, w)`, a real vector.
    pub fn value(&self, w: &[GaussianRational]) -> Vec<Rational> {
        self.components.iter().map(|h| h.quad_form(w).re).collect()
    }

    /// `Σ c_l H_l`.
    pub fn combination(&self, c: &[Rational]) -> MatC {
        assert_eq!(c.len(), self.k);
        self.components
            .iter()
            .zip(c)
            .fold(MatC::zeros(self.m, self.m), |acc, (h, x)| acc.add(&h.scale(&GaussianRational::real(x.clone()))))
    }
}

/// Positive definiteness of a Hermitian matrix via leading minors.
pub fn is_positive_definite(h: &MatC) -> bool {
    h.leading_minors().iter().all(|d| d.re.is_positive())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaHermitianReport {
    pub positive_combination: bool,
    /// Indices of samples `w` with `H(w,w)` outside `closure(Ω) ∖ {0}`.
    pub violations: Vec<usize>,
}

impl OmegaHermitianReport {
    pub fn is_valid(&self) -> bool {
        self.positive_combination && self.violations.is_empty()
    }
}

pub fn validate_omega_hermitian(
    h: &HermitianForm,
    cone: &ConeSpec,
    combo: &[Rational],
    samples: &[Vec<GaussianRational>],
) -> Result<OmegaHermitianReport, HermitianError> {
    if combo.len() != h.k() {
        return Err(HermitianError::Length { expected: h.k(), got: combo.len() });
    }
    if cone.ambient_dim() != h.k() {
        return Err(HermitianError::Length { expected: cone.ambient_dim(), got: h.k() });
    }
    let positive_combination = is_positive_definite(&h.combination(combo));
    let mut violations = Vec::new();
    for (i, w) in samples.iter().enumerate() {
        if w.len() != h.m() {
            return Err(HermitianError::Length { expected: h.m(), got: w.len() });
        }
        let class = classify_point(cone, &h.value(w)).expect("lengths checked above");
        if !matches!(class, PointClass::Interior | PointClass::BoundaryNonzero) {
            violations.push(i);
        }
    }
    Ok(OmegaHermitianReport { positive_combination, violations })
}

/// Index of `b_{rq}` among the `m²` complex unknowns of an `m×m` matrix.
fn bidx(m: usize, r: usize, q: usize) -> usize {
    r * m + q
}

/// Equations `h B + B* h = 0` in the entries of `B`.
fn skew_equations(h: &MatC, m: usize) -> Vec<ComplexEquation> {
    let mut eqs = Vec::with_capacity(m * m);
    for p in 0..m {
        for q in 0..m {
            let mut terms = Vec::new();
            for r in 0..m {
                if !h[(p, r)].is_zero() {
                    terms.push(Term::var(h[(p, r)].clone(), bidx(m, r, q)));
                }
                if !h[(r, q)].is_zero() {
                    terms.push(Term::conj(h[(r, q)].clone(), bidx(m, r, p)));
                }
            }
            eqs.push(ComplexEquation(terms));
        }
    }
    eqs
}

/// The real space `𝓛 = {B : H_l B + B* H_l = 0 for all l}` in realified
/// coordinates `(re b_00, im b_00, re b_01, …)`.
pub fn skew_space(h: &HermitianForm) -> SolutionSpace {
    let m = h.m();
    let eqs: Vec<ComplexEquation> = h.components().iter().flat_map(|c| skew_equations(c, m)).collect();
    let mat = realify(m * m, &eqs).expect("skew equations are linear");
    nullspace_basis(&mat)
}

/// `s = dim 𝓛`.
pub fn compute_s(h: &HermitianForm) -> usize {
    if h.m() == 0 {
        return 0;
    }
    skew_space(h).dim()
}

/// `dim {B : B + B* = 0, hB = Bh}`.
pub fn centralizer_dim(h: &MatC) -> Result<usize, HermitianError> {
    if !h.is_hermitian() {
        return Err(HermitianError::NotHermitian(0));
    }
    let m = h.rows();
    let mut eqs = skew_equations(&MatC::identity(m), m);
    for p in 0..m {
        for q in 0..m {
            let mut terms = Vec::new();
            for r in 0..m {
                if !h[(p, r)].is_zero() {
                    terms.push(Term::var(h[(p, r)].clone(), bidx(m, r, q)));
                }
                if !h[(r, q)].is_zero() {
                    terms.push(Term::var(-h[(r, q)].clone(), bidx(m, p, r)));
                }
            }
            eqs.push(ComplexEquation(terms));
        }
    }
    let mat = realify(m * m, &eqs).expect("centralizer equations are linear");
    Ok(nullspace_basis(&mat).dim())
}

/// Multiplicities of the distinct eigenvalues, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile(pub Vec<usize>);

impl MultiplicityProfile {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Eigenvalue multiplicities from the square-free decomposition of the
/// characteristic polynomial; a square-free factor of degree `d` appearing
/// with exponent `i` contributes `d` eigenvalues of multiplicity `i`.
pub fn multiplicity_profile(h: &MatC) -> MultiplicityProfile {
    let mut out = Vec::new();
    for (i, f) in hermitian_charpoly(h).squarefree_decomposition() {
        out.extend(std::iter::repeat_n(i, f.degree().unwrap_or(0)));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    MultiplicityProfile(out)
}

/// Number of unordered pairs of eigenvalues (with multiplicity) that differ.
pub fn count_pairs(p: &MultiplicityProfile) -> usize {
    let m = p.total();
    (m * m - p.0.iter().map(|x| x * x).sum::<usize>()) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, MatR};

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn s_for_known_forms() {
        assert_eq!(compute_s(&HermitianForm::scalar(&[1, 1, 0], 3)), 9);
        assert_eq!(compute_s(&HermitianForm::diagonal(&[&[1, 1], &[1, 2]])), 2);
        let h1 = MatC::identity(2);
        let h2 = MatC::diag(vec![g(1, 0), g(-1, 0)]);
        let h3 = MatR::from_ints(&[&[0, 1], &[1, 0]]).to_complex();
        assert_eq!(compute_s(&HermitianForm::new(2, vec![h1, h2, h3]).unwrap()), 1);
        assert_eq!(compute_s(&HermitianForm::tube(3)), 0);
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(centralizer_dim(&MatC::identity(3)), Ok(9));
        assert_eq!(centralizer_dim(&MatC::diag(vec![g(1, 0), g(1, 0), g(2, 0)])), Ok(5));
        assert_eq!(centralizer_dim(&MatC::diag(vec![g(1, 0), g(2, 0), g(3, 0)])), Ok(3));
        let bad = MatC::from_rows(vec![vec![g(0, 0), g(1, 0)], vec![g(2, 0), g(0, 0)]]);
        assert!(centralizer_dim(&bad).is_err());
    }

    #[test]
    fn profiles_and_pairs() {
        assert_eq!(multiplicity_profile(&MatC::identity(3)), MultiplicityProfile(vec![3]));
        assert_eq!(multiplicity_profile(&MatC::diag(vec![g(1, 0), g(1, 0), g(2, 0)])), MultiplicityProfile(vec![2, 1]));
        let swap = MatR::from_ints(&[&[0, 1], &[1, 0]]).to_complex();
        assert_eq!(multiplicity_profile(&swap), MultiplicityProfile(vec![1, 1]));
        assert_eq!(count_pairs(&MultiplicityProfile(vec![2, 1])), 2);
        assert_eq!(count_pairs(&MultiplicityProfile(vec![1, 1, 1])), 3);
        assert_eq!(count_pairs(&MultiplicityProfile(vec![4])), 0);
    }

    #[test]
    fn omega_hermitian_validation() {
        let samples = vec![vec![g(1, 0)], vec![g(2, -3)], vec![g(0, 1)]];
        let ball = HermitianForm::scalar(&[1], 1);
        let r = validate_omega_hermitian(&ball, &ConeSpec::Orthant(1), &[int(1)], &samples).unwrap();
        assert!(r.is_valid());
        let d4 = HermitianForm::scalar(&[1, 1, 0], 1);
        let r = validate_omega_hermitian(&d4, &ConeSpec::Lorentz(3), &[int(1), int(0), int(0)], &samples).unwrap();
        assert!(r.is_valid());
        for w in &samples {
            assert_eq!(classify_point(&ConeSpec::Lorentz(3), &d4.value(w)), Ok(PointClass::BoundaryNonzero));
        }
        let neg = HermitianForm::scalar(&[-1], 1);
        let r = validate_omega_hermitian(&neg, &ConeSpec::Orthant(1), &[int(1)], &samples).unwrap();
        assert!(!r.is_valid());
        assert_eq!(r.violations, vec![0, 1, 2]);
    }

    #[test]
    fn non_hermitian_rejected() {
        let bad = MatC::from_rows(vec![vec![g(0, 1)]]);
        assert_eq!(HermitianForm::new(1, vec![bad]), Err(HermitianError::NotHermitian(0)));
    }
}
