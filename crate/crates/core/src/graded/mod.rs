//! Dimensions of the graded pieces of the automorphism algebra of a Siegel
//! domain `S(Ω, H)`, and the affine data attached to it.

mod assoc;
mod half;
mod one;

use num_traits::Zero;
use thiserror::Error;

use crate::cones::{classify_point, lie_algebra_basis, tangent_rank, ConeAlgebra, ConeSpec, PointClass};
use crate::exactlin::{rank, GaussianRational, MatC, MatR, Rational};
use crate::hermitian::HermitianForm;

pub use assoc::{assoc_pair_space, AssocPairSpace};
pub use half::{g_half_dim, phi_space_dim};
pub use one::g_one_dim;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GradedError {
    #[error("need 1 <= k <= n, got n = {n}, k = {k}")]
    BadDimensions { n: usize, k: usize },
    #[error("cone has dimension {cone}, expected k = {k}")]
    ConeDimension { cone: usize, k: usize },
    #[error("form has {got_k} components on C^{got_m}, expected {k} on C^{m}")]
    FormShape { k: usize, m: usize, got_k: usize, got_m: usize },
    #[error("point is not interior to the cone")]
    NotInterior,
    #[error("dimension mismatch: {0}")]
    Mismatch(String),
}

/// `(n, k, Ω, H)` describing `S(Ω,H) ⊂ C^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SiegelDomainSpec {
    pub n: usize,
    pub k: usize,
    pub cone: ConeSpec,
    pub h: HermitianForm,
}

impl SiegelDomainSpec {
    pub fn new(n: usize, k: usize, cone: ConeSpec, h: HermitianForm) -> Result<Self, GradedError> {
        if k == 0 || k > n {
            return Err(GradedError::BadDimensions { n, k });
        }
        if cone.ambient_dim() != k {
            return Err(GradedError::ConeDimension { cone: cone.ambient_dim(), k });
        }
        if h.k() != k || h.m() != n - k {
            return Err(GradedError::FormShape { k, m: n - k, got_k: h.k(), got_m: h.m() });
        }
        Ok(Self { n, k, cone, h })
    }

    /// Tube domain `{Im z ∈ Ω}`.
    pub fn tube(cone: ConeSpec) -> Self {
        let k = cone.ambient_dim();
        Self { n: k, k, cone, h: HermitianForm::tube(k) }
    }

    /// Unbounded realization of the unit ball `B^n`.
    pub fn ball(n: usize) -> Self {
        Self::new(n, 1, ConeSpec::Orthant(1), HermitianForm::scalar(&[1], n - 1)).expect("ball spec is valid")
    }

    pub fn m(&self) -> usize {
        self.n - self.k
    }
}

/// Dimensions of `g_{-1}, g_{-1/2}, g_0, g_{1/2}, g_1` and their sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct GradedDims {
    pub g_m1: usize,
    pub g_mhalf: usize,
    pub g_0: usize,
    pub g_half: usize,
    pub g_1: usize,
    pub d: usize,
}

impl GradedDims {
    pub fn from_parts(g_m1: usize, g_mhalf: usize, g_0: usize, g_half: usize, g_1: usize) -> Self {
        Self { g_m1, g_mhalf, g_0, g_half, g_1, d: g_m1 + g_mhalf + g_0 + g_half + g_1 }
    }

    pub fn split(&self) -> (usize, usize, usize, usize, usize) {
        (self.g_m1, self.g_mhalf, self.g_0, self.g_half, self.g_1)
    }

    /// `dim g_{1/2} ≤ 2(n−k)` and `dim g_1 ≤ k`.
    pub fn within_bounds(&self) -> bool {
        self.g_half <= self.g_mhalf && self.g_1 <= self.g_m1
    }
}

pub fn graded_dims(d: &SiegelDomainSpec) -> GradedDims {
    let alg = lie_algebra_basis(&d.cone);
    GradedDims::from_parts(
        d.k,
        2 * d.m(),
        assoc::assoc_with(d, &alg).dim_pairs,
        half::g_half_with(d, &alg),
        one::g_one_with(d, &alg),
    )
}

/// Rank of `{A x : A ∈ h}` where `h` is the algebra of `G(Ω,H)`.
pub fn orbit_rank(d: &SiegelDomainSpec, x: &[Rational]) -> Result<usize, GradedError> {
    if x.len() != d.k {
        return Err(GradedError::Mismatch(format!("point of length {} for k = {}", x.len(), d.k)));
    }
    if classify_point(&d.cone, x) != Ok(PointClass::Interior) {
        return Err(GradedError::NotInterior);
    }
    Ok(tangent_rank(&assoc_pair_space(d).h_basis, x))
}

/// A nonzero vector among `candidates` that every element of `basis` maps
/// into its own span, if any.
pub fn common_eigenvector(basis: &[MatR], candidates: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    candidates
        .iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .find(|v| {
            let mut rows = vec![(*v).clone()];
            rows.extend(basis.iter().map(|a| a.mul_vec(v)));
            rank(&MatR::from_rows(rows)) == 1
        })
        .cloned()
}

/// The values `H(e_j, e_j)`, natural candidates for a common eigenvector.
pub fn diagonal_values(h: &HermitianForm) -> Vec<Vec<Rational>> {
    (0..h.m())
        .map(|j| {
            let mut e = vec![GaussianRational::zero(); h.m()];
            e[j] = GaussianRational::from_ints(1, 0);
            h.value(&e)
        })
        .collect()
}

/// Whether `A H(w,w') = H(Bw, Bw')` on all pairs `(e_p, e_q)`, `(e_p, i e_q)`.
pub fn check_assoc(a: &MatR, b: &MatC, h: &HermitianForm) -> Result<bool, GradedError> {
    let (k, m) = (h.k(), h.m());
    if a.rows() != k || a.cols() != k || b.rows() != m || b.cols() != m {
        return Err(GradedError::Mismatch(format!(
            "A is {}x{}, B is {}x{}, form has k = {k}, m = {m}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let ac = a.to_complex();
    let basis = |j: usize, w: GaussianRational| {
        let mut e = vec![GaussianRational::zero(); m];
        e[j] = w;
        e
    };
    for p in 0..m {
        for q in 0..m {
            for om in [GaussianRational::from_ints(1, 0), GaussianRational::i()] {
                let w = basis(p, GaussianRational::from_ints(1, 0));
                let w2 = basis(q, om);
                let lhs = ac.mul_vec(&h.eval(&w, &w2));
                let rhs = h.eval(&b.mul_vec(&w), &b.mul_vec(&w2));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `(E_j)_{l r}` for the `j`-th basis element of `g(Ω)`.
pub(crate) fn alg_entry(alg: &ConeAlgebra, j: usize, l: usize, r: usize) -> &Rational {
    &alg.basis[j][(l, r)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn d4() -> SiegelDomainSpec {
        SiegelDomainSpec::new(4, 3, ConeSpec::Lorentz(3), HermitianForm::scalar(&[1, 1, 0], 1)).unwrap()
    }

    #[test]
    fn d4_split() {
        assert_eq!(graded_dims(&d4()).split(), (3, 2, 4, 0, 1));
        assert_eq!(graded_dims(&d4()).d, 10);
    }

    #[test]
    fn ball_b2_split() {
        assert_eq!(graded_dims(&SiegelDomainSpec::ball(2)).split(), (1, 2, 2, 2, 1));
    }

    #[test]
    fn tube_splits() {
        assert_eq!(graded_dims(&SiegelDomainSpec::tube(ConeSpec::Orthant(2))).split(), (2, 0, 2, 0, 2));
        assert_eq!(graded_dims(&SiegelDomainSpec::tube(ConeSpec::Lorentz(4))).g_1, 4);
    }

    #[test]
    fn orbit_ranks() {
        let v = |xs: &[i64]| xs.iter().map(|&x| int(x)).collect::<Vec<_>>();
        assert_eq!(orbit_rank(&d4(), &v(&[2, 1, 0])), Ok(3));
        let interior = SiegelDomainSpec::new(4, 3, ConeSpec::Lorentz(3), HermitianForm::scalar(&[1, 0, 0], 1)).unwrap();
        assert_eq!(orbit_rank(&interior, &v(&[2, 1, 0])), Ok(2));
        assert_eq!(orbit_rank(&d4(), &v(&[0, 1, 0])), Err(GradedError::NotInterior));
    }

    #[test]
    fn assoc_checks() {
        let h = HermitianForm::scalar(&[1, 1], 1);
        let swap = MatR::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(check_assoc(&swap, &MatC::identity(1), &h), Ok(true));
        assert_eq!(check_assoc(&MatR::identity(2).scale(&int(4)), &MatC::identity(1).scale(&GaussianRational::from_ints(2, 0)), &h), Ok(true));
        let ball = HermitianForm::scalar(&[1], 1);
        assert_eq!(check_assoc(&MatR::identity(1), &MatC::identity(1).scale(&GaussianRational::from_ints(2, 0)), &ball), Ok(false));
        assert!(check_assoc(&MatR::identity(2), &MatC::identity(1), &ball).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(SiegelDomainSpec::new(3, 0, ConeSpec::Orthant(1), HermitianForm::tube(0)).is_err());
        assert!(SiegelDomainSpec::new(3, 2, ConeSpec::Orthant(3), HermitianForm::scalar(&[1, 1], 1)).is_err());
        assert!(SiegelDomainSpec::new(3, 2, ConeSpec::Orthant(2), HermitianForm::scalar(&[1, 1], 2)).is_err());
    }
}
