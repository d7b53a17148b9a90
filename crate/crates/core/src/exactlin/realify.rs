//! Turning real-linear equations in complex unknowns into real matrices.
//!
//! A complex unknown `z = x + iy` occupies two real columns. An equation
//! `Σ c·z + Σ c'·z̄ = 0` is accumulated as complex coefficients on those real
//! columns and then split into its real and imaginary rows.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use super::matrix::MatR;
use super::scalar::{GaussianRational, Rational};

/// Column pair holding the real and imaginary part of a complex unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CVar {
    pub re: usize,
    pub im: usize,
}

/// A complex-valued linear form on real columns.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CRow(BTreeMap<usize, GaussianRational>);

impl CRow {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c·x` for a real column `x`.
    pub fn add_real(&mut self, col: usize, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(col).or_default();
        *e += c;
    }

    /// Adds `c·z`.
    pub fn add_var(&mut self, z: CVar, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        self.add_real(z.re, c);
        self.add_real(z.im, &(c * &GaussianRational::i()));
    }

    /// Adds `c·z̄`.
    pub fn add_conj(&mut self, z: CVar, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        self.add_real(z.re, c);
        self.add_real(z.im, &(-(c * &GaussianRational::i())));
    }

    pub fn add_row(&mut self, other: &CRow, scale: &GaussianRational) {
        for (&col, c) in &other.0 {
            self.add_real(col, &(c * scale));
        }
    }

    /// Real part as a sparse row, zero entries dropped.
    pub fn re_part(&self) -> Vec<(usize, Rational)> {
        self.0.iter().filter(|(_, c)| !c.re.is_zero()).map(|(&k, c)| (k, c.re.clone())).collect()
    }

    /// Imaginary part as a sparse row, zero entries dropped.
    pub fn im_part(&self) -> Vec<(usize, Rational)> {
        self.0.iter().filter(|(_, c)| !c.im.is_zero()).map(|(&k, c)| (k, c.im.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.values().all(Zero::is_zero)
    }
}

/// A factor in a monomial term: an unknown or its conjugate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Var(usize),
    Conj(usize),
}

/// `coeff · Π factors`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: GaussianRational,
    pub factors: Vec<Factor>,
}

impl Term {
    pub fn var(coeff: GaussianRational, k: usize) -> Self {
        Self { coeff, factors: vec![Factor::Var(k)] }
    }

    pub fn conj(coeff: GaussianRational, k: usize) -> Self {
        Self { coeff, factors: vec![Factor::Conj(k)] }
    }
}

/// `Σ terms = 0`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ComplexEquation(pub Vec<Term>);

#[derive(Debug, Error, PartialEq)]
pub enum RealifyError {
    #[error("equation {eq}: term of degree {degree} is not real-linear")]
    NotLinear { eq: usize, degree: usize },
    #[error("equation {eq}: unknown index {index} out of range for {n} unknowns")]
    UnknownOutOfRange { eq: usize, index: usize, n: usize },
}

/// Column pair of the `k`-th complex unknown in the standard layout.
pub fn standard_var(k: usize) -> CVar {
    CVar { re: 2 * k, im: 2 * k + 1 }
}

/// Real matrix with `2n` columns `(re_0, im_0, re_1, …)` and two rows per
/// equation (real part, imaginary part).
pub fn realify(n: usize, eqs: &[ComplexEquation]) -> Result<MatR, RealifyError> {
    let mut m = MatR::zeros(2 * eqs.len(), 2 * n);
    for (e, eq) in eqs.iter().enumerate() {
        let mut row = CRow::new();
        for t in &eq.0 {
            let [f] = t.factors.as_slice() else {
                return Err(RealifyError::NotLinear { eq: e, degree: t.factors.len() });
            };
            let (Factor::Var(k) | Factor::Conj(k)) = *f;
            if k >= n {
                return Err(RealifyError::UnknownOutOfRange { eq: e, index: k, n });
            }
            match f {
                Factor::Var(_) => row.add_var(standard_var(k), &t.coeff),
                Factor::Conj(_) => row.add_conj(standard_var(k), &t.coeff),
            }
        }
        for (c, v) in row.re_part() {
            m[(2 * e, c)] = v;
        }
        for (c, v) in row.im_part() {
            m[(2 * e + 1, c)] = v;
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::echelon::nullspace_basis;
    use num_traits::One;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn b_plus_conj_b_is_imaginary_line() {
        let eq = ComplexEquation(vec![Term::var(g(1, 0), 0), Term::conj(g(1, 0), 0)]);
        let m = realify(1, &[eq]).unwrap();
        let ns = nullspace_basis(&m);
        assert_eq!(ns.dim(), 1);
        assert!(ns.basis[0][0].is_zero());
    }

    #[test]
    fn conj_b_equals_b_is_real_line() {
        let eq = ComplexEquation(vec![Term::conj(g(1, 0), 0), Term::var(g(-1, 0), 0)]);
        let ns = nullspace_basis(&realify(1, &[eq]).unwrap());
        assert_eq!(ns.dim(), 1);
        assert!(ns.basis[0][1].is_zero());
    }

    #[test]
    fn skew_hermitian_3x3_has_dimension_9() {
        // B + B* = 0, entry (i,j): b_ij + conj(b_ji) = 0.
        let idx = |i: usize, j: usize| 3 * i + j;
        let eqs: Vec<_> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| {
                ComplexEquation(vec![Term::var(GaussianRational::one(), idx(i, j)), Term::conj(GaussianRational::one(), idx(j, i))])
            })
            .collect();
        assert_eq!(nullspace_basis(&realify(9, &eqs).unwrap()).dim(), 9);
    }

    #[test]
    fn complex_linear_system_doubles_kernel() {
        // z0 + i z1 = 0 over two unknowns: complex kernel dim 1, real dim 2.
        let eq = ComplexEquation(vec![Term::var(g(1, 0), 0), Term::var(g(0, 1), 1)]);
        assert_eq!(nullspace_basis(&realify(2, &[eq]).unwrap()).dim(), 2);
    }

    #[test]
    fn quadratic_terms_rejected() {
        let eq = ComplexEquation(vec![Term { coeff: g(1, 0), factors: vec![Factor::Var(0), Factor::Var(0)] }]);
        assert_eq!(realify(1, &[eq]), Err(RealifyError::NotLinear { eq: 0, degree: 2 }));
        let c = ComplexEquation(vec![Term { coeff: g(1, 0), factors: vec![] }]);
        assert!(realify(1, &[c]).is_err());
        let oob = ComplexEquation(vec![Term::var(g(1, 0), 3)]);
        assert!(matches!(realify(1, &[oob]), Err(RealifyError::UnknownOutOfRange { .. })));
    }
}
