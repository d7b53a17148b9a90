//! Univariate polynomials over the rationals, enough for square-free
//! decomposition of characteristic polynomials.

use num_traits::{One, Zero};

use crate::exactlin::{GaussianRational, MatC, Rational};

/// Coefficients from the constant term upward, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        Self(self.0.iter().map(|c| c / &l).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer((i as i64).into())).collect(),
        )
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap_or(0);
        let mut r = self.0.clone();
        let n = r.len();
        if n <= dd {
            return (Self(vec![]), self.clone());
        }
        let mut q = vec![Rational::zero(); n - dd];
        let dl = d.lead().clone();
        for i in (0..n - dd).rev() {
            let f = &r[i + dd] / &dl;
            if f.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[i + j] -= &f * dc;
            }
            q[i] = f;
        }
        (Self::new(q), Self::new(r))
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's algorithm: monic square-free `f_i` with `p = c·Π f_i^i`,
    /// returned as `(i, f_i)` for nonconstant factors.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Poly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = Self::gcd(&f, &df);
        let mut b = f.divrem(&a0).0;
        let mut c = df.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = Self::gcd(&b, &d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a.clone()));
            }
            b = b.divrem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        Self::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self(vec![]);
        }
        let mut c = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

/// Characteristic polynomial `det(xI − h)` of a Hermitian matrix by the
/// Faddeev–LeVerrier recursion. Hermitian input has real coefficients.
pub fn hermitian_charpoly(h: &MatC) -> Poly {
    assert!(h.is_hermitian(), "characteristic polynomial requires Hermitian input");
    let n = h.rows();
    // c[n] = 1, M_0 = 0; M_k = h M_{k-1} + c_{n-k+1} I, c_{n-k} = −tr(h M_k)/k.
    let mut c = vec![GaussianRational::zero(); n + 1];
    c[n] = GaussianRational::one();
    let mut mk = MatC::zeros(n, n);
    for k in 1..=n {
        mk = h.mul(&mk).add(&MatC::identity(n).scale(&c[n - k + 1]));
        let hm = h.mul(&mk);
        let tr = (0..n).fold(GaussianRational::zero(), |acc, i| acc + &hm[(i, i)]);
        c[n - k] = -tr.scale(&Rational::new(1.into(), (k as i64).into()));
    }
    assert!(c.iter().all(GaussianRational::is_real), "Hermitian characteristic polynomial must be real");
    Poly::new(c.into_iter().map(|z| z.re).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, MatR};

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).sub(&a.sub(&r)), Poly::new(vec![]));
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn yun_on_known_product() {
        // (x−1)²(x−2)³(x+5)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[-2, 1])).mul(&p(&[-2, 1])).mul(&p(&[-2, 1])).mul(&p(&[5, 1]));
        let d = f.squarefree_decomposition();
        let degs: Vec<(usize, usize)> = d.iter().map(|(i, g)| (*i, g.degree().unwrap())).collect();
        assert_eq!(degs, vec![(1, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn charpoly_of_swap_is_x2_minus_1() {
        let h = MatR::from_ints(&[&[0, 1], &[1, 0]]).to_complex();
        assert_eq!(hermitian_charpoly(&h), p(&[-1, 0, 1]));
    }

    #[test]
    fn irreducible_quadratic_factor_counts_two_roots() {
        // Eigenvalues ±√2, each then doubled: (x²−2)².
        let sym = MatR::from_ints(&[&[1, 1], &[1, -1]]);
        let c = hermitian_charpoly(&sym.to_complex());
        assert_eq!(c, p(&[-2, 0, 1]));
        let sq = c.mul(&c);
        let d = sq.squarefree_decomposition();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0, 2);
        assert_eq!(d[0].1.degree(), Some(2));
    }
}
