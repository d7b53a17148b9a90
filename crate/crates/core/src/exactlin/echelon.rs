//! Dense Gaussian elimination: reduced row echelon form, rank, nullspace.

use num_traits::{One, Zero};

use super::matrix::{Mat, MatR};
use super::scalar::{Field, Rational};

/// Result of [`rref`].
#[derive(Clone, PartialEq)]
pub struct Rref<T> {
    pub reduced: Mat<T>,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl<T: std::fmt::Display> std::fmt::Debug for Rref<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Rref(rank {}, pivots {:?}) {:?}", self.rank, self.pivot_cols, self.reduced)
    }
}

/// Reduced row echelon form, pivoting on the first nonzero entry.
pub fn rref<T: Field>(m: &Mat<T>) -> Rref<T> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = T::one() / a[(r, c)].clone();
        for x in a.row_mut(r).iter_mut().skip(c) {
            *x = x.clone() * &inv;
        }
        let pivot_row: Vec<T> = a.row(r).to_vec();
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for (x, p) in a.row_mut(i).iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = x.clone() - &(f.clone() * p);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    Rref { reduced: a, rank: r, pivot_cols }
}

pub fn rank<T: Field>(m: &Mat<T>) -> usize {
    rref(m).rank
}

/// A linear subspace of `Q^ambient_dim` given by independent column vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionSpace {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn as_matrix(&self) -> MatR {
        let mut m = MatR::zeros(self.ambient_dim, self.basis.len());
        for (j, v) in self.basis.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }
}

/// Kernel of `m`, one basis vector per free column of the rref.
pub fn nullspace_basis(m: &MatR) -> SolutionSpace {
    let cols = m.cols();
    let Rref { reduced, pivot_cols, .. } = rref(m);
    let mut is_pivot = vec![None; cols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let basis = (0..cols)
        .filter(|&f| is_pivot[f].is_none())
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &c) in pivot_cols.iter().enumerate() {
                v[c] = -reduced[(r, f)].clone();
            }
            v
        })
        .collect();
    SolutionSpace { ambient_dim: cols, basis }
}

/// Rank of a list of row vectors of common length `width`.
pub fn rank_of_vectors(vectors: &[Vec<Rational>], width: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&MatR::from_vec(vectors.len(), width, vectors.concat()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::GaussianRational;

    #[test]
    fn identity_and_zero() {
        let r = rref(&MatR::identity(6));
        assert_eq!(r.rank, 6);
        assert_eq!(r.pivot_cols, (0..6).collect::<Vec<_>>());
        let z = rref(&MatR::zeros(3, 4));
        assert_eq!(z.rank, 0);
        assert!(z.pivot_cols.is_empty());
        assert_eq!(nullspace_basis(&MatR::identity(3)).dim(), 0);
        assert_eq!(nullspace_basis(&MatR::zeros(2, 5)).dim(), 5);
    }

    #[test]
    fn nullspace_vectors_are_kernel_elements() {
        let m = MatR::from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = nullspace_basis(&m);
        assert_eq!(ns.dim(), 2);
        for v in &ns.basis {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        let r = rref(&m);
        assert_eq!(rref(&r.reduced), r);
    }

    #[test]
    fn complex_rank() {
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        // Rows (1, i) and (i, −1) are complex multiples.
        let m = Mat::from_rows(vec![vec![one.clone(), i.clone()], vec![i.clone(), -one]]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn zero_column_matrix() {
        let m = MatR::zeros(2, 0);
        assert_eq!(rank(&m), 0);
        assert_eq!(nullspace_basis(&m).dim(), 0);
    }
}
