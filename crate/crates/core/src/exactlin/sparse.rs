//! Incremental sparse row echelon form.
//!
//! The graded-component systems have a few hundred columns but thousands of
//! mostly-redundant coefficient equations. Rows are reduced against the
//! existing pivots as they arrive, so only independent rows are stored.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::echelon::{nullspace_basis, SolutionSpace};
use super::matrix::MatR;
use super::realify::{CRow, CVar};
use super::scalar::Rational;

/// Sorted `(column, value)` pairs with nonzero values.
pub type SparseRow = Vec<(usize, Rational)>;

fn normalize(mut row: SparseRow) -> SparseRow {
    row.sort_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a − f·b` for sorted sparse rows.
fn axpy(a: &SparseRow, f: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form maintained under insertion. Every stored row has a
/// distinct leading column with coefficient 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, pivots: HashMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Number of pivots in columns `< c`, which equals the rank of the
    /// column block `0..c`.
    pub fn rank_of_leading_block(&self, c: usize) -> usize {
        self.pivots.keys().filter(|&&p| p < c).count()
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = normalize(row);
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols), "column out of range");
        loop {
            let Some((lead, coef)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, &coef, p),
                None => {
                    if !coef.is_one() {
                        let inv = coef.recip();
                        for e in &mut row {
                            e.1 *= &inv;
                        }
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Dense matrix of the stored rows, ordered by leading column.
    pub fn to_dense(&self) -> MatR {
        let mut keys: Vec<_> = self.pivots.keys().copied().collect();
        keys.sort_unstable();
        let mut m = MatR::zeros(keys.len(), self.ncols);
        for (r, k) in keys.iter().enumerate() {
            for (c, v) in &self.pivots[k] {
                m[(r, *c)] = v.clone();
            }
        }
        m
    }
}

/// Allocator for real and complex unknown columns.
#[derive(Clone, Debug, Default)]
pub struct Columns {
    next: usize,
}

impl Columns {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn real(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    pub fn complex(&mut self) -> CVar {
        let re = self.real();
        CVar { re, im: self.real() }
    }

    pub fn count(&self) -> usize {
        self.next
    }
}

/// A homogeneous real-linear system whose first `n_aux` columns are
/// auxiliary unknowns to be projected away.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    n_aux: usize,
    ech: Echelon,
}

impl LinearSystem {
    pub fn new(ncols: usize, n_aux: usize) -> Self {
        assert!(n_aux <= ncols);
        Self { n_aux, ech: Echelon::new(ncols) }
    }

    pub fn ncols(&self) -> usize {
        self.ech.ncols()
    }

    pub fn push_real(&mut self, row: SparseRow) {
        self.ech.insert(row);
    }

    /// Imposes `row = 0` as a complex equation (both parts vanish).
    pub fn push_complex(&mut self, row: &CRow) {
        self.ech.insert(row.re_part());
        self.ech.insert(row.im_part());
    }

    /// Imposes `Re row = 0` only.
    pub fn push_re(&mut self, row: &CRow) {
        self.ech.insert(row.re_part());
    }

    /// Imposes `Im row = 0` only.
    pub fn push_im(&mut self, row: &CRow) {
        self.ech.insert(row.im_part());
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    /// Dimension of the full solution space, auxiliaries included.
    pub fn solution_dim(&self) -> usize {
        self.ncols() - self.rank()
    }

    /// Dimension of the projection of the solution space onto the primary
    /// (non-auxiliary) columns.
    pub fn projected_dim(&self) -> usize {
        let aux_rank = self.ech.rank_of_leading_block(self.n_aux);
        self.solution_dim() - (self.n_aux - aux_rank)
    }

    pub fn nullspace(&self) -> SolutionSpace {
        nullspace_basis(&self.ech.to_dense())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::echelon::rank;
    use crate::exactlin::scalar::int;

    #[test]
    fn matches_dense_rank() {
        let m = MatR::from_ints(&[&[1, 2, 0, 3], &[2, 4, 0, 6], &[0, 0, 1, 1], &[1, 2, 1, 4]]);
        let mut e = Echelon::new(4);
        for r in m.to_rows() {
            e.insert(r.into_iter().enumerate().collect());
        }
        assert_eq!(e.rank(), rank(&m));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn projection_drops_aux_freedom() {
        // Columns: aux y, primary x0, x1. Constraint x0 = y, x1 free.
        let mut s = LinearSystem::new(3, 1);
        s.push_real(vec![(0, int(1)), (1, int(-1))]);
        assert_eq!(s.solution_dim(), 2);
        assert_eq!(s.projected_dim(), 2);
        // An aux column not tied to anything contributes nothing.
        let mut t = LinearSystem::new(3, 1);
        t.push_real(vec![(1, int(1))]);
        assert_eq!(t.solution_dim(), 2);
        assert_eq!(t.projected_dim(), 1);
    }

    #[test]
    fn duplicate_columns_are_merged() {
        let mut e = Echelon::new(2);
        assert!(!e.insert(vec![(1, int(1)), (1, int(-1))]));
        assert!(e.insert(vec![(1, int(2)), (0, int(1))]));
        assert_eq!(e.rank(), 1);
    }
}
