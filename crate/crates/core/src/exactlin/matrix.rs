//! Dense row-major matrices over an exact field.

use std::fmt;

use num_traits::Zero;

use super::scalar::{Field, GaussianRational, Rational};

#[derive(Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type MatR = Mat<Rational>;
pub type MatC = Mat<GaussianRational>;

impl<T: Field> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds from row vectors. All rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        Self { rows, cols, data }
    }

    pub fn diag(entries: Vec<T>) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &T) -> Self {
        let data = self.data.iter().map(|a| a.clone() * s).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let cur = std::mem::replace(&mut out[(i, j)], T::zero());
                    out[(i, j)] = cur + a.clone() * &o[(l, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x)
            })
            .collect()
    }

    /// Square submatrix on the given row/column index sets.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self[(i, j)].clone())
            .collect();
        Self { rows: rows.len(), cols: cols.len(), data }
    }

    /// Determinant by fraction-based elimination.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return T::zero();
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a[(c, c)].clone();
            det = det * &piv;
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone() / piv.clone();
                for j in c..n {
                    let v = a[(r, j)].clone() - &(f.clone() * &a[(c, j)]);
                    a[(r, j)] = v;
                }
            }
        }
        det
    }

    /// Leading principal minors, top-left 1×1 up to the full determinant.
    pub fn leading_minors(&self) -> Vec<T> {
        (1..=self.rows)
            .map(|r| {
                let idx: Vec<usize> = (0..r).collect();
                self.submatrix(&idx, &idx).det()
            })
            .collect()
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl MatR {
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| super::scalar::int(x)).collect()).collect(),
        )
    }

    /// Embeds a real matrix into the complex matrices.
    pub fn to_complex(&self) -> MatC {
        MatC::from_vec(
            self.rows,
            self.cols,
            self.data.iter().cloned().map(GaussianRational::real).collect(),
        )
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Commutator `self·o − o·self`.
    pub fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }
}

impl MatC {
    pub fn conj_transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].conj();
            }
        }
        t
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    /// Real matrix if every entry has zero imaginary part.
    pub fn as_real(&self) -> Option<MatR> {
        if self.data.iter().all(GaussianRational::is_real) {
            Some(MatR::from_vec(self.rows, self.cols, self.data.iter().map(|z| z.re.clone()).collect()))
        } else {
            None
        }
    }

    /// Real-valued sesquilinear evaluation `v* self v` for Hermitian `self`.
    pub fn quad_form(&self, v: &[GaussianRational]) -> GaussianRational {
        let hv = self.mul_vec(v);
        v.iter().zip(&hv).fold(GaussianRational::zero(), |acc, (a, b)| acc + a.conj() * b)
    }

    /// `x* self y`.
    pub fn sesq(&self, x: &[GaussianRational], y: &[GaussianRational]) -> GaussianRational {
        let hy = self.mul_vec(y);
        x.iter().zip(&hy).fold(GaussianRational::zero(), |acc, (a, b)| acc + a.conj() * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    #[test]
    fn mul_and_transpose() {
        let a = MatR::from_ints(&[&[1, 2], &[3, 4]]);
        let b = MatR::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), MatR::from_ints(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.det(), int(-2));
        assert_eq!(a.leading_minors(), vec![int(1), int(-2)]);
    }

    #[test]
    fn hermitian_detection() {
        let h = MatC::from_rows(vec![
            vec![GaussianRational::from_ints(1, 0), GaussianRational::from_ints(0, 1)],
            vec![GaussianRational::from_ints(0, -1), GaussianRational::from_ints(2, 0)],
        ]);
        assert!(h.is_hermitian());
        assert!(!h.transpose().eq(&h));
        let v = vec![GaussianRational::from_ints(1, 0), GaussianRational::from_ints(0, 1)];
        // h·v = (0, i), so v*·h·v = 1.
        assert_eq!(h.quad_form(&v), GaussianRational::from_ints(1, 0));
    }

    #[test]
    fn zero_size_matrices() {
        let z = MatR::zeros(0, 3);
        assert_eq!(z.rows(), 0);
        assert!(z.is_zero());
        assert_eq!(MatR::identity(0).det(), int(1));
    }
}
