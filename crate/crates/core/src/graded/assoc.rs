//! `g_0`: pairs `(A, B)` with `A ∈ g(Ω)` and `A H(w,w') = H(Bw,w') + H(w,Bw')`.

use num_traits::Zero;

use crate::cones::{lie_algebra_basis, ConeAlgebra};
use crate::exactlin::{nullspace_basis, rank_of_vectors, MatR, Rational};
use crate::hermitian::compute_s;

use super::{alg_entry, SiegelDomainSpec};

#[derive(Clone, Debug, PartialEq)]
pub struct AssocPairSpace {
    /// `dim g_0`.
    pub dim_pairs: usize,
    /// `s = dim 𝓛`.
    pub dim_l: usize,
    /// Dimension of the algebra of `G(Ω, H)`.
    pub dim_h: usize,
    /// A basis of that algebra as `k×k` matrices.
    pub h_basis: Vec<MatR>,
}

pub fn assoc_pair_space(d: &SiegelDomainSpec) -> AssocPairSpace {
    assoc_with(d, &lie_algebra_basis(&d.cone))
}

/// Columns: `t_0..t_{g−1}` (coordinates of `A`), then `(re, im)` of
/// `b_{rq}` row by row. Equation `(l,p,q)` is the `(p,q)` entry of
/// `Σ_j A_{lj} H_j − B* H_l − H_l B = 0`.
pub(super) fn assoc_with(d: &SiegelDomainSpec, alg: &ConeAlgebra) -> AssocPairSpace {
    let (k, m, g) = (d.k, d.m(), alg.dim());
    let ncols = g + 2 * m * m;
    let bre = |r: usize, q: usize| g + 2 * (r * m + q);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for l in 0..k {
        let hl = d.h.component(l);
        for p in 0..m {
            for q in 0..m {
                let mut re = vec![Rational::zero(); ncols];
                let mut im = vec![Rational::zero(); ncols];
                for (t, (rc, ic)) in re.iter_mut().zip(im.iter_mut()).take(g).enumerate() {
                    for j in 0..k {
                        let e = alg_entry(alg, t, l, j);
                        if e.is_zero() {
                            continue;
                        }
                        let hj = &d.h.component(j)[(p, q)];
                        *rc += e * &hj.re;
                        *ic += e * &hj.im;
                    }
                }
                for r in 0..m {
                    // −(H_l)_{pr} b_{rq}
                    let c = &hl[(p, r)];
                    let (x, y) = (bre(r, q), bre(r, q) + 1);
                    re[x] -= &c.re;
                    re[y] += &c.im;
                    im[x] -= &c.im;
                    im[y] -= &c.re;
                    // −conj(b_{rp}) (H_l)_{rq}
                    let c = &hl[(r, q)];
                    let (x, y) = (bre(r, p), bre(r, p) + 1);
                    re[x] -= &c.re;
                    re[y] -= &c.im;
                    im[x] -= &c.im;
                    im[y] += &c.re;
                }
                rows.push(re);
                rows.push(im);
            }
        }
    }
    let ns = if rows.is_empty() {
        nullspace_basis(&MatR::zeros(0, ncols))
    } else {
        nullspace_basis(&MatR::from_rows(rows))
    };
    let projections: Vec<Vec<Rational>> = ns.basis.iter().map(|v| v[..g].to_vec()).collect();
    let h_basis = independent_rows(&projections, g)
        .into_iter()
        .map(|t| {
            (0..g).fold(MatR::zeros(k, k), |acc, j| if t[j].is_zero() { acc } else { acc.add(&alg.basis[j].scale(&t[j])) })
        })
        .collect::<Vec<_>>();
    AssocPairSpace { dim_pairs: ns.dim(), dim_l: compute_s(&d.h), dim_h: h_basis.len(), h_basis }
}

/// A maximal independent subset of `vectors`, greedily in order.
fn independent_rows(vectors: &[Vec<Rational>], width: usize) -> Vec<Vec<Rational>> {
    let mut kept: Vec<Vec<Rational>> = Vec::new();
    for v in vectors {
        kept.push(v.clone());
        if rank_of_vectors(&kept, width) < kept.len() {
            kept.pop();
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::ConeSpec;
    use crate::hermitian::HermitianForm;

    fn space(cone: ConeSpec, v: &[i64]) -> AssocPairSpace {
        let k = cone.ambient_dim();
        assoc_pair_space(&SiegelDomainSpec::new(k + 1, k, cone, HermitianForm::scalar(v, 1)).unwrap())
    }

    #[test]
    fn boundary_forms() {
        let s = space(ConeSpec::Lorentz(3), &[1, 1, 0]);
        assert_eq!((s.dim_pairs, s.dim_l, s.dim_h), (4, 1, 3));
        let s = space(ConeSpec::Lorentz(4), &[1, 1, 0, 0]);
        assert_eq!((s.dim_pairs, s.dim_l, s.dim_h), (6, 1, 5));
        let s = space(ConeSpec::Orthant(2), &[1, 1]);
        assert_eq!((s.dim_pairs, s.dim_l, s.dim_h), (2, 1, 1));
    }

    #[test]
    fn tube_pairs_are_the_cone_algebra() {
        let d = SiegelDomainSpec::tube(ConeSpec::Lorentz(5));
        let s = assoc_pair_space(&d);
        assert_eq!((s.dim_pairs, s.dim_l, s.dim_h), (11, 0, 11));
    }
}
