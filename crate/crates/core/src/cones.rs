//! Homogeneous convex cones of dimension at most five, their automorphism
//! Lie algebras and exact point classification.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactlin::{int, rank, rank_of_vectors, MatR, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConeSpec {
    Orthant(usize),
    Lorentz(usize),
    Product(Vec<ConeSpec>),
    Vinberg,
    DualVinberg,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConeError {
    #[error("unknown cone name `{0}`")]
    UnknownName(String),
    #[error("point has length {got}, cone lives in dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

impl ConeSpec {
    /// Lorentz cone `Λ_k`. `Λ_2` is linearly equivalent to the quadrant and
    /// is returned as `Orthant(2)`.
    pub fn lorentz(k: usize) -> Self {
        assert!(k >= 2, "Lorentz cones start at k = 2");
        if k == 2 {
            Self::Orthant(2)
        } else {
            Self::Lorentz(k)
        }
    }

    pub fn orthant(k: usize) -> Self {
        assert!(k >= 1, "orthant needs k >= 1");
        Self::Orthant(k)
    }

    pub fn product(factors: Vec<ConeSpec>) -> Self {
        assert!(!factors.is_empty(), "empty product cone");
        Self::Product(factors)
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            Self::Orthant(k) | Self::Lorentz(k) => *k,
            Self::Product(fs) => fs.iter().map(Self::ambient_dim).sum(),
            Self::Vinberg | Self::DualVinberg => 5,
        }
    }

    pub fn is_lorentz(&self) -> bool {
        matches!(self, Self::Lorentz(_))
    }

    /// Parses `orthant:k`, `lorentz:k` (k ≥ 3), `product:[a,b,…]`,
    /// `vinberg`, `dual_vinberg`.
    pub fn parse(s: &str) -> Result<Self, ConeError> {
        let s = s.trim();
        let bad = || ConeError::UnknownName(s.to_string());
        match s {
            "vinberg" => return Ok(Self::Vinberg),
            "dual_vinberg" => return Ok(Self::DualVinberg),
            _ => {}
        }
        let (head, rest) = s.split_once(':').ok_or_else(bad)?;
        match head {
            "orthant" => match rest.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(Self::Orthant(k)),
                _ => Err(bad()),
            },
            "lorentz" => match rest.parse::<usize>() {
                Ok(k) if k >= 3 => Ok(Self::Lorentz(k)),
                _ => Err(bad()),
            },
            "product" => {
                let inner = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
                let parts = split_top_level(inner).ok_or_else(bad)?;
                if parts.is_empty() {
                    return Err(bad());
                }
                Ok(Self::Product(parts.into_iter().map(Self::parse).collect::<Result<_, _>>()?))
            }
            _ => Err(bad()),
        }
    }
}

/// Splits on commas not nested inside brackets.
fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    let last = s[start..].trim();
    if !last.is_empty() || !parts.is_empty() {
        parts.push(last);
    }
    if parts.iter().any(|p| p.is_empty()) {
        return None;
    }
    Some(parts)
}

impl fmt::Display for ConeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Orthant(k) => write!(f, "orthant:{k}"),
            Self::Lorentz(k) => write!(f, "lorentz:{k}"),
            Self::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "product:[{}]", parts.join(","))
            }
            Self::Vinberg => write!(f, "vinberg"),
            Self::DualVinberg => write!(f, "dual_vinberg"),
        }
    }
}

/// The cones `Ω_1 … Ω_12` of the catalog, indexed from 1.
pub fn catalog(i: usize) -> Option<ConeSpec> {
    use ConeSpec::*;
    Some(match i {
        1 => Orthant(2),
        2 => Orthant(3),
        3 => Lorentz(3),
        4 => Orthant(4),
        5 => Product(vec![Lorentz(3), Orthant(1)]),
        6 => Lorentz(4),
        7 => Orthant(5),
        8 => Product(vec![Lorentz(3), Orthant(2)]),
        9 => Product(vec![Lorentz(4), Orthant(1)]),
        10 => Lorentz(5),
        11 => DualVinberg,
        12 => Vinberg,
        _ => return None,
    })
}

/// Catalog dimensions of `g(Ω_i)`, i = 1..12.
pub const CATALOG_DIMS: [usize; 12] = [2, 3, 4, 4, 5, 7, 5, 6, 8, 11, 5, 5];

/// A basis of the Lie algebra `g(Ω) ⊂ gl_k(R)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeAlgebra {
    pub ambient_dim: usize,
    pub basis: Vec<MatR>,
}

impl ConeAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Rank of the flattened basis; equals `dim` when independent.
    pub fn span_rank(&self) -> usize {
        let k = self.ambient_dim;
        let rows: Vec<Vec<Rational>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        rank_of_vectors(&rows, k * k)
    }

    /// Whether every commutator of basis elements lies in the span.
    pub fn is_closed_under_bracket(&self) -> bool {
        let k = self.ambient_dim;
        let base = self.span_rank();
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                let mut rows: Vec<Vec<Rational>> = self.basis.iter().map(|m| m.entries().to_vec()).collect();
                rows.push(a.bracket(b).entries().to_vec());
                if rank_of_vectors(&rows, k * k) != base {
                    return false;
                }
            }
        }
        true
    }
}

fn unit(k: usize, i: usize, j: usize) -> MatR {
    let mut m = MatR::zeros(k, k);
    m[(i, j)] = Rational::one();
    m
}

fn block_diag(blocks: &[MatR]) -> MatR {
    let n: usize = blocks.iter().map(MatR::rows).sum();
    let mut m = MatR::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m[(off + i, off + j)] = b[(i, j)].clone();
            }
        }
        off += b.rows();
    }
    m
}

/// The five generators `X ↦ MX + XMᵀ` of the dual Vinberg cone, for
/// `M ∈ {E11, E12, E13, E22, E33}`, written in coordinates `(x1, …, x5)`.
pub fn dual_vinberg_generators() -> Vec<MatR> {
    let ms = [(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)];
    ms.iter()
        .map(|&(p, q)| {
            let m3 = unit(3, p, q);
            let mut g = MatR::zeros(5, 5);
            for j in 0..5 {
                let mut e = vec![Rational::zero(); 5];
                e[j] = Rational::one();
                let x = vinberg_embed(&e);
                let y = m3.mul(&x).add(&x.mul(&m3.transpose()));
                let col = vinberg_coords(&y);
                for i in 0..5 {
                    g[(i, j)] = col[i].clone();
                }
            }
            g
        })
        .collect()
}

/// Gram matrix of the trace pairing `tr(XY)` in the coordinates of `V`.
fn vinberg_gram() -> MatR {
    MatR::diag(vec![int(1), int(1), int(1), int(2), int(2)])
}

/// Generators of `g(Ω_12)`: the negative adjoints of the dual generators
/// under the trace pairing, `−G⁻¹DᵀG`.
pub fn vinberg_generators() -> Vec<MatR> {
    let g = vinberg_gram();
    let ginv = MatR::diag(vec![int(1), int(1), int(1), Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into())]);
    dual_vinberg_generators()
        .into_iter()
        .map(|d| ginv.mul(&d.transpose()).mul(&g).scale(&int(-1)))
        .collect()
}

pub fn lie_algebra_basis(cone: &ConeSpec) -> ConeAlgebra {
    let k = cone.ambient_dim();
    let basis = match cone {
        ConeSpec::Orthant(k) => (0..*k).map(|i| unit(*k, i, i)).collect(),
        ConeSpec::Lorentz(k) => {
            let k = *k;
            let mut b = vec![MatR::identity(k)];
            for i in 1..k {
                b.push(unit(k, 0, i).add(&unit(k, i, 0)));
            }
            for i in 1..k {
                for j in i + 1..k {
                    b.push(unit(k, i, j).sub(&unit(k, j, i)));
                }
            }
            b
        }
        ConeSpec::Product(fs) => {
            let algs: Vec<ConeAlgebra> = fs.iter().map(lie_algebra_basis).collect();
            let mut out = Vec::new();
            for (idx, a) in algs.iter().enumerate() {
                for m in &a.basis {
                    let blocks: Vec<MatR> = algs
                        .iter()
                        .enumerate()
                        .map(|(j, other)| if j == idx { m.clone() } else { MatR::zeros(other.ambient_dim, other.ambient_dim) })
                        .collect();
                    out.push(block_diag(&blocks));
                }
            }
            out
        }
        ConeSpec::Vinberg => vinberg_generators(),
        ConeSpec::DualVinberg => dual_vinberg_generators(),
    };
    ConeAlgebra { ambient_dim: k, basis }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    Interior,
    BoundaryNonzero,
    Zero,
    Exterior,
}

impl PointClass {
    pub fn in_closure(self) -> bool {
        !matches!(self, Self::Exterior)
    }
}

fn sq(x: &Rational) -> Rational {
    x * x
}

/// (interior, closure) membership for a non-product cone.
fn membership(cone: &ConeSpec, x: &[Rational]) -> (bool, bool) {
    match cone {
        ConeSpec::Orthant(_) => (x.iter().all(Signed::is_positive), x.iter().all(|v| !v.is_negative())),
        ConeSpec::Lorentz(_) => {
            let q = sq(&x[0]) - x[1..].iter().map(sq).sum::<Rational>();
            (x[0].is_positive() && q.is_positive(), !x[0].is_negative() && !q.is_negative())
        }
        ConeSpec::DualVinberg => {
            let m = vinberg_embed(x);
            let interior = m.leading_minors().iter().all(Signed::is_positive);
            (interior, principal_minors_nonnegative(&m))
        }
        ConeSpec::Vinberg => {
            let a = &x[0] * &x[1] - sq(&x[3]);
            let b = &x[0] * &x[2] - sq(&x[4]);
            let interior = x[0].is_positive() && a.is_positive() && b.is_positive();
            let closure = x[..3].iter().all(|v| !v.is_negative()) && !a.is_negative() && !b.is_negative();
            (interior, closure)
        }
        ConeSpec::Product(_) => unreachable!("products are split by the caller"),
    }
}

fn principal_minors_nonnegative(m: &MatR) -> bool {
    let n = m.rows();
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        !m.submatrix(&idx, &idx).det().is_negative()
    })
}

pub fn classify_point(cone: &ConeSpec, x: &[Rational]) -> Result<PointClass, ConeError> {
    let k = cone.ambient_dim();
    if x.len() != k {
        return Err(ConeError::DimensionMismatch { expected: k, got: x.len() });
    }
    if x.iter().all(Zero::is_zero) {
        return Ok(PointClass::Zero);
    }
    let (interior, closure) = match cone {
        ConeSpec::Product(fs) => {
            let mut off = 0;
            let (mut int_all, mut clo_all) = (true, true);
            for f in fs {
                let d = f.ambient_dim();
                let c = classify_point(f, &x[off..off + d])?;
                int_all &= c == PointClass::Interior;
                clo_all &= c.in_closure();
                off += d;
            }
            (int_all, clo_all)
        }
        _ => membership(cone, x),
    };
    Ok(if interior {
        PointClass::Interior
    } else if closure {
        PointClass::BoundaryNonzero
    } else {
        PointClass::Exterior
    })
}

/// Deterministic interior sample points, at least five per cone.
pub fn interior_samples(cone: &ConeSpec) -> Vec<Vec<Rational>> {
    let k = cone.ambient_dim();
    match cone {
        ConeSpec::Orthant(_) => (1..=6).map(|s| (0..k).map(|i| int(1 + ((s * (i as i64 + 2)) % 5))).collect()).collect(),
        ConeSpec::Lorentz(_) => (1..=6)
            .map(|s| {
                let mut v: Vec<Rational> = (1..k).map(|i| int(((s * (i as i64 + 1)) % 5) - 2)).collect();
                let norm: Rational = v.iter().map(sq).sum();
                // x1 = ‖tail‖² + 1 > ‖tail‖ whenever the tail is integral.
                v.insert(0, norm + int(1));
                v
            })
            .collect(),
        ConeSpec::Product(fs) => {
            let per: Vec<Vec<Vec<Rational>>> = fs.iter().map(interior_samples).collect();
            let n = per.iter().map(Vec::len).min().unwrap_or(0);
            (0..n).map(|s| per.iter().flat_map(|p| p[(s + 1) % p.len()].clone()).collect()).collect()
        }
        ConeSpec::DualVinberg | ConeSpec::Vinberg => {
            [[1, 1, 1, 0, 0], [2, 2, 2, 1, 1], [3, 1, 2, 1, 1], [5, 3, 4, 2, -1], [4, 1, 1, -1, 1], [7, 2, 3, 1, 2]]
                .iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Omega5Component {
    C1,
    C2,
    C3,
    C4,
    NotOnBoundary,
}

/// Which invariant piece of `∂(Λ_3 × R_+) ∖ {0}` contains `v`.
pub fn omega5_boundary_component(v: &[Rational]) -> Omega5Component {
    if v.len() != 4 {
        return Omega5Component::NotOnBoundary;
    }
    let q = sq(&v[0]) - sq(&v[1]) - sq(&v[2]);
    let (v1, v4) = (&v[0], &v[3]);
    if q.is_positive() && v1.is_positive() && v4.is_zero() {
        Omega5Component::C1
    } else if q.is_zero() && v1.is_positive() && v4.is_zero() {
        Omega5Component::C2
    } else if q.is_zero() && v1.is_positive() && v4.is_positive() {
        Omega5Component::C3
    } else if q.is_zero() && v1.is_zero() && v4.is_positive() {
        Omega5Component::C4
    } else {
        Omega5Component::NotOnBoundary
    }
}

/// The symmetric 3×3 matrix with diagonal `(x1,x2,x3)`, `x4` at (1,2) and
/// `x5` at (1,3).
pub fn vinberg_embed(x: &[Rational]) -> MatR {
    assert_eq!(x.len(), 5, "Vinberg coordinates are 5-dimensional");
    let z = Rational::zero();
    MatR::from_rows(vec![
        vec![x[0].clone(), x[3].clone(), x[4].clone()],
        vec![x[3].clone(), x[1].clone(), z.clone()],
        vec![x[4].clone(), z, x[2].clone()],
    ])
}

/// Inverse of [`vinberg_embed`] on matrices of that shape.
pub fn vinberg_coords(m: &MatR) -> Vec<Rational> {
    assert!(m[(1, 2)].is_zero() && m[(2, 1)].is_zero(), "matrix leaves the subspace V");
    vec![m[(0, 0)].clone(), m[(1, 1)].clone(), m[(2, 2)].clone(), m[(0, 1)].clone(), m[(0, 2)].clone()]
}

/// `ρ(A)X = AXAᵀ` for `A` upper triangular with zero (2,3) entry.
pub fn vinberg_rho(a: &MatR, x: &[Rational]) -> MatR {
    a.mul(&vinberg_embed(x)).mul(&a.transpose())
}

/// Dimension of the span of the dual Vinberg generators.
pub fn vinberg_generator_dim() -> usize {
    let rows: Vec<Vec<Rational>> = dual_vinberg_generators().iter().map(|g| g.entries().to_vec()).collect();
    rank_of_vectors(&rows, 25)
}

/// Checks that `ρ(A)` keeps sample points of the cone positive definite for
/// `A = I + ε M` with each generator `M` of the group and small `ε`.
pub fn vinberg_action_preserves_cone() -> bool {
    let eps = Rational::new(1.into(), 10.into());
    let ms = [(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)];
    interior_samples(&ConeSpec::DualVinberg).iter().all(|x| {
        ms.iter().all(|&(p, q)| {
            [eps.clone(), -eps.clone()].iter().all(|e| {
                let a = MatR::identity(3).add(&unit(3, p, q).scale(e));
                let y = vinberg_rho(&a, x);
                y[(1, 2)].is_zero() && y.leading_minors().iter().all(Signed::is_positive)
            })
        })
    })
}

/// Whether `(I + εB)x` stays interior for every basis element and sample.
pub fn algebra_preserves_interior(cone: &ConeSpec, eps: &Rational) -> bool {
    let alg = lie_algebra_basis(cone);
    let k = cone.ambient_dim();
    interior_samples(cone).iter().all(|x| {
        alg.basis.iter().all(|b| {
            [eps.clone(), -eps.clone()].iter().all(|e| {
                let step = MatR::identity(k).add(&b.scale(e));
                classify_point(cone, &step.mul_vec(x)) == Ok(PointClass::Interior)
            })
        })
    })
}

/// `dim span{A x : A ∈ basis}` at a point.
pub fn tangent_rank(basis: &[MatR], x: &[Rational]) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let vs: Vec<Vec<Rational>> = basis.iter().map(|b| b.mul_vec(x)).collect();
    rank(&MatR::from_rows(vs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn catalog_dimensions() {
        for i in 1..=12 {
            let alg = lie_algebra_basis(&catalog(i).unwrap());
            assert_eq!(alg.dim(), CATALOG_DIMS[i - 1], "Ω{i}");
            assert_eq!(alg.span_rank(), alg.dim(), "Ω{i} basis dependent");
            assert!(alg.is_closed_under_bracket(), "Ω{i} not a subalgebra");
        }
    }

    #[test]
    fn lorentz_classification() {
        let l3 = ConeSpec::Lorentz(3);
        assert_eq!(classify_point(&l3, &v(&[1, 0, 0])), Ok(PointClass::Interior));
        assert_eq!(classify_point(&l3, &v(&[1, 1, 0])), Ok(PointClass::BoundaryNonzero));
        assert_eq!(classify_point(&l3, &v(&[0, 0, 1])), Ok(PointClass::Exterior));
        assert_eq!(classify_point(&l3, &v(&[0, 0, 0])), Ok(PointClass::Zero));
        assert!(classify_point(&l3, &v(&[1, 0])).is_err());
    }

    #[test]
    fn omega5_components() {
        assert_eq!(omega5_boundary_component(&v(&[1, 0, 0, 0])), Omega5Component::C1);
        assert_eq!(omega5_boundary_component(&v(&[1, 1, 0, 0])), Omega5Component::C2);
        assert_eq!(omega5_boundary_component(&v(&[1, 1, 0, 1])), Omega5Component::C3);
        assert_eq!(omega5_boundary_component(&v(&[0, 0, 0, 1])), Omega5Component::C4);
        assert_eq!(omega5_boundary_component(&v(&[1, 0, 0, 1])), Omega5Component::NotOnBoundary);
    }

    #[test]
    fn vinberg_embedding_minors() {
        assert_eq!(vinberg_embed(&v(&[1, 1, 1, 0, 0])), MatR::identity(3));
        assert_eq!(vinberg_embed(&v(&[1, 1, 1, 1, 0])).leading_minors(), v(&[1, 0, 0]));
        assert_eq!(vinberg_embed(&v(&[2, 2, 2, 1, 1])).leading_minors(), v(&[2, 3, 4]));
        assert_eq!(vinberg_generator_dim(), 5);
        assert!(vinberg_action_preserves_cone());
        let a = MatR::from_ints(&[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]]);
        let y = vinberg_rho(&a, &v(&[1, 1, 1, 0, 0]));
        assert!(y.leading_minors().iter().all(Signed::is_positive));
    }

    #[test]
    fn vinberg_dual_matches_direct_construction() {
        // Generators of Ω12 written out directly: with (α, β, γ, ε, ι),
        // dx1 = 2αx1, dx4 = βx1 + (α+ε)x4, dx2 = 2βx4 + 2εx2,
        // dx5 = γx1 + (α+ι)x5, dx3 = 2γx5 + 2ιx3.
        let mut direct = Vec::new();
        for p in 0..5 {
            let mut c = [0i64; 5];
            c[p] = 1;
            let [al, be, ga, ep, io] = c;
            direct.push(MatR::from_ints(&[
                &[2 * al, 0, 0, 0, 0],
                &[0, 2 * ep, 0, 2 * be, 0],
                &[0, 0, 2 * io, 0, 2 * ga],
                &[be, 0, 0, al + ep, 0],
                &[ga, 0, 0, 0, al + io],
            ]));
        }
        let mut rows: Vec<Vec<Rational>> = direct.iter().map(|m| m.entries().to_vec()).collect();
        assert_eq!(rank_of_vectors(&rows, 25), 5);
        rows.extend(vinberg_generators().iter().map(|m| m.entries().to_vec()));
        assert_eq!(rank_of_vectors(&rows, 25), 5);
    }

    #[test]
    fn algebras_preserve_interior_samples() {
        for i in 1..=12 {
            assert!(algebra_preserves_interior(&catalog(i).unwrap(), &rat(1, 1000)), "Ω{i}");
        }
    }

    #[test]
    fn parse_round_trip() {
        for s in ["orthant:3", "lorentz:4", "product:[lorentz:3,orthant:1]", "product:[product:[orthant:1,orthant:1],lorentz:3]", "vinberg", "dual_vinberg"] {
            assert_eq!(ConeSpec::parse(s).unwrap().to_string(), s);
        }
        for s in ["lorentz:2", "lorentz:x", "orthant:0", "cube:3", "product:[]", "product:[orthant:1", ""] {
            assert!(ConeSpec::parse(s).is_err(), "{s}");
        }
        assert_eq!(ConeSpec::lorentz(2), ConeSpec::Orthant(2));
    }
}
