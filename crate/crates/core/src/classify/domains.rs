//! Siegel realizations of balls, Lorentz tubes and their products.

use crate::cones::ConeSpec;
use crate::exactlin::MatC;
use crate::graded::SiegelDomainSpec;
use crate::hermitian::HermitianForm;

/// `B^m` as `{Im z_1 − ‖w‖² > 0}` with `w ∈ C^{m−1}`.
pub fn ball(m: usize) -> SiegelDomainSpec {
    assert!(m >= 1);
    SiegelDomainSpec::ball(m)
}

/// `T_k`, the tube over `Λ_k` (`k ≥ 3`).
pub fn tube(k: usize) -> SiegelDomainSpec {
    SiegelDomainSpec::tube(ConeSpec::lorentz(k))
}

/// Cartesian product: cones multiply and the form is block diagonal.
pub fn product(parts: &[SiegelDomainSpec]) -> SiegelDomainSpec {
    assert!(!parts.is_empty());
    if parts.len() == 1 {
        return parts[0].clone();
    }
    let m: usize = parts.iter().map(SiegelDomainSpec::m).sum();
    let mut comps = Vec::new();
    let mut off = 0;
    for p in parts {
        for l in 0..p.k {
            let src = p.h.component(l);
            let mut c = MatC::zeros(m, m);
            for i in 0..p.m() {
                for j in 0..p.m() {
                    c.row_mut(off + i)[off + j] = src[(i, j)].clone();
                }
            }
            comps.push(c);
        }
        off += p.m();
    }
    let k = parts.iter().map(|p| p.k).sum();
    let cone = ConeSpec::product(parts.iter().map(|p| p.cone.clone()).collect());
    let h = HermitianForm::new(m, comps).expect("block sums of Hermitian matrices are Hermitian");
    SiegelDomainSpec::new(k + m, k, cone, h).expect("product of valid specs is valid")
}

/// Product of balls `B^{m_1} × …`.
pub fn ball_product(ms: &[usize]) -> SiegelDomainSpec {
    product(&ms.iter().map(|&m| ball(m)).collect::<Vec<_>>())
}

/// `H(w,w) = v‖w‖²` on `C^m` over `cone`.
pub fn scalar_domain(cone: ConeSpec, v: &[i64], m: usize) -> SiegelDomainSpec {
    let k = cone.ambient_dim();
    SiegelDomainSpec::new(k + m, k, cone, HermitianForm::scalar(v, m)).expect("scalar form matches the cone")
}

pub fn ball_product_label(ms: &[usize]) -> String {
    ms.iter().map(|m| format!("B{m}")).collect::<Vec<_>>().join(" x ")
}

/// Partitions of `n` into exactly `parts` positive parts, non-decreasing.
pub fn partitions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, parts: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in min..=n {
            if x * parts > n {
                break;
            }
            cur.push(x);
            go(n - x, parts - 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, parts, 1, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::graded_dims;

    #[test]
    fn products_add_up() {
        assert_eq!(graded_dims(&ball_product(&[1, 1, 2])).d, 14);
        assert_eq!(graded_dims(&product(&[ball(1), tube(3)])).d, 13);
        assert_eq!(partitions(6, 3), vec![vec![1, 1, 4], vec![1, 2, 3], vec![2, 2, 2]]);
    }
}
