//! Upper bounds for `d(S(Ω,H))`, the quadratic exclusion of `(n, k)` pairs,
//! the two-ball product solver and the Lorentz threshold.

use std::collections::BTreeSet;

use num_traits::Signed;
use thiserror::Error;

use crate::exactlin::{int, rat, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("target offset must be 7 or 8, got {0}")]
    InvalidOffset(u32),
    #[error("Lorentz threshold needs k >= 3, got {0}")]
    SmallK(usize),
}

fn r(n: usize) -> Rational {
    int(n as i64)
}

/// `k²/2 − k/2 + 1`, the largest possible `dim g(Ω)` for a proper cone in
/// `R^k`.
pub fn gest_bound(k: usize) -> Rational {
    rat(1, 2) * r(k) * r(k) - rat(1, 2) * r(k) + int(1)
}

/// `3k²/2 − k(2n + 5/2) + n² + 4n + 1`.
pub fn estim4(n: usize, k: usize) -> Rational {
    let (n, k) = (r(n), r(k));
    rat(3, 2) * &k * &k - &k * (int(2) * &n + rat(5, 2)) + &n * &n + int(4) * &n + int(1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub dim_g_omega: usize,
    pub gest_bound: Rational,
    /// `2k + 4(n−k) + s + dim g(Ω)`.
    pub estim2_value: Rational,
    /// `2k + 4(n−k) + (n−k)² + dim g(Ω)`.
    pub estim3_value: Rational,
    pub estim4_value: Rational,
}

impl BoundReport {
    /// Whether a domain with these parameters could reach dimension `target`.
    pub fn consistent_with(&self, target: i64) -> bool {
        self.estim2_value >= int(target)
    }
}

pub fn bound_chain(n: usize, k: usize, s: usize, dim_g_omega: usize) -> BoundReport {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    let base = 2 * k + 4 * (n - k) + dim_g_omega;
    BoundReport {
        n,
        k,
        s,
        dim_g_omega,
        gest_bound: gest_bound(k),
        estim2_value: r(base + s),
        estim3_value: r(base + (n - k) * (n - k)),
        estim4_value: estim4(n, k),
    }
}

/// `φ(t) = 3t²/2 − (2n + 5/2)t + 4n + offset + 1`, so that
/// `φ(k) = estim4(n,k) − (n² − offset)`.
pub fn phi(offset: u32, n: usize, t: usize) -> Rational {
    estim4(n, t) - r(n * n) + int(offset as i64)
}

/// Discriminant `4n² − 14n + 25/4 − 6(offset + 1)` of `φ`.
pub fn discriminant(offset: u32, n: usize) -> Rational {
    let n = r(n);
    int(4) * &n * &n - int(14) * &n + rat(25, 4) - int(6 * (offset as i64 + 1))
}

/// Roots of `φ` as `(center, D)` with `t = center ± √D / 3`.
pub fn roots(offset: u32, n: usize) -> (Rational, Rational) {
    ((int(2) * r(n) + rat(5, 2)) / int(3), discriminant(offset, n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExclusionTable {
    pub target_offset: u32,
    pub n_cap: usize,
    /// Pairs `(n, k)` with `3 ≤ k ≤ n ≤ n_cap` and `φ(k) < 0`.
    pub excluded: BTreeSet<(usize, usize)>,
    /// Constant term of `D(n) = 4n² − 14n + c`.
    pub discriminant_constant: Rational,
}

impl ExclusionTable {
    pub fn is_excluded(&self, n: usize, k: usize) -> bool {
        self.excluded.contains(&(n, k))
    }
}

pub const DEFAULT_N_CAP: usize = 64;

pub fn exclusion_table(target_offset: u32, n_cap: usize) -> Result<ExclusionTable, BoundsError> {
    if !matches!(target_offset, 7 | 8) {
        return Err(BoundsError::InvalidOffset(target_offset));
    }
    let mut excluded = BTreeSet::new();
    for n in 1..=n_cap {
        for k in 1..=n {
            if phi(target_offset, n, k).is_negative() {
                excluded.insert((n, k));
            }
        }
    }
    Ok(ExclusionTable {
        target_offset,
        n_cap,
        excluded,
        discriminant_constant: rat(25, 4) - int(6 * (target_offset as i64 + 1)),
    })
}

/// The region the exclusion lemmas claim.
pub fn claimed_region(offset: u32, n: usize, k: usize) -> bool {
    let tail = (n >= 8 && k == 3) || (4 <= k && k <= n && n >= if offset == 7 { 6 } else { 7 });
    tail || (offset == 8 && n == 6 && (k == 4 || k == 5))
}

/// Pairs that the case analyses treat explicitly, for `n ≤ n_cap`.
pub fn executed_pairs(offset: u32, n_cap: usize) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (4..=n_cap).map(|n| (n, 2)).collect();
    v.extend([(4, 3), (5, 3), (6, 3), (7, 3), (4, 4), (5, 4), (5, 5)]);
    if offset == 8 {
        v.push((6, 6));
    }
    v
}

/// Certificate that the exclusion persists for all `n ≥ n0`: `φ(3)`, `φ(4)`
/// and `φ(n)` are negative at `n0` and decrease in `n`, and `φ` is convex
/// in `t`, so `φ(k) ≤ max(φ(4), φ(n)) < 0` for `4 ≤ k ≤ n`.
pub fn tail_certificate(offset: u32, n0: usize) -> bool {
    let c = int(offset as i64 + 1);
    let n = r(n0);
    let phi3 = int(6) - int(2) * &n + &c;
    let phi4 = int(14) - int(4) * &n + &c;
    let phin = -(&n * &n) / int(2) + rat(3, 2) * &n + &c;
    let agree = phi3 == phi(offset, n0, 3) && phi4 == phi(offset, n0, 4) && phin == phi(offset, n0, n0);
    // d/dn: −2, −4, −n + 3/2; the last is negative for n ≥ 2.
    agree && n0 >= 2 && phi3.is_negative() && phi4.is_negative() && phin.is_negative()
}

/// `d(B^l × B^{n−l}) = 2l² − 2nl + n² + 2n`.
pub fn ball_product_dim(n: usize, l: usize) -> i64 {
    let (n, l) = (n as i64, l as i64);
    2 * l * l - 2 * n * l + n * n + 2 * n
}

/// All `1 ≤ l ≤ n−1` with `d(B^l × B^{n−l}) = target`.
pub fn ball_product_solver(n: usize, target: i64) -> Vec<usize> {
    (1..n).filter(|&l| ball_product_dim(n, l) == target).collect()
}

/// `K = (k−2)(k−3)/2 + k + 1`.
pub fn lorentz_threshold(k: usize) -> Result<usize, BoundsError> {
    if k < 3 {
        return Err(BoundsError::SmallK(k));
    }
    Ok((k - 2) * (k - 3) / 2 + k + 1)
}

/// `dim g(Λ_k) = 1 + k(k−1)/2`.
pub fn lorentz_algebra_dim(k: usize) -> usize {
    1 + k * (k - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_examples() {
        assert_eq!(estim4(6, 4), int(27));
        assert_eq!(gest_bound(3), int(4));
        assert_eq!(bound_chain(7, 3, 16, 4).estim2_value, int(42));
    }

    #[test]
    fn discriminants_match_closed_forms() {
        assert_eq!(discriminant(7, 0), rat(-167, 4));
        assert_eq!(discriminant(8, 0), rat(-191, 4));
        assert_eq!(exclusion_table(7, 10).unwrap().discriminant_constant, rat(-167, 4));
    }

    #[test]
    fn exclusion_examples() {
        let t7 = exclusion_table(7, 64).unwrap();
        assert!(t7.is_excluded(6, 4));
        assert!(!t7.is_excluded(5, 4));
        assert!(!t7.is_excluded(7, 3));
        let t8 = exclusion_table(8, 64).unwrap();
        assert!(t8.is_excluded(6, 5));
        assert!(!t8.is_excluded(6, 6));
        assert!(exclusion_table(9, 64).is_err());
    }

    #[test]
    fn ball_products() {
        assert_eq!(ball_product_solver(8, 56), vec![2, 6]);
        assert!(ball_product_solver(5, 18).is_empty());
        assert_eq!(ball_product_solver(2, 6), vec![1]);
    }

    #[test]
    fn thresholds() {
        assert_eq!(lorentz_threshold(6), Ok(13));
        assert_eq!(lorentz_threshold(3), Ok(4));
        assert_eq!(lorentz_threshold(4), Ok(6));
        assert!(lorentz_threshold(2).is_err());
        for k in 3..=10 {
            assert!(lorentz_algebra_dim(k) >= lorentz_threshold(k).unwrap());
        }
    }

    #[test]
    fn tails() {
        assert!(tail_certificate(7, 8));
        assert!(tail_certificate(8, 8));
        assert!(!tail_certificate(7, 7));
    }
}
