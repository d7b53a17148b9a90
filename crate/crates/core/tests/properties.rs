//! Property tests for the exact kernel and the domain invariants.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use proptest::prelude::*;

use siegel::bounds::{ball_product_dim, estim4, exclusion_table, phi};
use siegel::classify::domains::{ball, ball_product, scalar_domain};
use siegel::classify::{lemma_matrix_rank, LemmaParams, RowReduceCase};
use siegel::cones::ConeSpec;
use siegel::exactlin::{int, nullspace_basis, rank, rat, rref, GaussianRational, MatC, MatR, Rational};
use siegel::graded::{assoc_pair_space, graded_dims, phi_space_dim, SiegelDomainSpec};
use siegel::hermitian::{centralizer_dim, compute_s, HermitianForm};
use siegel::report::{Report, ReportItem, Status};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

fn matrix() -> impl Strategy<Value = MatR> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(small_rat(), r * c).prop_map(move |d| MatR::from_vec(r, c, d)))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (small_rat(), small_rat()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix()) {
        let ns = nullspace_basis(&m);
        prop_assert_eq!(rank(&m) + ns.dim(), m.cols());
        for v in &ns.basis {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let r = rref(&m);
        let again = rref(&r.reduced);
        prop_assert_eq!(&again.reduced, &r.reduced);
        prop_assert_eq!(again.pivot_cols, r.pivot_cols);
    }

    #[test]
    fn rank_invariant_under_transpose(m in matrix()) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn complex_rank_is_half_real_rank(rows in prop::collection::vec(prop::collection::vec(gaussian(), 3), 1..=4)) {
        let m = MatC::from_rows(rows);
        let mut real = MatR::zeros(2 * m.rows(), 2 * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let e = &m[(i, j)];
                real[(2 * i, 2 * j)] = e.re.clone();
                real[(2 * i, 2 * j + 1)] = -e.im.clone();
                real[(2 * i + 1, 2 * j)] = e.im.clone();
                real[(2 * i + 1, 2 * j + 1)] = e.re.clone();
            }
        }
        prop_assert_eq!(2 * rank(&m), rank(&real));
    }

    #[test]
    fn gaussian_inverse(z in gaussian()) {
        prop_assume!(!z.is_zero());
        let inv = GaussianRational::one() / z.clone();
        prop_assert!((z * inv).is_one());
    }

    #[test]
    fn centralizer_counts_equal_eigenvalue_pairs(vals in prop::collection::vec(-2i64..=2, 1..=4)) {
        let h = MatC::diag(vals.iter().map(|&v| GaussianRational::from_ints(v, 0)).collect());
        let r = vals.len();
        let unequal = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).filter(|&(i, j)| i < j && vals[i] != vals[j]).count();
        prop_assert_eq!(centralizer_dim(&h).unwrap(), r * r - 2 * unequal);
    }

    #[test]
    fn s_counts_distinct_eigenvalues_of_pencil(vals in prop::collection::vec(0i64..=3, 1..=4)) {
        let ones = vec![1i64; vals.len()];
        let h = HermitianForm::diagonal(&[&ones, &vals]);
        let mut mult: BTreeMap<i64, usize> = BTreeMap::new();
        for v in &vals {
            *mult.entry(*v).or_default() += 1;
        }
        let s: usize = mult.values().map(|c| c * c).sum();
        prop_assert_eq!(compute_s(&h), s);
    }

    #[test]
    fn exclusion_is_the_sign_of_phi(n in 3usize..=40, k in 1usize..=40, eight in any::<bool>()) {
        prop_assume!(k <= n);
        let offset = if eight { 8 } else { 7 };
        let t = exclusion_table(offset, 40).unwrap();
        let direct = estim4(n, k) < int((n * n) as i64 - offset as i64);
        prop_assert_eq!(t.is_excluded(n, k), direct);
        prop_assert_eq!(phi(offset, n, k) < int(0), direct);
    }

    #[test]
    fn ball_product_dim_is_symmetric(n in 2usize..=30, l in 1usize..=29) {
        prop_assume!(l < n);
        prop_assert_eq!(ball_product_dim(n, l), ball_product_dim(n, n - l));
    }

    #[test]
    fn report_json_round_trips(labels in prop::collection::vec("[a-z]{1,6}", 0..6), flags in prop::collection::vec(0u8..3, 6)) {
        let items = labels.iter().zip(&flags).map(|(l, f)| {
            let status = [Status::Pass, Status::Fail, Status::Info][*f as usize];
            ReportItem::new(l.clone(), status, format!("{l}|x"), "e").with_assumptions(vec![l.clone()])
        }).collect();
        let r = Report::new(items);
        prop_assert_eq!(Report::from_json(&r.to_json()).unwrap(), r.clone());
        prop_assert_eq!(r.all_pass(), !r.items.iter().any(|i| i.status == Status::Fail));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn ball_products_add(ms in prop::collection::vec(1usize..=3, 1..=3)) {
        let d = graded_dims(&ball_product(&ms)).d;
        let sum: usize = ms.iter().map(|&m| graded_dims(&ball(m)).d).sum();
        prop_assert_eq!(d, sum);
        prop_assert_eq!(sum, ms.iter().map(|m| m * m + 2 * m).sum::<usize>());
    }

    #[test]
    fn g0_splits_into_s_and_h(idx in 0usize..6, m in 1usize..=2) {
        let vs: [[i64; 3]; 6] = [[1, 0, 0], [1, 1, 0], [2, 1, 0], [5, 3, 4], [1, 0, 1], [3, 1, 2]];
        let spec = scalar_domain(ConeSpec::Lorentz(3), &vs[idx], m);
        let a = assoc_pair_space(&spec);
        let dims = graded_dims(&spec);
        prop_assert_eq!(a.dim_pairs, a.dim_l + a.dim_h);
        prop_assert_eq!(dims.g_0, a.dim_pairs);
        prop_assert!(dims.within_bounds());
        prop_assert!(int(dims.d as i64) <= estim4(spec.n, spec.k));
    }

    #[test]
    fn row_reduction_agrees_with_engine(v in prop::array::uniform3(small_rat()), a in gaussian(), boundary in any::<bool>()) {
        let case = if boundary { RowReduceCase::Boundary } else { RowReduceCase::Interior };
        let p = LemmaParams::new(v, a);
        let (r, _) = lemma_matrix_rank(case, &p);
        let spec = SiegelDomainSpec::new(5, 3, ConeSpec::Lorentz(3), p.form(case)).unwrap();
        prop_assert_eq!(phi_space_dim(&spec), 2 * (6 - r));
    }
}
