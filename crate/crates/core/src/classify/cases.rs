//! Decision procedures for the seventeen cases.

use crate::bounds::{ball_product_solver, gest_bound, lorentz_algebra_dim, lorentz_threshold};
use crate::cones::{catalog, lie_algebra_basis, omega5_boundary_component, ConeSpec, CATALOG_DIMS};
use crate::exactlin::{int, GaussianRational, MatC};
use crate::graded::{assoc_pair_space, common_eigenvector, g_half_dim, SiegelDomainSpec};
use crate::hermitian::{centralizer_dim, compute_s, HermitianForm};

use super::domains::{ball, ball_product, ball_product_label, partitions, product, scalar_domain, tube};
use super::lemmas::{eigenvalue_pair_configs, exceptional_form};
use super::{case_index, probe, Candidate, CaseRecord, Outcome, Probe};

pub(super) fn execute(mut rec: CaseRecord) -> CaseRecord {
    let mut st = State::default();
    match case_index(&rec.case_id) {
        1 => k_two(&mut rec, &mut st),
        2 => k3_n4(&mut rec, &mut st),
        3 => k3_n5(&mut rec, &mut st),
        4 => k3_n6(&mut rec, &mut st),
        5 => k3_n7(&mut rec, &mut st),
        6 => k4_n4(&mut rec, &mut st),
        7 => k4_n5(&mut rec, &mut st),
        8 => k5_n5(&mut rec, &mut st),
        9 => k6_n6(&mut rec, &mut st),
        _ => unreachable!("registry ids are C1..C9"),
    }
    rec.outcome = Some(st.conclude(&mut rec));
    rec
}

#[derive(Default)]
struct State {
    matches: Vec<(String, usize)>,
    reasons: Vec<String>,
}

impl State {
    fn conclude(self, rec: &mut CaseRecord) -> Outcome {
        let mut names: Vec<&String> = self.matches.iter().map(|(n, _)| n).collect();
        names.dedup();
        if names.len() > 1 {
            rec.problems.push(format!("several contributing domains: {names:?}"));
        }
        match self.matches.into_iter().next() {
            Some((domain, d)) => Outcome::Contributes { domain, d },
            None => Outcome::Excluded(self.reasons),
        }
    }
}

/// Probes `spec`, records it as a candidate and flags bound violations.
fn examine(rec: &mut CaseRecord, label: &str, spec: &SiegelDomainSpec, note: &str) -> Probe {
    let p = probe(spec);
    if !p.bounds_ok {
        rec.problems.push(format!("{label}: bound chain or g_0 = s + dim h violated"));
    }
    rec.candidates.push(Candidate {
        label: label.to_string(),
        n: spec.n,
        d: Some(p.dims.d),
        target: rec.target.value(spec.n),
        note: format!("{note}split {:?}, s = {}, full-rank orbits: {}", p.dims.split(), p.s, p.full_rank_orbits),
    });
    p
}

fn expect<T: PartialEq + std::fmt::Debug>(rec: &mut CaseRecord, what: &str, got: T, want: T) {
    if got != want {
        rec.problems.push(format!("{what}: computed {got:?}, expected {want:?}"));
    }
}

/// Records a match if `d` hits the target on a domain with full-rank orbits,
/// otherwise a reason.
fn judge(rec: &CaseRecord, st: &mut State, name: &str, n: usize, p: &Probe) {
    let target = rec.target.value(n);
    if p.dims.d == target && p.full_rank_orbits {
        st.matches.push((name.to_string(), p.dims.d));
    } else if !p.full_rank_orbits {
        st.reasons.push(format!("{name}: not transitive"));
    } else {
        st.reasons.push(format!("{name}: d = {} != {target}", p.dims.d));
    }
}

/// `H_1 = I`, `H_2 = diag(diag2)` over the quadrant.
fn k2_domain(diag1: &[i64], diag2: &[i64]) -> SiegelDomainSpec {
    let h = HermitianForm::diagonal(&[diag1, diag2]);
    SiegelDomainSpec::new(diag1.len() + 2, 2, ConeSpec::Orthant(2), h).expect("k = 2 spec")
}

/// `(I − D, D)` with `D = diag(0^a, 1^b)` for a two-part profile `[a, b]`.
fn cone_adapted(profile: &[usize]) -> SiegelDomainSpec {
    let d2: Vec<i64> = profile.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i as i64, c)).collect();
    let d1: Vec<i64> = d2.iter().map(|x| 1 - x).collect();
    k2_domain(&d1, &d2)
}

fn k_two(rec: &mut CaseRecord, st: &mut State) {
    let t = rec.target;
    rec.assumptions.push("H_1 positive definite after a change of z; H_1, H_2 simultaneously diagonalized".into());
    rec.assumptions.push("for k = 2 the domain is a product of two balls B^l x B^(n-l) (taken as known)".into());
    for n in 4..=8 {
        let ones = vec![1; n - 2];
        let zeros = vec![0; n - 2];
        let p = examine(rec, &format!("D1 (n = {n})"), &k2_domain(&ones, &zeros), "H_2 = 0; ");
        expect(rec, &format!("d(D1), n = {n}"), p.dims.d, n * n + 2);
        let p = examine(rec, &format!("D2 (n = {n})"), &k2_domain(&ones, &ones), "H_2 = H_1; ");
        expect(rec, &format!("D2 orbits full rank, n = {n}"), p.full_rank_orbits, false);
        expect(rec, &format!("dim G(Omega_1, (|w|^2, |w|^2)), n = {n}"), p.dim_h, 1);
    }
    st.reasons.push("D1 = B^(n-1) x B^1: d = n^2 + 2".into());
    st.reasons.push("D2: stabilizer acts with rank 1 < 2, not transitive".into());

    let pmax = (t.offset() + 2) / 2;
    rec.assumptions.push(format!(
        "s >= n^2 - 4n + {} - {} forces at most {pmax} pairs of distinct eigenvalues, hence n <= {}",
        2,
        t.offset(),
        pmax + 3
    ));
    for cfg in eigenvalue_pair_configs(pmax) {
        let n = cfg.n;
        let target = t.value(n);
        let spec = cfg.spec();
        expect(rec, &format!("s for profile {:?}", cfg.profile), compute_s(&spec.h), cfg.s_formula());
        examine(rec, &format!("profile {:?} (n = {n})", cfg.profile), &spec, "");
        let sols = ball_product_solver(n, target as i64);
        match sols.first() {
            None => st.reasons.push(format!("n = {n}, profile {:?}: no integer l with d(B^l x B^(n-l)) = {target}", cfg.profile)),
            Some(&l) => {
                let ms = [l.min(n - l), l.max(n - l)];
                let name = ball_product_label(&ms);
                let q = examine(rec, &name, &ball_product(&ms), "ball product; ");
                if let [a, b] = cfg.profile[..] {
                    // Eigenvalues 0 and 1: the cone change x ↦ (x_1 − x_2, x_2)
                    // turns (I, D) into (I − D, D), a block form of two balls.
                    let adapted = cone_adapted(&cfg.profile);
                    let r = examine(rec, &format!("profile {:?}, cone-adapted", cfg.profile), &adapted, "");
                    expect(rec, &format!("d({name}) vs cone-adapted profile {:?}", cfg.profile), r.dims.d, q.dims.d);
                    expect(rec, &format!("d({name}) vs a^2 + b^2 + 4(a + b) + 6"), q.dims.d, a * a + b * b + 4 * (a + b) + 6);
                } else {
                    rec.problems.push(format!("profile {:?} has more than two eigenvalues but matched {name}", cfg.profile));
                }
                judge(rec, st, &name, n, &q);
            }
        }
    }
}

/// Products of `k` balls with total dimension `n` (orthant cones).
fn orthant_products(rec: &mut CaseRecord, st: &mut State, n: usize, k: usize) {
    rec.assumptions.push(format!("over the orthant R^{k}_+ the domain is a product of {k} balls (taken as known)"));
    for ms in partitions(n, k) {
        let name = ball_product_label(&ms);
        let p = examine(rec, &name, &ball_product(&ms), "");
        let closed: usize = ms.iter().map(|m| m * m + 2 * m).sum();
        expect(rec, &format!("d({name}) vs sum of m^2 + 2m"), p.dims.d, closed);
        judge(rec, st, &name, n, &p);
    }
}

/// `v‖w‖²` over a Lorentz cone: an interior `v` is a common eigenvector, and
/// the boundary representative is probed exactly.
fn lorentz_scalar(rec: &mut CaseRecord, st: &mut State, k: usize, m: usize, stated_d: Option<usize>) -> Probe {
    let cone = ConeSpec::lorentz(k);
    let mut interior = vec![0i64; k];
    interior[0] = 2;
    interior[1] = 1;
    let spec = scalar_domain(cone.clone(), &interior, m);
    let pi = examine(rec, &format!("v = {interior:?} (interior)"), &spec, "");
    let basis = assoc_pair_space(&spec).h_basis;
    let v: Vec<_> = interior.iter().map(|&x| int(x)).collect();
    expect(rec, "interior v is a common eigenvector", common_eigenvector(&basis, &[v]).is_some(), true);
    expect(rec, "interior v: orbits full rank", pi.full_rank_orbits, false);
    st.reasons.push(format!("v interior to Lambda_{k}: v is a common eigenvector, not transitive"));

    let mut boundary = vec![0i64; k];
    boundary[0] = 1;
    boundary[1] = 1;
    rec.assumptions.push(format!("boundary v normalized to {boundary:?} by the transitive action on the boundary"));
    let name = format!("v = {boundary:?} over Lambda_{k}, m = {m}");
    let p = examine(rec, &name, &scalar_domain(cone, &boundary, m), "");
    expect(rec, &format!("dim h for {name}"), p.dim_h, lorentz_algebra_dim(k) - (k - 2));
    if let Some(d) = stated_d {
        expect(rec, &format!("d({name})"), p.dims.d, d);
    }
    judge(rec, st, &name, k + m, &p);
    p
}

fn k3_n4(rec: &mut CaseRecord, st: &mut State) {
    orthant_products(rec, st, 4, 3);
    expect(rec, "d(B1 x B1 x B2)", rec.candidates.last().and_then(|c| c.d), Some(14));
    let p = lorentz_scalar(rec, st, 3, 1, Some(10));
    expect(rec, "graded split of D4", p.dims.split(), (3, 2, 4, 0, 1));
}

/// Centralizer dimensions `r² − 2p` over all eigenvalue profiles of size `r`.
fn centralizer_values(r: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for parts in 1..=r {
        for prof in partitions(r, parts) {
            let diag: Vec<GaussianRational> =
                prof.iter().enumerate().flat_map(|(i, &mult)| std::iter::repeat_n(GaussianRational::from_ints(i as i64, 0), mult)).collect();
            out.push(centralizer_dim(&MatC::diag(diag)).expect("diagonal real is Hermitian"));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn k3_n5(rec: &mut CaseRecord, st: &mut State) {
    orthant_products(rec, st, 5, 3);
    expect(rec, "centralizer dimensions for r = 2", centralizer_values(2), vec![2, 4]);
    rec.assumptions.push("s = dim(K_2 ∩ K_3) with dim K_j in {2, 4} and iI in both, so s in {1, 2, 4}".into());
    rec.assumptions.push("representatives: s = 4 scalar forms, s = 2 (I, diag(1,-1), 0), s = 1 the exceptional form".into());
    let p = lorentz_scalar(rec, st, 3, 2, Some(15));
    expect(rec, "s of scalar form on C^2", p.s, 4);

    let h = HermitianForm::diagonal(&[&[1, 1], &[1, -1], &[0, 0]]);
    let spec = SiegelDomainSpec::new(5, 3, ConeSpec::Lorentz(3), h).expect("s = 2 representative");
    let p = examine(rec, "s = 2 representative", &spec, "");
    expect(rec, "s of (I, diag(1,-1), 0)", p.s, 2);
    expect(rec, "s = 2 representative: orbits full rank", p.full_rank_orbits, false);
    st.reasons.push("s = 2: not transitive".into());

    let spec = SiegelDomainSpec::new(5, 3, ConeSpec::Lorentz(3), exceptional_form()).expect("exceptional form");
    let p = examine(rec, "s = 1 exceptional form", &spec, "");
    expect(rec, "s of exceptional form", p.s, 1);
    expect(rec, "g_1/2 of exceptional form", p.dims.g_half, 0);
    expect(rec, "d(D6), s = 1, at most 15", p.dims.d <= 15, true);
    judge(rec, st, "D6 with s = 1", 5, &p);
}

fn k3_n6(rec: &mut CaseRecord, st: &mut State) {
    orthant_products(rec, st, 6, 3);
    let t = rec.target;
    let s_min = t.value(6) as i64 - (6 + 12 + 4);
    let vals = centralizer_values(3);
    expect(rec, "centralizer dimensions for r = 3", vals.clone(), vec![3, 5, 9]);
    let forced: Vec<usize> = vals.into_iter().filter(|&v| v as i64 >= s_min).collect();
    expect(rec, "centralizer dimensions compatible with s", forced, vec![9]);
    rec.assumptions.push(format!("s >= {s_min} forces every component proportional to a definite one: H = v|w|^2"));
    let p = lorentz_scalar(rec, st, 3, 3, Some(22));
    expect(rec, "dim g_0 of D8", p.dims.g_0, 12);
    expect(rec, "s of D8", p.s, 9);
}

fn k3_n7(rec: &mut CaseRecord, st: &mut State) {
    let t = rec.target;
    let needed = t.value(7) - (6 + 16);
    let vals = centralizer_values(4);
    expect(rec, "centralizer dimensions for r = 4", vals.clone(), vec![4, 6, 8, 10, 16]);
    rec.assumptions.push(format!("s + dim g(Omega) >= {needed}, s <= 16, s in {vals:?} or below"));
    for (ci, dim_g) in [(2usize, 3usize), (3, 4)] {
        let s_needed = needed.saturating_sub(dim_g);
        if s_needed > 16 {
            st.reasons.push(format!("Omega_{ci}: s would need to be {s_needed} > 16"));
            continue;
        }
        // s > 10 leaves only s = 16, i.e. H = v|w|^2.
        if ci == 2 {
            rec.assumptions.push("Omega_2, s = 16: v normalized to (0,0,1), (0,1,1) or (1,1,1)".into());
            for v in [[0, 0, 1], [0, 1, 1], [1, 1, 1]] {
                let spec = scalar_domain(ConeSpec::Orthant(3), &v, 4);
                let name = if v == [0, 0, 1] { "B1 x B1 x B5".to_string() } else { format!("v = {v:?} over Omega_2") };
                let p = examine(rec, &name, &spec, "");
                if v == [0, 0, 1] {
                    let q = examine(rec, "B1 x B1 x B5 (product)", &ball_product(&[1, 1, 5]), "");
                    expect(rec, "d(B1 x B1 x B5) two routes", p.dims.d, q.dims.d);
                    expect(rec, "d(B1 x B1 x B5)", p.dims.d, 41);
                }
                judge(rec, st, &name, 7, &p);
            }
        } else {
            let p = lorentz_scalar(rec, st, 3, 4, Some(31));
            expect(rec, "dim g_0 of D10", p.dims.g_0, 19);
        }
    }
}

fn tube_over(rec: &mut CaseRecord, st: &mut State, idx: usize, name: &str, stated: usize) {
    let cone = catalog(idx).expect("catalog index");
    let p = examine(rec, name, &SiegelDomainSpec::tube(cone.clone()), &format!("tube over Omega_{idx}; "));
    expect(rec, &format!("d({name})"), p.dims.d, stated);
    judge(rec, st, name, cone.ambient_dim(), &p);
}

fn k4_n4(rec: &mut CaseRecord, st: &mut State) {
    tube_over(rec, st, 4, "B1 x B1 x B1 x B1", 12);
    tube_over(rec, st, 5, "B1 x T3", 13);
    tube_over(rec, st, 6, "T4", 15);
}

fn k4_n5(rec: &mut CaseRecord, st: &mut State) {
    let t = rec.target;
    let needed = t.value(5) - (8 + 4 + 1);
    rec.assumptions.push(format!("m = 1 so s = 1; dim g(Omega) >= {needed}"));
    for idx in [4usize, 5, 6] {
        let dim_g = CATALOG_DIMS[idx - 1];
        if dim_g < needed {
            st.reasons.push(format!("Omega_{idx}: dim g = {dim_g} < {needed}"));
            continue;
        }
        let cone = catalog(idx).expect("catalog index");
        match idx {
            4 => {
                rec.assumptions.push("Omega_4: v normalized to a 0/1 vector up to permutation".into());
                for v in [[0, 0, 0, 1], [0, 0, 1, 1], [0, 1, 1, 1], [1, 1, 1, 1]] {
                    let name = if v == [0, 0, 0, 1] { "B1 x B1 x B1 x B2".to_string() } else { format!("v = {v:?} over Omega_4") };
                    let p = examine(rec, &name, &scalar_domain(cone.clone(), &v, 1), "");
                    if v == [0, 0, 0, 1] {
                        let q = examine(rec, "B1 x B1 x B1 x B2 (product)", &ball_product(&[1, 1, 1, 2]), "");
                        expect(rec, "d(B1 x B1 x B1 x B2) two routes", p.dims.d, q.dims.d);
                        expect(rec, "d(B1 x B1 x B1 x B2)", p.dims.d, 17);
                    }
                    judge(rec, st, &name, 5, &p);
                }
            }
            5 => {
                rec.assumptions.push("Omega_5 boundary components normalized to (1,0,0,0), (1,1,0,0), (1,1,0,1), (0,0,0,1)".into());
                let interior = [2, 1, 0, 1];
                let p = examine(rec, "v = [2, 1, 0, 1] (interior)", &scalar_domain(cone.clone(), &interior, 1), "");
                expect(rec, "Omega_5 interior v: orbits full rank", p.full_rank_orbits, false);
                st.reasons.push("Omega_5, interior v: not transitive".into());
                for v in [[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 0, 1], [0, 0, 0, 1]] {
                    let comp = omega5_boundary_component(&v.iter().map(|&x| int(x)).collect::<Vec<_>>());
                    let name = if v == [0, 0, 0, 1] { "B2 x T3".to_string() } else { format!("Omega_5 {comp:?} v = {v:?}") };
                    let spec = scalar_domain(cone.clone(), &v, 1);
                    let p = examine(rec, &name, &spec, "");
                    if v == [0, 0, 0, 1] {
                        let q = examine(rec, "B2 x T3 (product)", &product(&[ball(2), tube(3)]), "");
                        expect(rec, "d(B2 x T3) two routes", p.dims.d, q.dims.d);
                        expect(rec, "d(B2 x T3)", p.dims.d, 18);
                    } else {
                        expect(rec, &format!("g_1/2 for {name}"), g_half_dim(&spec), 0);
                        expect(rec, &format!("d({name}) at most 16"), p.dims.d <= 16, true);
                    }
                    judge(rec, st, &name, 5, &p);
                }
            }
            _ => {
                let p = lorentz_scalar(rec, st, 4, 1, None);
                expect(rec, "dim g_0 of D13", p.dims.g_0, 6);
                expect(rec, "d(D13) at most 16", p.dims.d <= 16, true);
            }
        }
    }
}

fn k5_n5(rec: &mut CaseRecord, st: &mut State) {
    let needed = rec.target.value(5) - 10;
    rec.assumptions.push(format!("tube case: dim g(Omega) >= {needed}"));
    for idx in 7..=12usize {
        let dim_g = lie_algebra_basis(&catalog(idx).expect("catalog index")).dim();
        expect(rec, &format!("dim g(Omega_{idx})"), dim_g, CATALOG_DIMS[idx - 1]);
        if dim_g < needed {
            st.reasons.push(format!("Omega_{idx}: dim g = {dim_g} < {needed}"));
        }
    }
    tube_over(rec, st, 9, "B1 x T4", 18);
    let q = examine(rec, "B1 x T4 (product)", &product(&[ball(1), tube(4)]), "");
    expect(rec, "d(B1 x T4) two routes", q.dims.d, 18);
    tube_over(rec, st, 10, "T5", 21);
}

fn k6_n6(rec: &mut CaseRecord, st: &mut State) {
    let needed = rec.target.value(6) - 12;
    let k_thr = lorentz_threshold(6).expect("k = 6");
    expect(rec, "K for k = 6", k_thr, 13);
    expect(rec, "dim g bound for k = 6", gest_bound(6), int(16));
    expect(rec, "needed dim g exceeds K", needed > k_thr, true);
    rec.assumptions.push(format!("dim g(Omega) >= {needed} > K = {k_thr}: Omega is Lambda_6 (taken as known)"));
    let p = examine(rec, "T6", &tube(6), "");
    expect(rec, "d(T6)", p.dims.d, 28);
    judge(rec, st, "T6", 6, &p);
}
