//! Acceptance gate: ten criteria, each with a wall-clock limit. Prints one
//! line per criterion and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use siegel::bounds::{gest_bound, DEFAULT_N_CAP};
use siegel::classify::domains::{ball, scalar_domain};
use siegel::classify::{
    boundary_component_checks, centralizer_sweep, eigenvalue_pair_configs, exceptional_form, exclusion_report, lemma_matrix_rank,
    lemma_sweep, run_target, transitivity_probes, verify_classification, LemmaParams, RowReduceCase, Target,
};
use siegel::cones::{catalog, lie_algebra_basis, ConeSpec, CATALOG_DIMS};
use siegel::exactlin::{int, nullspace_basis, rank_of_vectors, rat, rref, GaussianRational, MatR};
use siegel::graded::{assoc_pair_space, g_half_dim, graded_dims, SiegelDomainSpec};
use siegel::hermitian::compute_s;
use siegel::report::Status;

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, detail: String) -> Result<String, String> {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c1_table() -> Result<String, String> {
    let r = verify_classification();
    let fails: Vec<_> = r.failures().iter().map(|i| format!("{}: {} vs {}", i.label, i.computed, i.expected)).collect();
    ensure(r.items.len() == 24 && fails.is_empty(), format!("{} items, failures {fails:?}", r.items.len()))
}

fn c2_graded() -> Result<String, String> {
    let lambda3 = || ConeSpec::Lorentz(3);
    let limit = Duration::from_secs(60);
    let mut out = Vec::new();
    for (m, g0, d) in [(1usize, 4usize, 10usize), (3, 12, 22), (4, 19, 31)] {
        let t = Instant::now();
        let dims = graded_dims(&scalar_domain(lambda3(), &[1, 1, 0], m));
        let el = t.elapsed();
        let ok = dims.g_0 == g0 && dims.d == d && (m != 1 || dims.split() == (3, 2, 4, 0, 1));
        out.push(format!("m = {m}: {:?} d = {} ({el:.2?})", dims.split(), dims.d));
        if !ok || el > limit {
            return Err(out.join("; "));
        }
    }
    Ok(out.join("; "))
}

fn c3_catalog() -> Result<String, String> {
    let mut dims = Vec::new();
    let mut equality_ok = true;
    for i in 1..=12 {
        let c = catalog(i).expect("catalog index");
        let d = lie_algebra_basis(&c).dim();
        let lorentz_like = c.is_lorentz() || c == ConeSpec::lorentz(2);
        equality_ok &= int(d as i64) <= gest_bound(c.ambient_dim()) && (int(d as i64) == gest_bound(c.ambient_dim())) == lorentz_like;
        dims.push(d);
    }
    ensure(dims == CATALOG_DIMS && equality_ok, format!("dims {dims:?}, bound equality exactly at Lorentz: {equality_ok}"))
}

fn c4_centralizer() -> Result<String, String> {
    let s = centralizer_sweep();
    ensure(s.ok(), format!("{}/{} profiles agree {:?}", s.passed, s.samples, s.failures))
}

fn c5_half() -> Result<String, String> {
    let mut bad: Vec<String> = boundary_component_checks().into_iter().filter(|i| i.status != Status::Pass).map(|i| i.label).collect();
    let d4 = scalar_domain(ConeSpec::Lorentz(3), &[1, 1, 0], 1);
    if g_half_dim(&d4) != 0 {
        bad.push("d4".into());
    }
    let exc = SiegelDomainSpec::new(5, 3, ConeSpec::Lorentz(3), exceptional_form()).expect("valid form");
    if g_half_dim(&exc) != 0 {
        bad.push("exceptional form".into());
    }
    for n in 2..=3 {
        if g_half_dim(&ball(n)) != 2 * (n - 1) {
            bad.push(format!("ball {n}"));
        }
    }
    ensure(bad.is_empty(), format!("Omega_5 pieces, D_4, exceptional form vanish; balls saturate; failures {bad:?}"))
}

fn c6_rowreduce() -> Result<String, String> {
    let i = RowReduceCase::Interior;
    let b = RowReduceCase::Boundary;
    let q = LemmaParams::ints;
    let mut bad = Vec::new();
    // Exceptional points, then perturbations of each coordinate.
    let points = [
        (i, q([1, 0, 0], (0, 1)), true),
        (i, q([1, 0, 0], (0, -1)), true),
        (i, q([1, 0, 0], (0, 2)), false),
        (i, q([1, 0, 0], (1, 1)), false),
        (i, q([1, 1, 0], (0, 1)), false),
        (i, q([1, 0, 1], (0, -1)), false),
        (i, q([3, 0, 0], (0, 1)), false),
        (b, q([1, -1, 0], (0, 0)), true),
        (b, q([1, -1, 0], (1, 0)), false),
        (b, q([1, -1, 0], (0, 1)), false),
        (b, q([2, -1, 0], (0, 0)), false),
        (b, q([1, 0, 0], (0, 0)), false),
        (b, q([1, -1, 2], (0, 0)), false),
    ];
    for (case, p, want) in &points {
        if lemma_matrix_rank(*case, p).1 != *want {
            bad.push(format!("{case:?} {p:?}"));
        }
    }
    let si = lemma_sweep(i, 200, 2024);
    let sb = lemma_sweep(b, 200, 2025);
    ensure(
        bad.is_empty() && si.ok() && sb.ok(),
        format!("{} fixed points, sweeps {}/200 and {}/200 full rank, mismatches {bad:?}", points.len(), si.passed, sb.passed),
    )
}

fn c7_exclusion() -> Result<String, String> {
    let a = exclusion_report(Target::Minus7, DEFAULT_N_CAP);
    let b = exclusion_report(Target::Minus8, DEFAULT_N_CAP);
    ensure(a.status == Status::Pass && b.status == Status::Pass, format!("{} | {}", a.computed, b.computed))
}

fn c8_eigen_pairs() -> Result<String, String> {
    let s: Vec<usize> = eigenvalue_pair_configs(4).iter().map(|c| compute_s(&c.spec().h)).collect();
    ensure(s == [2, 5, 3, 10, 8, 17], format!("s = {s:?}"))
}

fn c9_transitivity() -> Result<String, String> {
    let items = transitivity_probes(99, 5);
    let bad: Vec<_> = items.iter().filter(|i| i.status != Status::Pass).map(|i| format!("{}: {}", i.label, i.computed)).collect();
    ensure(bad.is_empty(), format!("{} domains x 5 points, failures {bad:?}", items.len()))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> MatR {
    let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=7));
    let data = (0..r * c).map(|_| if rng.gen_bool(0.3) { int(0) } else { rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)) }).collect();
    MatR::from_vec(r, c, data)
}

fn c10_properties() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..300 {
        let m = random_matrix(&mut rng);
        let rr = rref(&m);
        let ns = nullspace_basis(&m);
        if rr.rank + ns.dim() != m.cols() || rref(&rr.reduced).reduced != rr.reduced {
            return Err(format!("rank-nullity or idempotence fails on {m:?}"));
        }
        let kernel_ok = ns.basis.iter().all(|v| m.mul_vec(v).iter().all(Zero::is_zero));
        if !kernel_ok || rank_of_vectors(&ns.basis, m.cols()) != ns.dim() {
            return Err(format!("nullspace basis invalid on {m:?}"));
        }
    }
    // Every domain examined by the case drivers passes the bound chain and
    // dim g_0 = s + dim h; a violation shows up as a problem.
    let mut problems = Vec::new();
    let mut count = 0;
    for t in [Target::Minus7, Target::Minus8] {
        for rec in run_target(t) {
            count += rec.candidates.len();
            problems.extend(rec.problems.iter().filter(|p| p.contains("bound chain")).cloned());
        }
    }
    let ex = SiegelDomainSpec::new(5, 3, ConeSpec::Lorentz(3), LemmaParams::new([int(1), int(0), int(0)], GaussianRational::i()).form(RowReduceCase::Interior))
        .expect("valid");
    let a = assoc_pair_space(&ex);
    ensure(
        problems.is_empty() && a.dim_pairs == a.dim_l + a.dim_h,
        format!("300 random matrices, {count} case candidates, bound problems {problems:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, u64); 10] = [
        ("1 classification table", c1_table, 60),
        ("2 graded splits", c2_graded, 60),
        ("3 cone catalog", c3_catalog, 5),
        ("4 centralizer sweep", c4_centralizer, 30),
        ("5 g_1/2 vanishing and saturation", c5_half, 60),
        ("6 row-reduction exceptional sets", c6_rowreduce, 30),
        ("7 exclusion regions", c7_exclusion, 5),
        ("8 eigenvalue-pair pipeline", c8_eigen_pairs, 10),
        ("9 transitivity probes", c9_transitivity, 10),
        ("10 property suite", c10_properties, 60),
    ];
    let mut failed = 0;
    for (name, check, secs) in criteria {
        let t = Instant::now();
        let res = check();
        let el = t.elapsed();
        let in_time = el <= Duration::from_secs(secs);
        let (ok, detail) = match res {
            Ok(d) => (in_time, d),
            Err(d) => (false, d),
        };
        if !ok {
            failed += 1;
        }
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {name} ({el:.2?}, limit {secs} s): {detail}");
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
