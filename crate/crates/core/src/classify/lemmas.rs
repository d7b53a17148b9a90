//! Computational content of the supporting lemmas.

use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{gest_bound, lorentz_threshold};
use crate::cones::{catalog, classify_point, lie_algebra_basis, omega5_boundary_component, ConeSpec, Omega5Component, PointClass, CATALOG_DIMS};
use crate::exactlin::{int, rank, rat, GaussianRational, MatC, MatR, Rational};
use crate::graded::{assoc_pair_space, common_eigenvector, g_half_dim, graded_dims, orbit_rank, phi_space_dim, SiegelDomainSpec};
use crate::hermitian::{centralizer_dim, compute_s, count_pairs, multiplicity_profile, HermitianForm, MultiplicityProfile};
use crate::report::{Report, ReportItem, Status};

use super::domains::{partitions, scalar_domain, tube};
use super::ClassifyError;

/// `k = 2`, `H_1 = I`, `H_2` diagonal with eigenvalue multiplicities `profile`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenPairConfig {
    pub n: usize,
    pub profile: Vec<usize>,
    pub pairs: usize,
}

impl EigenPairConfig {
    /// Eigenvalue `i` repeated `profile[i]` times.
    pub fn spec(&self) -> SiegelDomainSpec {
        let m = self.n - 2;
        let d2: Vec<i64> = self.profile.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i as i64, c)).collect();
        let d1 = vec![1i64; m];
        let h = HermitianForm::diagonal(&[&d1, &d2]);
        SiegelDomainSpec::new(self.n, 2, ConeSpec::Orthant(2), h).expect("k = 2 spec")
    }

    /// `(n − 2)² − 2p`.
    pub fn s_formula(&self) -> usize {
        (self.n - 2) * (self.n - 2) - 2 * self.pairs
    }
}

/// All profiles with at least two distinct eigenvalues and at most `pmax`
/// unequal pairs, by `n`, then number of distinct eigenvalues, then the
/// multiplicities in increasing order.
pub fn eigenvalue_pair_configs(pmax: usize) -> Vec<EigenPairConfig> {
    let mut out = Vec::new();
    for n in 4..=pmax + 3 {
        let r = n - 2;
        for parts in 2..=r {
            for profile in partitions(r, parts) {
                let pairs = count_pairs(&MultiplicityProfile(profile.clone()));
                if pairs <= pmax {
                    out.push(EigenPairConfig { n, profile, pairs });
                }
            }
        }
    }
    out
}

/// `(|w_1|² + |w_2|², |w_1|² − |w_2|², w̄_1 w_2 + w̄_2 w_1)`.
pub fn exceptional_form() -> HermitianForm {
    let c = |a: i64, b: i64, c: i64, d: i64| {
        MatC::from_rows(vec![
            vec![GaussianRational::from_ints(a, 0), GaussianRational::from_ints(b, 0)],
            vec![GaussianRational::from_ints(c, 0), GaussianRational::from_ints(d, 0)],
        ])
    };
    HermitianForm::new(2, vec![c(1, 0, 0, 1), c(1, 0, 0, -1), c(0, 1, 1, 0)]).expect("real symmetric components")
}

/// The two normal forms of an `s = 1` form on `C^2` over `Λ_3`: first
/// component `(1,0,0)` interior, or `(1,1,0)` on the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowReduceCase {
    Interior,
    Boundary,
}

impl FromStr for RowReduceCase {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rowreduce-i" | "i" => Ok(Self::Interior),
            "rowreduce-ii" | "ii" => Ok(Self::Boundary),
            other => Err(ClassifyError::UnknownLemmaCase(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaParams {
    pub v1: Rational,
    pub v2: Rational,
    pub v3: Rational,
    pub a2: GaussianRational,
}

impl LemmaParams {
    pub fn new(v: [Rational; 3], a2: GaussianRational) -> Self {
        let [v1, v2, v3] = v;
        Self { v1, v2, v3, a2 }
    }

    pub fn ints(v: [i64; 3], a2: (i64, i64)) -> Self {
        Self::new(v.map(int), GaussianRational::from_ints(a2.0, a2.1))
    }

    /// The form `u|w_1|² + v|w_2|² + a w̄_1 w_2 + ā w̄_2 w_1` with `a_1 = 0`,
    /// `a_3 = 1`.
    pub fn form(&self, case: RowReduceCase) -> HermitianForm {
        let g = |q: &Rational| GaussianRational::real(q.clone());
        let zero = GaussianRational::zero();
        let one = GaussianRational::one();
        let u2 = match case {
            RowReduceCase::Interior => zero.clone(),
            RowReduceCase::Boundary => one.clone(),
        };
        let h1 = MatC::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero.clone(), g(&self.v1)]]);
        let h2 = MatC::from_rows(vec![vec![u2, self.a2.clone()], vec![self.a2.conj(), g(&self.v2)]]);
        let h3 = MatC::from_rows(vec![vec![zero, one.clone()], vec![one, g(&self.v3)]]);
        HermitianForm::new(2, vec![h1, h2, h3]).expect("Hermitian by construction")
    }
}

/// The 10×6 coefficient matrix of the relations on `(φ¹₁, φ¹₂, φ¹₃, φ²₁, φ²₂, φ²₃)`.
pub fn lemma_matrix(case: RowReduceCase, p: &LemmaParams) -> MatC {
    let c = |x: i64| GaussianRational::from_ints(x, 0);
    let r = |q: &Rational| GaussianRational::real(q.clone());
    let (a, ab) = (p.a2.clone(), p.a2.conj());
    let (v1, v2, v3) = (r(&p.v1), r(&p.v2), r(&p.v3));
    let z = || c(0);
    let rows = match case {
        RowReduceCase::Interior => vec![
            vec![c(1), z(), z(), z(), -a.clone(), z()],
            vec![c(1), z(), z(), z(), z(), c(-1)],
            vec![z(), -ab.clone(), z(), v1.clone(), -v2.clone(), z()],
            vec![z(), z(), c(-1), v1.clone(), z(), -v3.clone()],
            vec![z(), c(1), z(), -a.clone(), z(), z()],
            vec![-ab.clone(), z(), z(), -v2.clone(), v1.clone(), z()],
            vec![z(), z(), c(1), c(-1), z(), z()],
            vec![c(-1), z(), z(), -v3.clone(), z(), v1.clone()],
            vec![z(), z(), z(), z(), c(1), a.clone()],
            vec![z(), c(1), ab, z(), v3, v2],
        ],
        RowReduceCase::Boundary => vec![
            vec![c(1), c(-1), z(), z(), -a.clone(), z()],
            vec![c(1), z(), z(), z(), z(), c(-1)],
            vec![z(), -ab.clone(), z(), v1.clone(), -v2.clone(), z()],
            vec![z(), z(), c(-1), v1.clone(), z(), -v3.clone()],
            vec![c(-1), c(1), z(), -a.clone(), z(), z()],
            vec![-ab.clone(), z(), z(), -v2.clone(), v1.clone(), z()],
            vec![z(), z(), c(1), c(-1), z(), z()],
            vec![c(1), z(), z(), v3.clone(), z(), -v1.clone()],
            vec![z(), z(), c(1), z(), c(1), a.clone()],
            vec![z(), c(1), ab, z(), v3, v2],
        ],
    };
    MatC::from_rows(rows)
}

/// Real 2r×2c matrix of a complex r×c matrix acting on `(re, im)` pairs.
fn realified(m: &MatC) -> MatR {
    let mut out = MatR::zeros(2 * m.rows(), 2 * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let e = &m[(i, j)];
            out.row_mut(2 * i)[2 * j] = e.re.clone();
            out.row_mut(2 * i)[2 * j + 1] = -e.im.clone();
            out.row_mut(2 * i + 1)[2 * j] = e.im.clone();
            out.row_mut(2 * i + 1)[2 * j + 1] = e.re.clone();
        }
    }
    out
}

/// `(rank, exceptional)`: the complex rank of the relation matrix, and
/// whether it falls short of 6. The rank is computed over `Q(i)` and again
/// on the realification; a disagreement panics.
pub fn lemma_matrix_rank(case: RowReduceCase, p: &LemmaParams) -> (usize, bool) {
    let m = lemma_matrix(case, p);
    let rc = rank(&m);
    let rr = rank(&realified(&m));
    assert_eq!(2 * rc, rr, "complex and real ranks disagree");
    (rc, rc < 6)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

pub fn random_params(rng: &mut ChaCha8Rng) -> LemmaParams {
    let v = [random_rational(rng), random_rational(rng), random_rational(rng)];
    LemmaParams::new(v, GaussianRational::new(random_rational(rng), random_rational(rng)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepResult {
    pub samples: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SweepResult {
    pub fn ok(&self) -> bool {
        self.passed == self.samples
    }
}

/// Random parameters off the exceptional set give full rank, and the
/// engine's `Φ`-space dimension equals `2(6 − rank)`.
pub fn lemma_sweep(case: RowReduceCase, samples: usize, seed: u64) -> SweepResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let p = random_params(&mut rng);
        let (r, exc) = lemma_matrix_rank(case, &p);
        let engine = phi_space_dim(&lemma_domain(case, &p));
        if exc || engine != 2 * (6 - r) {
            failures.push(format!("{p:?}: rank {r}, engine dim {engine}"));
        }
    }
    SweepResult { samples, passed: samples - failures.len(), failures }
}

fn lemma_domain(case: RowReduceCase, p: &LemmaParams) -> SiegelDomainSpec {
    SiegelDomainSpec::new(5, 3, ConeSpec::Lorentz(3), p.form(case)).expect("k = 3, m = 2")
}

/// Parameters whose exceptional status is asserted: the exceptional points
/// themselves and nearby points that must be full rank.
pub fn lemma_probe_points(case: RowReduceCase) -> Vec<(LemmaParams, bool)> {
    let q = LemmaParams::ints;
    match case {
        RowReduceCase::Interior => vec![
            (q([1, 0, 0], (0, 1)), true),
            (q([1, 0, 0], (0, -1)), true),
            (LemmaParams::new([rat(1, 3), rat(1, 5), rat(1, 7)], GaussianRational::from_ints(2, 0)), false),
            (q([1, 0, 0], (0, 2)), false),
            (q([1, 0, 0], (1, 1)), false),
            (q([1, 1, 0], (0, 1)), false),
            (q([1, 0, 1], (0, 1)), false),
            (q([2, 0, 0], (0, 1)), false),
        ],
        RowReduceCase::Boundary => vec![
            (q([1, -1, 0], (0, 0)), true),
            (q([1, -1, 0], (0, 1)), false),
            (q([1, 1, 0], (0, 0)), false),
            (q([1, -1, 1], (0, 0)), false),
            (q([2, -1, 0], (0, 0)), false),
            (q([1, -2, 0], (0, 0)), false),
        ],
    }
}

/// Centralizer dimension against `r² − 2p` for every set partition of
/// `{0..r}` (r ≤ 4), diagonal and conjugated by a rational unitary.
pub fn centralizer_sweep() -> SweepResult {
    let values = [rat(1, 2), int(-3), int(0), rat(7, 3)];
    let mut failures = Vec::new();
    let mut samples = 0;
    for r in 1..=4usize {
        for labels in set_partitions(r) {
            let nblocks = labels.iter().max().map_or(0, |x| x + 1);
            let mut counts = vec![0usize; nblocks];
            for &l in &labels {
                counts[l] += 1;
            }
            let p_known = count_pairs(&MultiplicityProfile(counts));
            let diag = MatC::diag(labels.iter().map(|&l| GaussianRational::real(values[l].clone())).collect());
            for h in [diag.clone(), unitary_conjugate(&diag)] {
                samples += 1;
                let dim = centralizer_dim(&h).expect("Hermitian");
                let p_poly = count_pairs(&multiplicity_profile(&h));
                if dim != r * r - 2 * p_known || p_poly != p_known {
                    failures.push(format!("r = {r}, labels {labels:?}: dim {dim}, pairs {p_known}/{p_poly}"));
                }
            }
        }
    }
    SweepResult { samples, passed: samples - failures.len(), failures }
}

/// Restricted growth strings of length `r`.
fn set_partitions(r: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().max().map_or(0, |m| m + 1);
        for l in 0..=next {
            cur.push(l);
            go(r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, &mut Vec::new(), &mut out);
    out
}

/// `U h U*` with `U = (1/5)[[3, 4i], [4i, 3]]` on the first two coordinates.
fn unitary_conjugate(h: &MatC) -> MatC {
    let n = h.rows();
    if n < 2 {
        return h.clone();
    }
    let mut u = MatC::identity(n);
    let f = |re: i64, im: i64| GaussianRational::new(rat(re, 5), rat(im, 5));
    u.row_mut(0)[0] = f(3, 0);
    u.row_mut(0)[1] = f(0, 4);
    u.row_mut(1)[0] = f(0, 4);
    u.row_mut(1)[1] = f(3, 0);
    u.mul(h).mul(&u.conj_transpose())
}

/// `Φ = 0` and `g_1/2 = 0` on the three boundary pieces of `Ω_5`.
pub fn boundary_component_checks() -> Vec<ReportItem> {
    let cone = catalog(5).expect("Omega_5");
    [([1, 0, 0, 0], Omega5Component::C1), ([1, 1, 0, 0], Omega5Component::C2), ([1, 1, 0, 1], Omega5Component::C3)]
        .into_iter()
        .map(|(v, comp)| {
            let spec = scalar_domain(cone.clone(), &v, 1);
            let got = (omega5_boundary_component(&v.map(int)), phi_space_dim(&spec), g_half_dim(&spec));
            ReportItem::compare(format!("lemma-omega5-{comp:?}").to_lowercase(), got, (comp, 0, 0))
                .with_assumptions(vec![format!("v normalized to {v:?}")])
        })
        .collect()
}

fn random_interior(cone: &ConeSpec, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let pos = |rng: &mut ChaCha8Rng| rat(rng.gen_range(1..=30), rng.gen_range(1..=7));
    match cone {
        ConeSpec::Orthant(k) => (0..*k).map(|_| pos(rng)).collect(),
        ConeSpec::Lorentz(k) => {
            let tail: Vec<Rational> = (1..*k).map(|_| random_rational(rng)).collect();
            let norm: Rational = tail.iter().map(|x| x * x).sum();
            // ‖tail‖ ≤ ‖tail‖² + 1/4 < ‖tail‖² + 1.
            let mut v = vec![norm + int(1) + pos(rng)];
            v.extend(tail);
            v
        }
        ConeSpec::Product(fs) => fs.iter().flat_map(|f| random_interior(f, rng)).collect(),
        ConeSpec::Vinberg | ConeSpec::DualVinberg => loop {
            let x: Vec<Rational> = (0..5).map(|i| if i < 3 { pos(rng) } else { random_rational(rng) }).collect();
            let x: Vec<Rational> = x.iter().enumerate().map(|(i, v)| if i == 0 { v * int(40) } else { v.clone() }).collect();
            if classify_point(cone, &x) == Ok(PointClass::Interior) {
                break x;
            }
        },
    }
}

/// `orbit_rank` at random interior points: `k` on tubes and on `D_4`, less
/// than `k` for interior `v` over Lorentz cones.
pub fn transitivity_probes(seed: u64, points: usize) -> Vec<ReportItem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items = Vec::new();
    let full: Vec<(String, SiegelDomainSpec)> = vec![
        ("tube-lambda3".into(), tube(3)),
        ("tube-lambda4".into(), tube(4)),
        ("tube-lambda5".into(), tube(5)),
        ("tube-omega5".into(), SiegelDomainSpec::tube(catalog(5).expect("Omega_5"))),
        ("tube-orthant3".into(), SiegelDomainSpec::tube(ConeSpec::Orthant(3))),
        ("tube-vinberg".into(), SiegelDomainSpec::tube(ConeSpec::Vinberg)),
        ("d4".into(), scalar_domain(ConeSpec::Lorentz(3), &[1, 1, 0], 1)),
    ];
    let deficient: Vec<(String, SiegelDomainSpec)> = vec![
        ("interior-lambda3".into(), scalar_domain(ConeSpec::Lorentz(3), &[2, 1, 0], 1)),
        ("interior-lambda3-m2".into(), scalar_domain(ConeSpec::Lorentz(3), &[3, 1, 2], 2)),
        ("interior-lambda4".into(), scalar_domain(ConeSpec::Lorentz(4), &[2, 1, 0, 1], 1)),
    ];
    for (want_full, list) in [(true, full), (false, deficient)] {
        for (name, spec) in list {
            let ranks: Vec<usize> =
                (0..points).map(|_| orbit_rank(&spec, &random_interior(&spec.cone, &mut rng)).expect("interior sample")).collect();
            let ok = if want_full { ranks.iter().all(|&r| r == spec.k) } else { ranks.iter().all(|&r| r < spec.k) };
            let expected = if want_full { format!("all {}", spec.k) } else { format!("all < {}", spec.k) };
            items.push(ReportItem::new(format!("lemma-orbit-{name}"), Status::from_bool(ok), format!("{ranks:?}"), expected));
        }
    }
    items
}

/// All lemma checks as report items.
pub fn verify_lemma_suite() -> Report {
    let mut items = boundary_component_checks();

    let d4 = scalar_domain(ConeSpec::Lorentz(3), &[1, 1, 0], 1);
    let dims = graded_dims(&d4);
    items.push(ReportItem::compare("lemma-d4-half-and-one", (dims.g_half, dims.g_1), (0, 1)));

    let exc = SiegelDomainSpec::new(5, 3, ConeSpec::Lorentz(3), exceptional_form()).expect("exceptional form");
    items.push(ReportItem::compare("lemma-exceptional-form", (compute_s(&exc.h), g_half_dim(&exc)), (1, 0)));

    for (k, v, want) in [(3usize, vec![1i64, 1, 0], 3usize), (4, vec![1, 1, 0, 0], 5)] {
        let spec = scalar_domain(ConeSpec::Lorentz(k), &v, 1);
        let space = assoc_pair_space(&spec);
        let vr: Vec<Rational> = v.iter().map(|&x| int(x)).collect();
        let eig = common_eigenvector(&space.h_basis, &[vr]).is_some();
        items.push(ReportItem::compare(format!("lemma-stabilizer-lambda{k}"), (space.dim_h, eig), (want, true)));
    }

    let sweep = centralizer_sweep();
    items.push(
        ReportItem::new(
            "lemma-centralizer-sweep",
            Status::from_bool(sweep.ok()),
            format!("{}/{} agree", sweep.passed, sweep.samples),
            "dim = r^2 - 2p in every case",
        )
        .with_assumptions(sweep.failures),
    );

    let configs = eigenvalue_pair_configs(4);
    let s: Vec<usize> = configs.iter().map(|c| compute_s(&c.spec().h)).collect();
    let formula: Vec<usize> = configs.iter().map(EigenPairConfig::s_formula).collect();
    items.push(ReportItem::compare("lemma-eigen-pairs", (s.clone(), formula), (vec![2, 5, 3, 10, 8, 17], vec![2, 5, 3, 10, 8, 17])));

    for case in [RowReduceCase::Interior, RowReduceCase::Boundary] {
        let tag = match case {
            RowReduceCase::Interior => "i",
            RowReduceCase::Boundary => "ii",
        };
        let mut bad = Vec::new();
        for (p, want_exc) in lemma_probe_points(case) {
            let (r, exc) = lemma_matrix_rank(case, &p);
            let engine = phi_space_dim(&lemma_domain(case, &p));
            let g_half = g_half_dim(&lemma_domain(case, &p));
            if exc != want_exc || engine != 2 * (6 - r) || g_half != 0 {
                bad.push(format!("{p:?}: rank {r}, engine {engine}, g_1/2 {g_half}"));
            }
        }
        items.push(
            ReportItem::new(
                format!("lemma-rowreduce-{tag}-points"),
                Status::from_bool(bad.is_empty()),
                format!("{} mismatches", bad.len()),
                "rank < 6 exactly at the exceptional points; g_1/2 = 0 throughout",
            )
            .with_assumptions(bad),
        );
        let sweep = lemma_sweep(case, 200, 7 + tag.len() as u64);
        items.push(
            ReportItem::new(
                format!("lemma-rowreduce-{tag}-sweep"),
                Status::from_bool(sweep.ok()),
                format!("{}/{} full rank", sweep.passed, sweep.samples),
                "200/200 full rank",
            )
            .with_assumptions(sweep.failures),
        );
    }

    let balls: Vec<usize> = (2..=3).map(|n| g_half_dim(&SiegelDomainSpec::ball(n))).collect();
    items.push(ReportItem::compare("lemma-ball-saturation", balls, vec![2, 4]));

    let mut thr = Vec::new();
    for k in 3..=6 {
        let kk = lorentz_threshold(k).expect("k >= 3");
        let lam = lie_algebra_basis(&ConeSpec::Lorentz(k)).dim();
        thr.push((k, kk, lam >= kk));
    }
    for i in 2..=12 {
        let c = catalog(i).expect("catalog");
        let k = c.ambient_dim();
        if k >= 3 && !c.is_lorentz() {
            let dim = lie_algebra_basis(&c).dim();
            thr.push((i, dim, dim < lorentz_threshold(k).expect("k >= 3")));
        }
    }
    let ok = thr.iter().all(|t| t.2);
    items.push(ReportItem::new("lemma-lorentz-threshold", Status::from_bool(ok), format!("{thr:?}"), "Lambda_k reaches K, other cones stay below"));

    let mut cone_rows = Vec::new();
    let mut cone_ok = true;
    for i in 1..=12 {
        let c = catalog(i).expect("catalog");
        let dim = lie_algebra_basis(&c).dim();
        let bound = gest_bound(c.ambient_dim());
        let eq = int(dim as i64) == bound;
        let lorentz_like = c.is_lorentz() || c == ConeSpec::lorentz(2);
        cone_ok &= dim == CATALOG_DIMS[i - 1] && int(dim as i64) <= bound && eq == lorentz_like;
        cone_rows.push(format!("Omega_{i}: {dim}"));
    }
    items.push(
        ReportItem::new("lemma-cone-bound", Status::from_bool(cone_ok), cone_rows.join(", "), format!("{CATALOG_DIMS:?}, equality exactly at Lorentz"))
            .with_assumptions(vec!["Omega_1 = Orthant(2) is linearly equivalent to Lambda_2".into()]),
    );

    items.extend(transitivity_probes(11, 5));
    Report::new(items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_points() {
        let i = RowReduceCase::Interior;
        assert!(lemma_matrix_rank(i, &LemmaParams::ints([1, 0, 0], (0, 1))).1);
        let generic = LemmaParams::new([rat(1, 3), rat(1, 5), rat(1, 7)], GaussianRational::from_ints(2, 0));
        assert_eq!(lemma_matrix_rank(i, &generic), (6, false));
        assert!(lemma_matrix_rank(RowReduceCase::Boundary, &LemmaParams::ints([1, -1, 0], (0, 0))).1);
        assert!("rowreduce-iii".parse::<RowReduceCase>().is_err());
    }

    #[test]
    fn configs_match_listing() {
        let c = eigenvalue_pair_configs(4);
        let got: Vec<(usize, Vec<usize>)> = c.iter().map(|c| (c.n, c.profile.clone())).collect();
        assert_eq!(got, vec![(4, vec![1, 1]), (5, vec![1, 2]), (5, vec![1, 1, 1]), (6, vec![1, 3]), (6, vec![2, 2]), (7, vec![1, 4])]);
        assert_eq!(eigenvalue_pair_configs(5).len(), 8);
    }

    #[test]
    fn set_partition_counts() {
        let counts: Vec<usize> = (1..=4).map(|r| set_partitions(r).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15]);
    }
}
