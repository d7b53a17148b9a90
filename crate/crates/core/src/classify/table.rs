//! The 24 homogeneous hyperbolic manifolds with `d ≥ n² − 8`.

use std::fmt;

use rayon::prelude::*;

use crate::cones::ConeSpec;
use crate::graded::{graded_dims, SiegelDomainSpec};
use crate::report::{Report, ReportItem, Status};

use super::domains::{ball, product, scalar_domain, tube};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableFactor {
    Ball(usize),
    Tube(usize),
    /// `Λ_3`, `H = (|w|², |w|², 0)` on `C^1`.
    D,
}

impl TableFactor {
    pub fn n(self) -> usize {
        match self {
            Self::Ball(m) => m,
            Self::Tube(k) => k,
            Self::D => 4,
        }
    }

    pub fn realization(self) -> SiegelDomainSpec {
        match self {
            Self::Ball(m) => ball(m),
            Self::Tube(k) => tube(k),
            Self::D => scalar_domain(ConeSpec::Lorentz(3), &[1, 1, 0], 1),
        }
    }
}

impl fmt::Display for TableFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Ball(m) => write!(f, "B{m}"),
            Self::Tube(k) => write!(f, "T{k}"),
            Self::D => write!(f, "D"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationEntry {
    /// Roman numeral, `i` to `xxiv`.
    pub item: &'static str,
    pub factors: Vec<TableFactor>,
    pub n: usize,
    pub expected_d: usize,
}

impl ClassificationEntry {
    fn new(item: &'static str, factors: Vec<TableFactor>, expected_d: usize) -> Self {
        let n = factors.iter().map(|f| f.n()).sum();
        Self { item, factors, n, expected_d }
    }

    pub fn description(&self) -> String {
        self.factors.iter().map(ToString::to_string).collect::<Vec<_>>().join(" x ")
    }
}

const ROMAN: [&str; 24] = [
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv", "xv", "xvi", "xvii", "xviii",
    "xix", "xx", "xxi", "xxii", "xxiii", "xxiv",
];

/// Sizes at which the two families `B^n` and `B^1 × B^{n−1}` are checked.
pub const FAMILY_NS: std::ops::RangeInclusive<usize> = 2..=5;

/// All items. The families (i) and (ii) are listed once per `n` in
/// [`FAMILY_NS`], so the first two items expand to several entries.
pub fn classification_entries() -> Vec<ClassificationEntry> {
    use TableFactor::*;
    let mut out = Vec::new();
    for n in FAMILY_NS {
        out.push(ClassificationEntry::new(ROMAN[0], vec![Ball(n)], n * n + 2 * n));
    }
    for n in FAMILY_NS {
        out.push(ClassificationEntry::new(ROMAN[1], vec![Ball(1), Ball(n - 1)], n * n + 2));
    }
    let fixed: [(Vec<TableFactor>, usize); 22] = [
        (vec![Ball(1), Ball(1), Ball(1)], 9),
        (vec![Ball(2), Ball(2)], 16),
        (vec![Ball(1), Ball(1), Ball(2)], 14),
        (vec![Ball(2), Ball(3)], 23),
        (vec![Ball(1), Ball(1), Ball(1), Ball(1)], 12),
        (vec![Ball(1), Ball(1), Ball(3)], 21),
        (vec![Ball(2), Ball(4)], 32),
        (vec![Ball(1), Ball(2), Ball(2)], 19),
        (vec![Ball(3), Ball(3)], 30),
        (vec![Ball(1), Ball(1), Ball(4)], 30),
        (vec![Ball(2), Ball(5)], 43),
        (vec![Ball(1), Ball(1), Ball(1), Ball(2)], 17),
        (vec![Ball(1), Ball(1), Ball(5)], 41),
        (vec![Ball(2), Ball(6)], 56),
        (vec![Tube(3)], 10),
        (vec![Tube(4)], 15),
        (vec![Tube(5)], 21),
        (vec![Tube(6)], 28),
        (vec![Ball(1), Tube(3)], 13),
        (vec![Ball(2), Tube(3)], 18),
        (vec![Ball(1), Tube(4)], 18),
        (vec![D], 10),
    ];
    for (i, (factors, d)) in fixed.into_iter().enumerate() {
        out.push(ClassificationEntry::new(ROMAN[i + 2], factors, d));
    }
    out
}

/// `(sum over factors, whole product)`; balls are also checked against
/// `m² + 2m`.
fn score(e: &ClassificationEntry) -> (usize, usize, bool) {
    let parts: Vec<SiegelDomainSpec> = e.factors.iter().map(|f| f.realization()).collect();
    let mut ball_ok = true;
    let mut sum = 0;
    for (f, p) in e.factors.iter().zip(&parts) {
        let d = graded_dims(p).d;
        if let TableFactor::Ball(m) = f {
            ball_ok &= d == m * m + 2 * m;
        }
        sum += d;
    }
    (sum, graded_dims(&product(&parts)).d, ball_ok)
}

/// One line per item; the family items aggregate their `n` values.
pub fn verify_classification() -> Report {
    let entries = classification_entries();
    let scored: Vec<(ClassificationEntry, (usize, usize, bool))> = entries.into_par_iter().map(|e| {
        let s = score(&e);
        (e, s)
    }).collect();
    let mut items = Vec::new();
    for (pos, item) in ROMAN.iter().enumerate() {
        let rows: Vec<_> = scored.iter().filter(|(e, _)| e.item == *item).collect();
        let ok = rows.iter().all(|(e, (sum, whole, balls))| *sum == e.expected_d && *whole == e.expected_d && *balls);
        let computed: Vec<String> = rows.iter().map(|(e, (sum, whole, _))| format!("n = {}: {sum} / {whole}", e.n)).collect();
        let expected: Vec<String> = rows.iter().map(|(e, _)| format!("n = {}: {}", e.n, e.expected_d)).collect();
        let desc = match pos {
            0 => "B^n".to_string(),
            1 => "B1 x B^(n-1)".to_string(),
            _ => rows[0].0.description(),
        };
        items.push(
            ReportItem::new(format!("table-{:02}-({item})", pos + 1), Status::from_bool(ok), computed.join(", "), expected.join(", "))
                .with_assumptions(vec![format!("{desc}; computed as factor sum / product realization")]),
        );
    }
    Report::new(items)
}
