//! Pass/fail reports with JSON and markdown output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Info => "info",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportItem {
    pub label: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    #[serde(default)]
    pub assumptions: Vec<String>,
}

impl ReportItem {
    pub fn new(label: impl Into<String>, status: Status, computed: impl Into<String>, expected: impl Into<String>) -> Self {
        Self { label: label.into(), status, computed: computed.into(), expected: expected.into(), assumptions: Vec::new() }
    }

    /// Passes iff `computed == expected`.
    pub fn compare<T: PartialEq + std::fmt::Debug>(label: impl Into<String>, computed: T, expected: T) -> Self {
        let status = Status::from_bool(computed == expected);
        Self::new(label, status, format!("{computed:?}"), format!("{expected:?}"))
    }

    pub fn with_assumptions(mut self, a: Vec<String>) -> Self {
        self.assumptions = a;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub items: Vec<ReportItem>,
}

impl Report {
    /// Sorts items by label.
    pub fn new(mut items: Vec<ReportItem>) -> Self {
        items.sort_by(|a, b| a.label.cmp(&b.label));
        Self { items }
    }

    pub fn merge(reports: impl IntoIterator<Item = Report>) -> Self {
        Self::new(reports.into_iter().flat_map(|r| r.items).collect())
    }

    /// True iff every item is `pass` or `info`.
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&ReportItem> {
        self.items.iter().filter(|i| i.status == Status::Fail).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// One section per label prefix (text before the first `-`).
    pub fn to_markdown(&self) -> String {
        let mut groups: BTreeMap<&str, Vec<&ReportItem>> = BTreeMap::new();
        for it in &self.items {
            let g = it.label.split('-').next().unwrap_or("");
            groups.entry(g).or_default().push(it);
        }
        let mut out = String::from("# Verification report\n");
        for (g, items) in groups {
            let _ = writeln!(out, "\n## {}\n", section_title(g));
            out.push_str("| label | status | computed | expected |\n|---|---|---|---|\n");
            for it in &items {
                let _ = writeln!(out, "| {} | {} | {} | {} |", it.label, it.status.as_str(), cell(&it.computed), cell(&it.expected));
            }
            for it in items.iter().filter(|i| !i.assumptions.is_empty()) {
                let _ = writeln!(out, "\n{} assumptions:", it.label);
                for a in &it.assumptions {
                    let _ = writeln!(out, "- {a}");
                }
            }
        }
        out
    }

    pub fn summary_lines(&self) -> Vec<String> {
        self.items.iter().map(|i| format!("{} {}: computed {}, expected {}", i.status.as_str(), i.label, i.computed, i.expected)).collect()
    }
}

fn section_title(g: &str) -> String {
    match g {
        "T1" => "d = n² − 7".to_string(),
        "T2" => "d = n² − 8".to_string(),
        "table" => "Classification table".to_string(),
        "lemma" => "Lemma checks".to_string(),
        other => other.to_string(),
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_order() {
        let r = Report::new(vec![
            ReportItem::compare("b", 1, 1),
            ReportItem::compare("a", 1, 2).with_assumptions(vec!["x".into()]),
            ReportItem::new("c", Status::Info, "", ""),
        ]);
        assert_eq!(r.items[0].label, "a");
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        assert!(!r.all_pass());
        assert_eq!(r.failures().len(), 1);
        assert!(r.to_markdown().contains("| a | fail |"));
    }
}
