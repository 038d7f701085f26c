//! Structured verification output, serialisable as JSON or CSV.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::polyring::Multidegree;
use crate::tableaux::GridSize;

/// Witnesses kept per slice entry; the count of failures is always exact.
pub const MAX_WITNESSES: usize = 8;

/// The outcome of one check, either on one multigraded slice or
/// aggregated over a whole range (`multidegree` absent).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceResult {
    pub check: String,
    pub multidegree: Option<Multidegree>,
    /// Set when the entry aggregates one total degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub pass: bool,
    /// Number of objects examined.
    pub checked: usize,
    /// Number of objects that failed.
    pub failures: usize,
    pub witnesses: Vec<Value>,
}

impl SliceResult {
    pub fn new(check: impl Into<String>, multidegree: Option<Multidegree>) -> Self {
        SliceResult { check: check.into(), multidegree, degree: None, pass: true, checked: 0, failures: 0, witnesses: Vec::new() }
    }

    pub fn for_degree(check: impl Into<String>, degree: usize) -> Self {
        SliceResult { degree: Some(degree), ..SliceResult::new(check, None) }
    }

    /// Records one examined object.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.pass = false;
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    /// Attaches an informational witness without affecting the verdict.
    pub fn note(&mut self, witness: Value) {
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn merge(&mut self, other: SliceResult) {
        self.pass &= other.pass;
        self.checked += other.checked;
        self.failures += other.failures;
        let room = MAX_WITNESSES.saturating_sub(self.witnesses.len());
        self.witnesses.extend(other.witnesses.into_iter().take(room));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: bool,
    pub counterexamples: usize,
    pub checked: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub grid: GridSize,
    pub params: BTreeMap<String, Value>,
    pub slices: Vec<SliceResult>,
    pub summary: Summary,
    /// Explorer reports never fail; their `slices` are evidence only.
    #[serde(default)]
    pub explorer: bool,
    #[serde(default)]
    pub budget_exceeded: bool,
    /// Free-form observations (explorer tables, notes).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl Report {
    pub fn new(suite: impl Into<String>, grid: GridSize) -> Self {
        Report {
            suite: suite.into(),
            grid,
            params: BTreeMap::new(),
            slices: Vec::new(),
            summary: Summary { pass: true, counterexamples: 0, checked: 0 },
            explorer: false,
            budget_exceeded: false,
            findings: Vec::new(),
            elapsed_ms: None,
            timestamp: None,
        }
    }

    pub fn explorer(mut self) -> Self {
        self.explorer = true;
        self
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.to_string(), serde_json::to_value(value).expect("parameters serialise"));
        self
    }

    pub fn push(&mut self, slice: SliceResult) {
        self.slices.push(slice);
        self.refresh();
    }

    pub fn extend(&mut self, slices: impl IntoIterator<Item = SliceResult>) {
        self.slices.extend(slices);
        self.refresh();
    }

    /// Absorbs another report's slices, prefixing their check names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        self.budget_exceeded |= other.budget_exceeded;
        self.findings.extend(other.findings);
        self.extend(other.slices.into_iter().map(|mut s| {
            s.check = format!("{prefix}/{}", s.check);
            s
        }));
    }

    pub fn finding(&mut self, v: Value) {
        self.findings.push(v);
    }

    fn refresh(&mut self) {
        let failures: usize = self.slices.iter().map(|s| s.failures).sum();
        let all_pass = self.slices.iter().all(|s| s.pass);
        self.summary = Summary {
            pass: self.explorer || (all_pass && !self.budget_exceeded),
            counterexamples: failures,
            checked: self.slices.iter().map(|s| s.checked).sum(),
        };
    }

    pub fn mark_budget_exceeded(&mut self) {
        self.budget_exceeded = true;
        self.refresh();
    }

    pub fn passed(&self) -> bool {
        self.summary.pass
    }

    /// Pass flag of every slice whose check name equals `check`.
    pub fn check_passed(&self, check: &str) -> Option<bool> {
        let mut found = self.slices.iter().filter(|s| s.check == check).peekable();
        found.peek()?;
        Some(found.all(|s| s.pass))
    }

    pub fn checked(&self, check: &str) -> usize {
        self.slices.iter().filter(|s| s.check == check).map(|s| s.checked).sum()
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::invalid(e.to_string()))
    }

    /// Merges per-multidegree entries into one entry per check and total
    /// degree; failing multidegrees are kept inside the witnesses.
    pub fn compact(&mut self) {
        let mut out: Vec<SliceResult> = Vec::new();
        let mut slot: BTreeMap<(String, usize), usize> = BTreeMap::new();
        for s in std::mem::take(&mut self.slices) {
            let Some(md) = s.multidegree.clone() else {
                out.push(s);
                continue;
            };
            let key = (s.check.clone(), md.total());
            let pos = *slot.entry(key).or_insert_with(|| {
                out.push(SliceResult::for_degree(s.check.clone(), md.total()));
                out.len() - 1
            });
            let witnesses = s
                .witnesses
                .into_iter()
                .map(|w| match w {
                    Value::Object(mut o) => {
                        o.insert("multidegree".into(), Value::String(md.to_string()));
                        Value::Object(o)
                    }
                    other => serde_json::json!({"multidegree": md.to_string(), "witness": other}),
                })
                .collect();
            out[pos].merge(SliceResult { witnesses, ..s });
        }
        self.slices = out;
        self.refresh();
    }
}

/// One CSV row per check, aggregated over slices, for a list of reports.
pub fn to_csv(reports: &[Report]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::invalid(e.to_string());
    w.write_record(["suite", "check", "slices", "checked", "failures", "pass"]).map_err(io)?;
    for r in reports {
        let mut by_check: BTreeMap<&str, (usize, usize, usize, bool)> = BTreeMap::new();
        for s in &r.slices {
            let e = by_check.entry(s.check.as_str()).or_insert((0, 0, 0, true));
            e.0 += 1;
            e.1 += s.checked;
            e.2 += s.failures;
            e.3 &= s.pass;
        }
        for (check, (slices, checked, failures, pass)) in by_check {
            w.write_record([
                r.suite.as_str(),
                check,
                &slices.to_string(),
                &checked.to_string(),
                &failures.to_string(),
                if r.explorer { "explorer" } else if pass { "true" } else { "false" },
            ])
            .map_err(io)?;
        }
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::invalid(e.to_string()))?)
        .map_err(|e| Error::invalid(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_tracks_failures() {
        let mut r = Report::new("demo", GridSize::square(2).unwrap()).param("bound", 3);
        let mut s = SliceResult::new("a", None);
        s.record(true, || json!(null));
        s.record(false, || json!("bad"));
        r.push(s);
        assert!(!r.passed());
        assert_eq!(r.summary.counterexamples, 1);
        assert_eq!(r.summary.checked, 2);
        assert_eq!(r.check_passed("a"), Some(false));
        assert_eq!(r.check_passed("b"), None);
    }

    #[test]
    fn explorer_reports_always_pass() {
        let mut r = Report::new("explore", GridSize::square(2).unwrap()).explorer();
        let mut s = SliceResult::new("q", None);
        s.record(false, || json!(1));
        r.push(s);
        assert!(r.passed());
    }

    #[test]
    fn json_and_csv() {
        let mut r = Report::new("demo", GridSize::new(2, 3).unwrap());
        r.push(SliceResult::new("a", Some(Multidegree::new(vec![1, 0], vec![0, 1, 0]).unwrap())));
        let json = r.to_json().unwrap();
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["grid"], json!([2, 3]));
        assert_eq!(v["slices"][0]["multidegree"], json!({"rows": [1, 0], "cols": [0, 1, 0]}));
        assert_eq!(v["summary"], json!({"pass": true, "counterexamples": 0, "checked": 0}));
        assert!(v.get("timestamp").is_none());
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let csv = to_csv(&[r]).unwrap();
        assert_eq!(csv, "suite,check,slices,checked,failures,pass\ndemo,a,1,0,0,true\n");
    }

    #[test]
    fn compact_merges_by_degree() {
        let mut r = Report::new("demo", GridSize::new(2, 2).unwrap());
        for (rows, cols, ok) in [([1, 0], [1, 0], true), ([0, 1], [1, 0], false), ([1, 1], [1, 1], true)] {
            let mut s = SliceResult::new("a", Some(Multidegree::new(rows.to_vec(), cols.to_vec()).unwrap()));
            s.record(ok, || json!({"x": 1}));
            r.push(s);
        }
        r.push(SliceResult::new("b", None));
        r.compact();
        assert_eq!(r.slices.len(), 3);
        assert_eq!((r.slices[0].degree, r.slices[0].checked, r.slices[0].failures), (Some(1), 2, 1));
        assert!(r.slices[0].witnesses[0].get("multidegree").is_some());
        assert_eq!((r.slices[1].degree, r.slices[1].pass), (Some(2), true));
        assert_eq!(r.summary.counterexamples, 1);
        assert_eq!(r.summary.checked, 3);
    }
}
