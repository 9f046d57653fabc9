use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::weyl::json::element_to_json;
use crate::weyl::{VarSet, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Failure announced by the errata registry entry with this id.
    ExpectedFail(String),
    /// The registry announces a failure that did not occur.
    StaleErratum(String),
}

impl Verdict {
    /// Pass or an announced failure.
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Pass | Verdict::ExpectedFail(_))
    }

    pub fn short(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::ExpectedFail(_) => "xfail",
            Verdict::StaleErratum(_) => "STALE",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail => f.write_str("fail"),
            Verdict::ExpectedFail(id) => write!(f, "expected-fail({id})"),
            Verdict::StaleErratum(id) => write!(f, "stale-erratum({id})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub label: String,
    pub element: WeylElement,
    pub vars: VarSet,
}

impl Witness {
    pub fn new(label: impl Into<String>, element: WeylElement, vars: VarSet) -> Witness {
        Witness {
            label: label.into(),
            element,
            vars,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub subject: String,
    pub verdict: Verdict,
    pub witness: Vec<Witness>,
}

impl CheckReport {
    pub fn to_json(&self) -> Value {
        let witness: Vec<Value> = self
            .witness
            .iter()
            .map(|w| {
                json!({
                    "label": w.label,
                    "text": w.element.to_text(w.vars),
                    "element": element_to_json(&w.element),
                })
            })
            .collect();
        json!({
            "check": self.check,
            "subject": self.subject,
            "verdict": self.verdict.to_string(),
            "witness": witness,
        })
    }

    /// One line, followed by the witness terms if any.
    pub fn to_text(&self) -> String {
        let mut s = format!("{:<20} {:<28} {}", self.check, self.subject, self.verdict);
        for w in &self.witness {
            s.push_str(&format!("\n    {}: {}", w.label, w.element.to_text(w.vars)));
        }
        s
    }
}

/// Leading token of the subject, i.e. the system name.
fn system_of(r: &CheckReport) -> &str {
    r.subject.split_whitespace().next().unwrap_or("")
}

fn table(reports: &[CheckReport]) -> (Vec<String>, Vec<String>, BTreeMap<(String, String), String>) {
    let mut systems: Vec<String> = Vec::new();
    let mut checks: Vec<String> = Vec::new();
    let mut counts: BTreeMap<(String, String), [usize; 4]> = BTreeMap::new();
    for r in reports {
        let s = system_of(r).to_string();
        if !systems.contains(&s) {
            systems.push(s.clone());
        }
        if !checks.contains(&r.check) {
            checks.push(r.check.clone());
        }
        let slot = match r.verdict {
            Verdict::Pass => 0,
            Verdict::ExpectedFail(_) => 1,
            Verdict::Fail => 2,
            Verdict::StaleErratum(_) => 3,
        };
        counts.entry((s, r.check.clone())).or_default()[slot] += 1;
    }
    let cells = counts
        .into_iter()
        .map(|(k, [pass, xfail, fail, stale])| {
            let mut parts = vec![format!("{pass} pass")];
            if xfail > 0 {
                parts.push(format!("{xfail} xfail"));
            }
            if fail > 0 {
                parts.push(format!("{fail} FAIL"));
            }
            if stale > 0 {
                parts.push(format!("{stale} STALE"));
            }
            (k, parts.join(", "))
        })
        .collect();
    (systems, checks, cells)
}

/// Per system and per check counts, as aligned plain text.
pub fn summary_text(reports: &[CheckReport]) -> String {
    let (systems, checks, cells) = table(reports);
    let width = checks
        .iter()
        .map(String::len)
        .chain(cells.values().map(String::len))
        .max()
        .unwrap_or(4)
        + 2;
    let mut out = format!("{:<8}", "system");
    for c in &checks {
        out.push_str(&format!("{c:<width$}"));
    }
    out = out.trim_end().to_string();
    out.push('\n');
    for s in &systems {
        let mut line = format!("{s:<8}");
        for c in &checks {
            let cell = cells.get(&(s.clone(), c.clone())).map(String::as_str).unwrap_or("-");
            line.push_str(&format!("{cell:<width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// The same table as a markdown artifact.
pub fn summary_markdown(reports: &[CheckReport]) -> String {
    let (systems, checks, cells) = table(reports);
    let mut out = String::from("| system |");
    for c in &checks {
        out.push_str(&format!(" {c} |"));
    }
    out.push_str("\n|---|");
    for _ in &checks {
        out.push_str("---|");
    }
    out.push('\n');
    for s in &systems {
        out.push_str(&format!("| {s} |"));
        for c in &checks {
            let cell = cells.get(&(s.clone(), c.clone())).map(String::as_str).unwrap_or("-");
            out.push_str(&format!(" {cell} |"));
        }
        out.push('\n');
    }
    out
}
