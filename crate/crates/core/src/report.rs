//! Structured verdicts shared by every checker.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::elements::{ElementId, ElementSet};

/// Anything whose elements carry printable names.
pub trait Named {
    fn size(&self) -> usize;
    fn name(&self, x: ElementId) -> &str;

    /// `{m1, m2, ..}` in index order.
    fn set_name(&self, s: ElementSet) -> String {
        let parts: Vec<&str> = s.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// One variable of a failing instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub var: String,
    pub index: usize,
    pub name: String,
}

/// Where and why a check failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bindings: Vec<Binding>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub detail: String,
}

impl Witness {
    pub fn new(detail: impl Into<String>) -> Self {
        Witness {
            bindings: Vec::new(),
            line: None,
            detail: detail.into(),
        }
    }

    pub fn at_line(line: usize, detail: impl Into<String>) -> Self {
        Witness {
            line: Some(line),
            ..Witness::new(detail)
        }
    }

    pub fn bind<N: Named + ?Sized>(mut self, names: &N, var: &str, x: ElementId) -> Self {
        self.bindings.push(Binding {
            var: var.to_string(),
            index: x.index(),
            name: names.name(x).to_string(),
        });
        self
    }

    /// Bindings as a comma-separated list of element names, e.g. `(a,b)`.
    pub fn tuple(&self) -> String {
        let names: Vec<&str> = self.bindings.iter().map(|b| b.name.as_str()).collect();
        format!("({})", names.join(","))
    }

    /// Element indices of the bindings, in binding order.
    pub fn indices(&self) -> Vec<usize> {
        self.bindings.iter().map(|b| b.index).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { witness: Witness },
    Skipped { reason: String },
}

/// Verdict for one named sub-check (an axiom, a rule, a law).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemReport {
    pub item: String,
    /// Number of instances examined.
    pub checked: u64,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl ItemReport {
    pub fn pass(item: impl Into<String>, checked: u64) -> Self {
        ItemReport {
            item: item.into(),
            checked,
            verdict: Verdict::Pass,
        }
    }

    pub fn fail(item: impl Into<String>, checked: u64, witness: Witness) -> Self {
        ItemReport {
            item: item.into(),
            checked,
            verdict: Verdict::Fail { witness },
        }
    }

    pub fn skipped(item: impl Into<String>, reason: impl Into<String>) -> Self {
        ItemReport {
            item: item.into(),
            checked: 0,
            verdict: Verdict::Skipped {
                reason: reason.into(),
            },
        }
    }

    pub fn from_result(item: impl Into<String>, checked: u64, result: Result<(), Witness>) -> Self {
        match result {
            Ok(()) => ItemReport::pass(item, checked),
            Err(w) => ItemReport::fail(item, checked, w),
        }
    }

    pub fn passed(&self) -> bool {
        !matches!(self.verdict, Verdict::Fail { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::Fail { witness } => Some(witness),
            _ => None,
        }
    }
}

/// The verdict of a checker: a list of item verdicts plus optional notes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelReport {
    pub check: String,
    pub items: Vec<ItemReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ModelReport {
    pub fn new(check: impl Into<String>) -> Self {
        ModelReport {
            check: check.into(),
            items: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn single(check: impl Into<String>, item: ItemReport) -> Self {
        let mut r = ModelReport::new(check);
        r.items.push(item);
        r
    }

    pub fn push(&mut self, item: ItemReport) {
        self.items.push(item);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(ItemReport::passed)
    }

    pub fn passed_count(&self) -> usize {
        self.items.iter().filter(|i| i.passed()).count()
    }

    pub fn item(&self, name: &str) -> Option<&ItemReport> {
        self.items.iter().find(|i| i.item == name)
    }

    /// Names of the failing items, in report order.
    pub fn failed_items(&self) -> Vec<&str> {
        self.items
            .iter()
            .filter(|i| !i.passed())
            .map(|i| i.item.as_str())
            .collect()
    }

    /// The first failing item and its witness.
    pub fn first_failure(&self) -> Option<(&str, &Witness)> {
        self.items
            .iter()
            .find_map(|i| i.witness().map(|w| (i.item.as_str(), w)))
    }

    /// Fold another report's items into this one, prefixing item names.
    pub fn absorb(&mut self, prefix: &str, other: ModelReport) {
        for mut item in other.items {
            item.item = format!("{prefix}{}", item.item);
            self.items.push(item);
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for ModelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let total = self.items.len();
        let ok = self.passed_count();
        let status = if self.passed() { "pass" } else { "FAIL" };
        writeln!(f, "{}: {} ({}/{})", self.check, status, ok, total)?;
        let all_plain_pass = self
            .items
            .iter()
            .all(|i| matches!(i.verdict, Verdict::Pass));
        if all_plain_pass && total > 1 {
            writeln!(
                f,
                "  {}..{}: pass",
                self.items[0].item,
                self.items[total - 1].item
            )?;
        } else {
            for item in &self.items {
                match &item.verdict {
                    Verdict::Pass => writeln!(f, "  {}: pass", item.item)?,
                    Verdict::Skipped { reason } => {
                        writeln!(f, "  {}: skipped ({})", item.item, reason)?
                    }
                    Verdict::Fail { witness } => {
                        write!(f, "  {}: FAIL", item.item)?;
                        if let Some(line) = witness.line {
                            write!(f, " at line {line}")?;
                        }
                        if !witness.bindings.is_empty() {
                            let binds: Vec<String> = witness
                                .bindings
                                .iter()
                                .map(|b| format!("{}={}", b.var, b.name))
                                .collect();
                            write!(f, " witness {} [{}]", witness.tuple(), binds.join(", "))?;
                        }
                        writeln!(f, ": {}", witness.detail)?;
                    }
                }
            }
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}
