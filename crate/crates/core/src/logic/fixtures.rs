//! Shipped derivations of the derived rules that make L_OMP algebraizable,
//! each with a deliberately corrupted variant.

use crate::logic::derivation::{Derivation, Judgment};
use crate::report::{ItemReport, ModelReport, Witness};

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    /// The derived rule, `premises |- conclusion`.
    pub statement: &'static str,
    pub hypotheses: &'static [&'static str],
    pub conclusion: &'static str,
    pub text: &'static str,
    /// Line number that `corrupt_with` replaces.
    pub corrupt_line: usize,
    pub corrupt_with: &'static str,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "transitivity",
        statement: "X->Y, Y->Z |- X->Z",
        hypotheses: &["|- (p->q)", "|- (q->r)"],
        conclusion: "|- (p->r)",
        text: "\
1. |- (p->q)               ; HYP [1]
2. |- ((q->r)->(p->r))     ; Sf [1]
3. |- (q->r)               ; HYP [2]
4. |- (p->r)               ; MP [3,2]
",
        corrupt_line: 2,
        corrupt_with: "2. |- ((p->r)->(q->r))     ; Sf [1]",
    },
    Fixture {
        name: "top-weakening",
        statement: "|- X->(0->0)",
        hypotheses: &[],
        conclusion: "|- (p->(0->0))",
        text: "\
1. |- (0->0)                   ; B2
2. |- ((0->0)->(p->(0->0)))    ; B1
3. |- (p->(0->0))              ; MP [1,2]
",
        corrupt_line: 3,
        corrupt_with: "3. |- (p->(0->0))              ; MP [2,1]",
    },
    Fixture {
        name: "reflexivity",
        statement: "|- X->X",
        hypotheses: &[],
        conclusion: "|- (p->p)",
        text: "1. |- (p->p)    ; B2\n",
        corrupt_line: 1,
        corrupt_with: "1. |- (p->p)    ; B4",
    },
    Fixture {
        name: "hypothesis",
        statement: "X->Y |- X->Y",
        hypotheses: &["|- (p->q)"],
        conclusion: "|- (p->q)",
        text: "\
1. |- ((p->q)->(p->q))     ; B2
2. |- (p->q)               ; HYP [1]
3. |- (p->q)               ; MP [2,1]
",
        corrupt_line: 1,
        corrupt_with: "1. |- ((p->q)->(q->p))     ; B2",
    },
    Fixture {
        name: "suffixing",
        statement: "X->Y |- (Y->Z)->(X->Z)",
        hypotheses: &["|- (p->q)"],
        conclusion: "|- ((q->r)->(p->r))",
        text: "\
1. |- (p->q)               ; HYP [1]
2. |- ((q->r)->(p->r))     ; Sf [1]
",
        corrupt_line: 2,
        corrupt_with: "2. |- ((q->r)->(p->q))     ; Sf [1]",
    },
    Fixture {
        name: "top-introduction",
        statement: "X |- X->(0->0)",
        hypotheses: &["|- p"],
        conclusion: "|- (p->(0->0))",
        text: "\
1. |- (0->0)                   ; B2
2. |- ((0->0)->(p->(0->0)))    ; B1
3. |- (p->(0->0))              ; MP [1,2]
",
        corrupt_line: 2,
        corrupt_with: "2. |- ((0->0)->(p->(0->p)))    ; B1",
    },
    Fixture {
        name: "top-prefixing",
        statement: "X |- (0->0)->X",
        hypotheses: &["|- p"],
        conclusion: "|- ((0->0)->p)",
        text: "\
1. |- (p->((0->0)->p))     ; B1
2. |- p                    ; HYP [1]
3. |- ((0->0)->p)          ; MP [2,1]
",
        corrupt_line: 3,
        corrupt_with: "3. |- ((0->0)->p)          ; MP [1,2]",
    },
    Fixture {
        name: "top-elimination",
        statement: "(0->0)->X |- X",
        hypotheses: &["|- ((0->0)->p)"],
        conclusion: "|- p",
        text: "\
1. |- (0->0)               ; B2
2. |- ((0->0)->p)          ; HYP [1]
3. |- p                    ; MP [1,2]
",
        corrupt_line: 2,
        corrupt_with: "2. |- ((0->0)->p)          ; B4",
    },
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

impl Fixture {
    pub fn hypotheses(&self) -> Vec<Judgment> {
        self.hypotheses
            .iter()
            .map(|h| Judgment::parse(h).expect("fixture hypotheses parse"))
            .collect()
    }

    pub fn derivation(&self) -> Derivation {
        Derivation::parse(self.text).expect("fixture derivations parse")
    }

    /// The fixture text with line `corrupt_line` replaced.
    pub fn corrupted_text(&self) -> String {
        let prefix = format!("{}.", self.corrupt_line);
        let mut out = String::new();
        for l in self.text.lines() {
            if l.trim_start().starts_with(&prefix) {
                out.push_str(self.corrupt_with);
            } else {
                out.push_str(l);
            }
            out.push('\n');
        }
        out
    }

    /// Check the derivation and that its last line is the intended
    /// conclusion.
    pub fn check_text(&self, text: &str) -> ItemReport {
        let d = match Derivation::parse(text) {
            Ok(d) => d,
            Err(e) => return ItemReport::fail(self.name, 0, Witness::at_line(e.line, e.message)),
        };
        let report = d.check(&self.hypotheses());
        let checked = report.items[0].checked;
        if let Some((_, w)) = report.first_failure() {
            return ItemReport::fail(self.name, checked, w.clone());
        }
        let want = Judgment::parse(self.conclusion).expect("fixture conclusions parse");
        match d.conclusion() {
            Some(c) if *c == want => ItemReport::pass(self.name, checked),
            Some(c) => ItemReport::fail(
                self.name,
                checked,
                Witness::new(format!("derivation ends in `{c}`, expected `{want}`")),
            ),
            None => ItemReport::fail(self.name, 0, Witness::new("empty derivation")),
        }
    }

    pub fn check(&self) -> ItemReport {
        self.check_text(self.text)
    }
}

/// Every fixture checked, as one report.
pub fn check_fixtures() -> ModelReport {
    let mut r = ModelReport::new("fixtures");
    for f in FIXTURES {
        r.push(f.check());
    }
    r
}
