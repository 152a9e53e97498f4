//! The eight conditions that make L_OMP algebraizable with equivalence
//! formulas `{p→q, q→p}` and defining identity `p ≈ p→p`.

use rayon::prelude::*;

use crate::iop::IopTable;
use crate::logic::derivation::Schema;
use crate::logic::fixtures::{fixture, Fixture};
use crate::logic::semantics::check_schema;
use crate::report::{ItemReport, ModelReport, Verdict, Witness};

/// Defining identity and equivalence formulas, fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraizabilityConfig {
    pub delta: &'static str,
    pub epsilon: &'static str,
    pub equiv: [&'static str; 2],
}

pub const CONFIG: AlgebraizabilityConfig = AlgebraizabilityConfig {
    delta: "p -> p",
    epsilon: "p",
    equiv: ["p -> q", "q -> p"],
};

#[derive(Clone, Copy, Debug)]
pub struct Condition {
    pub label: &'static str,
    pub premises: &'static [&'static str],
    pub conclusion: &'static str,
    /// Fixture deriving it; `None` means semantic check only.
    pub fixture: Option<&'static str>,
}

pub const CONDITIONS: &[Condition] = &[
    Condition { label: "i", premises: &[], conclusion: "|- X -> X", fixture: Some("reflexivity") },
    Condition { label: "ii", premises: &["|- X -> Y"], conclusion: "|- X -> Y", fixture: Some("hypothesis") },
    Condition {
        label: "iii",
        premises: &["|- X -> Y", "|- Y -> Z"],
        conclusion: "|- X -> Z",
        fixture: Some("transitivity"),
    },
    Condition {
        label: "iv-1",
        premises: &["|- X -> Y"],
        conclusion: "|- (Y -> Z) -> (X -> Z)",
        fixture: Some("suffixing"),
    },
    Condition {
        label: "iv-2",
        premises: &["|- X -> Y", "|- Y -> X"],
        conclusion: "|- (Z -> X) -> (Z -> Y)",
        fixture: None,
    },
    Condition {
        label: "v-1",
        premises: &["|- X"],
        conclusion: "|- X -> (0 -> 0)",
        fixture: Some("top-introduction"),
    },
    Condition {
        label: "v-2",
        premises: &["|- X"],
        conclusion: "|- (0 -> 0) -> X",
        fixture: Some("top-prefixing"),
    },
    Condition {
        label: "v-3",
        premises: &["|- (0 -> 0) -> X"],
        conclusion: "|- X",
        fixture: Some("top-elimination"),
    },
];

impl Condition {
    pub fn schema(&self) -> Schema {
        Schema::new(self.label, self.premises, self.conclusion)
    }

    pub fn fixture(&self) -> Option<&'static Fixture> {
        self.fixture.map(|f| fixture(f).expect("condition fixtures exist"))
    }
}

/// Check one condition semantically over every model. The first model (in
/// the given order) with a failing assignment is reported.
pub fn semantic_condition(c: &Condition, models: &[(String, IopTable)], max_vars: usize) -> ItemReport {
    let schema = c.schema();
    let item = format!("semantic {}", c.label);
    let results: Vec<ItemReport> = models
        .par_iter()
        .map(|(_, t)| check_schema(t, &schema, max_vars))
        .collect();
    let mut checked = 0;
    for ((name, _), r) in models.iter().zip(results) {
        checked += r.checked;
        match r.verdict {
            Verdict::Pass => {}
            Verdict::Fail { witness } => {
                let w = Witness {
                    detail: format!("in {name}: {}", witness.detail),
                    ..witness
                };
                return ItemReport::fail(item, checked, w);
            }
            Verdict::Skipped { reason } => return ItemReport::skipped(item, reason),
        }
    }
    ItemReport::pass(item, checked)
}

/// (a) every condition with a fixture is derived by it; (b) every condition
/// is a valid consequence in every model.
pub fn algebraizability_suite(models: &[(String, IopTable)]) -> ModelReport {
    let mut r = ModelReport::new("algebraizability");
    for c in CONDITIONS {
        if let Some(f) = c.fixture() {
            let mut item = f.check();
            item.item = format!("syntactic {} ({})", c.label, f.name);
            r.push(item);
        }
    }
    for c in CONDITIONS {
        r.push(semantic_condition(c, models, 3));
    }
    if CONDITIONS.iter().any(|c| c.fixture.is_none()) {
        r.note("iv-2 is checked semantically only");
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_omps;
    use crate::iop::build_iop_from_omp;

    fn models() -> Vec<(String, IopTable)> {
        catalog_omps()
            .into_iter()
            .map(|e| (e.name.clone(), build_iop_from_omp(&e.structure).unwrap()))
            .collect()
    }

    #[test]
    fn fixture_conclusions_instantiate_their_conditions() {
        for c in CONDITIONS {
            let Some(f) = c.fixture() else { continue };
            let schema = c.schema();
            let mut s = crate::logic::formula::Subst::new();
            let hyps = f.hypotheses();
            assert_eq!(hyps.len(), schema.premises.len(), "{}", c.label);
            for (p, h) in schema.premises.iter().zip(&hyps) {
                assert!(p.match_into(h, &mut s), "{}: premise {h}", c.label);
            }
            let concl = crate::logic::derivation::Judgment::parse(f.conclusion).unwrap();
            assert!(schema.conclusion.match_into(&concl, &mut s), "{}", c.label);
        }
    }

    #[test]
    fn suite_passes_on_catalog() {
        let r = algebraizability_suite(&models());
        assert!(r.passed(), "{r}");
        assert_eq!(r.items.len(), 7 + 8);
    }

    #[test]
    fn iv2_on_mo2() {
        let mo2 = build_iop_from_omp(&crate::catalog::make_mo(2).unwrap()).unwrap();
        let c = CONDITIONS.iter().find(|c| c.label == "iv-2").unwrap();
        let item = semantic_condition(c, &[("MO2".into(), mo2)], 3);
        assert!(item.passed());
        assert_eq!(item.checked, 216);
    }
}
