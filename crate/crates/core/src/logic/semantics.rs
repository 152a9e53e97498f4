//! Formulas interpreted in finite arrow tables.
//!
//! A formula evaluates to a nonempty element set: `0` is `{zero}`, a
//! variable is its assigned singleton, and `φ → ψ` is the pointwise union of
//! the table entries. An assertion `⊢ φ` holds when the lifted judgment at
//! the outermost arrow is `= 1`; an identity `φ ≈ ψ` holds when both sides
//! evaluate to the same set.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::elements::{ElementId, ElementSet};
use crate::iop::IopTable;
use crate::logic::derivation::{Axiom, Judgment, Rule, Schema};
use crate::logic::formula::Formula;
use crate::report::{ItemReport, ModelReport, Named, Witness};

pub type Assignment = BTreeMap<String, ElementId>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable {0} is not assigned")]
    Unassigned(String),
}

pub fn eval_formula(t: &IopTable, assignment: &Assignment, f: &Formula) -> Result<ElementSet, EvalError> {
    match f {
        Formula::Var(v) => assignment
            .get(v)
            .map(|&x| ElementSet::singleton(x))
            .ok_or_else(|| EvalError::Unassigned(v.clone())),
        Formula::Zero => Ok(ElementSet::singleton(t.zero())),
        Formula::Arrow(a, b) => {
            let a = eval_formula(t, assignment, a)?;
            let b = eval_formula(t, assignment, b)?;
            Ok(t.lift(a, b))
        }
    }
}

pub fn holds(t: &IopTable, assignment: &Assignment, f: &Formula) -> Result<bool, EvalError> {
    match f {
        Formula::Arrow(a, b) => {
            let a = eval_formula(t, assignment, a)?;
            let b = eval_formula(t, assignment, b)?;
            Ok(t.g(a, b))
        }
        _ => Ok(eval_formula(t, assignment, f)? == ElementSet::singleton(t.one())),
    }
}

pub fn judgment_holds(t: &IopTable, assignment: &Assignment, j: &Judgment) -> Result<bool, EvalError> {
    match j {
        Judgment::Assert(f) => holds(t, assignment, f),
        Judgment::Ident(a, b) => Ok(eval_formula(t, assignment, a)? == eval_formula(t, assignment, b)?),
    }
}

/// Check a schema as a local consequence over every assignment of its
/// metavariables to elements: whenever all premises hold, the conclusion
/// holds. The lowest failing assignment (first metavariable slowest) is
/// reported.
pub fn check_schema(t: &IopTable, schema: &Schema, max_vars: usize) -> ItemReport {
    let vars = schema.metavars();
    if vars.len() > max_vars {
        return ItemReport::skipped(
            schema.name.clone(),
            format!("needs {} variables, limit is {max_vars}", vars.len()),
        );
    }
    let n = t.len();
    let total = n.pow(vars.len() as u32);
    let assignment_at = |mut idx: usize| -> Assignment {
        let mut a = Assignment::new();
        for v in vars.iter().rev() {
            a.insert(v.clone(), ElementId::new(idx % n));
            idx /= n;
        }
        a
    };
    let fails = |idx: &usize| -> bool {
        let a = assignment_at(*idx);
        let premises_hold = schema
            .premises
            .iter()
            .all(|p| judgment_holds(t, &a, p).expect("schema variables are assigned"));
        premises_hold && !judgment_holds(t, &a, &schema.conclusion).expect("schema variables are assigned")
    };
    let first = (0..total).into_par_iter().find_first(fails);
    match first {
        None => ItemReport::pass(schema.name.clone(), total as u64),
        Some(idx) => {
            let a = assignment_at(idx);
            let detail = match &schema.conclusion {
                Judgment::Assert(f) => format!("premises hold but `{f}` does not"),
                Judgment::Ident(l, r) => format!(
                    "premises hold but {} ≠ {}",
                    t.set_name(eval_formula(t, &a, l).unwrap()),
                    t.set_name(eval_formula(t, &a, r).unwrap())
                ),
            };
            let w = vars
                .iter()
                .fold(Witness::new(detail), |w, v| w.bind(t, v, a[v]));
            ItemReport::fail(schema.name.clone(), idx as u64 + 1, w)
        }
    }
}

/// The derived transitivity rule `φ→ψ, ψ→χ ⊢ φ→χ`, obtained from (Sf) and
/// (MP); it is the consequence that carries O3.
pub fn transitivity_schema() -> Schema {
    Schema::new("Tr", &["|- X -> Y", "|- Y -> Z"], "|- X -> Z")
}

/// Validity of every axiom and rule of L_OMP in `t`, plus the derived
/// transitivity rule, with metavariables ranging over elements.
pub fn soundness_check(t: &IopTable, max_vars: usize) -> ModelReport {
    let mut report = ModelReport::new("soundness");
    for a in Axiom::ALL {
        report.push(check_schema(t, a.schema(), max_vars));
    }
    for r in Rule::ALL {
        report.push(check_schema(t, r.schema(), max_vars));
    }
    report.push(check_schema(t, &transitivity_schema(), max_vars));
    report
}

/// Soundness items that carry implication axiom `k` (1..=10).
pub fn schemas_for_axiom(k: usize) -> &'static [&'static str] {
    match k {
        1 => &["B2", "B4"],
        2 => &["R1"],
        3 => &["Tr"],
        4 => &["B3"],
        5 => &["Sf"],
        6 => &["R2"],
        7 => &["R3", "R4"],
        8 => &["R5"],
        9 => &["B5"],
        10 => &["B1"],
        _ => &[],
    }
}
