//! The propositional logic L_OMP over `{→, 0}`: formulas, a line-by-line
//! proof checker, and semantics in finite arrow tables.

pub mod algebraizability;
pub mod derivation;
pub mod fixtures;
pub mod formula;
pub mod semantics;

pub use algebraizability::{algebraizability_suite, AlgebraizabilityConfig, Condition, CONDITIONS};
pub use derivation::{Axiom, Derivation, Judgment, Justification, ProofLine, Rule, Schema};
pub use fixtures::{check_fixtures, Fixture, FIXTURES};
pub use formula::{Formula, Side, Subst};
pub use semantics::{eval_formula, holds, judgment_holds, soundness_check, Assignment, EvalError};
