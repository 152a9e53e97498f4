//! Implication calculus for finite orthomodular posets.
//!
//! - [`poset`]: bounded posets with complementation, cones, partial joins
//!   and the orthomodular-law validator.
//! - [`implication`]: the set-valued implication `x → y = y ∨ Max L(x', y')`.
//! - [`iop`]: arrow tables, the ten implication axioms and the translations
//!   between the order-theoretic and the implicational presentation.
//! - [`logic`]: formulas, the proof kernel for L_OMP and finite-model
//!   semantics.
//! - [`search`]: enumeration of small orthoposets up to isomorphism and the
//!   exhaustive scans built on it.
//! - [`catalog`]: standard models.
//! - [`format`]: the `.omp` and `.iop` text formats.
//!
//! All structures have at most 64 elements and are immutable once built.

pub mod catalog;
pub mod elements;
pub mod error;
pub mod format;
pub mod implication;
pub mod iop;
pub mod logic;
pub mod poset;
pub mod report;
pub mod search;

pub use elements::{ElementId, ElementSet};
pub use error::{ConversionError, FormulaError, LoadError, ParseError, StructureError};
pub use iop::{AxiomReport, IopTable};
pub use poset::{BoundedPoset, OrthoPoset};
pub use report::{ItemReport, ModelReport, Named, Verdict, Witness};
