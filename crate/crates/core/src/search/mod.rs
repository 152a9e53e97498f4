//! Small orthoposets up to isomorphism and the scans built on them.

pub mod canon;
pub mod enumerate;
pub mod scan;

pub use canon::{canonical_form, canonicalize, isomorphic, CanonicalForm};
pub use enumerate::{enumerate, enumerate_orthoposets, Census};
pub use scan::{equivalence_scan, find_c_violator, ScanOutcome, ScanRow, Violator};
