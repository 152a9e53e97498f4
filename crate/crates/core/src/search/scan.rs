//! Exhaustive scans over the census.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::elements::{ElementId, ElementSet};
use crate::format::write_omp;
use crate::implication::{arrow_table, condition_c_check};
use crate::iop::IopTable;
use crate::report::{ItemReport, ModelReport, Witness};
use crate::search::enumerate::enumerate;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub classes: usize,
    /// Orthomodular, and the arrow table satisfies the ten axioms.
    pub both_pass: usize,
    pub both_fail: usize,
    pub discrepancies: usize,
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct ScanOutcome {
    pub rows: Vec<ScanRow>,
    pub report: ModelReport,
}

/// For every orthoposet with `2 <= n <= n_max` elements: the orthomodular
/// law holds iff the arrow table built from the poset satisfies the ten
/// axioms. One report item per `n`; a discrepancy fails the item and
/// carries the serialized structure.
pub fn equivalence_scan(n_max: usize, budget: Option<Duration>) -> ScanOutcome {
    let start = Instant::now();
    let mut report = ModelReport::new("equivalence scan");
    let mut rows = Vec::new();
    for n in 2..=n_max {
        let left = budget.map(|b| b.saturating_sub(start.elapsed()));
        let census = enumerate(n, left);
        let verdicts: Vec<(bool, bool)> = census
            .structures
            .par_iter()
            .map(|p| {
                let omp = p.validate_omp().passed();
                let ax = arrow_table(p).check_axioms().passed();
                (omp, ax)
            })
            .collect();
        let mut row = ScanRow {
            n,
            classes: census.count(),
            complete: census.complete,
            ..ScanRow::default()
        };
        let mut first_bad = None;
        for (i, &(omp, ax)) in verdicts.iter().enumerate() {
            match (omp, ax) {
                (true, true) => row.both_pass += 1,
                (false, false) => row.both_fail += 1,
                _ => {
                    row.discrepancies += 1;
                    first_bad.get_or_insert((i, omp));
                }
            }
        }
        let item = format!("n={n}");
        let checked = census.count() as u64;
        let item = match first_bad {
            Some((i, omp)) => ItemReport::fail(
                item,
                checked,
                Witness::new(format!(
                    "orthomodular: {omp}, axioms: {}\n{}",
                    !omp,
                    write_omp(&census.structures[i])
                )),
            ),
            None if !census.complete => ItemReport::skipped(item, "time budget exceeded"),
            None => ItemReport::pass(item, checked),
        };
        report.push(item);
        report.note(format!(
            "n={n}: {} classes, {} orthomodular, {} not, {} discrepancies{}",
            row.classes,
            row.both_pass,
            row.both_fail,
            row.discrepancies,
            if row.complete { "" } else { " (partial)" }
        ));
        rows.push(row);
    }
    ScanOutcome { rows, report }
}

/// A single-entry perturbation of an arrow table.
#[derive(Clone, Debug)]
pub struct Violator {
    /// Name of the census structure (`n=<n> #<index>`).
    pub source: String,
    pub x: ElementId,
    pub y: ElementId,
    pub original: ElementSet,
    pub table: IopTable,
}

/// Search the arrow tables of orthomodular census members with at most
/// `n_max` elements for a single-entry replacement that keeps all ten
/// axioms but breaks (C). Entries are tried in table order, replacement
/// sets in increasing bit order; the first hit is returned.
pub fn find_c_violator(n_max: usize) -> Option<Violator> {
    for n in 2..=n_max {
        let census = enumerate(n, None);
        for (idx, p) in census.structures.iter().enumerate() {
            if !p.validate_omp().passed() {
                continue;
            }
            let t = arrow_table(p);
            let cells = n * n;
            let sets = (1u64 << n) - 1;
            let hit = (0..cells as u64 * sets).into_par_iter().find_first(|&k| {
                let cell = (k / sets) as usize;
                let value = ElementSet::from_bits(k % sets + 1);
                let (x, y) = (ElementId::new(cell / n), ElementId::new(cell % n));
                if value == t.arrow(x, y) {
                    return false;
                }
                match t.with_entry(x, y, value) {
                    Ok(m) => m.check_axioms().passed() && !condition_c_check(&m).passed(),
                    Err(_) => false,
                }
            });
            if let Some(k) = hit {
                let cell = (k / sets) as usize;
                let (x, y) = (ElementId::new(cell / n), ElementId::new(cell % n));
                let value = ElementSet::from_bits(k % sets + 1);
                return Some(Violator {
                    source: format!("n={n} #{idx}"),
                    x,
                    y,
                    original: t.arrow(x, y),
                    table: t.with_entry(x, y, value).expect("validated during the search"),
                });
            }
        }
    }
    None
}
