//! Standard finite models: Boolean algebras, the horizontal sums `MO_m`,
//! even-subset posets and the hexagon.

use thiserror::Error;

use crate::elements::{ElementId, ElementSet};
use crate::poset::{BoundedPoset, OrthoPoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("{family}: parameter {value} out of range ({allowed})")]
    OutOfRange {
        family: &'static str,
        value: usize,
        allowed: &'static str,
    },
    #[error("unknown catalog entry {0}")]
    Unknown(String),
}

/// Subsets of `{1..k}` selected by `keep`, ordered by size then
/// lexicographically, ordered by inclusion with set complement.
fn subset_poset(k: usize, keep: impl Fn(u32) -> bool) -> OrthoPoset {
    let full_mask: u32 = (1u32 << k) - 1;
    let mut masks: Vec<u32> = (0..=full_mask).filter(|&m| keep(m)).collect();
    let members = |m: u32| -> Vec<usize> { (0..k).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect() };
    masks.sort_by_key(|&m| (m.count_ones(), members(m)));
    let index_of = |m: u32| masks.iter().position(|&x| x == m).unwrap();
    let names: Vec<String> = masks
        .iter()
        .map(|&m| {
            let parts: Vec<String> = members(m).iter().map(|i| i.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let up: Vec<ElementSet> = masks
        .iter()
        .map(|&a| {
            masks
                .iter()
                .enumerate()
                .filter(|&(_, &b)| a & !b == 0)
                .map(|(j, _)| ElementId::new(j))
                .collect()
        })
        .collect();
    let invol: Vec<ElementId> = masks
        .iter()
        .map(|&m| ElementId::new(index_of(full_mask & !m)))
        .collect();
    let poset = BoundedPoset::new(
        Some(names),
        up,
        ElementId::new(index_of(0)),
        ElementId::new(index_of(full_mask)),
    )
    .expect("subset orders are bounded posets");
    OrthoPoset::new(poset, invol).expect("subset complement is an orthocomplementation")
}

/// The Boolean algebra `2^k`: all subsets of `{1..k}`.
pub fn make_boolean(k: usize) -> Result<OrthoPoset, CatalogError> {
    if !(1..=6).contains(&k) {
        return Err(CatalogError::OutOfRange {
            family: "boolean",
            value: k,
            allowed: "1..=6",
        });
    }
    Ok(subset_poset(k, |_| true))
}

/// Even-cardinality subsets of `{1..m}`, `m` in {4, 6}.
pub fn make_even_subsets(m: usize) -> Result<OrthoPoset, CatalogError> {
    if m != 4 && m != 6 {
        return Err(CatalogError::OutOfRange {
            family: "even-subsets",
            value: m,
            allowed: "4 or 6",
        });
    }
    Ok(subset_poset(m, |mask| mask.count_ones() % 2 == 0))
}

fn block_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

/// Horizontal sum of `m` four-element Boolean blocks sharing 0 and 1.
/// Elements: `0`, then `a, a', b, b', ..`, then `1`.
pub fn make_mo(m: usize) -> Result<OrthoPoset, CatalogError> {
    if !(1..=31).contains(&m) {
        return Err(CatalogError::OutOfRange {
            family: "mo",
            value: m,
            allowed: "1..=31",
        });
    }
    let n = 2 * m + 2;
    let mut names = vec!["0".to_string()];
    for i in 0..m {
        names.push(block_name(i));
        names.push(format!("{}'", block_name(i)));
    }
    names.push("1".to_string());
    let zero = ElementId::new(0);
    let one = ElementId::new(n - 1);
    let mut covers = Vec::new();
    for i in 1..n - 1 {
        covers.push((zero, ElementId::new(i)));
        covers.push((ElementId::new(i), one));
    }
    let mut invol = vec![one; n];
    invol[n - 1] = zero;
    for i in 0..m {
        invol[2 * i + 1] = ElementId::new(2 * i + 2);
        invol[2 * i + 2] = ElementId::new(2 * i + 1);
    }
    let poset = BoundedPoset::from_covers(Some(names), n, &covers, zero, one)
        .expect("MO_m is a bounded poset");
    Ok(OrthoPoset::new(poset, invol).expect("MO_m is an orthoposet"))
}

/// The six-element ortholattice `0 < a < b < 1`, `0 < b' < a' < 1`. It is
/// not orthomodular.
pub fn make_hexagon() -> OrthoPoset {
    let names: Vec<String> = ["0", "a", "b", "b'", "a'", "1"].iter().map(|s| s.to_string()).collect();
    let covers: Vec<(ElementId, ElementId)> = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)]
        .iter()
        .map(|&(a, b)| (ElementId::new(a), ElementId::new(b)))
        .collect();
    let poset = BoundedPoset::from_covers(Some(names), 6, &covers, 0.into(), 5.into())
        .expect("hexagon is a bounded poset");
    let invol = [5, 4, 3, 2, 1, 0].iter().map(|&i| ElementId::new(i)).collect();
    OrthoPoset::new(poset, invol).expect("hexagon is an orthoposet")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub is_omp: bool,
    pub is_lattice: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub structure: OrthoPoset,
    pub expected: Expected,
}

impl CatalogEntry {
    /// Re-derive the expected verdicts with the validators.
    pub fn verify(&self) -> Result<(), String> {
        let actual = Expected {
            is_omp: self.structure.validate_omp().passed(),
            is_lattice: self.structure.is_lattice(),
        };
        if actual == self.expected {
            Ok(())
        } else {
            Err(format!(
                "{}: expected {:?}, validators say {:?}",
                self.name, self.expected, actual
            ))
        }
    }
}

const NAMES: [&str; 8] = ["B2", "B4", "B8", "MO2", "MO3", "Even4", "Even6", "Hexagon"];

/// Names of all catalog entries, in catalog order.
pub fn catalog_names() -> &'static [&'static str] {
    &NAMES
}

/// Build one catalog entry by name (case-insensitive).
pub fn catalog_entry(name: &str) -> Result<CatalogEntry, CatalogError> {
    let (canon, structure, is_omp, is_lattice) = match name.to_ascii_lowercase().as_str() {
        "b2" => ("B2", make_boolean(1)?, true, true),
        "b4" => ("B4", make_boolean(2)?, true, true),
        "b8" => ("B8", make_boolean(3)?, true, true),
        "mo2" => ("MO2", make_mo(2)?, true, true),
        "mo3" => ("MO3", make_mo(3)?, true, true),
        "even4" => ("Even4", make_even_subsets(4)?, true, true),
        "even6" => ("Even6", make_even_subsets(6)?, true, false),
        "hexagon" => ("Hexagon", make_hexagon(), false, true),
        _ => return Err(CatalogError::Unknown(name.to_string())),
    };
    let entry = CatalogEntry {
        name: canon.to_string(),
        structure,
        expected: Expected { is_omp, is_lattice },
    };
    if let Err(msg) = entry.verify() {
        panic!("catalog entry failed re-validation: {msg}");
    }
    Ok(entry)
}

/// Every catalog entry, OMPs first, the hexagon last.
pub fn catalog() -> Vec<CatalogEntry> {
    NAMES
        .iter()
        .map(|n| catalog_entry(n).expect("catalog names are known"))
        .collect()
}

/// Catalog entries that are orthomodular.
pub fn catalog_omps() -> Vec<CatalogEntry> {
    catalog().into_iter().filter(|e| e.expected.is_omp).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_sizes() {
        assert_eq!(make_boolean(1).unwrap().len(), 2);
        let b4 = make_boolean(2).unwrap();
        assert_eq!(b4.len(), 4);
        assert_eq!(b4.names(), &["{}", "{1}", "{2}", "{1,2}"]);
        let b8 = make_boolean(3).unwrap();
        assert_eq!(b8.len(), 8);
        assert!(b8.validate_omp().passed());
        assert_eq!(make_boolean(6).unwrap().len(), 64);
        assert!(make_boolean(0).is_err());
        assert!(make_boolean(7).is_err());
    }

    #[test]
    fn mo_family() {
        let mo2 = make_mo(2).unwrap();
        assert_eq!(mo2.len(), 6);
        assert!(mo2.validate_omp().passed());
        let mo1 = make_mo(1).unwrap();
        let b4 = make_boolean(2).unwrap();
        assert!(mo1.same_structure(&b4));
        let mo3 = make_mo(3).unwrap();
        assert_eq!(mo3.len(), 8);
        assert!(mo3.validate_omp().passed());
        assert!(make_mo(0).is_err());
    }

    #[test]
    fn even_subsets() {
        let e6 = make_even_subsets(6).unwrap();
        assert_eq!(e6.len(), 32);
        assert!(e6.validate_omp().passed());
        assert!(!e6.is_lattice());
        let e4 = make_even_subsets(4).unwrap();
        assert_eq!(e4.len(), 8);
        assert!(e4.is_lattice());
        assert!(make_even_subsets(5).is_err());
        assert!(make_even_subsets(8).is_err());
    }

    #[test]
    fn hexagon_is_orthoposet_not_omp() {
        let hex = make_hexagon();
        assert_eq!(hex.len(), 6);
        assert!(!hex.validate_omp().passed());
        assert!(hex.de_morgan_check().passed());
        assert!(hex.is_lattice());
    }

    #[test]
    fn catalog_reverifies() {
        let all = catalog();
        assert_eq!(all.len(), 8);
        for e in &all {
            e.verify().unwrap();
        }
        assert_eq!(catalog_omps().len(), 7);
        assert!(catalog_entry("nope").is_err());
    }
}
