//! Arrow tables, the ten implication axioms, and the translations between
//! orthomodular posets and implication orthomodular posets.
//!
//! Judgments of the form `A → B = 1` between element sets are decided by
//! the lifting rule: every member of `A` implies some member of `B` to 1.
//! Nested set-valued terms are evaluated by pointwise union
//! ([`IopTable::lift_arrow`]); an equality with an element `e` means equality
//! with the singleton `{e}`.

use crate::elements::{ElementId, ElementSet, MAX_ELEMENTS};
use crate::error::{ConversionError, StructureError};
use crate::implication::{arrow_table, condition_c_check};
use crate::poset::{BoundedPoset, OrthoPoset};
use crate::report::{ItemReport, ModelReport, Named, Witness};

/// A total map from element pairs to nonempty element sets, with a
/// distinguished zero. Negation `x → 0` must be a singleton everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IopTable {
    names: Vec<String>,
    zero: ElementId,
    one: ElementId,
    entries: Vec<ElementSet>,
    neg: Vec<ElementId>,
    /// Row `x`: all `y` with `x → y = {one}`.
    below: Vec<ElementSet>,
}

impl IopTable {
    /// `entries[x * n + y]` is `x → y`.
    pub fn new(
        names: Option<Vec<String>>,
        zero: ElementId,
        entries: Vec<ElementSet>,
    ) -> Result<Self, StructureError> {
        let n = match &names {
            Some(v) => v.len(),
            None => (entries.len() as f64).sqrt().round() as usize,
        };
        if n == 0 {
            return Err(StructureError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(StructureError::TooLarge(n));
        }
        if entries.len() != n * n {
            return Err(StructureError::TableShape {
                got: entries.len(),
                expected: n * n,
            });
        }
        let names = names.unwrap_or_else(|| (0..n).map(|i| format!("e{i}")).collect());
        let mut sorted: Vec<&String> = names.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(StructureError::DuplicateName(w[0].clone()));
        }
        if zero.index() >= n {
            return Err(StructureError::OutOfRange { index: zero.index(), n });
        }
        let full = ElementSet::full(n);
        for (i, e) in entries.iter().enumerate() {
            if e.is_empty() {
                return Err(StructureError::EmptyArrowEntry(
                    names[i / n].clone(),
                    names[i % n].clone(),
                ));
            }
            if let Some(bad) = e.difference(full).first() {
                return Err(StructureError::OutOfRange { index: bad.index(), n });
            }
        }
        let mut neg = Vec::with_capacity(n);
        for x in 0..n {
            match entries[x * n + zero.index()].as_singleton() {
                Some(v) => neg.push(v),
                None => return Err(StructureError::NegationNotSingleton(names[x].clone())),
            }
        }
        let one = neg[zero.index()];
        let one_set = ElementSet::singleton(one);
        let below = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| entries[x * n + y] == one_set)
                    .map(ElementId::new)
                    .collect()
            })
            .collect();
        Ok(IopTable {
            names,
            zero,
            one,
            entries,
            neg,
            below,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.neg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neg.is_empty()
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        self.zero
    }

    /// `0'`.
    #[inline]
    pub fn one(&self) -> ElementId {
        self.one
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<ElementId> {
        self.names.iter().position(|n| n == name).map(ElementId::new)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.len()).map(ElementId::new)
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn entries(&self) -> &[ElementSet] {
        &self.entries
    }

    #[inline]
    pub fn arrow(&self, x: ElementId, y: ElementId) -> ElementSet {
        self.entries[x.index() * self.len() + y.index()]
    }

    /// `x' = x → 0`.
    #[inline]
    pub fn neg(&self, x: ElementId) -> ElementId {
        self.neg[x.index()]
    }

    /// `x → y = 1` for elements.
    #[inline]
    pub fn implies_one(&self, x: ElementId, y: ElementId) -> bool {
        self.below[x.index()].contains(y)
    }

    /// All `y` with `x → y = 1`.
    #[inline]
    pub fn above(&self, x: ElementId) -> ElementSet {
        self.below[x.index()]
    }

    /// Pointwise union `⋃ { x → y | x ∈ a, y ∈ b }`.
    pub fn lift_arrow(&self, a: ElementSet, b: ElementSet) -> Result<ElementSet, StructureError> {
        if a.is_empty() || b.is_empty() {
            return Err(StructureError::EmptyOperand);
        }
        Ok(self.lift(a, b))
    }

    #[inline]
    pub(crate) fn lift(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for x in a {
            for y in b {
                out = out.union(self.arrow(x, y));
            }
        }
        out
    }

    #[inline]
    pub(crate) fn lift_el(&self, a: ElementSet, y: ElementId) -> ElementSet {
        self.lift(a, ElementSet::singleton(y))
    }

    /// `{x' | x ∈ a}`.
    #[inline]
    pub fn neg_set(&self, a: ElementSet) -> ElementSet {
        a.iter().map(|x| self.neg(x)).collect()
    }

    /// The lifted judgment `A → B = 1`.
    pub fn g_holds(&self, a: ElementSet, b: ElementSet) -> Result<bool, StructureError> {
        if a.is_empty() || b.is_empty() {
            return Err(StructureError::EmptyOperand);
        }
        Ok(self.g(a, b))
    }

    #[inline]
    pub(crate) fn g(&self, a: ElementSet, b: ElementSet) -> bool {
        a.iter().all(|x| self.below[x.index()].intersects(b))
    }

    /// A copy with entry `x → y` replaced.
    pub fn with_entry(
        &self,
        x: ElementId,
        y: ElementId,
        value: ElementSet,
    ) -> Result<IopTable, StructureError> {
        let mut entries = self.entries.clone();
        entries[x.index() * self.len() + y.index()] = value;
        IopTable::new(Some(self.names.clone()), self.zero, entries)
    }

    /// Same carrier, zero and entries, ignoring names.
    pub fn same_table(&self, other: &IopTable) -> bool {
        self.zero == other.zero && self.entries == other.entries
    }

    /// Evaluate the ten axioms over all element tuples.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut report = ModelReport::new("axioms");
        report.push(self.o1());
        report.push(self.o2());
        report.push(self.o3());
        report.push(self.o4());
        report.push(self.o5());
        report.push(self.o6());
        report.push(self.o7());
        report.push(self.o8());
        report.push(self.o9());
        report.push(self.o10());
        AxiomReport(report)
    }

    fn pairs(&self) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        self.elements()
            .flat_map(move |x| self.elements().map(move |y| (x, y)))
    }

    fn triples(&self) -> impl Iterator<Item = (ElementId, ElementId, ElementId)> + '_ {
        self.pairs()
            .flat_map(move |(x, y)| self.elements().map(move |z| (x, y, z)))
    }

    fn o1(&self) -> ItemReport {
        let one = ElementSet::singleton(self.one);
        let mut checked = 0;
        for x in self.elements() {
            checked += 1;
            for (label, v) in [("0→x", self.arrow(self.zero, x)), ("x→x", self.arrow(x, x))] {
                if v != one {
                    let w = Witness::new(format!("{label} = {} ≠ 1", self.set_name(v))).bind(self, "x", x);
                    return ItemReport::fail("O1", checked, w);
                }
            }
        }
        ItemReport::pass("O1", checked)
    }

    fn o2(&self) -> ItemReport {
        let mut checked = 0;
        for (x, y) in self.pairs() {
            checked += 1;
            if x != y && self.implies_one(x, y) && self.implies_one(y, x) {
                let w = Witness::new("x→y = y→x = 1 but x ≠ y")
                    .bind(self, "x", x)
                    .bind(self, "y", y);
                return ItemReport::fail("O2", checked, w);
            }
        }
        ItemReport::pass("O2", checked)
    }

    fn o3(&self) -> ItemReport {
        let mut checked = 0;
        for (x, y, z) in self.triples() {
            checked += 1;
            if self.implies_one(x, y) && self.implies_one(y, z) && !self.implies_one(x, z) {
                let w = Witness::new(format!("x→z = {} ≠ 1", self.set_name(self.arrow(x, z))))
                    .bind(self, "x", x)
                    .bind(self, "y", y)
                    .bind(self, "z", z);
                return ItemReport::fail("O3", checked, w);
            }
        }
        ItemReport::pass("O3", checked)
    }

    fn o4(&self) -> ItemReport {
        let mut checked = 0;
        for x in self.elements() {
            checked += 1;
            let nn = self.neg(self.neg(x));
            if nn != x {
                let w = Witness::new(format!("x'' = {} ≠ x", self.name(nn))).bind(self, "x", x);
                return ItemReport::fail("O4", checked, w);
            }
        }
        ItemReport::pass("O4", checked)
    }

    fn o5(&self) -> ItemReport {
        let mut checked = 0;
        for (x, y, z) in self.triples() {
            if !self.implies_one(x, y) {
                continue;
            }
            checked += 1;
            let (yz, xz) = (self.arrow(y, z), self.arrow(x, z));
            if !self.g(yz, xz) {
                let w = Witness::new(format!(
                    "(y→z)→(x→z) ≠ 1 with y→z = {}, x→z = {}",
                    self.set_name(yz),
                    self.set_name(xz)
                ))
                .bind(self, "x", x)
                .bind(self, "y", y)
                .bind(self, "z", z);
                return ItemReport::fail("O5", checked, w);
            }
        }
        ItemReport::pass("O5", checked)
    }

    /// `(((y' → x) → x)' → x) → x` as a lifted set.
    pub(crate) fn om_term(&self, x: ElementId, y: ElementId) -> ElementSet {
        let a = self.lift_el(self.arrow(self.neg(y), x), x);
        let b = self.lift_el(self.neg_set(a), x);
        self.lift_el(b, x)
    }

    fn o6(&self) -> ItemReport {
        let mut checked = 0;
        for (x, y) in self.pairs() {
            if !self.implies_one(x, y) {
                continue;
            }
            checked += 1;
            let v = self.om_term(x, y);
            if v != ElementSet::singleton(y) {
                let w = Witness::new(format!("(((y'→x)→x)'→x)→x = {} ≠ y", self.set_name(v)))
                    .bind(self, "x", x)
                    .bind(self, "y", y);
                return ItemReport::fail("O6", checked, w);
            }
        }
        ItemReport::pass("O6", checked)
    }

    /// `(x → y) → y` as a lifted set.
    #[inline]
    pub(crate) fn join_term(&self, x: ElementId, y: ElementId) -> ElementSet {
        self.lift_el(self.arrow(x, y), y)
    }

    fn o7(&self) -> ItemReport {
        let mut checked = 0;
        for (x, y) in self.pairs() {
            if !self.implies_one(x, self.neg(y)) {
                continue;
            }
            checked += 1;
            let s = self.join_term(x, y);
            for (label, e) in [("x", x), ("y", y)] {
                if !self.g(ElementSet::singleton(e), s) {
                    let w = Witness::new(format!(
                        "{label}→((x→y)→y) ≠ 1 with (x→y)→y = {}",
                        self.set_name(s)
                    ))
                    .bind(self, "x", x)
                    .bind(self, "y", y);
                    return ItemReport::fail("O7", checked, w);
                }
            }
        }
        ItemReport::pass("O7", checked)
    }

    fn o8(&self) -> ItemReport {
        let mut checked = 0;
        for (x, y, z) in self.triples() {
            if !(self.implies_one(x, self.neg(y)) && self.implies_one(x, z) && self.implies_one(y, z)) {
                continue;
            }
            checked += 1;
            let s = self.join_term(x, y);
            if !self.g(s, ElementSet::singleton(z)) {
                let w = Witness::new(format!("((x→y)→y)→z ≠ 1 with (x→y)→y = {}", self.set_name(s)))
                    .bind(self, "x", x)
                    .bind(self, "y", y)
                    .bind(self, "z", z);
                return ItemReport::fail("O8", checked, w);
            }
        }
        ItemReport::pass("O8", checked)
    }

    fn o9(&self) -> ItemReport {
        let mut checked = 0;
        for x in self.elements() {
            checked += 1;
            let a = self.arrow(self.neg(x), x);
            if !self.g(a, ElementSet::singleton(x)) {
                let w = Witness::new(format!("(x'→x)→x ≠ 1 with x'→x = {}", self.set_name(a)))
                    .bind(self, "x", x);
                return ItemReport::fail("O9", checked, w);
            }
        }
        ItemReport::pass("O9", checked)
    }

    fn o10(&self) -> ItemReport {
        let mut checked = 0;
        for (x, y) in self.pairs() {
            checked += 1;
            let yx = self.arrow(y, x);
            if !self.g(ElementSet::singleton(x), yx) {
                let w = Witness::new(format!("x→(y→x) ≠ 1 with y→x = {}", self.set_name(yx)))
                    .bind(self, "x", x)
                    .bind(self, "y", y);
                return ItemReport::fail("O10", checked, w);
            }
        }
        ItemReport::pass("O10", checked)
    }
}

impl Named for IopTable {
    fn size(&self) -> usize {
        self.len()
    }

    fn name(&self, x: ElementId) -> &str {
        &self.names[x.index()]
    }
}

/// Per-axiom verdicts for O1..O10, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport(ModelReport);

impl AxiomReport {
    /// Verdict for axiom `k` in `1..=10`.
    pub fn axiom(&self, k: usize) -> &ItemReport {
        &self.0.items[k - 1]
    }

    pub fn passed(&self) -> bool {
        self.0.passed()
    }

    /// Numbers of the failing axioms.
    pub fn failed_axioms(&self) -> Vec<usize> {
        (1..=10).filter(|&k| !self.axiom(k).passed()).collect()
    }

    pub fn report(&self) -> &ModelReport {
        &self.0
    }

    pub fn into_report(self) -> ModelReport {
        self.0
    }
}

/// `𝕀(P)`: the arrow table of an orthomodular poset.
pub fn build_iop_from_omp(p: &OrthoPoset) -> Result<IopTable, ConversionError> {
    let om = p.validate_omp();
    if !om.passed() {
        return Err(ConversionError::NotOrthomodular(Box::new(om)));
    }
    let table = arrow_table(p);
    debug_assert!(
        table.check_axioms().passed(),
        "arrow table of an orthomodular poset must satisfy O1..O10"
    );
    Ok(table)
}

/// `ℙ(I)`: order from `x → y = 1`, complement from `x → 0`. The result is
/// re-validated; a failure there means the axiom checker let through a
/// table it should have rejected.
pub fn build_omp_from_iop(t: &IopTable) -> Result<OrthoPoset, ConversionError> {
    let axioms = t.check_axioms();
    if !axioms.passed() {
        return Err(ConversionError::AxiomsFailed(Box::new(axioms.into_report())));
    }
    let up: Vec<ElementSet> = t.elements().map(|x| t.above(x)).collect();
    let poset = BoundedPoset::new(Some(t.names().to_vec()), up, t.zero(), t.one())
        .map_err(|e| ConversionError::Inconsistent(format!("derived order: {e}")))?;
    let invol = t.elements().map(|x| t.neg(x)).collect();
    let p = OrthoPoset::new(poset, invol)
        .map_err(|e| ConversionError::Inconsistent(format!("derived complementation: {e}")))?;
    let om = p.validate_omp();
    if !om.passed() {
        return Err(ConversionError::Inconsistent(format!(
            "derived poset violates the orthomodular law: {}",
            om.first_failure().map(|(_, w)| w.tuple()).unwrap_or_default()
        )));
    }
    Ok(p)
}

/// `ℙ(𝕀(P)) = P`, compared as identical matrices over the same carrier.
pub fn roundtrip_check(p: &OrthoPoset) -> ModelReport {
    let item = match build_iop_from_omp(p).and_then(|t| build_omp_from_iop(&t)) {
        Ok(back) if back.same_structure(p) => ItemReport::pass("P(I(P)) = P", 1),
        Ok(_) => ItemReport::fail("P(I(P)) = P", 1, Witness::new("round trip changed the structure")),
        Err(e) => ItemReport::fail("P(I(P)) = P", 1, Witness::new(e.to_string())),
    };
    ModelReport::single("roundtrip", item)
}

/// `𝕀(ℙ(T)) = T` for tables satisfying condition (C).
pub fn roundtrip_iop_check(t: &IopTable) -> ModelReport {
    const ITEM: &str = "I(P(T)) = T";
    let mut report = ModelReport::new("roundtrip-iop");
    let axioms = t.check_axioms();
    if !axioms.passed() {
        let (which, w) = axioms.report().first_failure().unwrap();
        report.push(ItemReport::fail(
            ITEM,
            0,
            Witness {
                detail: format!("axioms violated: {which} ({})", w.detail),
                ..w.clone()
            },
        ));
        return report;
    }
    let c = condition_c_check(t);
    if let Some((_, w)) = c.first_failure() {
        report.push(ItemReport::fail(
            ITEM,
            0,
            Witness {
                detail: format!("(C) violated: {}", w.detail),
                ..w.clone()
            },
        ));
        return report;
    }
    let item = match build_omp_from_iop(t).and_then(|p| build_iop_from_omp(&p)) {
        Ok(back) => {
            let diff = t
                .elements()
                .flat_map(|x| t.elements().map(move |y| (x, y)))
                .find(|&(x, y)| back.arrow(x, y) != t.arrow(x, y));
            match diff {
                None if back.zero() == t.zero() => ItemReport::pass(ITEM, 1),
                None => ItemReport::fail(ITEM, 1, Witness::new("zero moved")),
                Some((x, y)) => ItemReport::fail(
                    ITEM,
                    1,
                    Witness::new(format!(
                        "entry differs: {} vs {}",
                        t.set_name(back.arrow(x, y)),
                        t.set_name(t.arrow(x, y))
                    ))
                    .bind(t, "x", x)
                    .bind(t, "y", y),
                ),
            }
        }
        Err(e) => ItemReport::fail(ITEM, 1, Witness::new(e.to_string())),
    };
    report.push(item);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_omps, make_boolean, make_even_subsets, make_hexagon, make_mo};

    fn el(t: &IopTable, name: &str) -> ElementId {
        t.element(name).unwrap()
    }

    fn set(t: &IopTable, names: &[&str]) -> ElementSet {
        names.iter().map(|n| el(t, n)).collect()
    }

    #[test]
    fn lift_examples() {
        let t = build_iop_from_omp(&make_mo(2).unwrap()).unwrap();
        let (a, b) = (el(&t, "a"), el(&t, "b"));
        assert_eq!(
            t.lift_arrow(ElementSet::singleton(a), ElementSet::singleton(b)).unwrap(),
            t.arrow(a, b)
        );
        assert_eq!(
            t.lift_arrow(ElementSet::singleton(a), ElementSet::singleton(t.zero())).unwrap(),
            set(&t, &["a'"])
        );
        assert_eq!(
            t.lift_arrow(ElementSet::EMPTY, ElementSet::singleton(a)),
            Err(StructureError::EmptyOperand)
        );
    }

    #[test]
    fn lift_on_even6_is_union_of_three_arrows() {
        let t = build_iop_from_omp(&make_even_subsets(6).unwrap()).unwrap();
        let (x, y) = (el(&t, "{1,2}"), el(&t, "{1,3}"));
        let xy = t.arrow(x, y);
        assert_eq!(xy.len(), 3);
        let mut expected = ElementSet::EMPTY;
        for m in xy {
            expected = expected.union(t.arrow(m, y));
        }
        let got = t.lift_arrow(xy, ElementSet::singleton(y)).unwrap();
        assert_eq!(got, expected);
        // x ⊥ y fails here, so no join is promised; but every member of
        // (x→y)→y is above y
        for m in got {
            assert!(t.implies_one(y, m));
        }
    }

    #[test]
    fn axioms_hold_on_catalog() {
        for e in catalog_omps() {
            let t = build_iop_from_omp(&e.structure).unwrap();
            let r = t.check_axioms();
            assert!(r.passed(), "{}: {}", e.name, r.report());
        }
    }

    #[test]
    fn b2_table() {
        let t = build_iop_from_omp(&make_boolean(1).unwrap()).unwrap();
        let (z, o) = (el(&t, "{}"), el(&t, "{1}"));
        let one = ElementSet::singleton(o);
        assert_eq!(t.arrow(z, z), one);
        assert_eq!(t.arrow(z, o), one);
        assert_eq!(t.arrow(o, z), ElementSet::singleton(z));
        assert_eq!(t.arrow(o, o), one);
        assert!(t.check_axioms().passed());
    }

    #[test]
    fn mutated_mo2_fails() {
        let t = build_iop_from_omp(&make_mo(2).unwrap()).unwrap();
        let (a, b) = (el(&t, "a"), el(&t, "b"));
        let bad = t.with_entry(a, b, ElementSet::singleton(a)).unwrap();
        let r = bad.check_axioms();
        assert!(!r.passed());
        // recorded: the entry {a} is not above b, so x→(y→x) fails first
        assert_eq!(r.failed_axioms().first(), Some(&5));
        assert!(r.failed_axioms().contains(&10));
    }

    #[test]
    fn hexagon_table_fails_axioms() {
        let t = arrow_table(&make_hexagon());
        assert!(!t.check_axioms().passed());
        assert!(matches!(
            build_iop_from_omp(&make_hexagon()),
            Err(ConversionError::NotOrthomodular(_))
        ));
    }

    #[test]
    fn antisymmetry_violation_rejected() {
        // carrier {0, m, 1}: 0 → anything = 1, m and 1 imply each other to 1
        let names: Vec<String> = ["0", "m", "1"].iter().map(|s| s.to_string()).collect();
        let s = |i: usize| ElementSet::singleton(ElementId::new(i));
        let entries = vec![
            s(2), s(2), s(2), // 0 → _
            s(0), s(2), s(2), // m → _
            s(0), s(2), s(2), // 1 → _
        ];
        let t = IopTable::new(Some(names), ElementId::new(0), entries).unwrap();
        let err = build_omp_from_iop(&t).unwrap_err();
        let ConversionError::AxiomsFailed(report) = err else { panic!("{err:?}") };
        let (item, w) = report.first_failure().unwrap();
        assert_eq!(item, "O2");
        assert_eq!(w.tuple(), "(m,1)");
    }

    #[test]
    fn round_trips_on_catalog() {
        for e in catalog_omps() {
            assert!(roundtrip_check(&e.structure).passed(), "{}", e.name);
            let t = build_iop_from_omp(&e.structure).unwrap();
            assert!(roundtrip_iop_check(&t).passed(), "{}", e.name);
            let back = build_omp_from_iop(&t).unwrap();
            assert!(back.same_structure(&e.structure));
        }
    }

    #[test]
    fn enlarged_entry_breaks_c_only() {
        let t = build_iop_from_omp(&make_mo(2).unwrap()).unwrap();
        let (a, b) = (el(&t, "a"), el(&t, "b"));
        let bad = t.with_entry(a, b, set(&t, &["b", "1"])).unwrap();
        assert!(bad.check_axioms().passed());
        assert!(!condition_c_check(&bad).passed());
        let r = roundtrip_iop_check(&bad);
        let (_, w) = r.first_failure().unwrap();
        assert!(w.detail.starts_with("(C) violated"), "{}", w.detail);
    }

    #[test]
    fn construction_rejects_bad_tables() {
        let s = |i: usize| ElementSet::singleton(ElementId::new(i));
        let err = IopTable::new(None, ElementId::new(0), vec![s(1), s(1), ElementSet::EMPTY, s(1)]).unwrap_err();
        assert!(matches!(err, StructureError::EmptyArrowEntry(..)));
        let two = s(0).union(s(1));
        let err = IopTable::new(None, ElementId::new(0), vec![two, s(1), s(0), s(1)]).unwrap_err();
        assert_eq!(err, StructureError::NegationNotSingleton("e0".into()));
        let err = IopTable::new(None, ElementId::new(0), vec![s(1); 3]).unwrap_err();
        assert!(matches!(err, StructureError::TableShape { .. }));
    }
}
