//! Finite bounded posets with an antitone involution.
//!
//! The order is kept as its full reflexive-transitive relation: row `x` of
//! `up` is the principal filter of `x`, row `x` of `down` its principal
//! ideal. Cones, maximal elements and partial joins are then a handful of
//! word operations.

use crate::elements::{ElementId, ElementSet, MAX_ELEMENTS};
use crate::error::StructureError;
use crate::report::{ItemReport, ModelReport, Named, Witness};

/// A finite bounded partial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedPoset {
    names: Vec<String>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    zero: ElementId,
    one: ElementId,
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

fn check_names(names: &[String], n: usize) -> Result<(), StructureError> {
    if names.len() != n {
        return Err(StructureError::NameCount(names.len(), n));
    }
    let mut sorted: Vec<&String> = names.iter().collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(StructureError::DuplicateName(w[0].clone()));
    }
    Ok(())
}

impl BoundedPoset {
    /// Build from the full order relation: `up[x]` is the set of all `y`
    /// with `x <= y`. Names default to `e0..` when `names` is `None`.
    pub fn new(
        names: Option<Vec<String>>,
        up: Vec<ElementSet>,
        zero: ElementId,
        one: ElementId,
    ) -> Result<Self, StructureError> {
        let n = up.len();
        if n == 0 {
            return Err(StructureError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(StructureError::TooLarge(n));
        }
        let names = names.unwrap_or_else(|| default_names(n));
        check_names(&names, n)?;
        let full = ElementSet::full(n);
        for row in &up {
            if let Some(bad) = row.difference(full).first() {
                return Err(StructureError::OutOfRange { index: bad.index(), n });
            }
        }
        for e in [zero, one] {
            if e.index() >= n {
                return Err(StructureError::OutOfRange { index: e.index(), n });
            }
        }
        let mut down = vec![ElementSet::EMPTY; n];
        for x in 0..n {
            for y in up[x] {
                down[y.index()].insert(ElementId::new(x));
            }
        }
        let nm = |i: usize| names[i].clone();
        for x in 0..n {
            let xe = ElementId::new(x);
            if !up[x].contains(xe) {
                return Err(StructureError::NotReflexive(nm(x)));
            }
            for y in up[x] {
                if y != xe && up[y.index()].contains(xe) {
                    return Err(StructureError::NotAntisymmetric(nm(x), nm(y.index())));
                }
                // up[y] must be contained in up[x]
                let missing = up[y.index()].difference(up[x]);
                if let Some(z) = missing.first() {
                    return Err(StructureError::NotTransitive(
                        nm(x),
                        nm(y.index()),
                        nm(z.index()),
                    ));
                }
            }
        }
        if let Some(x) = full.difference(up[zero.index()]).first() {
            return Err(StructureError::ZeroNotBottom {
                zero: nm(zero.index()),
                x: nm(x.index()),
            });
        }
        if let Some(x) = full.difference(down[one.index()]).first() {
            return Err(StructureError::OneNotTop {
                one: nm(one.index()),
                x: nm(x.index()),
            });
        }
        Ok(BoundedPoset {
            names,
            up,
            down,
            zero,
            one,
        })
    }

    /// Build from strict cover pairs `(a, b)` meaning `a < b`; the reflexive
    /// transitive closure is computed here.
    pub fn from_covers(
        names: Option<Vec<String>>,
        n: usize,
        covers: &[(ElementId, ElementId)],
        zero: ElementId,
        one: ElementId,
    ) -> Result<Self, StructureError> {
        if n > MAX_ELEMENTS {
            return Err(StructureError::TooLarge(n));
        }
        let mut up: Vec<ElementSet> = (0..n).map(|i| ElementSet::singleton(ElementId::new(i))).collect();
        for &(a, b) in covers {
            for e in [a, b] {
                if e.index() >= n {
                    return Err(StructureError::OutOfRange { index: e.index(), n });
                }
            }
            up[a.index()].insert(b);
        }
        transitive_closure(&mut up);
        BoundedPoset::new(names, up, zero, one)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> ElementId {
        self.one
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.up[x.index()].contains(y)
    }

    #[inline]
    pub fn up_set(&self, x: ElementId) -> ElementSet {
        self.up[x.index()]
    }

    #[inline]
    pub fn down_set(&self, x: ElementId) -> ElementSet {
        self.down[x.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.len()).map(ElementId::new)
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// Cover pairs (Hasse diagram edges), sorted.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for x in self.elements() {
            let strict = self.up[x.index()].difference(ElementSet::singleton(x));
            for y in strict {
                // y covers x iff nothing strictly between
                let between = strict
                    .intersection(self.down[y.index()])
                    .difference(ElementSet::singleton(y));
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn check_range(&self, a: ElementSet) -> Result<(), StructureError> {
        match a.difference(self.all()).first() {
            Some(bad) => Err(StructureError::OutOfRange {
                index: bad.index(),
                n: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn lower(&self, a: ElementSet) -> ElementSet {
        a.iter()
            .fold(self.all(), |acc, y| acc.intersection(self.down[y.index()]))
    }

    pub(crate) fn upper(&self, a: ElementSet) -> ElementSet {
        a.iter()
            .fold(self.all(), |acc, y| acc.intersection(self.up[y.index()]))
    }

    pub(crate) fn maximal(&self, a: ElementSet) -> ElementSet {
        a.iter()
            .filter(|&x| self.up[x.index()].intersection(a) == ElementSet::singleton(x))
            .collect()
    }

    pub(crate) fn minimal(&self, a: ElementSet) -> ElementSet {
        a.iter()
            .filter(|&x| self.down[x.index()].intersection(a) == ElementSet::singleton(x))
            .collect()
    }

    /// `L(A)`: every element below all members of `a`. `L(∅)` is everything.
    pub fn lower_cone(&self, a: ElementSet) -> Result<ElementSet, StructureError> {
        self.check_range(a)?;
        Ok(self.lower(a))
    }

    /// `U(A)`: every element above all members of `a`.
    pub fn upper_cone(&self, a: ElementSet) -> Result<ElementSet, StructureError> {
        self.check_range(a)?;
        Ok(self.upper(a))
    }

    /// Maximal elements of `a`.
    pub fn max_of(&self, a: ElementSet) -> Result<ElementSet, StructureError> {
        self.check_range(a)?;
        Ok(self.maximal(a))
    }

    /// Minimal elements of `a`.
    pub fn min_of(&self, a: ElementSet) -> Result<ElementSet, StructureError> {
        self.check_range(a)?;
        Ok(self.minimal(a))
    }

    /// Least element of `a`, if any.
    pub fn least(&self, a: ElementSet) -> Option<ElementId> {
        a.iter().find(|&m| a.is_subset(self.up[m.index()]))
    }

    /// Greatest element of `a`, if any.
    pub fn greatest(&self, a: ElementSet) -> Option<ElementId> {
        a.iter().find(|&m| a.is_subset(self.down[m.index()]))
    }

    /// Supremum of `x` and `y`, or `None` if `U(x, y)` has no least element.
    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        self.least(self.up[x.index()].intersection(self.up[y.index()]))
    }

    /// Infimum of `x` and `y`, or `None` if `L(x, y)` has no greatest element.
    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        self.greatest(self.down[x.index()].intersection(self.down[y.index()]))
    }

    /// The same order relabelled: element `i` moves to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> BoundedPoset {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let map = |s: ElementSet| -> ElementSet { s.iter().map(|x| ElementId::new(perm[x.index()])).collect() };
        let mut up = vec![ElementSet::EMPTY; n];
        let mut down = vec![ElementSet::EMPTY; n];
        let mut names = vec![String::new(); n];
        for i in 0..n {
            up[perm[i]] = map(self.up[i]);
            down[perm[i]] = map(self.down[i]);
            names[perm[i]] = self.names[i].clone();
        }
        BoundedPoset {
            names,
            up,
            down,
            zero: ElementId::new(perm[self.zero.index()]),
            one: ElementId::new(perm[self.one.index()]),
        }
    }
}

/// Warshall closure over bitset rows, in place.
pub fn transitive_closure(up: &mut [ElementSet]) {
    let n = up.len();
    for k in 0..n {
        let kk = ElementId::new(k);
        let row_k = up[k];
        for row in up.iter_mut() {
            if row.contains(kk) {
                *row = row.union(row_k);
            }
        }
    }
}

impl Named for BoundedPoset {
    fn size(&self) -> usize {
        self.len()
    }

    fn name(&self, x: ElementId) -> &str {
        &self.names[x.index()]
    }
}

/// A bounded poset with an antitone involutive complementation under which
/// orthogonal pairs have joins. The orthomodular law is not required here;
/// see [`OrthoPoset::validate_omp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoPoset {
    poset: BoundedPoset,
    invol: Vec<ElementId>,
}

impl OrthoPoset {
    pub fn new(poset: BoundedPoset, invol: Vec<ElementId>) -> Result<Self, StructureError> {
        let n = poset.len();
        if invol.len() != n {
            return Err(StructureError::InvolutionLength {
                got: invol.len(),
                expected: n,
            });
        }
        if let Some(bad) = invol.iter().find(|e| e.index() >= n) {
            return Err(StructureError::OutOfRange { index: bad.index(), n });
        }
        let nm = |x: ElementId| poset.name(x).to_string();
        for x in poset.elements() {
            let xc = invol[x.index()];
            if invol[xc.index()] != x {
                return Err(StructureError::NotInvolutive(nm(x)));
            }
        }
        for x in poset.elements() {
            for y in poset.up_set(x) {
                if !poset.leq(invol[y.index()], invol[x.index()]) {
                    return Err(StructureError::NotAntitone(nm(x), nm(y)));
                }
            }
        }
        for x in poset.elements() {
            let xc = invol[x.index()];
            if poset.join(x, xc) != Some(poset.one()) {
                return Err(StructureError::ComplementJoin(nm(x)));
            }
            if poset.meet(x, xc) != Some(poset.zero()) {
                return Err(StructureError::ComplementMeet(nm(x)));
            }
        }
        for x in poset.elements() {
            // y ⊥ x  iff  y <= x'
            for y in poset.down_set(invol[x.index()]) {
                if poset.join(x, y).is_none() {
                    return Err(StructureError::OrthogonalJoinMissing(nm(x), nm(y)));
                }
            }
        }
        Ok(OrthoPoset { poset, invol })
    }

    pub fn poset(&self) -> &BoundedPoset {
        &self.poset
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        self.poset.zero()
    }

    #[inline]
    pub fn one(&self) -> ElementId {
        self.poset.one()
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.poset.leq(x, y)
    }

    /// `x'`.
    #[inline]
    pub fn invol(&self, x: ElementId) -> ElementId {
        self.invol[x.index()]
    }

    pub fn involution(&self) -> &[ElementId] {
        &self.invol
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        self.poset.elements()
    }

    pub fn names(&self) -> &[String] {
        self.poset.names()
    }

    /// Index of the element called `name`.
    pub fn element(&self, name: &str) -> Option<ElementId> {
        self.names().iter().position(|n| n == name).map(ElementId::new)
    }

    pub fn lower_cone(&self, a: ElementSet) -> Result<ElementSet, StructureError> {
        self.poset.lower_cone(a)
    }

    pub fn upper_cone(&self, a: ElementSet) -> Result<ElementSet, StructureError> {
        self.poset.upper_cone(a)
    }

    pub fn max_of(&self, a: ElementSet) -> Result<ElementSet, StructureError> {
        self.poset.max_of(a)
    }

    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        self.poset.join(x, y)
    }

    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        self.poset.meet(x, y)
    }

    /// `x ⊥ y`, i.e. `x <= y'`.
    #[inline]
    pub fn orthogonal(&self, x: ElementId, y: ElementId) -> bool {
        self.leq(x, self.invol(y))
    }

    /// `{x' | x ∈ a}`.
    pub fn invol_set(&self, a: ElementSet) -> ElementSet {
        a.iter().map(|x| self.invol(x)).collect()
    }

    /// True if every pair has a join (and so, by the involution, a meet).
    pub fn is_lattice(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.join(x, y).is_some()))
    }

    /// Same order and involution, ignoring element names.
    pub fn same_structure(&self, other: &OrthoPoset) -> bool {
        self.len() == other.len()
            && self.zero() == other.zero()
            && self.one() == other.one()
            && self.invol == other.invol
            && self
                .elements()
                .all(|x| self.poset.up_set(x) == other.poset.up_set(x))
    }

    /// Relabel: element `i` moves to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> OrthoPoset {
        let poset = self.poset.permuted(perm);
        let mut invol = vec![ElementId::new(0); self.len()];
        for i in 0..self.len() {
            invol[perm[i]] = ElementId::new(perm[self.invol[i].index()]);
        }
        OrthoPoset { poset, invol }
    }

    /// Replace the element names.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, StructureError> {
        check_names(&names, self.len())?;
        self.poset.names = names;
        Ok(self)
    }

    /// Checks the orthomodular law `x <= y ⇒ (y' ∨ x)' ∨ x = y` over all
    /// comparable pairs; reports the first failing `(x, y)` in
    /// lexicographic index order.
    pub fn validate_omp(&self) -> ModelReport {
        let mut checked = 0u64;
        let mut result = Ok(());
        'outer: for x in self.elements() {
            for y in self.poset.up_set(x) {
                checked += 1;
                // y' ⊥ x since x <= y = y''
                let inner = self
                    .join(self.invol(y), x)
                    .expect("orthogonal join y' ∨ x must exist in an orthoposet");
                // x <= y' ∨ x, so (y' ∨ x)' ⊥ x
                let outer = self
                    .join(self.invol(inner), x)
                    .expect("orthogonal join (y' ∨ x)' ∨ x must exist in an orthoposet");
                if outer != y {
                    result = Err(Witness::new(format!(
                        "(y'∨x)'∨x = {} ≠ y",
                        self.name(outer)
                    ))
                    .bind(self, "x", x)
                    .bind(self, "y", y));
                    break 'outer;
                }
            }
        }
        ModelReport::single("validate", ItemReport::from_result("OM", checked, result))
    }

    /// The dual form `x <= y ⇒ x ∨ (y ∧ x') = y`.
    pub fn validate_omp_dual(&self) -> ModelReport {
        let mut checked = 0u64;
        let mut result = Ok(());
        'outer: for x in self.elements() {
            for y in self.poset.up_set(x) {
                checked += 1;
                let value = self
                    .meet(y, self.invol(x))
                    .and_then(|m| self.join(x, m));
                if value != Some(y) {
                    let shown = value.map_or("undefined", |v| self.name(v));
                    result = Err(Witness::new(format!("x∨(y∧x') = {shown} ≠ y"))
                        .bind(self, "x", x)
                        .bind(self, "y", y));
                    break 'outer;
                }
            }
        }
        ModelReport::single("validate-dual", ItemReport::from_result("OM-dual", checked, result))
    }

    /// De Morgan laws for every defined join and every defined meet.
    pub fn de_morgan_check(&self) -> ModelReport {
        let mut report = ModelReport::new("de-morgan");
        let halves: [(&str, fn(&OrthoPoset, ElementId, ElementId) -> Option<ElementId>, fn(&OrthoPoset, ElementId, ElementId) -> Option<ElementId>); 2] = [
            ("join", |p, x, y| p.join(x, y), |p, x, y| p.meet(x, y)),
            ("meet", |p, x, y| p.meet(x, y), |p, x, y| p.join(x, y)),
        ];
        for (label, op, dual) in halves {
            let mut checked = 0u64;
            let mut result = Ok(());
            'outer: for x in self.elements() {
                for y in self.elements() {
                    let Some(v) = op(self, x, y) else { continue };
                    checked += 1;
                    let d = dual(self, self.invol(x), self.invol(y));
                    if d != Some(self.invol(v)) {
                        let shown = d.map_or("undefined", |e| self.name(e));
                        result = Err(Witness::new(format!(
                            "({label})' = {} but dual of complements is {shown}",
                            self.name(self.invol(v))
                        ))
                        .bind(self, "x", x)
                        .bind(self, "y", y));
                        break 'outer;
                    }
                }
            }
            report.push(ItemReport::from_result(label, checked, result));
        }
        report
    }
}

impl Named for OrthoPoset {
    fn size(&self) -> usize {
        self.len()
    }

    fn name(&self, x: ElementId) -> &str {
        self.poset.name(x)
    }
}
