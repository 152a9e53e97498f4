//! Orthoposets on `n` elements up to isomorphism.
//!
//! Candidates are naturally labelled: `0` is element 0, `1` is element
//! `n-1`, and each inner element is inserted with a down-closed set of
//! earlier inner elements as its strict down-set. Every bounded poset has
//! such a labelling. Each candidate is paired with every fixed-point-free
//! involution of the inner elements; survivors of the orthoposet checks are
//! reduced to canonical form.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::elements::{ElementId, ElementSet};
use crate::poset::{BoundedPoset, OrthoPoset};
use crate::search::canon::{canonical_form, standard_names, CanonicalForm};

#[derive(Clone, Debug)]
pub struct Census {
    pub n: usize,
    /// Canonical representatives in canonical-form order.
    pub structures: Vec<OrthoPoset>,
    /// False when the time budget ran out.
    pub complete: bool,
    /// Labelled candidates examined.
    pub candidates: u64,
}

impl Census {
    pub fn count(&self) -> usize {
        self.structures.len()
    }
}

/// Strict down-sets of the inner elements `1..=m`, one vector per
/// naturally labelled poset.
fn inner_posets(m: usize) -> Vec<Vec<ElementSet>> {
    fn go(i: usize, m: usize, cur: &mut Vec<ElementSet>, out: &mut Vec<Vec<ElementSet>>) {
        if i > m {
            out.push(cur.clone());
            return;
        }
        // subsets of {1..i-1}, bit j set for element j
        let earlier = ((1u64 << i) - 1) & !1;
        let mut s = 0u64;
        loop {
            let set = ElementSet::from_bits(s);
            let closed = set.iter().all(|j| cur[j.index() - 1].is_subset(set));
            if closed {
                cur.push(set);
                go(i + 1, m, cur, out);
                cur.pop();
            }
            if s == earlier {
                break;
            }
            s = (s.wrapping_sub(earlier)) & earlier;
        }
    }
    let mut out = Vec::new();
    go(1, m, &mut Vec::new(), &mut out);
    out
}

/// Fixed-point-free involutions of `1..=m`, as `invol[i]`.
fn matchings(n: usize) -> Vec<Vec<usize>> {
    fn go(invol: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        let Some(i) = (1..n - 1).find(|&i| invol[i] == usize::MAX) else {
            out.push(invol.clone());
            return;
        };
        for j in i + 1..n - 1 {
            if invol[j] == usize::MAX {
                invol[i] = j;
                invol[j] = i;
                go(invol, n, out);
                invol[i] = usize::MAX;
                invol[j] = usize::MAX;
            }
        }
    }
    let mut invol = vec![usize::MAX; n];
    invol[0] = n - 1;
    invol[n - 1] = 0;
    let mut out = Vec::new();
    go(&mut invol, n, &mut out);
    out
}

fn build_poset(n: usize, strict_down: &[ElementSet]) -> BoundedPoset {
    let mut up = vec![ElementSet::EMPTY; n];
    for (x, row) in up.iter_mut().enumerate() {
        row.insert(ElementId::new(x));
        row.insert(ElementId::new(n - 1));
    }
    for x in 0..n {
        up[0].insert(ElementId::new(x));
    }
    for (k, d) in strict_down.iter().enumerate() {
        let x = k + 1;
        for y in d.iter() {
            up[y.index()].insert(ElementId::new(x));
        }
    }
    BoundedPoset::new(None, up, ElementId::new(0), ElementId::new(n - 1))
        .expect("naturally labelled candidates are bounded posets")
}

/// Every orthoposet on `n` elements, one per isomorphism class, in
/// canonical order. `n` must be at least 2.
pub fn enumerate(n: usize, budget: Option<Duration>) -> Census {
    assert!((2..=crate::elements::MAX_ELEMENTS).contains(&n), "n out of range");
    let start = Instant::now();
    let over = AtomicBool::new(false);
    let posets = inner_posets(n - 2);
    let invols = matchings(n);
    let candidates = (posets.len() * invols.len()) as u64;
    let found: Vec<(CanonicalForm, OrthoPoset)> = posets
        .par_iter()
        .flat_map_iter(|down| {
            let base = build_poset(n, down);
            let over = &over;
            invols.iter().filter_map(move |inv| {
                if over.load(Ordering::Relaxed) {
                    return None;
                }
                if budget.is_some_and(|b| start.elapsed() > b) {
                    over.store(true, Ordering::Relaxed);
                    return None;
                }
                let invol = inv.iter().map(|&i| ElementId::new(i)).collect();
                let p = OrthoPoset::new(base.clone(), invol).ok()?;
                let (form, perm) = canonical_form(&p);
                Some((form, p.permuted(&perm)))
            })
        })
        .collect();
    let mut classes: BTreeMap<CanonicalForm, OrthoPoset> = BTreeMap::new();
    for (f, p) in found {
        classes.entry(f).or_insert(p);
    }
    let structures = classes
        .into_values()
        .map(|p| {
            let names = standard_names(&p);
            p.with_names(names).expect("standard names are distinct")
        })
        .collect();
    Census {
        n,
        structures,
        complete: !over.load(Ordering::Relaxed),
        candidates,
    }
}

/// Callback form of [`enumerate`]; returns the class count and whether
/// the enumeration completed.
pub fn enumerate_orthoposets(n: usize, budget: Option<Duration>, mut emit: impl FnMut(&OrthoPoset)) -> (usize, bool) {
    let c = enumerate(n, budget);
    for p in &c.structures {
        emit(p);
    }
    (c.count(), c.complete)
}
