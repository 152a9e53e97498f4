//! Canonical forms of orthoposets under relabelling.

use itertools::Itertools;

use crate::elements::{ElementId, ElementSet};
use crate::poset::OrthoPoset;

/// Order rows and involution after relabelling; the lexicographic minimum
/// over invariant-respecting permutations identifies an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub rows: Vec<u64>,
    pub invol: Vec<u8>,
}

/// Colour refinement on (down size, up size), then on the colour multisets
/// of strict down/up sets and the colour of the complement. Colours are
/// numbered by sorted signature, so they are isomorphism invariant.
pub fn refine_colors(p: &OrthoPoset) -> Vec<usize> {
    let n = p.len();
    let elems: Vec<ElementId> = p.elements().collect();
    let rank = |sigs: &[Vec<usize>]| -> Vec<usize> {
        let mut uniq = sigs.to_vec();
        uniq.sort();
        uniq.dedup();
        sigs.iter().map(|s| uniq.binary_search(s).unwrap()).collect()
    };
    let base: Vec<Vec<usize>> = elems
        .iter()
        .map(|&x| vec![p.poset().down_set(x).len(), p.poset().up_set(x).len()])
        .collect();
    let mut color = rank(&base);
    let mut classes = color.iter().unique().count();
    loop {
        let sigs: Vec<Vec<usize>> = elems
            .iter()
            .map(|&x| {
                let mut s = vec![color[x.index()], color[p.invol(x).index()], n];
                let mut down: Vec<usize> = p.poset().down_set(x).iter().filter(|&y| y != x).map(|y| color[y.index()]).collect();
                down.sort_unstable();
                s.extend(down);
                s.push(n);
                let mut up: Vec<usize> = p.poset().up_set(x).iter().filter(|&y| y != x).map(|y| color[y.index()]).collect();
                up.sort_unstable();
                s.extend(up);
                s
            })
            .collect();
        let next = rank(&sigs);
        let k = next.iter().unique().count();
        color = next;
        if k == classes {
            return color;
        }
        classes = k;
    }
}

fn form_under(p: &OrthoPoset, perm: &[usize]) -> CanonicalForm {
    let n = p.len();
    let mut rows = vec![0u64; n];
    let mut invol = vec![0u8; n];
    for x in p.elements() {
        let i = x.index();
        let row: ElementSet = p.poset().up_set(x).iter().map(|y| ElementId::new(perm[y.index()])).collect();
        rows[perm[i]] = row.bits();
        invol[perm[i]] = perm[p.invol(x).index()] as u8;
    }
    CanonicalForm { rows, invol }
}

/// The canonical form and a permutation (`perm[old] = new`) realising it.
pub fn canonical_form(p: &OrthoPoset) -> (CanonicalForm, Vec<usize>) {
    let color = refine_colors(p);
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| (color[i], i));
    let classes: Vec<Vec<usize>> = order
        .iter()
        .copied()
        .chunk_by(|&i| color[i])
        .into_iter()
        .map(|(_, g)| g.collect())
        .collect();
    let mut best: Option<(CanonicalForm, Vec<usize>)> = None;
    let choices = classes.iter().map(|c| c.iter().copied().permutations(c.len()));
    for arrangement in choices.multi_cartesian_product() {
        let mut perm = vec![0; p.len()];
        for (pos, &x) in arrangement.iter().flatten().enumerate() {
            perm[x] = pos;
        }
        let f = form_under(p, &perm);
        if best.as_ref().is_none_or(|(b, _)| f < *b) {
            best = Some((f, perm));
        }
    }
    best.expect("at least one arrangement")
}

/// Names for a canonical representative: `0`, `1`, and letters for the
/// remaining elements, with the second member of each complementary pair
/// primed.
pub fn standard_names(p: &OrthoPoset) -> Vec<String> {
    let n = p.len();
    let mut names = vec![String::new(); n];
    names[p.zero().index()] = "0".into();
    names[p.one().index()] = "1".into();
    let mut letter = 0usize;
    for x in p.elements() {
        if !names[x.index()].is_empty() {
            continue;
        }
        let base = letter_name(letter);
        letter += 1;
        let xc = p.invol(x);
        names[xc.index()] = format!("{base}'");
        names[x.index()] = base;
    }
    names
}

fn letter_name(mut k: usize) -> String {
    let mut s = String::new();
    loop {
        s.insert(0, (b'a' + (k % 26) as u8) as char);
        if k < 26 {
            return s;
        }
        k = k / 26 - 1;
    }
}

/// The canonical representative with standard names.
pub fn canonicalize(p: &OrthoPoset) -> OrthoPoset {
    let (_, perm) = canonical_form(p);
    let q = p.permuted(&perm);
    let names = standard_names(&q);
    q.with_names(names).expect("standard names are distinct")
}

pub fn isomorphic(p: &OrthoPoset, q: &OrthoPoset) -> bool {
    p.len() == q.len() && canonical_form(p).0 == canonical_form(q).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_boolean, make_hexagon, make_mo};

    #[test]
    fn canonical_form_is_relabelling_invariant() {
        let p = make_mo(2).unwrap();
        let perm = [5, 3, 0, 1, 4, 2];
        let q = p.permuted(&perm);
        assert_eq!(canonical_form(&p).0, canonical_form(&q).0);
        assert!(canonicalize(&p).same_structure(&canonicalize(&q)));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert!(!isomorphic(&make_mo(2).unwrap(), &make_hexagon()));
        assert!(!isomorphic(&make_mo(3).unwrap(), &make_boolean(3).unwrap()));
    }

    #[test]
    fn names() {
        assert_eq!(letter_name(0), "a");
        assert_eq!(letter_name(25), "z");
        assert_eq!(letter_name(26), "aa");
        let c = canonicalize(&make_mo(2).unwrap());
        assert_eq!(c.names()[0], "0");
        assert_eq!(c.names()[5], "1");
        assert!(c.element("a'").is_some());
    }
}
