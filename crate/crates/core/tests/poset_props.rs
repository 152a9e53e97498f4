use std::sync::OnceLock;

use omplab::catalog::catalog;
use omplab::search::enumerate;
use omplab::{BoundedPoset, ElementId, ElementSet, OrthoPoset};
use proptest::prelude::*;

fn corpus() -> &'static [OrthoPoset] {
    static CORPUS: OnceLock<Vec<OrthoPoset>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut v: Vec<OrthoPoset> = catalog().into_iter().map(|e| e.structure).collect();
        for n in [2, 4, 6, 8] {
            v.extend(enumerate(n, None).structures);
        }
        v
    })
}

fn is_bounded_order(n: usize, le: &[Vec<bool>], zero: usize, one: usize) -> bool {
    for x in 0..n {
        if !le[x][x] || !le[zero][x] || !le[x][one] {
            return false;
        }
        for y in 0..n {
            if x != y && le[x][y] && le[y][x] {
                return false;
            }
            for z in 0..n {
                if le[x][y] && le[y][z] && !le[x][z] {
                    return false;
                }
            }
        }
    }
    true
}

fn set(p: &OrthoPoset, bits: u64) -> ElementSet {
    ElementSet::from_bits(bits).intersection(ElementSet::full(p.len()))
}

fn leq_set(p: &OrthoPoset, a: ElementSet, b: ElementSet) -> bool {
    a.iter().all(|x| b.iter().all(|y| p.leq(x, y)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn construction_agrees_with_triple_loop(n in 1usize..=5, bits in any::<u32>(), zero in 0usize..5, one in 0usize..5) {
        let (zero, one) = (zero % n, one % n);
        let mut le = vec![vec![false; n]; n];
        for x in 0..n {
            for y in 0..n {
                le[x][y] = bits >> (x * 5 + y) & 1 == 1 || x == y && bits & (1 << 31) == 0;
            }
        }
        let up: Vec<ElementSet> = (0..n)
            .map(|x| (0..n).filter(|&y| le[x][y]).map(ElementId::new).collect())
            .collect();
        let built = BoundedPoset::new(None, up, ElementId::new(zero), ElementId::new(one));
        prop_assert_eq!(built.is_ok(), is_bounded_order(n, &le, zero, one));
    }

    #[test]
    fn cones_are_antitone_and_galois(idx in any::<prop::sample::Index>(), a in any::<u64>(), b in any::<u64>()) {
        let c = corpus();
        let p = &c[idx.index(c.len())];
        let (a, b) = (set(p, a), set(p, b));
        let ab = a.union(b);
        let l = |s| p.lower_cone(s).unwrap();
        let u = |s| p.upper_cone(s).unwrap();
        prop_assert!(l(ab).is_subset(l(a)));
        prop_assert!(u(ab).is_subset(u(a)));
        // A ⊆ L(U(A)) and A ⊆ U(L(A))
        prop_assert!(a.is_subset(l(u(a))));
        prop_assert!(a.is_subset(u(l(a))));
        // B ⊆ L(A) iff A ⊆ U(B)
        prop_assert_eq!(b.is_subset(l(a)), a.is_subset(u(b)));
        prop_assert!(leq_set(p, l(a), a));
    }

    #[test]
    fn max_of_is_an_antichain_dominating_its_argument(idx in any::<prop::sample::Index>(), a in any::<u64>()) {
        let c = corpus();
        let p = &c[idx.index(c.len())];
        let a = set(p, a);
        let m = p.max_of(a).unwrap();
        prop_assert!(m.is_subset(a));
        prop_assert_eq!(m.is_empty(), a.is_empty());
        for x in m {
            for y in m {
                prop_assert!(x == y || !p.leq(x, y));
            }
        }
        for x in a {
            prop_assert!(m.iter().any(|y| p.leq(x, y)));
        }
    }

    #[test]
    fn joins_are_least_upper_bounds(idx in any::<prop::sample::Index>(), x in any::<prop::sample::Index>(), y in any::<prop::sample::Index>()) {
        let c = corpus();
        let p = &c[idx.index(c.len())];
        let (x, y) = (ElementId::new(x.index(p.len())), ElementId::new(y.index(p.len())));
        let ub: Vec<ElementId> = p.elements().filter(|&u| p.leq(x, u) && p.leq(y, u)).collect();
        let least = ub.iter().copied().find(|&u| ub.iter().all(|&v| p.leq(u, v)));
        prop_assert_eq!(p.join(x, y), least);
        prop_assert_eq!(p.join(x, y), p.join(y, x));
        if p.orthogonal(x, y) {
            prop_assert!(p.join(x, y).is_some());
        }
        // De Morgan where defined
        if let Some(j) = p.join(x, y) {
            prop_assert_eq!(p.meet(p.invol(x), p.invol(y)), Some(p.invol(j)));
        }
    }
}

#[test]
fn orthomodular_law_forms_agree() {
    for p in corpus() {
        assert_eq!(p.validate_omp().passed(), p.validate_omp_dual().passed(), "{:?}", p.names());
        assert!(p.de_morgan_check().passed());
    }
}
