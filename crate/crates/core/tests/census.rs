use itertools::Itertools;
use omplab::catalog::{catalog_entry, make_hexagon, make_mo};
use omplab::search::{canonical_form, canonicalize, enumerate, equivalence_scan, find_c_violator, isomorphic};
use omplab::implication::condition_c_check;
use omplab::Named;
use proptest::prelude::*;

/// Plain relation matrix plus involution.
#[derive(Clone)]
struct Raw {
    n: usize,
    le: Vec<Vec<bool>>,
    inv: Vec<usize>,
}

fn join(r: &Raw, x: usize, y: usize) -> Option<usize> {
    let ub: Vec<usize> = (0..r.n).filter(|&u| r.le[x][u] && r.le[y][u]).collect();
    ub.iter().copied().find(|&u| ub.iter().all(|&v| r.le[u][v]))
}

fn meet(r: &Raw, x: usize, y: usize) -> Option<usize> {
    let lb: Vec<usize> = (0..r.n).filter(|&l| r.le[l][x] && r.le[l][y]).collect();
    lb.iter().copied().find(|&l| lb.iter().all(|&v| r.le[v][l]))
}

fn is_orthoposet(r: &Raw) -> bool {
    let n = r.n;
    for x in 0..n {
        for y in 0..n {
            if x != y && r.le[x][y] && r.le[y][x] {
                return false;
            }
            for z in 0..n {
                if r.le[x][y] && r.le[y][z] && !r.le[x][z] {
                    return false;
                }
            }
        }
    }
    let Some(bot) = (0..n).find(|&b| (0..n).all(|x| r.le[b][x])) else { return false };
    let Some(top) = (0..n).find(|&t| (0..n).all(|x| r.le[x][t])) else { return false };
    for x in 0..n {
        if r.inv[r.inv[x]] != x {
            return false;
        }
        if join(r, x, r.inv[x]) != Some(top) || meet(r, x, r.inv[x]) != Some(bot) {
            return false;
        }
        for y in 0..n {
            if r.le[x][y] && !r.le[r.inv[y]][r.inv[x]] {
                return false;
            }
            if r.le[x][r.inv[y]] && join(r, x, y).is_none() {
                return false;
            }
        }
    }
    true
}

fn iso(a: &Raw, b: &Raw) -> bool {
    (0..a.n).permutations(a.n).any(|p| {
        (0..a.n).all(|x| p[a.inv[x]] == b.inv[p[x]] && (0..a.n).all(|y| a.le[x][y] == b.le[p[x]][p[y]]))
    })
}

fn naive_count(n: usize) -> usize {
    let off: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|(x, y)| x != y).collect();
    let invols: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .filter(|p| (0..n).all(|i| p[p[i]] == i))
        .collect();
    let mut reps: Vec<Raw> = Vec::new();
    for mask in 0u64..(1 << off.len()) {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(x, y)) in off.iter().enumerate() {
            le[x][y] = mask >> k & 1 == 1;
        }
        for inv in &invols {
            let r = Raw { n, le: le.clone(), inv: inv.clone() };
            if is_orthoposet(&r) && !reps.iter().any(|s| iso(s, &r)) {
                reps.push(r);
            }
        }
    }
    reps.len()
}

#[test]
fn census_matches_naive_filter_up_to_four() {
    for n in 2..=4 {
        assert_eq!(enumerate(n, None).count(), naive_count(n), "n={n}");
    }
}

#[test]
fn census_regression_counts() {
    // n=2 and n=4 agree with the naive filter; n=6 and n=8 are pinned from
    // the first run.
    let counts: Vec<usize> = [2, 4, 6, 8].iter().map(|&n| enumerate(n, None).count()).collect();
    assert_eq!(counts, vec![1, 1, 2, 5]);
    for n in [3, 5, 7] {
        assert_eq!(enumerate(n, None).count(), 0, "no fixed point of ' in odd carriers");
    }
}

#[test]
fn six_element_classes_are_mo2_and_hexagon() {
    let c = enumerate(6, None);
    let mo2 = make_mo(2).unwrap();
    let hex = make_hexagon();
    assert!(c.structures.iter().any(|p| isomorphic(p, &mo2)));
    assert!(c.structures.iter().any(|p| isomorphic(p, &hex)));
}

#[test]
fn eight_element_orthomodular_classes_are_b8_and_mo3() {
    let c = enumerate(8, None);
    let omps: Vec<_> = c.structures.iter().filter(|p| p.validate_omp().passed()).collect();
    assert_eq!(omps.len(), 2);
    let b8 = catalog_entry("B8").unwrap().structure;
    let mo3 = catalog_entry("MO3").unwrap().structure;
    let even4 = catalog_entry("Even4").unwrap().structure;
    assert!(omps.iter().any(|p| isomorphic(p, &b8)));
    assert!(omps.iter().any(|p| isomorphic(p, &mo3)));
    assert!(isomorphic(&even4, &mo3));
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate(8, None);
    let b = enumerate(8, None);
    assert_eq!(a.count(), b.count());
    for (p, q) in a.structures.iter().zip(&b.structures) {
        assert_eq!(p, q);
    }
}

#[test]
fn equivalence_scan_to_eight() {
    let out = equivalence_scan(8, None);
    assert!(out.report.passed(), "{}", out.report);
    let six = &out.rows[4];
    assert_eq!((six.n, six.both_pass, six.both_fail, six.discrepancies), (6, 1, 1, 0));
    assert!(out.rows.iter().all(|r| r.complete && r.discrepancies == 0));
    let hex = make_hexagon();
    assert!(!hex.validate_omp().passed());
    assert!(!omplab::implication::arrow_table(&hex).check_axioms().passed());
}

#[test]
fn c_violator_exists_at_four() {
    let v = find_c_violator(4).expect("a violator on four elements");
    assert_eq!(v.source, "n=4 #0");
    assert_eq!(v.table.names(), ["0", "a", "a'", "1"]);
    assert_eq!(v.table.set_name(v.table.arrow(v.x, v.y)), "{0, a'}");
    assert_eq!(v.table.set_name(v.original), "{a'}");
    assert!(v.table.check_axioms().passed());
    assert!(!condition_c_check(&v.table).passed());
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelling_preserves_canonical_form(perm in arb_perm(8), which in 0usize..4) {
        let name = ["B8", "MO3", "Even4", "B4"][which];
        let p = catalog_entry(name).unwrap().structure;
        let perm: Vec<usize> = if p.len() == 8 { perm } else { (0..p.len()).collect() };
        let q = p.permuted(&perm);
        prop_assert_eq!(canonical_form(&p).0, canonical_form(&q).0);
        prop_assert!(canonicalize(&p).same_structure(&canonicalize(&q)));
    }

    #[test]
    fn relabelling_six_element_classes(perm in arb_perm(6)) {
        for p in enumerate(6, None).structures {
            let q = p.permuted(&perm);
            prop_assert_eq!(canonical_form(&p).0, canonical_form(&q).0);
        }
    }
}
