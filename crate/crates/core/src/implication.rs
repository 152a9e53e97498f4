//! The set-valued implication `x → y = y ∨ Max L(x', y')`.
//!
//! On a lattice `Max L(x', y')` is the single element `x' ∧ y'`; on a
//! non-lattice orthomodular poset it may hold several maximal lower bounds
//! and the implication then has several values.

use crate::elements::{ElementId, ElementSet};
use crate::error::StructureError;
use crate::iop::IopTable;
use crate::poset::OrthoPoset;
use crate::report::{ItemReport, ModelReport, Named, Witness};

/// `y ∨ Max L(x', y')` as a set. Defined on every orthoposet: each maximal
/// lower bound `m` lies below `y'`, so `y ∨ m` is an orthogonal join.
pub fn arrow(p: &OrthoPoset, x: ElementId, y: ElementId) -> ElementSet {
    let poset = p.poset();
    let bounds = poset
        .down_set(p.invol(x))
        .intersection(poset.down_set(p.invol(y)));
    poset
        .maximal(bounds)
        .iter()
        .map(|m| {
            p.join(y, m)
                .expect("y ∨ m exists because m <= y' in an orthoposet")
        })
        .collect()
}

/// The full table of [`arrow`] over `p`, for any orthoposet. Negations are
/// always the singletons `{x'}`.
pub fn arrow_table(p: &OrthoPoset) -> IopTable {
    let mut entries = Vec::with_capacity(p.len() * p.len());
    for x in p.elements() {
        for y in p.elements() {
            entries.push(arrow(p, x, y));
        }
    }
    IopTable::new(Some(p.names().to_vec()), p.zero(), entries)
        .expect("arrow entries are nonempty with singleton negations")
}

/// `A → B = 1`: every member of `a` implies some member of `b` to 1.
pub fn g_holds(p: &OrthoPoset, a: ElementSet, b: ElementSet) -> Result<bool, StructureError> {
    if a.is_empty() || b.is_empty() {
        return Err(StructureError::EmptyOperand);
    }
    let one = ElementSet::singleton(p.one());
    Ok(a.iter().all(|x| b.iter().any(|y| arrow(p, x, y) == one)))
}

/// Check the eleven elementary properties of the implication on every pair.
pub fn prop1_suite(p: &OrthoPoset) -> ModelReport {
    let t = arrow_table(p);
    let one = ElementSet::singleton(p.one());
    let zero = p.zero();
    let single = ElementSet::singleton;
    let mut report = ModelReport::new("prop1");

    type Law<'a> = Box<dyn Fn(ElementId, ElementId) -> Result<bool, String> + 'a>;
    let shown = |s: ElementSet| t.set_name(s);

    let laws: Vec<(&str, Law)> = vec![
        (
            "i",
            Box::new(|x, _y| {
                let v = t.arrow(x, zero);
                if v == single(p.invol(x)) {
                    Ok(true)
                } else {
                    Err(format!("x→0 = {} ≠ x'", shown(v)))
                }
            }),
        ),
        (
            "ii",
            Box::new(|x, y| {
                let is_one = t.arrow(x, y) == one;
                if is_one == p.leq(x, y) {
                    Ok(true)
                } else {
                    Err(format!("x≤y is {} but x→y = {}", p.leq(x, y), shown(t.arrow(x, y))))
                }
            }),
        ),
        (
            "iii",
            Box::new(|x, _y| {
                let v = t.arrow(x, p.invol(x));
                if v == single(p.invol(x)) {
                    Ok(true)
                } else {
                    Err(format!("x→x' = {} ≠ x'", shown(v)))
                }
            }),
        ),
        (
            "iv",
            Box::new(|x, y| {
                if !p.orthogonal(x, y) {
                    return Ok(false);
                }
                let j = p.join(x, y).ok_or("x∨y undefined")?;
                let r = p.join(p.invol(j), y).ok_or("(x∨y)'∨y undefined")?;
                let v = t.arrow(x, y);
                if v == single(r) {
                    Ok(true)
                } else {
                    Err(format!("x→y = {} ≠ (x∨y)'∨y = {}", shown(v), p.name(r)))
                }
            }),
        ),
        (
            "v",
            Box::new(|x, y| {
                if !p.orthogonal(x, y) {
                    return Ok(false);
                }
                let j = p.join(x, y).ok_or("x∨y undefined")?;
                let v = t.join_term(x, y);
                if v == single(j) {
                    Ok(true)
                } else {
                    Err(format!("(x→y)→y = {} ≠ x∨y = {}", shown(v), p.name(j)))
                }
            }),
        ),
        (
            "vi",
            Box::new(|x, y| {
                if !p.orthogonal(x, y) {
                    return Ok(false);
                }
                let j = p.join(x, y).ok_or("x∨y undefined")?;
                let v = t.arrow(p.invol(x), y);
                if v == single(j) {
                    Ok(true)
                } else {
                    Err(format!("x'→y = {} ≠ x∨y = {}", shown(v), p.name(j)))
                }
            }),
        ),
        (
            "vii",
            Box::new(|x, y| {
                if !p.leq(y, x) {
                    return Ok(false);
                }
                let r = p.join(p.invol(x), y).ok_or("x'∨y undefined")?;
                let v = t.arrow(x, y);
                if v == single(r) {
                    Ok(true)
                } else {
                    Err(format!("x→y = {} ≠ x'∨y = {}", shown(v), p.name(r)))
                }
            }),
        ),
        (
            "viii",
            Box::new(|x, y| {
                if !p.orthogonal(x, y) {
                    return Ok(false);
                }
                let v = t.lift_el(t.join_term(x, y), y);
                if v == t.arrow(x, y) {
                    Ok(true)
                } else {
                    Err(format!("((x→y)→y)→y = {} ≠ x→y = {}", shown(v), shown(t.arrow(x, y))))
                }
            }),
        ),
        (
            "ix",
            Box::new(|x, y| {
                if !p.leq(x, y) {
                    return Ok(false);
                }
                let v = t.om_term(x, y);
                if v == single(y) {
                    Ok(true)
                } else {
                    Err(format!("(((y'→x)→x)'→x)→x = {} ≠ y", shown(v)))
                }
            }),
        ),
        (
            "x",
            Box::new(|x, _y| {
                let a = t.arrow(p.invol(x), x);
                if t.g(a, single(x)) {
                    Ok(true)
                } else {
                    Err(format!("(x'→x)→x ≠ 1 with x'→x = {}", shown(a)))
                }
            }),
        ),
        (
            "xi",
            Box::new(|x, y| {
                let yx = t.arrow(y, x);
                if t.g(single(x), yx) {
                    Ok(true)
                } else {
                    Err(format!("x→(y→x) ≠ 1 with y→x = {}", shown(yx)))
                }
            }),
        ),
    ];

    for (label, law) in &laws {
        let mut checked = 0u64;
        let mut result = Ok(());
        'pairs: for x in p.elements() {
            for y in p.elements() {
                match law(x, y) {
                    Ok(true) => checked += 1,
                    Ok(false) => {}
                    Err(detail) => {
                        checked += 1;
                        result = Err(Witness::new(detail).bind(p, "x", x).bind(p, "y", y));
                        break 'pairs;
                    }
                }
            }
        }
        report.push(ItemReport::from_result(*label, checked, result));
    }
    report
}

/// Condition (C): each entry `x → y` equals
/// `{ (y → u) → u | u a maximal common lower bound of x', y' }`, with the
/// order and the bounds read off the table itself.
pub fn condition_c_check(t: &IopTable) -> ModelReport {
    let mut checked = 0u64;
    let mut result = Ok(());
    'pairs: for x in t.elements() {
        for y in t.elements() {
            checked += 1;
            let (xn, yn) = (t.neg(x), t.neg(y));
            let bounds: ElementSet = t
                .elements()
                .filter(|&u| t.implies_one(u, xn) && t.implies_one(u, yn))
                .collect();
            let mut rhs = ElementSet::EMPTY;
            for u in bounds {
                let maximal = bounds.iter().all(|w| !t.implies_one(u, w) || w == u);
                if maximal {
                    rhs = rhs.union(t.lift_el(t.arrow(y, u), u));
                }
            }
            let lhs = t.arrow(x, y);
            if lhs != rhs {
                result = Err(Witness::new(format!(
                    "x→y = {} but the (C) side is {}",
                    t.set_name(lhs),
                    t.set_name(rhs)
                ))
                .bind(t, "x", x)
                .bind(t, "y", y));
                break 'pairs;
            }
        }
    }
    ModelReport::single("condition-c", ItemReport::from_result("C", checked, result))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_omps, make_boolean, make_even_subsets, make_mo};

    fn el(p: &OrthoPoset, name: &str) -> ElementId {
        p.element(name).unwrap()
    }

    fn set(p: &OrthoPoset, names: &[&str]) -> ElementSet {
        names.iter().map(|n| el(p, n)).collect()
    }

    #[test]
    fn negation_is_complement() {
        for e in catalog_omps() {
            let p = &e.structure;
            for x in p.elements() {
                assert_eq!(arrow(p, x, p.zero()), ElementSet::singleton(p.invol(x)));
            }
        }
    }

    #[test]
    fn mo2_cross_block() {
        let p = make_mo(2).unwrap();
        assert_eq!(arrow(&p, el(&p, "a"), el(&p, "b")), set(&p, &["b"]));
        let mo3 = make_mo(3).unwrap();
        assert_eq!(arrow(&mo3, el(&mo3, "a"), el(&mo3, "c")), set(&mo3, &["c"]));
    }

    #[test]
    fn even6_multi_valued() {
        let p = make_even_subsets(6).unwrap();
        assert_eq!(
            arrow(&p, el(&p, "{1,2}"), el(&p, "{1,3}")),
            set(&p, &["{1,3,4,5}", "{1,3,4,6}", "{1,3,5,6}"])
        );
    }

    #[test]
    fn g_examples() {
        let p = make_mo(2).unwrap();
        let any = set(&p, &["a", "b'"]);
        assert!(g_holds(&p, set(&p, &["0"]), any).unwrap());
        assert!(!g_holds(&p, set(&p, &["a"]), set(&p, &["b"])).unwrap());
        assert!(g_holds(&p, set(&p, &["a"]), set(&p, &["b", "1"])).unwrap());
        assert_eq!(
            g_holds(&p, ElementSet::EMPTY, any),
            Err(StructureError::EmptyOperand)
        );
    }

    #[test]
    fn g_on_singletons_matches_arrow_one() {
        let p = make_even_subsets(4).unwrap();
        let one = ElementSet::singleton(p.one());
        for x in p.elements() {
            for y in p.elements() {
                let g = g_holds(&p, ElementSet::singleton(x), ElementSet::singleton(y)).unwrap();
                assert_eq!(g, arrow(&p, x, y) == one);
            }
        }
    }

    #[test]
    fn prop1_on_small_models() {
        for p in [make_mo(2).unwrap(), make_boolean(3).unwrap(), make_even_subsets(6).unwrap()] {
            let r = prop1_suite(&p);
            assert!(r.passed(), "{r}");
            assert_eq!(r.items.len(), 11);
        }
    }

    #[test]
    fn boolean_arrow_matches_classical_formula() {
        for k in 1..=4 {
            let p = make_boolean(k).unwrap();
            for x in p.elements() {
                for y in p.elements() {
                    let m = p.meet(p.invol(x), p.invol(y)).unwrap();
                    let expected = p.join(y, m).unwrap();
                    assert_eq!(arrow(&p, x, y), ElementSet::singleton(expected));
                }
            }
        }
    }

    #[test]
    fn condition_c_on_models_and_mutation() {
        assert!(condition_c_check(&arrow_table(&make_mo(2).unwrap())).passed());
        assert!(condition_c_check(&arrow_table(&make_even_subsets(6).unwrap())).passed());
        // swap the entries a→b and b→a
        let p = make_mo(2).unwrap();
        let t = arrow_table(&p);
        let (a, b) = (el(&p, "a"), el(&p, "b"));
        let swapped = t
            .with_entry(a, b, t.arrow(b, a))
            .unwrap()
            .with_entry(b, a, t.arrow(a, b))
            .unwrap();
        let r = condition_c_check(&swapped);
        let (_, w) = r.first_failure().unwrap();
        assert_eq!(w.tuple(), "(a,b)");
    }
}
