//! Special oriented two-graphs: those occurring at most twice as a
//! restriction of any two-graph with one more vertex. Each yields the lower
//! bound `r! / (|Aut(g)| 2^C(r-1,2))` on the Turán density of the r-triangle.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::census::enumerate_switching_classes;
use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::twograph::OrientedTwoGraph;
use crate::{binomial, factorial, Rational};

/// True iff no member `T` of the class has two vertices `v` with `T⁺ - v`
/// in the class.
pub fn is_special(g: &OrientedTwoGraph) -> Result<bool> {
    let r = g.n();
    if r > 15 {
        return Err(Error::BudgetExceeded(r));
    }
    let members = g.class_members()?;
    let codes = g.member_codes()?;
    for t in &members {
        let aug = t.augment()?;
        let mut hits = 0;
        for v in 0..r {
            let keep: Vec<usize> = (0..=r).filter(|&x| x != v).collect();
            if codes.contains(&aug.induced(&keep)?.canonical_code()?) {
                hits += 1;
                if hits > 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Maximum over all labeled two-graphs `h` on `r + 1` vertices of the
/// number of `r`-subsets `A` with `h|_A ≅ g`, for each `g` in `patterns`
/// (all of order `r`). Every `h` is reached through its anchored tournament.
pub fn max_restriction_copies(patterns: &[OrientedTwoGraph]) -> Result<Vec<usize>> {
    let Some(first) = patterns.first() else {
        return Ok(Vec::new());
    };
    let r = first.n();
    if patterns.iter().any(|g| g.n() != r) {
        return Err(Error::SizeMismatch {
            expected: r,
            actual: patterns
                .iter()
                .map(|g| g.n())
                .find(|&m| m != r)
                .unwrap_or(r),
        });
    }
    if !(3..=6).contains(&r) {
        return Err(Error::OutOfRange {
            what: "oracle order",
            value: r,
            range: "3..=6",
        });
    }
    let index: HashMap<Vec<u8>, usize> = patterns
        .iter()
        .enumerate()
        .map(|(i, g)| Ok((g.canonical_form()?, i)))
        .collect::<Result<_>>()?;
    // Canonical class of each labeled restriction, keyed by its sign bytes.
    let mut memo: HashMap<Vec<u8>, Option<usize>> = HashMap::new();
    let mut best = vec![0usize; patterns.len()];
    let pairs = binomial(r, 2) as u32;
    for code in 0..1u128 << pairs {
        let h =
            OrientedTwoGraph::from_tournament(&Tournament::from_pair_code(r, code)?.augment()?)?;
        let mut counts = vec![0usize; patterns.len()];
        for v in 0..=r {
            let keep: Vec<usize> = (0..=r).filter(|&x| x != v).collect();
            let sub = h.restriction(&keep)?;
            let key = sub.signs().to_bytes();
            let class = match memo.get(&key) {
                Some(&c) => c,
                None => {
                    let c = index.get(&sub.canonical_form()?).copied();
                    memo.insert(key, c);
                    c
                }
            };
            if let Some(c) = class {
                counts[c] += 1;
            }
        }
        for (b, c) in best.iter_mut().zip(counts) {
            *b = (*b).max(c);
        }
    }
    Ok(best)
}

/// Specialness straight from the definition, by enumerating every two-graph
/// on `r + 1` vertices; `r <= 6`.
pub fn is_special_oracle(g: &OrientedTwoGraph) -> Result<bool> {
    Ok(max_restriction_copies(std::slice::from_ref(g))?[0] <= 2)
}

/// `r! / (|Aut(g)| 2^C(r-1,2))`; fails unless `g` is special.
pub fn turan_lower_bound(g: &OrientedTwoGraph) -> Result<Rational> {
    if !is_special(g)? {
        return Err(Error::NotSpecial);
    }
    Ok(bound_for(g.n(), g.automorphism_count()?))
}

fn bound_for(r: usize, aut: usize) -> Rational {
    Rational::new(
        factorial(r) as i128,
        aut as i128 * (1i128 << binomial(r - 1, 2)),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecialClass {
    /// `G` line of the canonical two-graph.
    pub two_graph: String,
    pub class_aut_order: usize,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub lower_bound: Rational,
    pub is_best: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecialSearchResult {
    pub r: usize,
    pub classes_scanned: usize,
    pub trivial_aut_classes: usize,
    pub trivial_aut_special: usize,
    pub specials: Vec<SpecialClass>,
}

impl SpecialSearchResult {
    pub fn best_bound(&self) -> Option<Rational> {
        self.specials.iter().map(|s| s.lower_bound).max()
    }
}

/// Scans every switching class on `r` vertices for specialness.
pub fn find_special(r: usize) -> Result<SpecialSearchResult> {
    if !(4..=8).contains(&r) {
        return Err(Error::OutOfRange {
            what: "pattern order",
            value: r,
            range: "4..=8",
        });
    }
    let classes = enumerate_switching_classes(r)?;
    let scanned: Vec<(OrientedTwoGraph, usize, bool)> = classes
        .into_par_iter()
        .map(|g| {
            let aut = g.automorphism_count()?;
            let special = is_special(&g)?;
            Ok((g, aut, special))
        })
        .collect::<Result<_>>()?;
    let trivial_aut_classes = scanned.iter().filter(|c| c.1 == 1).count();
    let trivial_aut_special = scanned.iter().filter(|c| c.1 == 1 && c.2).count();
    let mut specials: Vec<SpecialClass> = scanned
        .iter()
        .filter(|c| c.2)
        .map(|(g, aut, _)| SpecialClass {
            two_graph: crate::codec::format_two_graph(g),
            class_aut_order: *aut,
            lower_bound: bound_for(r, *aut),
            is_best: false,
        })
        .collect();
    if let Some(best) = specials.iter().map(|s| s.lower_bound).max() {
        for s in &mut specials {
            s.is_best = s.lower_bound == best;
        }
    }
    Ok(SpecialSearchResult {
        r,
        classes_scanned: scanned.len(),
        trivial_aut_classes,
        trivial_aut_special,
        specials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::paley::paley_two_graph;

    fn two_graph(t: &Tournament) -> OrientedTwoGraph {
        OrientedTwoGraph::from_tournament(t).unwrap()
    }

    #[test]
    fn specialness_examples() {
        let g3 = paley_two_graph(3).unwrap();
        assert!(is_special(&g3).unwrap());
        assert!(is_special_oracle(&g3).unwrap());
        let other = two_graph(&Tournament::transitive(4).unwrap());
        assert!(!other.is_isomorphic(&g3).unwrap());
        assert!(!is_special(&other).unwrap());
        assert!(!is_special_oracle(&other).unwrap());
        for g in enumerate_switching_classes(5).unwrap() {
            assert!(!is_special(&g).unwrap());
        }
    }

    #[test]
    fn figures_give_special_classes() {
        for (t, aut) in [
            (fixtures::figure1(), 5),
            (fixtures::figure2(), 9),
            (fixtures::figure3(), 1),
        ] {
            let g = two_graph(&t);
            assert!(is_special(&g).unwrap());
            assert_eq!(g.automorphism_count().unwrap(), aut);
        }
    }

    #[test]
    fn specialness_is_a_class_invariant() {
        for r in 4..=5 {
            for g in enumerate_switching_classes(r).unwrap() {
                let expected = is_special(&g).unwrap();
                for t in g.class_members().unwrap() {
                    assert_eq!(is_special(&two_graph(&t)).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn oracle_agrees_for_small_orders() {
        for r in 4..=6 {
            let classes = enumerate_switching_classes(r).unwrap();
            let copies = max_restriction_copies(&classes).unwrap();
            for (g, c) in classes.iter().zip(copies) {
                assert_eq!(is_special(g).unwrap(), c <= 2, "r={r} {g}");
            }
        }
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(
            turan_lower_bound(&paley_two_graph(3).unwrap()).unwrap(),
            Rational::new(1, 4)
        );
        assert_eq!(
            turan_lower_bound(&two_graph(&fixtures::figure1())).unwrap(),
            Rational::new(9, 64)
        );
        assert_eq!(
            turan_lower_bound(&two_graph(&fixtures::figure3())).unwrap(),
            Rational::new(315, 16384)
        );
        assert!(matches!(
            turan_lower_bound(&two_graph(&Tournament::transitive(4).unwrap())),
            Err(Error::NotSpecial)
        ));
    }

    #[test]
    fn searches_for_small_orders() {
        let r4 = find_special(4).unwrap();
        assert_eq!(r4.specials.len(), 1);
        assert_eq!(r4.best_bound(), Some(Rational::new(1, 4)));
        assert!(find_special(5).unwrap().specials.is_empty());
        let r6 = find_special(6).unwrap();
        assert_eq!(r6.specials.len(), 2);
        assert_eq!(r6.best_bound(), Some(Rational::new(9, 64)));
        for res in [&r4, &r6] {
            assert!(res
                .specials
                .iter()
                .all(|s| s.lower_bound <= Rational::new(1, res.r as i128)));
        }
        assert!(find_special(3).is_err());
    }
}
