//! Isomorph-free generation of tournaments by canonical augmentation, and
//! switching classes up to isomorphism.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::twograph::OrientedTwoGraph;
use crate::{binomial, factorial, Rational};

/// One representative per isomorphism class of tournaments on `n` vertices,
/// each in canonical form, sorted by canonical code.
///
/// A child of a parent on `n-1` vertices is kept only when its new vertex
/// can occupy the last position of a canonical labeling, so each class is
/// reached from exactly one parent class.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<Tournament>> {
    if !(1..=9).contains(&n) {
        return Err(Error::OutOfRange {
            what: "tournament order",
            value: n,
            range: "1..=9",
        });
    }
    let mut level = vec![Tournament::transitive(1)?];
    for m in 2..=n {
        let mut next: Vec<(u128, Tournament)> = level
            .par_iter()
            .flat_map_iter(|parent| children(parent, m))
            .collect();
        next.sort_unstable_by_key(|c| c.0);
        level = next.into_iter().map(|c| c.1).collect();
    }
    Ok(level)
}

fn children(parent: &Tournament, m: usize) -> Vec<(u128, Tournament)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for beats in 0..1u32 << (m - 1) {
        let child = Tournament::from_fn(m, |x, y| {
            if y == m - 1 {
                beats >> x & 1 == 1
            } else if x == m - 1 {
                beats >> y & 1 == 0
            } else {
                parent.has_arc(x, y)
            }
        })
        .expect("order within range");
        let canon = child.canon().expect("order within canonical range");
        if !canon
            .labelings
            .iter()
            .any(|lab| lab[m - 1] as usize == m - 1)
        {
            continue;
        }
        if seen.insert(canon.code) {
            out.push((
                canon.code,
                Tournament::from_pair_code(m, canon.code).expect("order within range"),
            ));
        }
    }
    out
}

/// One canonical oriented two-graph per isomorphism class on `n` vertices,
/// sorted by canonical encoding.
pub fn enumerate_switching_classes(n: usize) -> Result<Vec<OrientedTwoGraph>> {
    if !(3..=9).contains(&n) {
        return Err(Error::OutOfRange {
            what: "two-graph order",
            value: n,
            range: "3..=9",
        });
    }
    let tournaments = enumerate_tournaments(n)?;
    let forms: Vec<(Vec<u8>, OrientedTwoGraph)> = tournaments
        .par_iter()
        .map(|t| {
            let g = OrientedTwoGraph::from_tournament(t)?;
            Ok((g.canonical_form()?, g))
        })
        .collect::<Result<_>>()?;
    let mut classes: BTreeMap<Vec<u8>, OrientedTwoGraph> = BTreeMap::new();
    for (code, g) in forms {
        classes.entry(code).or_insert(g);
    }
    classes.into_values().map(|g| g.canonical()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutCount {
    pub order: usize,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub tournaments: usize,
    pub switching_classes: usize,
    /// Automorphism orders of the switching classes.
    pub aut_histogram: Vec<AutCount>,
    /// `Σ n!/|Aut(T)| = 2^C(n,2)` over tournament representatives.
    pub mass_formula_ok: bool,
    /// `Σ n!/|Aut(C)| = 2^C(n-1,2)` over switching classes.
    pub class_mass_ok: bool,
}

pub fn census_report(n: usize) -> Result<CensusReport> {
    if !(3..=8).contains(&n) {
        return Err(Error::OutOfRange {
            what: "census order",
            value: n,
            range: "3..=8",
        });
    }
    let tournaments = enumerate_tournaments(n)?;
    let mass_formula_ok = mass_formula_holds(n, &tournaments)?;
    let classes = enumerate_switching_classes(n)?;
    let auts: Vec<usize> = classes
        .par_iter()
        .map(|g| Ok(g.iso_class_stats()?.class_aut_order))
        .collect::<Result<_>>()?;
    let class_mass: Rational = auts
        .iter()
        .map(|&a| Rational::new(factorial(n) as i128, a as i128))
        .sum();
    let class_mass_ok = class_mass == Rational::from_integer(1i128 << binomial(n - 1, 2));
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for a in auts {
        *hist.entry(a).or_default() += 1;
    }
    Ok(CensusReport {
        n,
        tournaments: tournaments.len(),
        switching_classes: classes.len(),
        aut_histogram: hist
            .into_iter()
            .map(|(order, count)| AutCount { order, count })
            .collect(),
        mass_formula_ok,
        class_mass_ok,
    })
}

/// `Σ n!/|Aut(T)| = 2^C(n,2)` over the given representatives.
pub fn mass_formula_holds(n: usize, reps: &[Tournament]) -> Result<bool> {
    let mut total: u128 = 0;
    for t in reps {
        let aut = t.automorphism_count()? as u128;
        if !factorial(n).is_multiple_of(aut) {
            return Ok(false);
        }
        total += factorial(n) / aut;
    }
    Ok(total == 1u128 << binomial(n, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tournament_counts() {
        let expected = [1usize, 1, 2, 4, 12, 56, 456];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            let reps = enumerate_tournaments(n).unwrap();
            assert_eq!(reps.len(), count, "n={n}");
            assert!(mass_formula_holds(n, &reps).unwrap());
            for t in &reps {
                assert_eq!(t.canonical_tournament().unwrap(), *t);
            }
        }
        assert!(enumerate_tournaments(0).is_err());
        assert!(enumerate_tournaments(10).is_err());
    }

    #[test]
    fn switching_class_examples() {
        assert_eq!(enumerate_switching_classes(3).unwrap().len(), 1);
        assert_eq!(enumerate_switching_classes(4).unwrap().len(), 2);
        assert!(enumerate_switching_classes(2).is_err());
    }

    #[test]
    fn class_enumeration_ignores_generation_order() {
        for n in 4..=6 {
            let forward: HashSet<Vec<u8>> = enumerate_switching_classes(n)
                .unwrap()
                .iter()
                .map(|g| g.canonical_form().unwrap())
                .collect();
            let mut reps = enumerate_tournaments(n).unwrap();
            reps.reverse();
            let backward: HashSet<Vec<u8>> = reps
                .iter()
                .map(|t| {
                    OrientedTwoGraph::from_tournament(&t.reverse())
                        .unwrap()
                        .canonical_form()
                        .unwrap()
                })
                .collect();
            assert_eq!(forward, backward);
        }
    }

    #[test]
    fn reports_check_identities() {
        for n in 3..=6 {
            let r = census_report(n).unwrap();
            assert!(r.mass_formula_ok && r.class_mass_ok, "{r:?}");
        }
        assert_eq!(census_report(4).unwrap().switching_classes, 2);
    }
}
