//! 3-tournaments, their switching by two-graphs, the coherent 4-sets `H(g)`,
//! and counting isomorphism classes in a switching class via level
//! permutations.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{iterate_symmetric_group, Permutation};
use crate::subsets::{combinations, mask_of};
use crate::triples::TripleSigns;
use crate::turan::Hypergraph;
use crate::twograph::OrientedTwoGraph;
use crate::{binomial, Rational};

/// Alternating `±1` function on triples, with no four-point condition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThreeTournament {
    signs: TripleSigns,
}

/// 3-graph in which every 4-set contains an even number of members.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoGraph {
    members: TripleSigns,
}

impl ThreeTournament {
    pub fn from_signs(signs: TripleSigns) -> Self {
        Self { signs }
    }

    pub fn from_two_graph(g: &OrientedTwoGraph) -> Self {
        Self {
            signs: g.signs().clone(),
        }
    }

    /// Uniformly random signs on the sorted triples.
    pub fn random(n: usize, rng: &mut impl Rng) -> Result<Self> {
        Ok(Self {
            signs: TripleSigns::from_fn(n, |_, _, _| rng.gen())?,
        })
    }

    pub fn n(&self) -> usize {
        self.signs.n()
    }

    pub fn signs(&self) -> &TripleSigns {
        &self.signs
    }

    pub fn sign(&self, x: usize, y: usize, z: usize) -> Result<i8> {
        self.signs.checked_sign(x, y, z)
    }

    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        Ok(Self {
            signs: self.signs.relabel(sigma)?,
        })
    }

    /// Least sign encoding over all relabelings.
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        self.signs.canonical_code()
    }

    /// Number of sign-preserving permutations.
    pub fn automorphism_count(&self) -> Result<usize> {
        Ok(self.signs.canon()?.labelings.len())
    }
}

impl TwoGraph {
    /// Checks the even-intersection condition.
    pub fn from_members(members: TripleSigns) -> Result<Self> {
        match odd_quadruple(&members) {
            Some(q) => Err(Error::InvalidSwitchingSet(q)),
            None => Ok(Self { members }),
        }
    }

    /// Triples containing an odd number of edges of the graph `edge`.
    pub fn from_graph(n: usize, edge: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let members = TripleSigns::from_fn(n, |i, j, k| edge(i, j) ^ edge(j, k) ^ edge(i, k))?;
        Ok(Self { members })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Ok(Self {
            members: TripleSigns::constant(n, false)?,
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self {
            members: TripleSigns::constant(n, true)?,
        })
    }

    pub fn n(&self) -> usize {
        self.members.n()
    }

    /// Membership bits in lexicographic triple order.
    pub fn members(&self) -> &TripleSigns {
        &self.members
    }

    pub fn contains(&self, i: usize, j: usize, k: usize) -> bool {
        let (t, _) = crate::triples::sort3(i, j, k);
        self.members.sorted_plus(t[0], t[1], t[2])
    }
}

fn odd_quadruple(members: &TripleSigns) -> Option<[usize; 4]> {
    let mut cursor = combinations(members.n(), 4);
    while cursor.advance() {
        let q = cursor.current();
        let faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
            .iter()
            .filter(|&&(a, b, c)| members.sorted_plus(q[a], q[b], q[c]))
            .count();
        if faces % 2 == 1 {
            return Some([q[0], q[1], q[2], q[3]]);
        }
    }
    None
}

/// Parity condition on every 4-set.
pub fn validate_two_graph(members: &TripleSigns) -> bool {
    odd_quadruple(members).is_none()
}

/// All `2^C(n-1,2)` two-graphs on `n` vertices: the odd triples of each graph
/// on `1..n` with vertex 0 isolated, in counter order (bit `k` of the counter
/// is the `k`-th pair of `1..n` in lexicographic order).
pub fn enumerate_two_graphs(n: usize) -> Result<Vec<TwoGraph>> {
    if !(3..=7).contains(&n) {
        return Err(Error::OutOfRange {
            what: "two-graph order",
            value: n,
            range: "3..=7",
        });
    }
    let m = n - 1;
    let pair = |i: usize, j: usize| crate::tournament::pair_index(m, i - 1, j - 1);
    (0..1u64 << binomial(m, 2))
        .map(|c| TwoGraph::from_graph(n, |i, j| i > 0 && c >> pair(i, j) & 1 == 1))
        .collect()
}

/// `g^X`: sign kept on triples of `X`, negated elsewhere.
pub fn switch3(g: &ThreeTournament, x: &TwoGraph) -> Result<ThreeTournament> {
    if g.n() != x.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            actual: x.n(),
        });
    }
    let signs = TripleSigns::from_fn(g.n(), |i, j, k| {
        g.signs.sorted_plus(i, j, k) == x.members.sorted_plus(i, j, k)
    })?;
    Ok(ThreeTournament { signs })
}

/// `H(g)`: 4-sets on which the four-point product is `+1`.
pub fn coherent_quadruples(g: &ThreeTournament) -> Result<Hypergraph> {
    if g.n() < 4 {
        return Err(Error::OutOfRange {
            what: "3-tournament order",
            value: g.n(),
            range: ">= 4",
        });
    }
    let edges = combinations(g.n(), 4)
        .filter(|q| g.signs.four_point_product(q[0], q[1], q[2], q[3]) == 1)
        .collect();
    Hypergraph::new(g.n(), 4, edges)
}

/// `Aut(H(g))`, by testing every permutation, in lexicographic order.
pub fn tri_aut_group(g: &ThreeTournament) -> Result<Vec<Permutation>> {
    if g.n() > 8 {
        return Err(Error::BudgetExceeded(g.n()));
    }
    if g.n() < 4 {
        // No 4-sets, so every permutation preserves H(g).
        return Ok(iterate_symmetric_group(g.n().max(1))?.collect());
    }
    let h = coherent_quadruples(g)?;
    let masks: std::collections::HashSet<u64> = h.edges().iter().map(|e| mask_of(e)).collect();
    Ok(iterate_symmetric_group(g.n())?
        .filter(|s| {
            h.edges()
                .iter()
                .all(|e| masks.contains(&e.iter().fold(0, |m, &v| m | 1 << s.apply(v))))
        })
        .collect())
}

/// `(1/|Aut(C)|) Σ_{σ level} 2^(orb₂(σ) - orb(σ) + δ(σ))`.
pub fn count_tri_iso_classes(g: &ThreeTournament) -> Result<usize> {
    let group = tri_aut_group(g)?;
    let total: u128 = group
        .iter()
        .filter(|s| s.is_level())
        .map(|s| {
            let st = s.orbit_stats();
            1u128 << (st.orb2 + st.delta - st.orb)
        })
        .sum();
    assert_eq!(
        total % group.len() as u128,
        0,
        "orbit count is not an integer"
    );
    Ok((total / group.len() as u128) as usize)
}

/// Isomorphism classes of the switching class of `g`, by materializing it.
#[derive(Clone, Debug)]
pub struct TriCount {
    pub count: usize,
    /// Canonical representative and automorphism count per class, sorted by
    /// canonical encoding.
    pub reps: Vec<(ThreeTournament, usize)>,
}

impl TriCount {
    pub fn aut_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.reps.iter().map(|r| r.1).collect();
        v.sort_unstable();
        v
    }
}

/// The switching class `{g^X}`.
pub fn switching_class(g: &ThreeTournament) -> Result<Vec<ThreeTournament>> {
    enumerate_two_graphs(g.n())?
        .iter()
        .map(|x| switch3(g, x))
        .collect()
}

/// Groups the class members by canonical form and checks
/// `Σ 1/|Aut(g_i)| = 2^C(n-1,2) / |Aut(C)|`.
pub fn brute_force_tri_count(g: &ThreeTournament) -> Result<TriCount> {
    let n = g.n();
    if !(4..=5).contains(&n) {
        return Err(Error::OutOfRange {
            what: "3-tournament order",
            value: n,
            range: "4..=5",
        });
    }
    let mut classes: BTreeMap<Vec<u8>, ThreeTournament> = BTreeMap::new();
    for h in switching_class(g)? {
        let code = h.canonical_form()?;
        classes.entry(code).or_insert(h);
    }
    let reps = classes
        .into_values()
        .map(|h| {
            let lab = h.signs.canonical_labeling()?;
            let c = h.relabel(&lab)?;
            let aut = c.automorphism_count()?;
            Ok((c, aut))
        })
        .collect::<Result<Vec<_>>>()?;
    let group = tri_aut_group(g)?.len();
    let lhs: Rational = reps.iter().map(|r| Rational::new(1, r.1 as i128)).sum();
    assert_eq!(
        lhs,
        Rational::new(1i128 << binomial(n - 1, 2), group as i128),
        "automorphism sum identity failed"
    );
    Ok(TriCount {
        count: reps.len(),
        reps,
    })
}

/// Number of class members `h` with `relabel(h, σ) = h`.
pub fn fixed_members(g: &ThreeTournament, sigma: &Permutation) -> Result<usize> {
    let mut fixed = 0;
    for h in switching_class(g)? {
        if h.relabel(sigma)? == h {
            fixed += 1;
        }
    }
    Ok(fixed)
}

/// A 3-tournament on 5 vertices whose incoherent 4-sets are `{0,1,2,3}` and
/// `{0,1,2,4}`: the two-graph of the transitive tournament with the sign of
/// `{0,1,2}` flipped. `Aut(H(g))` is `Sym{0,1,2} × Sym{3,4}`.
pub fn worked_example() -> ThreeTournament {
    let t = crate::tournament::Tournament::transitive(5).expect("small order");
    let mut signs = OrientedTwoGraph::from_tournament(&t)
        .expect("small order")
        .into_signs();
    signs.flip_bit(0);
    ThreeTournament { signs }
}

impl std::fmt::Debug for ThreeTournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::codec::format_three_tournament(self))
    }
}

impl std::fmt::Display for ThreeTournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::codec::format_three_tournament(self))
    }
}

impl std::fmt::Debug for TwoGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::codec::format_switching_set(self))
    }
}

impl std::fmt::Display for TwoGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::codec::format_switching_set(self))
    }
}
