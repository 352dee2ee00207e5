//! Uniform hypergraphs built from two-graph patterns, and the checks behind
//! the Turán bounds: r-triangle freeness, the de Caen bound, span profiles
//! and design parameters.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::AdmissibleFunction;
use crate::paley::{paley_two_graph, tournament_from_function};
use crate::perm::Permutation;
use crate::subsets::{combinations, mask_of};
use crate::twograph::OrientedTwoGraph;
use crate::{binomial, Rational};

/// Largest vertex count; edges are handled as `u64` masks.
pub const MAX_HYPERGRAPH_VERTICES: usize = 64;

/// r-uniform hypergraph on `0..n` with sorted edges in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::new(raw.n, raw.r, raw.edges)
    }
}

impl Hypergraph {
    /// Sorts each edge and the edge list; rejects repeated edges, wrong sizes
    /// and out-of-range vertices.
    pub fn new(n: usize, r: usize, mut edges: Vec<Vec<usize>>) -> Result<Self> {
        if n > MAX_HYPERGRAPH_VERTICES || r == 0 || r > n {
            return Err(Error::InvalidHypergraph(format!("n = {n}, r = {r}")));
        }
        for e in &mut edges {
            e.sort_unstable();
            if e.len() != r {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} does not have {r} vertices"
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) || e[r - 1] >= n {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} is not an {r}-subset of 0..{n}"
                )));
            }
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph(format!(
                "repeated edge {:?}",
                w[0]
            )));
        }
        Ok(Self { n, r, edges })
    }

    pub fn complete(n: usize, r: usize) -> Result<Self> {
        Self::new(n, r, combinations(n, r).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn edge_masks(&self) -> HashSet<u64> {
        self.edges.iter().map(|e| mask_of(e)).collect()
    }

    /// Image under `σ`: edge `e` becomes `σ(e)`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                actual: sigma.len(),
            });
        }
        Self::new(
            self.n,
            self.r,
            self.edges
                .iter()
                .map(|e| e.iter().map(|&v| sigma.apply(v)).collect())
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Triple-sign bits of `big` on the sorted set `a`, packed into an integer.
fn restriction_code(big: &OrientedTwoGraph, a: &[usize]) -> u128 {
    let s = big.signs();
    let mut code = 0u128;
    for x in 0..a.len() {
        for y in x + 1..a.len() {
            for z in y + 1..a.len() {
                code = (code << 1) | s.sorted_plus(a[x], a[y], a[z]) as u128;
            }
        }
    }
    code
}

/// The `r`-subsets `A` of the vertices of `big` with `big|_A ≅ pattern`, where
/// `r` is the order of `pattern`.
pub fn pattern_hypergraph(
    big: &OrientedTwoGraph,
    pattern: &OrientedTwoGraph,
) -> Result<Hypergraph> {
    let (n, r) = (big.n(), pattern.n());
    if r < 3 || r > n {
        return Err(Error::OutOfRange {
            what: "pattern order",
            value: r,
            range: "3..=n",
        });
    }
    if r > 10 || n > MAX_HYPERGRAPH_VERTICES {
        return Err(Error::BudgetExceeded(r.max(n)));
    }
    let target = pattern.canonical_form()?;
    let mut memo: HashMap<u128, bool> = HashMap::new();
    let mut edges = Vec::new();
    let mut cursor = combinations(n, r);
    while cursor.advance() {
        let a = cursor.current();
        let code = restriction_code(big, a);
        let hit = match memo.get(&code) {
            Some(&h) => h,
            None => {
                let h = big.restriction(a)?.canonical_form()? == target;
                memo.insert(code, h);
                h
            }
        };
        if hit {
            edges.push(a.to_vec());
        }
    }
    Hypergraph::new(n, r, edges)
}

/// `H_f`: 4-sets of the augmented tournament of `f` whose two-graph
/// restriction is isomorphic to the Paley two-graph on 4 vertices.
pub fn hypergraph_from_admissible(f: &AdmissibleFunction) -> Result<Hypergraph> {
    let big = OrientedTwoGraph::from_tournament(&tournament_from_function(f)?.augment()?)?;
    pattern_hypergraph(&big, &paley_two_graph(3)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleCheck {
    pub free: bool,
    /// Lexicographically first `(r+1)`-set spanning three or more edges.
    pub witness: Option<Vec<usize>>,
}

/// Checks that no `(r+1)`-set contains more than two edges.
pub fn triangle_free_check(h: &Hypergraph) -> TriangleCheck {
    let masks = h.edge_masks();
    let mut cursor = combinations(h.n, h.r + 1);
    while cursor.advance() {
        let s = cursor.current();
        let m = mask_of(s);
        let inside = s
            .iter()
            .filter(|&&v| masks.contains(&(m & !(1 << v))))
            .count();
        if inside >= 3 {
            return TriangleCheck {
                free: false,
                witness: Some(s.to_vec()),
            };
        }
    }
    TriangleCheck {
        free: true,
        witness: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeCaen {
    pub edge_count: usize,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub bound: Rational,
    pub tight: bool,
    /// Every `(r-1)`-set lies in exactly `n/r` edges.
    pub design_ok: bool,
}

/// Compares the edge count with `(n / r²) C(n, r-1)`.
pub fn decaen_check(h: &Hypergraph) -> DeCaen {
    let (n, r) = (h.n, h.r);
    let bound = Rational::new(n as i128 * binomial(n, r - 1) as i128, (r * r) as i128);
    let edge_count = h.edge_count();
    let tight = Rational::from_integer(edge_count as i128) == bound;
    let design_ok =
        n % r == 0 && r >= 2 && design_parameters(h, r - 1).ok().flatten() == Some(n / r);
    DeCaen {
        edge_count,
        bound,
        tight,
        design_ok,
    }
}

/// Histogram over all `k`-sets of the number of edges each contains.
pub fn span_profile(h: &Hypergraph, k: usize) -> Result<BTreeMap<usize, u64>> {
    if k < h.r || k > h.n {
        return Err(Error::OutOfRange {
            what: "span size",
            value: k,
            range: "r..=n",
        });
    }
    let masks = h.edge_masks();
    let edge_list: Vec<u64> = h.edges.iter().map(|e| mask_of(e)).collect();
    let by_subsets = binomial(k, h.r) as usize <= edge_list.len();
    let mut hist = BTreeMap::new();
    let mut cursor = combinations(h.n, k);
    while cursor.advance() {
        let s = cursor.current();
        let m = mask_of(s);
        let count = if by_subsets {
            combinations(k, h.r)
                .filter(|sub| masks.contains(&sub.iter().fold(0, |a, &i| a | 1 << s[i])))
                .count()
        } else {
            edge_list.iter().filter(|&&e| e & m == e).count()
        };
        *hist.entry(count).or_insert(0) += 1;
    }
    Ok(hist)
}

/// `λ` when every `t`-set lies in exactly `λ` edges.
pub fn design_parameters(h: &Hypergraph, t: usize) -> Result<Option<usize>> {
    if t == 0 || t >= h.r {
        return Err(Error::OutOfRange {
            what: "design strength",
            value: t,
            range: "1..r",
        });
    }
    let mut counts: HashMap<u64, usize> = HashMap::new();
    for e in &h.edges {
        for sub in combinations(h.r, t) {
            *counts
                .entry(sub.iter().fold(0, |a, &i| a | 1 << e[i]))
                .or_insert(0) += 1;
        }
    }
    if counts.is_empty() {
        return Ok(Some(0));
    }
    if counts.len() as u128 != binomial(h.n, t) {
        return Ok(None);
    }
    let lambda = *counts.values().next().expect("non-empty");
    Ok(counts.values().all(|&c| c == lambda).then_some(lambda))
}
