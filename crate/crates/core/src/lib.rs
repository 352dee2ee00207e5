//! Tournament switching, oriented two-graphs and 3-tournaments, with the
//! constructions and exhaustive checks used to bound Turán densities of the
//! r-triangle (the r-graph on r+1 vertices with three edges).
//!
//! Module map:
//! - [`perm`]: permutations and their cycle statistics.
//! - [`tournament`]: tournaments, switching, canonical forms, automorphisms.
//! - [`twograph`]: oriented two-graphs and switching-class statistics.
//! - [`census`]: isomorph-free generation of tournaments and switching classes.
//! - [`special`]: special two-graphs and the density lower bounds they give.
//! - [`paley`]: quadratic characters, Paley tournaments, the projective model.
//! - [`turan`]: pattern hypergraphs and their extremal checks.
//! - [`fourier`]: admissible functions and the uniqueness search.
//! - [`tri`]: 3-tournaments switched by two-graphs, level-permutation counts.
//! - [`codec`], [`report`]: line formats and verification reports.

pub mod census;
pub mod codec;
pub mod error;
pub mod fixtures;
pub mod fourier;
pub mod paley;
pub mod perm;
pub mod report;
pub mod special;
pub mod subsets;
pub mod tournament;
pub mod tri;
pub mod triples;
pub mod turan;
pub mod twograph;

mod canon;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use tournament::Tournament;
pub use turan::Hypergraph;
pub use twograph::OrientedTwoGraph;

/// Exact rational used by every counting identity.
pub type Rational = num_rational::Ratio<i128>;

/// Renders a rational as `num/den`, keeping the denominator even when it is 1.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `n!`.
pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
