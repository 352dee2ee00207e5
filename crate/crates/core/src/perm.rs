//! Permutations of `{0..n-1}` with the cycle statistics used by the
//! orbit-counting formulas.

use std::fmt;

use itertools::Itertools;
use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection on `{0..n-1}`; `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Cycle counts used by the 3-tournament counting formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitStats {
    /// Number of cycles (fixed points included).
    pub orb: usize,
    /// Number of orbits of `<σ>` on unordered pairs of distinct points.
    pub orb2: usize,
    /// 0 if every cycle has even length, else 1.
    pub delta: usize,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for {n} points"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation on `n` points from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} out of range for {n} points"
                    )));
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} in two cycles"
                    )));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different degree"
        );
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Cycles sorted by their minimum element, each starting at its minimum.
    pub fn cycle_decomposition(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycle_decomposition().iter().map(Vec::len).collect()
    }

    /// Order of the permutation (lcm of the cycle lengths).
    pub fn order(&self) -> usize {
        self.cycle_lengths()
            .into_iter()
            .fold(1, |acc, l| acc.lcm(&l))
    }

    /// True iff all cycle lengths have the same 2-adic valuation.
    pub fn is_level(&self) -> bool {
        self.cycle_lengths()
            .into_iter()
            .map(usize::trailing_zeros)
            .all_equal()
    }

    /// Cycle statistics; `orb2` comes from cycle-length arithmetic:
    /// `⌊l/2⌋` pair orbits inside a cycle of length `l`, `gcd(a, b)` between
    /// cycles of lengths `a` and `b`.
    pub fn orbit_stats(&self) -> OrbitStats {
        let lengths = self.cycle_lengths();
        let inside: usize = lengths.iter().map(|l| l / 2).sum();
        let between: usize = lengths
            .iter()
            .tuple_combinations()
            .map(|(a, b)| a.gcd(b))
            .sum();
        OrbitStats {
            orb: lengths.len(),
            orb2: inside + between,
            delta: usize::from(lengths.iter().any(|l| l % 2 == 1)),
        }
    }

    /// `orb2` by direct union of pairs with their images; independent check
    /// for [`Permutation::orbit_stats`].
    pub fn pair_orbits_brute_force(&self) -> usize {
        let n = self.len();
        let index = |a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            a * n + b
        };
        let mut parent: Vec<usize> = (0..n * n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in 0..n {
            for b in a + 1..n {
                let u = find(&mut parent, index(a, b));
                let v = find(&mut parent, index(self.images[a], self.images[b]));
                parent[u] = v;
            }
        }
        let mut roots = std::collections::HashSet::new();
        for a in 0..n {
            for b in a + 1..n {
                roots.insert(find(&mut parent, index(a, b)));
            }
        }
        roots.len()
    }

    /// Sign of the permutation as ±1.
    pub fn sign(&self) -> i8 {
        let transpositions: usize = self.cycle_lengths().iter().map(|l| l - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// All `n!` permutations of `{0..n-1}`, lexicographic on image arrays.
pub fn iterate_symmetric_group(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    if !(1..=10).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            range: "1..=10",
        });
    }
    Ok((0..n).permutations(n).map(|images| Permutation { images }))
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self
            .cycle_decomposition()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().join(" "))?;
        }
        Ok(())
    }
}
