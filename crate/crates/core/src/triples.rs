//! Alternating ±1 functions on triples, stored on sorted triples.
//!
//! Shared storage for oriented two-graphs and 3-tournaments. Triples
//! `i < j < k` are indexed lexicographically; bit 1 means `+1`. The value on
//! an unsorted triple is the stored value times the parity of the sorting
//! permutation.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tournament::{pack_bits, unpack_bits, Tournament, MAX_CANON_VERTICES};

/// Largest vertex count for triple-sign functions.
pub const MAX_TRIPLE_VERTICES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleSigns {
    n: u8,
    bits: Vec<u64>,
}

/// Lexicographic index of the sorted triple `i < j < k` among `C(n, 3)`.
#[inline]
pub fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < n);
    // Triples whose smallest element is below i.
    let before = crate::binomial(n, 3) as usize - crate::binomial(n - i, 3) as usize;
    let m = n - i - 1;
    let (a, b) = (j - i - 1, k - i - 1);
    before + a * (2 * m - a - 1) / 2 + (b - a - 1)
}

/// Sorts three distinct vertices, returning the sorted triple and the parity
/// of the sorting permutation (`true` when odd).
#[inline]
pub(crate) fn sort3(x: usize, y: usize, z: usize) -> ([usize; 3], bool) {
    let mut t = [x, y, z];
    let mut odd = false;
    if t[0] > t[1] {
        t.swap(0, 1);
        odd = !odd;
    }
    if t[1] > t[2] {
        t.swap(1, 2);
        odd = !odd;
    }
    if t[0] > t[1] {
        t.swap(0, 1);
        odd = !odd;
    }
    (t, odd)
}

pub(crate) struct TripleCanon {
    pub code: Vec<u8>,
    /// `labelings[i][pos]` is the original vertex placed at `pos`.
    pub labelings: Vec<Vec<usize>>,
}

impl TripleSigns {
    /// All stored signs equal to `+1` when `plus`, else `-1`.
    pub fn constant(n: usize, plus: bool) -> Result<Self> {
        if n > MAX_TRIPLE_VERTICES {
            return Err(Error::OutOfRange {
                what: "vertex count",
                value: n,
                range: "0..=32",
            });
        }
        let m = crate::binomial(n, 3) as usize;
        let mut bits = vec![if plus { u64::MAX } else { 0 }; m.div_ceil(64)];
        if plus && !m.is_multiple_of(64) {
            *bits.last_mut().unwrap() = (1u64 << (m % 64)) - 1;
        }
        Ok(Self { n: n as u8, bits })
    }

    /// Builds from a predicate on sorted triples; true means `+1`.
    pub fn from_fn(n: usize, mut plus: impl FnMut(usize, usize, usize) -> bool) -> Result<Self> {
        let mut s = Self::constant(n, false)?;
        let mut t = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if plus(i, j, k) {
                        s.bits[t / 64] |= 1 << (t % 64);
                    }
                    t += 1;
                }
            }
        }
        Ok(s)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Number of stored triples, `C(n, 3)`.
    pub fn triple_count(&self) -> usize {
        crate::binomial(self.n(), 3) as usize
    }

    #[inline]
    pub(crate) fn bit(&self, t: usize) -> bool {
        self.bits[t / 64] >> (t % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn flip_bit(&mut self, t: usize) {
        self.bits[t / 64] ^= 1 << (t % 64);
    }

    /// Stored value on the sorted triple `i < j < k`.
    #[inline]
    pub fn sorted_plus(&self, i: usize, j: usize, k: usize) -> bool {
        self.bit(triple_index(self.n(), i, j, k))
    }

    /// Value on the ordered triple `(x, y, z)` of distinct vertices.
    #[inline]
    pub fn sign(&self, x: usize, y: usize, z: usize) -> i8 {
        let ([i, j, k], odd) = sort3(x, y, z);
        if self.sorted_plus(i, j, k) != odd {
            1
        } else {
            -1
        }
    }

    pub fn checked_sign(&self, x: usize, y: usize, z: usize) -> Result<i8> {
        for v in [x, y, z] {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n(),
                });
            }
        }
        if x == y || y == z || x == z {
            return Err(Error::DuplicateVertex(if x == y { x } else { z }));
        }
        Ok(self.sign(x, y, z))
    }

    pub fn set_sorted(&mut self, i: usize, j: usize, k: usize, plus: bool) {
        let t = triple_index(self.n(), i, j, k);
        if self.bit(t) != plus {
            self.flip_bit(t);
        }
    }

    /// Sign bits in lexicographic triple order.
    pub fn bits(&self) -> Vec<bool> {
        (0..self.triple_count()).map(|t| self.bit(t)).collect()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        pack_bits(&self.bits())
    }

    pub fn from_bytes(n: usize, bytes: &[u8]) -> Result<Self> {
        let bits = unpack_bits(bytes, crate::binomial(n, 3) as usize)?;
        let mut t = 0;
        Self::from_fn(n, |_, _, _| {
            t += 1;
            bits[t - 1]
        })
    }

    /// Product `g(x,y,z) g(y,x,w) g(z,y,w) g(x,z,w)` for distinct vertices.
    #[inline]
    pub fn four_point_product(&self, x: usize, y: usize, z: usize, w: usize) -> i8 {
        self.sign(x, y, z) * self.sign(y, x, w) * self.sign(z, y, w) * self.sign(x, z, w)
    }

    /// New function with `new(σx, σy, σz) = old(x, y, z)`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.len() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                actual: sigma.len(),
            });
        }
        let inv = sigma.inverse();
        Self::from_fn(self.n(), |i, j, k| {
            self.sign(inv.apply(i), inv.apply(j), inv.apply(k)) == 1
        })
    }

    /// Restriction to the ordered vertex list `w`: `new(i,j,k) = old(w[i],w[j],w[k])`.
    pub fn restrict(&self, w: &[usize]) -> Result<Self> {
        let mut seen = 0u64;
        for &v in w {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n(),
                });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::DuplicateVertex(v));
            }
            seen |= 1 << v;
        }
        Self::from_fn(w.len(), |i, j, k| self.sign(w[i], w[j], w[k]) == 1)
    }

    /// Negates every value.
    pub fn negate(&self) -> Self {
        let mut s = self.clone();
        for t in 0..s.triple_count() {
            s.flip_bit(t);
        }
        s
    }

    /// Tournament on the other vertices with `x -> y` iff `g(v, x, y) = +1`;
    /// returns it with the vertex list it is indexed by.
    pub(crate) fn link(&self, v: usize) -> (Tournament, Vec<usize>) {
        let others: Vec<usize> = (0..self.n()).filter(|&x| x != v).collect();
        let t = Tournament::from_fn(others.len(), |a, b| self.sign(v, others[a], others[b]) == 1)
            .expect("link order within range");
        (t, others)
    }

    /// Encoding after placing `order[pos]` at position `pos`.
    fn code_under(&self, order: &[usize]) -> Vec<u8> {
        let n = self.n();
        let mut bits = Vec::with_capacity(self.triple_count());
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    bits.push(self.sign(order[a], order[b], order[c]) == 1);
                }
            }
        }
        pack_bits(&bits)
    }

    /// Lexicographically least encoding over all relabelings, with every
    /// labeling that attains it.
    ///
    /// The first `C(n-1, 2)` bits of the encoding are the pair code of the
    /// link of the vertex at position 0, so the search only places link
    /// minimizers there; a vertex whose link has a smaller top in-degree
    /// cannot start a minimal code and is skipped before canonicalizing.
    pub(crate) fn canon(&self) -> Result<TripleCanon> {
        let n = self.n();
        if n > MAX_CANON_VERTICES + 1 {
            return Err(Error::BudgetExceeded(n));
        }
        if n < 3 {
            let labelings = if n == 2 {
                vec![vec![0, 1], vec![1, 0]]
            } else {
                vec![(0..n).collect()]
            };
            return Ok(TripleCanon {
                code: Vec::new(),
                labelings,
            });
        }
        // Top in-degree of each vertex's link, from signed triple sums.
        let top_in: Vec<usize> = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&x| x != v)
                    .map(|x| {
                        let sum: i32 = (0..n)
                            .filter(|&y| y != v && y != x)
                            .map(|y| self.sign(v, y, x) as i32)
                            .sum();
                        ((n as i32 - 2 + sum) / 2) as usize
                    })
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let best_top = *top_in.iter().max().unwrap();

        let mut best_link: Option<u128> = None;
        let mut starts: Vec<(usize, Vec<usize>, Vec<[u8; MAX_CANON_VERTICES]>)> = Vec::new();
        for v in (0..n).filter(|&v| top_in[v] == best_top) {
            let (link, others) = self.link(v);
            let res = link.canon()?;
            match best_link {
                Some(b) if res.code > b => continue,
                Some(b) if res.code == b => {}
                _ => {
                    best_link = Some(res.code);
                    starts.clear();
                }
            }
            starts.push((v, others, res.labelings));
        }

        let mut best: Option<Vec<u8>> = None;
        let mut labelings = Vec::new();
        for (v, others, labs) in starts {
            for lab in labs {
                let order: Vec<usize> = std::iter::once(v)
                    .chain(lab[..n - 1].iter().map(|&a| others[a as usize]))
                    .collect();
                let code = self.code_under(&order);
                match &best {
                    Some(b) if &code > b => continue,
                    Some(b) if &code == b => labelings.push(order),
                    _ => {
                        best = Some(code);
                        labelings.clear();
                        labelings.push(order);
                    }
                }
            }
        }
        Ok(TripleCanon {
            code: best.expect("at least one start vertex"),
            labelings,
        })
    }

    pub(crate) fn canonical_code(&self) -> Result<Vec<u8>> {
        Ok(self.canon()?.code)
    }

    /// Permutations preserving every value, sorted.
    pub(crate) fn automorphisms(&self) -> Result<Vec<Permutation>> {
        let res = self.canon()?;
        let n = self.n();
        let first = &res.labelings[0];
        let mut group: Vec<Permutation> = res
            .labelings
            .iter()
            .map(|order| {
                let mut images = vec![0; n];
                for pos in 0..n {
                    images[order[pos]] = first[pos];
                }
                Permutation::new(images).expect("labelings are bijections")
            })
            .collect();
        group.sort();
        Ok(group)
    }

    pub(crate) fn canonical_labeling(&self) -> Result<Permutation> {
        let res = self.canon()?;
        let mut images = vec![0; self.n()];
        for (pos, &v) in res.labelings[0].iter().enumerate() {
            images[v] = pos;
        }
        Permutation::new(images)
    }
}
