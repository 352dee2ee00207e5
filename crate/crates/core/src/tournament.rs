//! Tournaments on up to 32 labeled vertices, stored as out-neighbour rows.

use std::fmt;

use crate::canon::{canon_search, CanonResult, MAX_CANON};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 32;
/// Largest vertex count accepted by canonical labeling and automorphism search.
pub const MAX_CANON_VERTICES: usize = MAX_CANON;

/// Complete oriented graph; `out[v]` has bit `w` set iff `v -> w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: u8,
    out: [u32; MAX_VERTICES],
}

/// Result of [`Tournament::is_doubly_regular`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoublyRegular {
    pub doubly_regular: bool,
    pub out_degree: Option<usize>,
    pub common_out: Option<usize>,
}

#[inline]
pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl Tournament {
    fn empty(n: usize) -> Result<Self> {
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(Error::OutOfRange {
                what: "tournament order",
                value: n,
                range: "1..=32",
            });
        }
        Ok(Self {
            n: n as u8,
            out: [0; MAX_VERTICES],
        })
    }

    /// Builds a tournament from a predicate on pairs `i < j`: true means `i -> j`.
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut t = Self::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                if forward(i, j) {
                    t.out[i] |= 1 << j;
                } else {
                    t.out[j] |= 1 << i;
                }
            }
        }
        Ok(t)
    }

    /// Builds a tournament from its arcs; every pair must appear exactly once.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut t = Self::empty(n)?;
        for &(x, y) in arcs {
            t.check_vertex(x)?;
            t.check_vertex(y)?;
            if x == y {
                return Err(Error::Loop(x));
            }
            if (t.out[x] | t.out[y]) & ((1 << x) | (1 << y)) != 0 {
                return Err(Error::Parse(format!("pair {{{x},{y}}} oriented twice")));
            }
            t.out[x] |= 1 << y;
        }
        let expected = n * (n - 1) / 2;
        if arcs.len() != expected {
            return Err(Error::SizeMismatch {
                expected,
                actual: arcs.len(),
            });
        }
        Ok(t)
    }

    /// `0 -> 1 -> .. -> n-1` with `i -> j` for all `i < j`.
    pub fn transitive(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| true)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    fn all_mask(&self) -> u32 {
        if self.n() == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// True iff `x -> y`.
    #[inline]
    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.out[x] >> y & 1 == 1
    }

    /// `+1` if `x -> y`, `-1` if `y -> x`.
    pub fn edge_sign(&self, x: usize, y: usize) -> Result<i8> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::Loop(x));
        }
        Ok(if self.has_arc(x, y) { 1 } else { -1 })
    }

    #[inline]
    pub(crate) fn sign(&self, x: usize, y: usize) -> i8 {
        if self.has_arc(x, y) {
            1
        } else {
            -1
        }
    }

    #[inline]
    pub fn out_mask(&self, v: usize) -> u32 {
        self.out[v]
    }

    #[inline]
    pub fn in_mask(&self, v: usize) -> u32 {
        self.all_mask() & !self.out[v] & !(1 << v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.n() - 1 - self.out_degree(v)
    }

    /// Reverses every arc between `subset` (a vertex bitmask) and its complement.
    pub fn switch(&self, subset: u32) -> Tournament {
        let subset = subset & self.all_mask();
        let rest = self.all_mask() & !subset;
        let mut t = *self;
        for v in 0..self.n() {
            let across = if subset >> v & 1 == 1 { rest } else { subset };
            t.out[v] ^= across;
        }
        t
    }

    /// [`Tournament::switch`] with the subset given as a vertex list.
    pub fn switch_vertices(&self, subset: &[usize]) -> Result<Tournament> {
        let mut mask = 0u32;
        for &v in subset {
            self.check_vertex(v)?;
            mask |= 1 << v;
        }
        Ok(self.switch(mask))
    }

    /// Adds vertex `n` dominated by every existing vertex.
    pub fn augment(&self) -> Result<Tournament> {
        let n = self.n();
        if n >= MAX_VERTICES {
            return Err(Error::OutOfRange {
                what: "tournament order to augment",
                value: n,
                range: "1..=31",
            });
        }
        let mut t = *self;
        t.n += 1;
        for v in 0..n {
            t.out[v] |= 1 << n;
        }
        Ok(t)
    }

    /// Reverses every arc.
    pub fn reverse(&self) -> Tournament {
        self.switch_all_pairs()
    }

    fn switch_all_pairs(&self) -> Tournament {
        let mut t = *self;
        for v in 0..self.n() {
            t.out[v] = self.in_mask(v);
        }
        t
    }

    /// Subtournament on `s`, vertex `i` of the result being `s[i]`.
    pub fn induced(&self, s: &[usize]) -> Result<Tournament> {
        let mut t = Self::empty(s.len())?;
        let mut seen = 0u32;
        for &v in s {
            self.check_vertex(v)?;
            if seen >> v & 1 == 1 {
                return Err(Error::DuplicateVertex(v));
            }
            seen |= 1 << v;
        }
        for (i, &x) in s.iter().enumerate() {
            for (j, &y) in s.iter().enumerate() {
                if i != j && self.has_arc(x, y) {
                    t.out[i] |= 1 << j;
                }
            }
        }
        Ok(t)
    }

    /// Subtournament on all vertices except `v`, order preserved.
    pub fn delete_vertex(&self, v: usize) -> Result<Tournament> {
        let keep: Vec<usize> = (0..self.n()).filter(|&x| x != v).collect();
        self.check_vertex(v)?;
        self.induced(&keep)
    }

    /// Tournament with `sigma(x) -> sigma(y)` whenever `x -> y`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Tournament> {
        if sigma.len() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                actual: sigma.len(),
            });
        }
        let mut t = Self::empty(self.n())?;
        for x in 0..self.n() {
            let mut row = self.out[x];
            while row != 0 {
                let y = row.trailing_zeros() as usize;
                row &= row - 1;
                t.out[sigma.apply(x)] |= 1 << sigma.apply(y);
            }
        }
        Ok(t)
    }

    /// Pair-order bits `(0,1), (0,2), .., (n-2,n-1)`, bit 1 meaning `i -> j`.
    pub fn pair_bits(&self) -> Vec<bool> {
        let n = self.n();
        let mut bits = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                bits.push(self.has_arc(i, j));
            }
        }
        bits
    }

    /// Pair-order bits packed most-significant-bit first.
    pub fn to_bytes(&self) -> Vec<u8> {
        pack_bits(&self.pair_bits())
    }

    pub fn from_bytes(n: usize, bytes: &[u8]) -> Result<Tournament> {
        let m = n * n.saturating_sub(1) / 2;
        let bits = unpack_bits(bytes, m)?;
        let mut k = 0;
        Self::from_fn(n, |_, _| {
            k += 1;
            bits[k - 1]
        })
    }

    /// Pair-order bits as an integer, first pair most significant; `n <= 16`.
    pub fn pair_code(&self) -> u128 {
        debug_assert!(self.n() <= MAX_CANON);
        let mut code = 0u128;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                code = (code << 1) | self.has_arc(i, j) as u128;
            }
        }
        code
    }

    pub fn from_pair_code(n: usize, code: u128) -> Result<Tournament> {
        if n > MAX_CANON {
            return Err(Error::BudgetExceeded(n));
        }
        let m = n * n.saturating_sub(1) / 2;
        let mut k = m;
        Self::from_fn(n, |_, _| {
            k -= 1;
            code >> k & 1 == 1
        })
    }

    pub(crate) fn canon(&self) -> Result<CanonResult> {
        if self.n() > MAX_CANON {
            return Err(Error::BudgetExceeded(self.n()));
        }
        Ok(canon_search(self.n(), &self.out[..self.n()]))
    }

    /// Canonical pair-order code: the minimum of [`Tournament::pair_code`]
    /// over all relabelings.
    pub fn canonical_code(&self) -> Result<u128> {
        Ok(self.canon()?.code)
    }

    /// Canonical encoding packed into bytes like [`Tournament::to_bytes`].
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        Ok(self.canonical_tournament()?.to_bytes())
    }

    pub fn canonical_tournament(&self) -> Result<Tournament> {
        Tournament::from_pair_code(self.n(), self.canonical_code()?)
    }

    /// A permutation `sigma` with `relabel(self, sigma)` canonical.
    pub fn canonical_labeling(&self) -> Result<Permutation> {
        let res = self.canon()?;
        Ok(labeling_to_perm(self.n(), &res.labelings[0]))
    }

    pub fn is_isomorphic(&self, other: &Tournament) -> Result<bool> {
        Ok(self.n() == other.n() && self.canonical_code()? == other.canonical_code()?)
    }

    /// All automorphisms, sorted by image array.
    pub fn automorphism_group(&self) -> Result<Vec<Permutation>> {
        let res = self.canon()?;
        let n = self.n();
        let first = &res.labelings[0];
        let mut group: Vec<Permutation> = res
            .labelings
            .iter()
            .map(|lab| {
                let mut images = vec![0; n];
                for pos in 0..n {
                    images[lab[pos] as usize] = first[pos] as usize;
                }
                Permutation::new(images).expect("labelings are bijections")
            })
            .collect();
        group.sort();
        Ok(group)
    }

    pub fn automorphism_count(&self) -> Result<usize> {
        Ok(self.canon()?.labelings.len())
    }

    /// The numerically least vertex mask `X` with `v` not in `X` such that
    /// `v` has in-degree `target` in `self.switch(X)`.
    pub fn indegree_switch_witness(&self, v: usize, target: usize) -> Result<u32> {
        self.check_vertex(v)?;
        let n = self.n();
        if target >= n {
            return Err(Error::OutOfRange {
                what: "target in-degree",
                value: target,
                range: "0..n",
            });
        }
        let ins = self.in_mask(v);
        let outs = self.out[v];
        // Putting an out-neighbour into X raises the in-degree of v, an in-neighbour lowers it.
        let mut need = target as i64 - self.in_degree(v) as i64;
        let mut mask = 0u32;
        for j in (0..n).rev() {
            if j == v {
                continue;
            }
            let below = (1u32 << j) - 1;
            let low_in = (ins & below).count_ones() as i64;
            let low_out = (outs & below).count_ones() as i64;
            if -low_in <= need && need <= low_out {
                continue;
            }
            mask |= 1 << j;
            if outs >> j & 1 == 1 {
                need -= 1;
            } else {
                need += 1;
            }
        }
        debug_assert_eq!(need, 0);
        let switched = self.switch(mask);
        if switched.in_degree(v) != target {
            unreachable!("witness construction failed for v={v}, target={target}");
        }
        Ok(mask)
    }

    /// Checks equal out-degrees and equal common out-neighbourhood sizes.
    pub fn is_doubly_regular(&self) -> Result<DoublyRegular> {
        let n = self.n();
        if n < 3 {
            return Err(Error::OutOfRange {
                what: "tournament order",
                value: n,
                range: ">= 3",
            });
        }
        let no = DoublyRegular {
            doubly_regular: false,
            out_degree: None,
            common_out: None,
        };
        let d = self.out_degree(0);
        if (1..n).any(|v| self.out_degree(v) != d) {
            return Ok(no);
        }
        let c = (self.out[0] & self.out[1]).count_ones() as usize;
        for x in 0..n {
            for y in x + 1..n {
                if (self.out[x] & self.out[y]).count_ones() as usize != c {
                    return Ok(no);
                }
            }
        }
        debug_assert_eq!(2 * d, n - 1);
        debug_assert_eq!(4 * c, n - 3);
        Ok(DoublyRegular {
            doubly_regular: true,
            out_degree: Some(d),
            common_out: Some(c),
        })
    }
}

pub(crate) fn labeling_to_perm(n: usize, lab: &[u8]) -> Permutation {
    let mut images = vec![0; n];
    for pos in 0..n {
        images[lab[pos] as usize] = pos;
    }
    Permutation::new(images).expect("labelings are bijections")
}

pub(crate) fn pack_bits(bits: &[bool]) -> Vec<u8> {
    let mut bytes = vec![0u8; bits.len().div_ceil(8)];
    for (k, &b) in bits.iter().enumerate() {
        if b {
            bytes[k / 8] |= 0x80 >> (k % 8);
        }
    }
    bytes
}

pub(crate) fn unpack_bits(bytes: &[u8], m: usize) -> Result<Vec<bool>> {
    if bytes.len() != m.div_ceil(8) {
        return Err(Error::Parse(format!(
            "expected {} bytes for {m} bits, got {}",
            m.div_ceil(8),
            bytes.len()
        )));
    }
    let bits: Vec<bool> = (0..bytes.len() * 8)
        .map(|k| bytes[k / 8] & (0x80 >> (k % 8)) != 0)
        .collect();
    if bits[m..].iter().any(|&b| b) {
        return Err(Error::Parse("non-zero padding bits".into()));
    }
    Ok(bits[..m].to_vec())
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::codec::format_tournament(self))
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::codec::format_tournament(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::iterate_symmetric_group;
    use crate::Rational;

    fn three_cycle() -> Tournament {
        Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn all_tournaments(n: usize) -> impl Iterator<Item = Tournament> {
        let m = n * (n - 1) / 2;
        (0..1u128 << m).map(move |c| Tournament::from_pair_code(n, c).unwrap())
    }

    fn brute_aut_order(t: &Tournament) -> usize {
        iterate_symmetric_group(t.n())
            .unwrap()
            .filter(|s| t.relabel(s).unwrap() == *t)
            .count()
    }

    #[test]
    fn edge_sign_examples() {
        let t = three_cycle();
        assert_eq!(t.edge_sign(0, 1), Ok(1));
        assert_eq!(t.edge_sign(1, 0), Ok(-1));
        assert_eq!(t.edge_sign(0, 2), Ok(-1));
        assert!(t.edge_sign(1, 1).is_err());
        assert!(t.edge_sign(0, 3).is_err());
    }

    #[test]
    fn switch_examples() {
        let t = Tournament::transitive(3).unwrap();
        let s = t.switch_vertices(&[0]).unwrap();
        assert_eq!(
            s,
            Tournament::from_arcs(3, &[(1, 0), (2, 0), (1, 2)]).unwrap()
        );
        for t in all_tournaments(4) {
            assert_eq!(t.switch(0), t);
            assert_eq!(t.switch(0b1111), t);
        }
    }

    #[test]
    fn switching_is_an_equivalence_on_four_vertices() {
        for t in all_tournaments(4) {
            for x in 0..16u32 {
                assert_eq!(t.switch(x).switch(x), t);
                assert_eq!(t.switch(x), t.switch(!x & 0xf));
                for y in 0..16u32 {
                    assert_eq!(t.switch(x).switch(y), t.switch(x ^ y));
                }
            }
        }
    }

    #[test]
    fn switching_class_has_two_to_the_n_minus_one_members() {
        for n in 1..=5 {
            for t in all_tournaments(n) {
                let members: std::collections::HashSet<_> =
                    (0..1u32 << (n - 1)).map(|x| t.switch(x << 1)).collect();
                assert_eq!(members.len(), 1 << (n - 1));
            }
        }
    }

    #[test]
    fn augment_examples() {
        let a = three_cycle().augment().unwrap();
        assert_eq!(
            a,
            Tournament::from_arcs(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]).unwrap()
        );
        assert_eq!(
            Tournament::transitive(1).unwrap().augment().unwrap(),
            Tournament::from_arcs(2, &[(0, 1)]).unwrap()
        );
        for n in 1..=6 {
            for t in all_tournaments(n).take(2000) {
                let a = t.augment().unwrap();
                assert_eq!(a.induced(&(0..n).collect::<Vec<_>>()).unwrap(), t);
                assert_eq!(a.in_degree(n), n);
            }
        }
    }

    #[test]
    fn induced_examples() {
        let t = three_cycle();
        assert_eq!(t.induced(&[0, 1, 2]).unwrap(), t);
        assert_eq!(
            t.induced(&[0, 1]).unwrap(),
            Tournament::from_arcs(2, &[(0, 1)]).unwrap()
        );
        assert_eq!(t.induced(&[0, 0]), Err(Error::DuplicateVertex(0)));
        assert!(t.induced(&[0, 5]).is_err());
    }

    #[test]
    fn relabel_laws() {
        let t = three_cycle();
        assert_eq!(t.relabel(&Permutation::identity(3)).unwrap(), t);
        let two = Tournament::from_arcs(2, &[(0, 1)]).unwrap();
        let swap = Permutation::new(vec![1, 0]).unwrap();
        assert_eq!(
            two.relabel(&swap).unwrap(),
            Tournament::from_arcs(2, &[(1, 0)]).unwrap()
        );
        let perms: Vec<_> = iterate_symmetric_group(5).unwrap().collect();
        for (k, t) in all_tournaments(5).step_by(37).enumerate() {
            let s = &perms[(k * 7) % 120];
            let u = &perms[(k * 13 + 5) % 120];
            assert_eq!(
                t.relabel(s).unwrap().relabel(u).unwrap(),
                t.relabel(&u.compose(s)).unwrap()
            );
        }
        assert!(t.relabel(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn canonical_form_examples() {
        let tr = Tournament::transitive(3).unwrap();
        let forms: std::collections::HashSet<_> = iterate_symmetric_group(3)
            .unwrap()
            .map(|s| tr.relabel(&s).unwrap().canonical_form().unwrap())
            .collect();
        assert_eq!(forms.len(), 1);
        let c1 = three_cycle();
        let c2 = Tournament::from_arcs(3, &[(0, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(c1.canonical_form().unwrap(), c2.canonical_form().unwrap());
        assert_ne!(c1.canonical_form().unwrap(), tr.canonical_form().unwrap());
    }

    #[test]
    fn canonical_code_is_brute_force_minimum() {
        for n in 1..=5 {
            for t in all_tournaments(n) {
                let min = iterate_symmetric_group(n)
                    .unwrap()
                    .map(|s| t.relabel(&s).unwrap().pair_code())
                    .min()
                    .unwrap();
                assert_eq!(t.canonical_code().unwrap(), min);
                let lab = t.canonical_labeling().unwrap();
                assert_eq!(t.relabel(&lab).unwrap().pair_code(), min);
            }
        }
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(three_cycle().automorphism_group().unwrap().len(), 3);
        for n in 1..=6 {
            assert_eq!(
                Tournament::transitive(n)
                    .unwrap()
                    .automorphism_count()
                    .unwrap(),
                1
            );
        }
        for t in all_tournaments(5) {
            let group = t.automorphism_group().unwrap();
            assert_eq!(group.len(), brute_aut_order(&t));
            assert_eq!(group.len() % 2, 1);
            assert!(group.iter().any(Permutation::is_identity));
            for a in &group {
                assert_eq!(t.relabel(a).unwrap(), t);
                assert!(group.contains(&a.inverse()));
                for b in &group {
                    assert!(group.contains(&a.compose(b)));
                }
            }
        }
    }

    #[test]
    fn mass_formula_small_orders() {
        for n in 1..=6 {
            let mut reps = std::collections::HashMap::new();
            for t in all_tournaments(n) {
                reps.entry(t.canonical_code().unwrap()).or_insert(t);
            }
            let total: Rational = reps
                .values()
                .map(|t| {
                    Rational::new(
                        crate::factorial(n) as i128,
                        t.automorphism_count().unwrap() as i128,
                    )
                })
                .sum();
            assert_eq!(total, Rational::from_integer(1i128 << (n * (n - 1) / 2)));
        }
    }

    #[test]
    fn indegree_witness_examples() {
        let t = three_cycle();
        assert_eq!(t.indegree_switch_witness(0, 1).unwrap(), 0);
        assert_eq!(t.indegree_switch_witness(0, 2).unwrap(), 0b010);
        for t in all_tournaments(4) {
            for v in 0..4 {
                for i in 0..4 {
                    let x = t.indegree_switch_witness(v, i).unwrap();
                    assert_eq!(x >> v & 1, 0);
                    assert_eq!(t.switch(x).in_degree(v), i);
                    let least = (0..16u32)
                        .filter(|m| m >> v & 1 == 0)
                        .find(|&m| t.switch(m).in_degree(v) == i);
                    assert_eq!(Some(x), least);
                }
            }
        }
        assert!(t.indegree_switch_witness(0, 3).is_err());
    }

    #[test]
    fn doubly_regular_rejects_transitive() {
        let r = Tournament::transitive(3)
            .unwrap()
            .is_doubly_regular()
            .unwrap();
        assert!(!r.doubly_regular);
        assert_eq!(r.out_degree, None);
        assert!(three_cycle().is_doubly_regular().unwrap().doubly_regular);
    }

    #[test]
    fn byte_round_trip() {
        let t = three_cycle();
        assert_eq!(t.to_bytes(), vec![0xa0]);
        assert_eq!(Tournament::from_bytes(3, &[0xa0]).unwrap(), t);
        assert!(Tournament::from_bytes(3, &[0xa1]).is_err());
    }
}
