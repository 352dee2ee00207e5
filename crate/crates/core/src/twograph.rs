//! Oriented two-graphs, their correspondence with switching classes of
//! tournaments, and class statistics.

use std::collections::BTreeMap;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tournament::Tournament;
use crate::triples::TripleSigns;
use crate::{binomial, factorial, Rational};

/// Alternating ±1 function on triples satisfying the four-point identity
/// `g(x,y,z) g(y,x,w) g(z,y,w) g(x,z,w) = +1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedTwoGraph {
    signs: TripleSigns,
}

/// Isomorphism classes inside one switching class.
#[derive(Clone, Debug, Serialize)]
pub struct SwitchingClassStats {
    /// `2^(n-1)`.
    pub class_size: usize,
    /// Canonical representative of each isomorphism class with its automorphism
    /// count, sorted by canonical code.
    #[serde(skip)]
    pub iso_reps: Vec<(Tournament, usize)>,
    pub class_aut_order: usize,
    pub iso_class_count: usize,
}

impl SwitchingClassStats {
    pub fn aut_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.iso_reps.iter().map(|r| r.1).collect();
        v.sort_unstable();
        v
    }
}

impl OrientedTwoGraph {
    /// `g_T(x,y,z) = e(x,y) e(y,z) e(z,x)`.
    pub fn from_tournament(t: &Tournament) -> Result<Self> {
        let n = t.n();
        if n < 3 {
            return Err(Error::OutOfRange {
                what: "two-graph order",
                value: n,
                range: ">= 3",
            });
        }
        let signs =
            TripleSigns::from_fn(n, |i, j, k| t.sign(i, j) * t.sign(j, k) * t.sign(k, i) == 1)?;
        Ok(Self { signs })
    }

    /// Wraps triple signs after checking the four-point identity.
    pub fn from_signs(signs: TripleSigns) -> Result<Self> {
        if let Some(bad) = first_violation(&signs) {
            return Err(Error::InvalidTwoGraph(bad));
        }
        Ok(Self { signs })
    }

    pub fn n(&self) -> usize {
        self.signs.n()
    }

    pub fn signs(&self) -> &TripleSigns {
        &self.signs
    }

    pub fn into_signs(self) -> TripleSigns {
        self.signs
    }

    /// Value on an ordered triple of distinct vertices.
    pub fn sign(&self, x: usize, y: usize, z: usize) -> Result<i8> {
        self.signs.checked_sign(x, y, z)
    }

    /// True iff the four-point identity holds on every 4-set.
    pub fn validate(&self) -> bool {
        first_violation(&self.signs).is_none()
    }

    /// The class member with every arc at vertex `n-1` pointing into it.
    pub fn anchored_representative(&self) -> Result<Tournament> {
        let n = self.n();
        if n < 3 {
            return Err(Error::OutOfRange {
                what: "two-graph order",
                value: n,
                range: ">= 3",
            });
        }
        if let Some(bad) = first_violation(&self.signs) {
            return Err(Error::InvalidTwoGraph(bad));
        }
        let anchor = n - 1;
        Tournament::from_fn(n, |x, y| y == anchor || self.signs.sign(anchor, y, x) == 1)
    }

    /// All `2^(n-1)` tournaments of the switching class, ordered by the
    /// switching mask over `{0..n-2}`.
    pub fn class_members(&self) -> Result<Vec<Tournament>> {
        let n = self.n();
        if n > 16 {
            return Err(Error::OutOfRange {
                what: "class order",
                value: n,
                range: "3..=16",
            });
        }
        let base = self.anchored_representative()?;
        Ok((0..1u32 << (n - 1)).map(|x| base.switch(x)).collect())
    }

    /// `g|_W` with vertex `i` of the result being `w[i]`.
    pub fn restriction(&self, w: &[usize]) -> Result<Self> {
        if w.len() < 3 {
            return Err(Error::OutOfRange {
                what: "restriction size",
                value: w.len(),
                range: ">= 3",
            });
        }
        Ok(Self {
            signs: self.signs.restrict(w)?,
        })
    }

    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        Ok(Self {
            signs: self.signs.relabel(sigma)?,
        })
    }

    pub fn negate(&self) -> Self {
        Self {
            signs: self.signs.negate(),
        }
    }

    /// Least triple-sign encoding over all relabelings, packed MSB-first.
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        self.signs.canonical_code()
    }

    pub fn canonical(&self) -> Result<Self> {
        let lab = self.signs.canonical_labeling()?;
        self.relabel(&lab)
    }

    pub fn is_isomorphic(&self, other: &Self) -> Result<bool> {
        Ok(self.n() == other.n() && self.canonical_form()? == other.canonical_form()?)
    }

    /// `Aut(g)`: permutations preserving every triple sign.
    pub fn automorphism_group(&self) -> Result<Vec<Permutation>> {
        self.signs.automorphisms()
    }

    pub fn automorphism_count(&self) -> Result<usize> {
        Ok(self.signs.canon()?.labelings.len())
    }

    /// Groups the class members by isomorphism and checks
    /// `Σ 1/|Aut(T_i)| = 2^(n-1) / |Aut(C)|` exactly.
    pub fn iso_class_stats(&self) -> Result<SwitchingClassStats> {
        let members = self.class_members()?;
        let mut reps: BTreeMap<u128, Tournament> = BTreeMap::new();
        for t in &members {
            reps.entry(t.canonical_code()?).or_insert(*t);
        }
        let iso_reps = reps
            .iter()
            .map(|(&code, t)| {
                Ok((
                    Tournament::from_pair_code(t.n(), code)?,
                    t.automorphism_count()?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let class_aut_order = self.automorphism_count()?;
        let class_size = members.len();
        let lhs: Rational = iso_reps.iter().map(|r| Rational::new(1, r.1 as i128)).sum();
        assert_eq!(
            lhs,
            Rational::new(class_size as i128, class_aut_order as i128),
            "automorphism sum identity failed"
        );
        Ok(SwitchingClassStats {
            class_size,
            iso_class_count: iso_reps.len(),
            iso_reps,
            class_aut_order,
        })
    }

    /// Number of isomorphism classes in the switching class from the group:
    /// `(1/|Aut(C)|) Σ_{σ of odd order} 2^(c(σ)-1)`.
    pub fn count_iso_classes_formula(&self) -> Result<usize> {
        let group = self.automorphism_group()?;
        let total: u128 = group
            .iter()
            .filter(|s| s.order() % 2 == 1)
            .map(|s| 1u128 << (s.cycle_decomposition().len() - 1))
            .sum();
        assert_eq!(
            total % group.len() as u128,
            0,
            "orbit count is not an integer"
        );
        Ok((total / group.len() as u128) as usize)
    }

    /// Expected number of `r`-subsets of a uniform random tournament on `n`
    /// vertices inducing a tournament isomorphic to a class member:
    /// `C(n,r) · (r!/|Aut(C)|) / 2^C(r-1,2)`.
    pub fn expected_subtournament_count(&self, n: usize) -> Result<Rational> {
        let r = self.n();
        if n <= r {
            return Err(Error::OutOfRange {
                what: "host order",
                value: n,
                range: "> r",
            });
        }
        let aut = self.automorphism_count()? as i128;
        let ways = binomial(n, r) as i128 * factorial(r) as i128;
        Ok(Rational::new(ways, aut * (1i128 << binomial(r - 1, 2))))
    }

    /// Membership oracle: canonical codes of all class members.
    pub(crate) fn member_codes(&self) -> Result<std::collections::HashSet<u128>> {
        self.class_members()?
            .iter()
            .map(|t| t.canonical_code())
            .collect()
    }

    /// Monte Carlo estimate of [`OrientedTwoGraph::expected_subtournament_count`].
    ///
    /// Samples are split into a fixed number of chunks; chunk `c` draws from
    /// ChaCha8 seeded with `seed` on stream `c`, so the result does not depend
    /// on the number of worker threads.
    pub fn sample_subtournament_count(
        &self,
        n: usize,
        samples: u64,
        seed: u64,
    ) -> Result<(f64, f64)> {
        let r = self.n();
        if n <= r || n > 32 {
            return Err(Error::OutOfRange {
                what: "host order",
                value: n,
                range: "r+1..=32",
            });
        }
        if samples == 0 {
            return Err(Error::OutOfRange {
                what: "samples",
                value: 0,
                range: ">= 1",
            });
        }
        if r > 16 {
            return Err(Error::BudgetExceeded(r));
        }
        let members = self.member_codes()?;
        let subsets: Vec<Vec<usize>> = crate::subsets::combinations(n, r).collect();
        const CHUNKS: u64 = 64;
        let pair_bits = r * (r - 1) / 2;
        let (sum, sum_sq) = (0..CHUNKS)
            .into_par_iter()
            .map(|c| {
                let count = samples / CHUNKS + u64::from(c < samples % CHUNKS);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(c);
                // 0 = unknown, 1 = not a member, 2 = member; keyed by induced pair code.
                let mut memo: Vec<u8> = if pair_bits <= 20 {
                    vec![0; 1 << pair_bits]
                } else {
                    Vec::new()
                };
                let mut memo_map = std::collections::HashMap::new();
                let (mut s, mut s2) = (0u128, 0u128);
                for _ in 0..count {
                    let t = random_tournament(n, &mut rng);
                    let mut hits = 0u128;
                    for sub in &subsets {
                        let mut code = 0u128;
                        for a in 0..r {
                            for b in a + 1..r {
                                code = (code << 1) | t.has_arc(sub[a], sub[b]) as u128;
                            }
                        }
                        let lookup = |code: u128| {
                            let ind = Tournament::from_pair_code(r, code).expect("r <= 16");
                            members.contains(&ind.canonical_code().expect("r <= 16"))
                        };
                        let member = if pair_bits <= 20 {
                            let slot = &mut memo[code as usize];
                            if *slot == 0 {
                                *slot = 1 + u8::from(lookup(code));
                            }
                            *slot == 2
                        } else {
                            *memo_map.entry(code).or_insert_with(|| lookup(code))
                        };
                        hits += u128::from(member);
                    }
                    s += hits;
                    s2 += hits * hits;
                }
                (s, s2)
            })
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        let k = samples as f64;
        let mean = sum as f64 / k;
        let var = if samples > 1 {
            (sum_sq as f64 - k * mean * mean) / (k - 1.0)
        } else {
            0.0
        };
        Ok((mean, (var.max(0.0) / k).sqrt()))
    }
}

/// Uniform random tournament: each pair oriented by a fair coin.
pub fn random_tournament(n: usize, rng: &mut impl RngCore) -> Tournament {
    let mut word = 0u64;
    let mut left = 0;
    Tournament::from_fn(n, |_, _| {
        if left == 0 {
            word = rng.next_u64();
            left = 64;
        }
        left -= 1;
        let bit = word & 1 == 1;
        word >>= 1;
        bit
    })
    .expect("order within range")
}

fn first_violation(signs: &TripleSigns) -> Option<[usize; 4]> {
    let n = signs.n();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                for w in z + 1..n {
                    if signs.four_point_product(x, y, z, w) != 1 {
                        return Some([x, y, z, w]);
                    }
                }
            }
        }
    }
    None
}

impl std::fmt::Debug for OrientedTwoGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::codec::format_two_graph(self))
    }
}

impl std::fmt::Display for OrientedTwoGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::codec::format_two_graph(self))
    }
}
