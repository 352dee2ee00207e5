//! Paley tournaments over prime fields, plus the determinant model of the
//! Paley two-graph on the projective line.

use crate::error::{Error, Result};
use crate::fourier::AdmissibleFunction;
use crate::perm::Permutation;
use crate::tournament::{Tournament, MAX_VERTICES};
use crate::triples::TripleSigns;
use crate::twograph::OrientedTwoGraph;

/// 2x2 matrix over `F_p`, row-major; points are row vectors acted on from the right.
pub type Matrix2 = [[u64; 2]; 2];

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

fn check_paley_prime(p: u64) -> Result<()> {
    check_odd_prime(p)?;
    if p % 4 != 3 {
        return Err(Error::NotThreeModFour(p));
    }
    Ok(())
}

/// Values of the quadratic character on `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    p: u64,
    values: Vec<i8>,
}

impl CharacterTable {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// `χ(a mod p)`.
    pub fn chi(&self, a: i64) -> i8 {
        self.values[a.rem_euclid(self.p as i64) as usize]
    }
}

/// `χ(x) = +1` on nonzero squares, `-1` on non-squares, `0` at zero.
pub fn quadratic_character(p: u64) -> Result<CharacterTable> {
    check_odd_prime(p)?;
    let mut values = vec![-1i8; p as usize];
    values[0] = 0;
    for y in 1..p {
        values[(y * y % p) as usize] = 1;
    }
    Ok(CharacterTable { p, values })
}

/// `x -> y` iff `f(y - x) = +1`.
pub fn tournament_from_function(f: &AdmissibleFunction) -> Result<Tournament> {
    let p = f.p();
    if p > MAX_VERTICES {
        return Err(Error::OutOfRange {
            what: "modulus",
            value: p,
            range: "3..=32",
        });
    }
    Tournament::from_fn(p, |x, y| f.value(y + p - x) == 1)
}

/// The Paley tournament `T_χ` on `F_p`, `p ≡ 3 (mod 4)`.
pub fn paley_tournament(p: u64) -> Result<Tournament> {
    check_paley_prime(p)?;
    let chi = quadratic_character(p)?;
    tournament_from_function(&AdmissibleFunction::new(chi.values.clone())?)
}

/// Two-graph of the augmented Paley tournament; vertex `p` is `∞`.
pub fn paley_two_graph(p: u64) -> Result<OrientedTwoGraph> {
    OrientedTwoGraph::from_tournament(&paley_tournament(p)?.augment()?)
}

/// Point of the projective line over `F_p`, normalized to `(x, 1)` or `(1, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    x1: u64,
    x2: u64,
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2).
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl ProjectivePoint {
    /// Normalizes `(x1, x2)`; fails on `(0, 0)`.
    pub fn new(x1: u64, x2: u64, p: u64) -> Result<Self> {
        let (x1, x2) = (x1 % p, x2 % p);
        match (x1, x2) {
            (0, 0) => Err(Error::Parse("(0, 0) is not a projective point".into())),
            (_, 0) => Ok(Self { x1: 1, x2: 0 }),
            _ => Ok(Self {
                x1: x1 * inverse_mod(x2, p) % p,
                x2: 1,
            }),
        }
    }

    pub fn affine(x: u64, p: u64) -> Self {
        Self { x1: x % p, x2: 1 }
    }

    pub fn infinity() -> Self {
        Self { x1: 1, x2: 0 }
    }

    pub fn coords(&self) -> (u64, u64) {
        (self.x1, self.x2)
    }

    /// Image under right multiplication by `m`, renormalized.
    pub fn act(&self, m: &Matrix2, p: u64) -> Result<Self> {
        let y1 = (self.x1 * m[0][0] + self.x2 * m[1][0]) % p;
        let y2 = (self.x1 * m[0][1] + self.x2 * m[1][1]) % p;
        Self::new(y1, y2, p)
    }
}

/// `det(x : y) = x1 y2 - x2 y1` in `F_p`.
pub fn det(x: &ProjectivePoint, y: &ProjectivePoint, p: u64) -> u64 {
    (x.x1 * y.x2 + p * p - x.x2 * y.x1 % p) % p
}

/// The identification under which the determinant model agrees with
/// [`paley_two_graph`] sign for sign: vertex `x` is `(-x, 1)` and vertex `p`
/// is `(1, 0)`. The plain identification `x ↦ (x, 1)` yields the negated
/// two-graph, since `χ(-1) = -1`.
pub fn paley_identification(p: u64) -> Vec<ProjectivePoint> {
    (0..p)
        .map(|x| ProjectivePoint::affine(p - x, p))
        .chain([ProjectivePoint::infinity()])
        .collect()
}

/// The plain identification `x ↦ (x, 1)`, `p ↦ (1, 0)`.
pub fn affine_identification(p: u64) -> Vec<ProjectivePoint> {
    (0..p)
        .map(|x| ProjectivePoint::affine(x, p))
        .chain([ProjectivePoint::infinity()])
        .collect()
}

/// `g(x, y, z) = χ(det(x:y) det(y:z) det(z:x))` on the given point list.
pub fn projective_two_graph_on(p: u64, points: &[ProjectivePoint]) -> Result<OrientedTwoGraph> {
    check_paley_prime(p)?;
    let chi = quadratic_character(p)?;
    let signs = TripleSigns::from_fn(points.len(), |i, j, k| {
        let (a, b, c) = (&points[i], &points[j], &points[k]);
        let prod = det(a, b, p) * det(b, c, p) % p * det(c, a, p) % p;
        chi.values[prod as usize] == 1
    })?;
    OrientedTwoGraph::from_signs(signs)
}

/// Determinant model of the Paley two-graph under [`paley_identification`].
pub fn projective_two_graph(p: u64) -> Result<OrientedTwoGraph> {
    projective_two_graph_on(p, &paley_identification(p))
}

/// Outcome of checking `χ(det m) g(x,y,z) = g(xm, ym, zm)` on all triples.
#[derive(Clone, Debug)]
pub struct ActionCheck {
    pub holds: bool,
    pub det_character: i8,
    /// Vertex permutation induced by `m` under [`paley_identification`].
    pub permutation: Permutation,
}

pub fn psl2_action_check(p: u64, m: &Matrix2) -> Result<ActionCheck> {
    check_paley_prime(p)?;
    let m = [[m[0][0] % p, m[0][1] % p], [m[1][0] % p, m[1][1] % p]];
    let d = (m[0][0] * m[1][1] + p * p - m[0][1] * m[1][0]) % p;
    if d == 0 {
        return Err(Error::SingularMatrix);
    }
    let chi = quadratic_character(p)?;
    let det_character = chi.values[d as usize];
    let points = paley_identification(p);
    let g = projective_two_graph_on(p, &points)?;
    let images = points
        .iter()
        .map(|pt| {
            let img = pt.act(&m, p)?;
            Ok(points
                .iter()
                .position(|q| *q == img)
                .expect("identification covers the line"))
        })
        .collect::<Result<Vec<_>>>()?;
    let permutation = Permutation::new(images)?;
    let n = points.len();
    let mut holds = true;
    'outer: for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let lhs = det_character * g.signs().sign(x, y, z);
                let rhs = g.signs().sign(
                    permutation.apply(x),
                    permutation.apply(y),
                    permutation.apply(z),
                );
                if lhs != rhs {
                    holds = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(ActionCheck {
        holds,
        det_character,
        permutation,
    })
}

/// All matrices over `F_p` with determinant 1, in lexicographic entry order.
pub fn special_linear_group(p: u64) -> Vec<Matrix2> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 1 {
                        out.push([[a, b], [c, d]]);
                    }
                }
            }
        }
    }
    out
}
