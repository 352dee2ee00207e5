//! Admissible functions on `Z_p` with exact cyclic convolution.
//!
//! The exhaustive search here confirms that only `±χ` give extremal 4-graphs.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::paley::{is_prime, quadratic_character};
use crate::turan::{decaen_check, hypergraph_from_admissible, triangle_free_check, Hypergraph};

/// Odd function `Z_p -> {-1, 0, +1}` vanishing exactly at 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleFunction {
    values: Vec<i8>,
}

impl AdmissibleFunction {
    /// Checks the value table: odd modulus, zero only at 0, `f(-a) = -f(a)`.
    pub fn new(values: Vec<i8>) -> Result<Self> {
        let p = values.len();
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::NotAdmissible(format!(
                "modulus {p} is not odd and at least 3"
            )));
        }
        if values[0] != 0 {
            return Err(Error::NotAdmissible("f(0) != 0".into()));
        }
        for a in 1..p {
            if values[a].abs() != 1 {
                return Err(Error::NotAdmissible(format!("f({a}) = {}", values[a])));
            }
            if values[p - a] != -values[a] {
                return Err(Error::NotAdmissible(format!("f(-{a}) != -f({a})")));
            }
        }
        Ok(Self { values })
    }

    /// Extends signs given on `1..=(p-1)/2` by oddness.
    pub fn from_half(p: usize, signs: &[i8]) -> Result<Self> {
        if p.is_multiple_of(2) || signs.len() != p / 2 {
            return Err(Error::NotAdmissible(format!(
                "{} signs for modulus {p}",
                signs.len()
            )));
        }
        let mut values = vec![0i8; p];
        for (i, &s) in signs.iter().enumerate() {
            values[i + 1] = s;
            values[p - 1 - i] = -s;
        }
        Self::new(values)
    }

    /// The quadratic character of `F_p` for a prime `p ≡ 3 (mod 4)`.
    pub fn character(p: usize) -> Result<Self> {
        let chi = quadratic_character(p as u64)?;
        if p % 4 != 3 {
            return Err(Error::NotThreeModFour(p as u64));
        }
        Self::new(chi.values().to_vec())
    }

    pub fn p(&self) -> usize {
        self.values.len()
    }

    /// `f(a mod p)`.
    pub fn value(&self, a: usize) -> i8 {
        self.values[a % self.p()]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn negate(&self) -> Self {
        Self {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// `f ⋆ f`.
    pub fn self_convolution(&self) -> Vec<i64> {
        let f: Vec<i64> = self.values.iter().map(|&v| v as i64).collect();
        convolve(&f, &f).expect("same modulus")
    }
}

/// `(f ⋆ g)(b) = Σ_a f(b - a) g(a)` over `Z_p`, `p = f.len()`.
pub fn convolve(f: &[i64], g: &[i64]) -> Result<Vec<i64>> {
    if f.len() != g.len() {
        return Err(Error::SizeMismatch {
            expected: f.len(),
            actual: g.len(),
        });
    }
    let p = f.len();
    Ok((0..p)
        .map(|b| (0..p).map(|a| f[(b + p - a) % p] * g[a]).sum())
        .collect())
}

fn check_search_prime(p: usize, max: usize) -> Result<()> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::NotOddPrime(p as u64));
    }
    if p % 4 != 3 {
        return Err(Error::NotThreeModFour(p as u64));
    }
    if p > max {
        return Err(Error::OutOfRange {
            what: "modulus",
            value: p,
            range: "3..=23",
        });
    }
    Ok(())
}

/// The admissible function with counter value `c`: `f(a) = +1` iff bit
/// `a - 1` of `c` is set, for `1 <= a <= (p-1)/2`.
pub fn admissible_from_counter(p: usize, c: u64) -> AdmissibleFunction {
    let signs: Vec<i8> = (0..p / 2)
        .map(|i| if c >> i & 1 == 1 { 1 } else { -1 })
        .collect();
    AdmissibleFunction::from_half(p, &signs).expect("odd modulus")
}

/// Every admissible function on `Z_p` in counter order.
pub fn enumerate_admissible(p: usize) -> Result<impl Iterator<Item = AdmissibleFunction>> {
    if p < 3 || p.is_multiple_of(2) || p > 31 {
        return Err(Error::OutOfRange {
            what: "modulus",
            value: p,
            range: "odd, 3..=31",
        });
    }
    Ok((0..1u64 << (p / 2)).map(move |c| admissible_from_counter(p, c)))
}

/// Admissible `f` with `f ⋆ f = χ ⋆ χ`, in counter order.
pub fn uniqueness_search(p: usize) -> Result<Vec<AdmissibleFunction>> {
    check_search_prime(p, 23)?;
    let target = AdmissibleFunction::character(p)?.self_convolution();
    Ok((0..1u64 << (p / 2))
        .into_par_iter()
        .map(|c| admissible_from_counter(p, c))
        .filter(|f| f.self_convolution() == target)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Extremality {
    /// `H_f` is H(4)-free and meets the de Caen bound.
    pub is_extremal: bool,
    /// `(f ⋆ f)(x) = 1` for every `x != 0`.
    pub convolution_ok: bool,
}

fn extremality_with(f: &AdmissibleFunction) -> Result<(Extremality, Hypergraph)> {
    let h = hypergraph_from_admissible(f)?;
    let dc = decaen_check(&h);
    // The edge count is cheap; the triangle scan only runs on candidates that meet it.
    let is_extremal = dc.tight && triangle_free_check(&h).free;
    let convolution_ok = f.self_convolution()[1..].iter().all(|&v| v == 1);
    Ok((
        Extremality {
            is_extremal,
            convolution_ok,
        },
        h,
    ))
}

pub fn extremality_check(f: &AdmissibleFunction) -> Result<Extremality> {
    check_search_prime(f.p(), 23)?;
    Ok(extremality_with(f)?.0)
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    pub p: usize,
    pub candidates: usize,
    /// `F` lines of the functions with `f ⋆ f = χ ⋆ χ`.
    pub convolution_matches: Vec<String>,
    /// `F` lines of the extremal functions.
    pub extremal: Vec<String>,
    /// `(f ⋆ f)(0) = -(p-1)` for every candidate.
    pub zero_value_ok: bool,
    /// No candidate is extremal without `convolution_ok`.
    pub implication_ok: bool,
    /// `H_χ` equals the Paley pattern hypergraph.
    pub chi_matches_paley: bool,
    /// `x ↦ -x` carries `H_χ` onto `H_{-χ}`.
    pub negation_isomorphic: bool,
    pub pass: bool,
}

pub fn verify_uniqueness_theorem(p: usize) -> Result<UniquenessReport> {
    if ![3, 7, 11, 19, 23].contains(&p) {
        return Err(Error::OutOfRange {
            what: "modulus",
            value: p,
            range: "one of 3, 7, 11, 19, 23",
        });
    }
    let chi = AdmissibleFunction::character(p)?;
    let target = chi.self_convolution();
    let rows: Vec<(AdmissibleFunction, bool, bool, Extremality)> = (0..1u64 << (p / 2))
        .into_par_iter()
        .map(|c| {
            let f = admissible_from_counter(p, c);
            let conv = f.self_convolution();
            let zero_ok = conv[0] == -(p as i64 - 1);
            let ext = extremality_with(&f)?.0;
            Ok((f, zero_ok, conv == target, ext))
        })
        .collect::<Result<_>>()?;
    let line = crate::codec::format_admissible;
    let conv_fns: Vec<&AdmissibleFunction> = rows.iter().filter(|r| r.2).map(|r| &r.0).collect();
    let extremal_fns: Vec<&AdmissibleFunction> = rows
        .iter()
        .filter(|r| r.3.is_extremal)
        .map(|r| &r.0)
        .collect();
    let zero_value_ok = rows.iter().all(|r| r.1);
    let implication_ok = rows.iter().all(|r| !r.3.is_extremal || r.3.convolution_ok);

    let h_chi = hypergraph_from_admissible(&chi)?;
    let paley = crate::turan::pattern_hypergraph(
        &crate::paley::paley_two_graph(p as u64)?,
        &crate::paley::paley_two_graph(3)?,
    )?;
    let chi_matches_paley = h_chi == paley;
    let negation = crate::Permutation::new(
        (0..=p)
            .map(|x| if x == p { p } else { (p - x) % p })
            .collect(),
    )?;
    let negation_isomorphic =
        h_chi.relabel(&negation)? == hypergraph_from_admissible(&chi.negate())?;

    let plus_minus = [chi.clone(), chi.negate()];
    let is_pm =
        |fs: &[&AdmissibleFunction]| fs.len() == 2 && plus_minus.iter().all(|c| fs.contains(&c));
    let pass = is_pm(&conv_fns)
        && is_pm(&extremal_fns)
        && zero_value_ok
        && implication_ok
        && chi_matches_paley
        && negation_isomorphic;
    Ok(UniquenessReport {
        p,
        candidates: rows.len(),
        convolution_matches: conv_fns.into_iter().map(line).collect(),
        extremal: extremal_fns.into_iter().map(line).collect(),
        zero_value_ok,
        implication_ok,
        chi_matches_paley,
        negation_isomorphic,
        pass,
    })
}
