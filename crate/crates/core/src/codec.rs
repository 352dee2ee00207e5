//! One-line text formats.
//!
//! Every record is `<tag> <n>:<payload>`. For `T`, `G`, `D` and `X` the
//! payload is a bit string packed most-significant-bit first and rendered as
//! zero-padded lowercase hex:
//!
//! - `T`: tournament pair bits, pairs `i < j` in lexicographic order, 1 = `i -> j`.
//! - `G`: oriented two-graph, triples `i < j < k` in lexicographic order, 1 = `+1`.
//! - `D`: 3-tournament, same layout as `G`.
//! - `X`: two-graph membership, one bit per lexicographic triple.
//!
//! `F <p>:<bits>` lists an admissible function's values on `1..=(p-1)/2` as
//! `0`/`1` characters (1 = `+1`), starting at `a = 1`.

use crate::error::{Error, Result};
use crate::fourier::AdmissibleFunction;
use crate::tournament::Tournament;
use crate::tri::{ThreeTournament, TwoGraph};
use crate::triples::TripleSigns;
use crate::twograph::OrientedTwoGraph;

/// Any parsed line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Record {
    Tournament(Tournament),
    TwoGraph(OrientedTwoGraph),
    ThreeTournament(ThreeTournament),
    SwitchingSet(TwoGraph),
    Admissible(AdmissibleFunction),
}

fn to_hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn from_hex(s: &str) -> Result<Vec<u8>> {
    if !s.len().is_multiple_of(2)
        || !s
            .bytes()
            .all(|c| c.is_ascii_digit() || (b'a'..=b'f').contains(&c))
    {
        return Err(Error::Parse(format!("bad hex payload {s:?}")));
    }
    (0..s.len())
        .step_by(2)
        .map(|i| u8::from_str_radix(&s[i..i + 2], 16).map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

/// Splits `<tag> <n>:<payload>` and checks the tag.
fn split<'a>(line: &'a str, tag: &str) -> Result<(usize, &'a str)> {
    let line = line.trim();
    let rest = line
        .strip_prefix(tag)
        .and_then(|r| r.strip_prefix(' '))
        .ok_or_else(|| Error::Parse(format!("expected a `{tag}` line, got {line:?}")))?;
    let (n, payload) = rest
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("missing ':' in {line:?}")))?;
    let n = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count {n:?}")))?;
    Ok((n, payload))
}

pub fn format_tournament(t: &Tournament) -> String {
    format!("T {}:{}", t.n(), to_hex(&t.to_bytes()))
}

pub fn parse_tournament(line: &str) -> Result<Tournament> {
    let (n, payload) = split(line, "T")?;
    if n == 0 || n > crate::tournament::MAX_VERTICES {
        return Err(Error::Parse(format!("tournament order {n} out of range")));
    }
    Tournament::from_bytes(n, &from_hex(payload)?)
}

fn parse_triples(line: &str, tag: &str) -> Result<TripleSigns> {
    let (n, payload) = split(line, tag)?;
    if n > crate::triples::MAX_TRIPLE_VERTICES {
        return Err(Error::Parse(format!("order {n} out of range")));
    }
    TripleSigns::from_bytes(n, &from_hex(payload)?)
}

pub fn format_two_graph(g: &OrientedTwoGraph) -> String {
    format!("G {}:{}", g.n(), to_hex(&g.signs().to_bytes()))
}

/// Parses a `G` line and checks the four-point identity.
pub fn parse_two_graph(line: &str) -> Result<OrientedTwoGraph> {
    OrientedTwoGraph::from_signs(parse_triples(line, "G")?)
}

pub fn format_three_tournament(g: &ThreeTournament) -> String {
    format!("D {}:{}", g.n(), to_hex(&g.signs().to_bytes()))
}

pub fn parse_three_tournament(line: &str) -> Result<ThreeTournament> {
    Ok(ThreeTournament::from_signs(parse_triples(line, "D")?))
}

pub fn format_switching_set(x: &TwoGraph) -> String {
    format!("X {}:{}", x.n(), to_hex(&x.members().to_bytes()))
}

/// Parses an `X` line and checks the even-intersection condition.
pub fn parse_switching_set(line: &str) -> Result<TwoGraph> {
    TwoGraph::from_members(parse_triples(line, "X")?)
}

pub fn format_admissible(f: &AdmissibleFunction) -> String {
    let bits: String = (1..=f.p() / 2)
        .map(|a| if f.value(a) == 1 { '1' } else { '0' })
        .collect();
    format!("F {}:{}", f.p(), bits)
}

pub fn parse_admissible(line: &str) -> Result<AdmissibleFunction> {
    let (p, payload) = split(line, "F")?;
    if p % 2 == 0 || payload.len() != p / 2 {
        return Err(Error::Parse(format!(
            "expected {} sign characters for odd modulus {p}",
            p / 2
        )));
    }
    let signs = payload
        .chars()
        .map(|c| match c {
            '1' => Ok(1),
            '0' => Ok(-1),
            _ => Err(Error::Parse(format!("bad sign character {c:?}"))),
        })
        .collect::<Result<Vec<i8>>>()?;
    AdmissibleFunction::from_half(p, &signs)
}

/// Parses a line of any of the five kinds, dispatching on its tag.
pub fn parse_record(line: &str) -> Result<Record> {
    let line = line.trim();
    match line.split(' ').next() {
        Some("T") => parse_tournament(line).map(Record::Tournament),
        Some("G") => parse_two_graph(line).map(Record::TwoGraph),
        Some("D") => parse_three_tournament(line).map(Record::ThreeTournament),
        Some("X") => parse_switching_set(line).map(Record::SwitchingSet),
        Some("F") => parse_admissible(line).map(Record::Admissible),
        _ => Err(Error::Parse(format!("unknown record {line:?}"))),
    }
}

/// Parses every non-blank line that does not start with `#`.
pub fn parse_records(text: &str) -> Result<Vec<Record>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_record)
        .collect()
}

pub fn format_record(r: &Record) -> String {
    match r {
        Record::Tournament(t) => format_tournament(t),
        Record::TwoGraph(g) => format_two_graph(g),
        Record::ThreeTournament(g) => format_three_tournament(g),
        Record::SwitchingSet(x) => format_switching_set(x),
        Record::Admissible(f) => format_admissible(f),
    }
}
