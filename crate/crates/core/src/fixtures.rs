//! The three special tournaments drawn as figures, shipped as `T` lines.
//!
//! Each has a vertex beating all others: the 5-vertex circulant `i -> i+1,
//! i+3 (mod 5)` extended by a source (6 vertices, `|Aut(C)| = 5`), a
//! 7-vertex tournament with `|Aut(C)| = 9`, and an 8-vertex one with trivial
//! class group.

use crate::codec::parse_tournament;
use crate::tournament::Tournament;

pub const FIGURE1: &str = include_str!("../fixtures/figure1.t");
pub const FIGURE2: &str = include_str!("../fixtures/figure2.t");
pub const FIGURE3: &str = include_str!("../fixtures/figure3.t");

fn load(text: &str) -> Tournament {
    parse_tournament(text).expect("shipped fixture parses")
}

pub fn figure1() -> Tournament {
    load(FIGURE1)
}

pub fn figure2() -> Tournament {
    load(FIGURE2)
}

pub fn figure3() -> Tournament {
    load(FIGURE3)
}

/// `(name, raw text, tournament)` for every fixture.
pub fn all() -> Vec<(&'static str, &'static str, Tournament)> {
    vec![
        ("figure1", FIGURE1, figure1()),
        ("figure2", FIGURE2, figure2()),
        ("figure3", FIGURE3, figure3()),
    ]
}
