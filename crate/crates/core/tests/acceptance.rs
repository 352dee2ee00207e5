//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero on
//! any failure outside `KNOWN_FAILURES`.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tswitch::census::{enumerate_switching_classes, enumerate_tournaments, mass_formula_holds};
use tswitch::fourier::{
    enumerate_admissible, uniqueness_search, verify_uniqueness_theorem, AdmissibleFunction,
};
use tswitch::paley::{
    paley_two_graph, projective_two_graph, psl2_action_check, special_linear_group,
};
use tswitch::special::find_special;
use tswitch::tri::{brute_force_tri_count, count_tri_iso_classes, worked_example, ThreeTournament};
use tswitch::turan::{
    decaen_check, design_parameters, pattern_hypergraph, span_profile, triangle_free_check,
};
use tswitch::{binomial, fixtures, OrientedTwoGraph, Rational, Tournament};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome {
            pass: true,
            detail: summary,
        }
    } else {
        Outcome {
            pass: false,
            detail: format!("{summary}; {}", failures.join("; ")),
        }
    }
}

fn within(start: Instant, limit: Duration, label: &str, failures: &mut Vec<String>) -> Duration {
    let took = start.elapsed();
    if took > limit {
        failures.push(format!("{label} took {took:?}, limit {limit:?}"));
    }
    took
}

fn census() -> Outcome {
    let mut failures = Vec::new();
    let expected = [1usize, 1, 2, 4, 12, 56, 456, 6880];
    let mut counts = Vec::new();
    let start = Instant::now();
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let reps = enumerate_tournaments(n).unwrap();
        counts.push(reps.len());
        if reps.len() != want {
            failures.push(format!(
                "n={n}: {} tournaments, expected {want}",
                reps.len()
            ));
        }
        if !mass_formula_holds(n, &reps).unwrap() {
            failures.push(format!("n={n}: mass formula fails"));
        }
    }
    let took = within(
        start,
        Duration::from_secs(60),
        "census to n=8",
        &mut failures,
    );
    let classes4 = enumerate_switching_classes(4).unwrap().len();
    if classes4 != 2 {
        failures.push(format!("{classes4} switching classes on 4 vertices"));
    }
    outcome(
        failures,
        format!("counts {counts:?}, {classes4} classes at n=4, {took:.1?}"),
    )
}

fn search_r5() -> Outcome {
    let mut failures = Vec::new();
    let start = Instant::now();
    let res = find_special(5).unwrap();
    let took = within(start, Duration::from_secs(10), "r=5 search", &mut failures);
    if !res.specials.is_empty() {
        failures.push(format!("{} special classes", res.specials.len()));
    }
    outcome(
        failures,
        format!(
            "{} classes scanned, {} special, {took:.1?}",
            res.classes_scanned,
            res.specials.len()
        ),
    )
}

fn show(q: Option<Rational>) -> String {
    q.map_or_else(|| "none".into(), |q| tswitch::format_rational(&q))
}

fn parse_g(line: &str) -> OrientedTwoGraph {
    tswitch::codec::parse_two_graph(line).unwrap()
}

fn search_r6() -> Outcome {
    let mut failures = Vec::new();
    let start = Instant::now();
    let res = find_special(6).unwrap();
    let took = within(start, Duration::from_secs(60), "r=6 search", &mut failures);
    if res.specials.len() != 2 {
        failures.push(format!("{} special classes", res.specials.len()));
    }
    let best: Vec<_> = res.specials.iter().filter(|s| s.is_best).collect();
    let mut orders = Vec::new();
    if best.len() != 1 || best[0].class_aut_order != 5 {
        failures.push(format!("best classes {best:?}"));
    } else {
        orders = parse_g(&best[0].two_graph)
            .iso_class_stats()
            .unwrap()
            .aut_orders();
        if orders != [1, 1, 1, 1, 1, 1, 5, 5] {
            failures.push(format!("iso-class aut orders {orders:?}"));
        }
        if best[0].lower_bound != Rational::new(9, 64) {
            failures.push(format!("bound {}", best[0].lower_bound));
        }
    }
    outcome(
        failures,
        format!(
            "{} special, best bound {}, orders {orders:?}, {took:.1?}",
            res.specials.len(),
            show(res.best_bound())
        ),
    )
}

fn search_r7() -> Outcome {
    let mut failures = Vec::new();
    let start = Instant::now();
    let res = find_special(7).unwrap();
    let took = within(start, Duration::from_secs(300), "r=7 search", &mut failures);
    let mut orders = Vec::new();
    if res.specials.len() != 1 {
        failures.push(format!("{} special classes", res.specials.len()));
    } else {
        let s = &res.specials[0];
        if s.class_aut_order != 9 {
            failures.push(format!("|Aut| = {}", s.class_aut_order));
        }
        orders = parse_g(&s.two_graph)
            .iso_class_stats()
            .unwrap()
            .aut_orders();
        if orders != [1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3, 9, 9, 9, 9] {
            failures.push(format!("iso-class aut orders {orders:?}"));
        }
        if s.lower_bound != Rational::new(35, 2048) {
            failures.push(format!("bound {}", s.lower_bound));
        }
    }
    outcome(
        failures,
        format!(
            "{} special, orders {orders:?}, bound {}, {took:.1?}",
            res.specials.len(),
            show(res.best_bound())
        ),
    )
}

fn search_r8() -> Outcome {
    let mut failures = Vec::new();
    let start = Instant::now();
    let res = find_special(8).unwrap();
    let took = within(
        start,
        Duration::from_secs(1800),
        "r=8 search",
        &mut failures,
    );
    if res.trivial_aut_classes != 40 {
        failures.push(format!("{} trivial-Aut classes", res.trivial_aut_classes));
    }
    if res.trivial_aut_special != 9 {
        failures.push(format!("{} trivial-Aut specials", res.trivial_aut_special));
    }
    if res.best_bound() != Some(Rational::new(315, 16384)) {
        failures.push(format!("best bound {:?}", res.best_bound()));
    }
    outcome(
        failures,
        format!(
            "{} classes, {} trivial-Aut, {} of them special, {} special in all, best {}, {took:.1?}",
            res.classes_scanned,
            res.trivial_aut_classes,
            res.trivial_aut_special,
            res.specials.len(),
            show(res.best_bound())
        ),
    )
}

fn constructions() -> Outcome {
    let mut failures = Vec::new();
    let g3 = paley_two_graph(3).unwrap();
    let mut counts = Vec::new();
    for q in [3u64, 7, 11, 19] {
        let h = pattern_hypergraph(&paley_two_graph(q).unwrap(), &g3).unwrap();
        let n = q as usize + 1;
        let formula = n as u128 * binomial(n, 3) / 16;
        counts.push(h.edge_count());
        if h.edge_count() as u128 != formula || !(n as u128 * binomial(n, 3)).is_multiple_of(16) {
            failures.push(format!(
                "q={q}: {} edges, formula {formula}",
                h.edge_count()
            ));
        }
        if !triangle_free_check(&h).free {
            failures.push(format!("q={q}: contains an r-triangle"));
        }
        if design_parameters(&h, 3).unwrap() != Some(n / 4) {
            failures.push(format!("q={q}: 3-sets not in exactly {} edges", n / 4));
        }
    }
    let fig1 = OrientedTwoGraph::from_tournament(&fixtures::figure1()).unwrap();
    let h6 = pattern_hypergraph(&paley_two_graph(11).unwrap(), &fig1).unwrap();
    let lambda = design_parameters(&h6, 5).unwrap();
    let spans = span_profile(&h6, 7).unwrap();
    let dc = decaen_check(&h6);
    if h6.edge_count() != 264 || !dc.tight || !dc.design_ok {
        failures.push(format!("r=6: {} edges, de Caen {dc:?}", h6.edge_count()));
    }
    if lambda != Some(2) {
        failures.push(format!("r=6: design lambda {lambda:?}"));
    }
    if !spans.keys().all(|&k| k == 0 || k == 2) {
        failures.push(format!("r=6: 7-set spans {spans:?}"));
    }
    if !triangle_free_check(&h6).free {
        failures.push("r=6: contains an r-triangle".into());
    }
    outcome(
        failures,
        format!(
            "H_q edges {counts:?}, r=6 edges {}, lambda {lambda:?}, 7-set spans {spans:?}",
            h6.edge_count()
        ),
    )
}

/// `Σ_{a + b = x} f(a) f(b)` by scanning all ordered pairs.
fn pair_sum_convolution(f: &AdmissibleFunction) -> Vec<i64> {
    let p = f.p();
    let mut out = vec![0i64; p];
    for a in 0..p {
        for b in 0..p {
            out[(a + b) % p] += f.value(a) as i64 * f.value(b) as i64;
        }
    }
    out
}

fn uniqueness() -> Outcome {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for p in [3usize, 7, 11, 19, 23] {
        let start = Instant::now();
        let chi = AdmissibleFunction::character(p).unwrap();
        let found = uniqueness_search(p).unwrap();
        if found.len() != 2 || !found.contains(&chi) || !found.contains(&chi.negate()) {
            failures.push(format!("p={p}: convolution matches {found:?}"));
        }
        let report = verify_uniqueness_theorem(p).unwrap();
        if !report.pass || report.extremal.len() != 2 {
            failures.push(format!("p={p}: {report:?}"));
        }
        for f in enumerate_admissible(p).unwrap() {
            let oracle = pair_sum_convolution(&f);
            if oracle[0] != -(p as i64 - 1) || oracle != f.self_convolution() {
                failures.push(format!(
                    "p={p}: oracle disagrees for {}",
                    tswitch::codec::format_admissible(&f)
                ));
                break;
            }
        }
        let took = if p == 23 {
            within(start, Duration::from_secs(60), "p=23", &mut failures)
        } else {
            start.elapsed()
        };
        summary.push(format!(
            "p={p}: {} of {} extremal ({took:.1?})",
            report.extremal.len(),
            report.candidates
        ));
    }
    outcome(failures, summary.join(", "))
}

fn counting_identities() -> Outcome {
    let mut failures = Vec::new();
    let mut classes = 0;
    for n in 3..=6 {
        for g in enumerate_switching_classes(n).unwrap() {
            classes += 1;
            // Panics if the automorphism sum identity fails.
            let stats = g.iso_class_stats().unwrap();
            let formula = g.count_iso_classes_formula().unwrap();
            if formula != stats.iso_class_count {
                failures.push(format!(
                    "{g}: formula {formula}, direct {}",
                    stats.iso_class_count
                ));
            }
        }
    }
    let mut starts: Vec<ThreeTournament> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..50 {
        starts.push(ThreeTournament::random(3 + i % 3, &mut rng).unwrap());
    }
    let mut tri_mismatches = Vec::new();
    let mut seen = HashSet::new();
    for g in &starts {
        if g.n() < 4 {
            let direct = tswitch::tri::switching_class(g).unwrap();
            let forms: HashSet<Vec<u8>> =
                direct.iter().map(|h| h.canonical_form().unwrap()).collect();
            let formula = count_tri_iso_classes(g).unwrap();
            if formula != forms.len() {
                tri_mismatches.push(format!("{g}: formula {formula}, direct {}", forms.len()));
            }
            continue;
        }
        let h = tswitch::tri::coherent_quadruples(g).unwrap();
        if !seen.insert((g.n(), h.edges().to_vec())) {
            continue;
        }
        let formula = count_tri_iso_classes(g).unwrap();
        let direct = brute_force_tri_count(g).unwrap().count;
        if formula != direct {
            tri_mismatches.push(format!(
                "{g} (H has {} edges): formula {formula}, direct {direct}",
                h.edge_count()
            ));
        }
    }
    let ex = worked_example();
    let ex_formula = count_tri_iso_classes(&ex).unwrap();
    let ex_direct = brute_force_tri_count(&ex).unwrap();
    if ex_formula != 6 || ex_direct.count != 6 || ex_direct.aut_orders() != [1, 1, 1, 1, 1, 3] {
        failures.push(format!(
            "example: formula {ex_formula}, direct {:?}",
            ex_direct.aut_orders()
        ));
    }
    if !tri_mismatches.is_empty() {
        failures.push(format!(
            "level-permutation formula disagrees on {} classes: {}",
            tri_mismatches.len(),
            tri_mismatches.join(", ")
        ));
    }
    outcome(
        failures,
        format!("{classes} two-graph classes checked, {} distinct 3-tournament classes, example count {ex_formula}", seen.len()),
    )
}

fn expected_counts() -> Outcome {
    let mut failures = Vec::new();
    let g3 = paley_two_graph(3).unwrap();
    // Oracle: a 4-set counts when its two-graph is isomorphic to g3.
    let target = g3.canonical_form().unwrap();
    let mut total = 0i128;
    for code in 0..1u128 << 10 {
        let t = Tournament::from_pair_code(5, code).unwrap();
        for w in tswitch::subsets::combinations(5, 4) {
            let sub = OrientedTwoGraph::from_tournament(&t.induced(&w).unwrap()).unwrap();
            total += i128::from(sub.canonical_form().unwrap() == target);
        }
    }
    let average = Rational::new(total, 1024);
    let formula = g3.expected_subtournament_count(5).unwrap();
    if average != Rational::new(5, 4) || formula != average {
        failures.push(format!("exhaustive average {average}, formula {formula}"));
    }
    let exact10 = g3.expected_subtournament_count(10).unwrap();
    let (mean, se) = g3
        .sample_subtournament_count(10, 1_000_000, 0x5eed)
        .unwrap();
    let exact = *exact10.numer() as f64 / *exact10.denom() as f64;
    let z = (mean - exact) / se;
    if z.abs() > 5.0 {
        failures.push(format!("Monte Carlo {mean} ± {se} vs {exact}"));
    }
    outcome(
        failures,
        format!(
            "exhaustive average {average}, n=10 mean {mean:.4} ± {se:.4} vs {exact10} (z = {z:.2})"
        ),
    )
}

fn models() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tested = 0;
    for q in [3u64, 7, 11] {
        let g = paley_two_graph(q).unwrap();
        let proj = projective_two_graph(q).unwrap();
        let differing = g
            .signs()
            .bits()
            .iter()
            .zip(proj.signs().bits())
            .filter(|(a, b)| **a != *b)
            .count();
        if differing != 0 {
            failures.push(format!("q={q}: {differing} triple signs differ"));
        }
        let group = special_linear_group(q);
        let sample: Vec<_> = if q == 3 {
            group
        } else {
            group.choose_multiple(&mut rng, 200).cloned().collect()
        };
        for m in &sample {
            let c = psl2_action_check(q, m).unwrap();
            tested += 1;
            if !c.holds || c.det_character != 1 || g.relabel(&c.permutation).unwrap() != g {
                failures.push(format!("q={q}: {m:?} is not an automorphism"));
            }
        }
    }
    outcome(
        failures,
        format!("signs agree at q = 3, 7, 11; {tested} determinant-1 actions checked"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

/// Criteria whose statement is false as written. They still run and print FAIL.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    8,
    "the level-permutation count is wrong for some even-order classes, e.g. D 4:70",
)];

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("census", census),
        ("r=5 search", search_r5),
        ("r=6 search", search_r6),
        ("r=7 search", search_r7),
        ("r=8 search", search_r8),
        ("extremal constructions", constructions),
        ("uniqueness", uniqueness),
        ("counting identities", counting_identities),
        ("expected-count theorem", expected_counts),
        ("model equivalence", models),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = format!("{}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|f| *f == id || name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {id} ({name}, {:.1?}): {}",
            start.elapsed(),
            o.detail
        );
        match KNOWN_FAILURES.iter().find(|(k, _)| *k == i + 1) {
            Some((_, why)) if !o.pass => println!("     known failure: {why}"),
            Some(_) => println!("     listed as a known failure but passed"),
            None if !o.pass => unexpected += 1,
            None => {}
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
