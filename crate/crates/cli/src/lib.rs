//! Command-line driver. [`run`] executes one subcommand and returns the exit
//! code.
//!
//! Exit code 0 means every check passed and 1 means some check failed.
//! Usage or input errors give 2.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use tswitch::codec::{self, Record};
use tswitch::report::VerificationReport;
use tswitch::{census, fixtures, fourier, paley, special, tri, turan};
use tswitch::{format_rational, OrientedTwoGraph, Rational};

#[derive(Parser, Debug)]
#[command(
    name = "tswitch",
    version,
    about = "Tournament switching classes and Turán bounds for r-triangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Seed for randomized paths.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of Monte Carlo samples.
    #[arg(long, global = true)]
    samples: Option<u64>,
    /// Worker threads (default: all cores); results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Omit timing so identical invocations give identical bytes.
    #[arg(long, global = true)]
    stable_output: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count tournaments and switching classes on N vertices.
    Census {
        #[arg(long)]
        n: usize,
    },
    /// Search the switching classes on R vertices for special two-graphs.
    Special {
        #[arg(long)]
        r: usize,
    },
    /// Emit the Paley tournament and two-graph for a prime Q = 3 mod 4.
    Paley {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = Model::Augmented)]
        model: Model,
    },
    /// Build and verify the extremal hypergraph from the Paley two-graph.
    PaleyExtremal {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: usize,
        /// Also save the hypergraph as JSON.
        #[arg(long, value_name = "FILE")]
        hypergraph: Option<PathBuf>,
    },
    /// Verify a hypergraph given as JSON.
    Turan {
        #[arg(long)]
        input: PathBuf,
    },
    /// Check that only plus or minus the character gives an extremal 4-graph.
    Uniqueness {
        #[arg(long)]
        p: usize,
    },
    /// Expected number of subtournaments in the class of a `T` or `G` line.
    Expect {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Count isomorphism classes in the switching class of a `D` line.
    TriCount {
        #[arg(long)]
        input: PathBuf,
    },
    /// Same as tri-count on a random 3-tournament.
    TriDemo {
        #[arg(long)]
        n: usize,
    },
    /// Print and check the shipped figure tournaments.
    Fixtures,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    Augmented,
    Projective,
}

struct Output {
    body: String,
    pass: bool,
}

/// Runs the CLI, writing results to `stdout` and diagnostics to `stderr`.
pub fn run_with<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &out.body)
                    .with_context(|| format!("writing {}", path.display())),
                None => stdout
                    .write_all(out.body.as_bytes())
                    .context("writing output"),
            };
            match written {
                Ok(()) if out.pass => 0,
                Ok(()) => 1,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e:#}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            2
        }
    }
}

/// Runs the CLI against the process streams.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

fn execute(cli: &Cli) -> Result<Output> {
    match cli.threads {
        Some(0) => bail!("--threads must be at least 1"),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()?
            .install(|| dispatch(cli)),
        None => dispatch(cli),
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Census { n } => return census_cmd(cli, *n, start),
        Command::Special { r } => return special_cmd(cli, *r, start),
        Command::Paley { q, model } => return paley_cmd(*q, *model),
        Command::PaleyExtremal { q, r, hypergraph } => paley_extremal(*q, *r, hypergraph.as_ref())?,
        Command::Turan { input } => turan_cmd(input)?,
        Command::Uniqueness { p } => uniqueness_cmd(*p)?,
        Command::Expect { input, n } => expect_cmd(cli, input, *n)?,
        Command::TriCount { input } => {
            let g = codec::parse_three_tournament(&read(input)?)?;
            tri_report("tri-count", &g)?
        }
        Command::TriDemo { n } => tri_demo(cli, *n)?,
        Command::Fixtures => fixtures_cmd()?,
    };
    if !cli.stable_output {
        report.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    let body = if cli.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    Ok(Output {
        body,
        pass: report.overall_pass,
    })
}

fn show(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format_rational(q)
    }
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn runtime_line(cli: &Cli, start: Instant) -> String {
    if cli.stable_output {
        String::new()
    } else {
        format!("runtime {} ms\n", start.elapsed().as_millis())
    }
}

fn census_cmd(cli: &Cli, n: usize, start: Instant) -> Result<Output> {
    let r = census::census_report(n)?;
    let pass = r.mass_formula_ok && r.class_mass_ok;
    let body = if cli.json {
        let mut v = serde_json::to_value(&r)?;
        let obj = v.as_object_mut().expect("struct serializes to an object");
        obj.remove("mass_formula_ok");
        obj.remove("class_mass_ok");
        serde_json::to_string_pretty(&v)? + "\n"
    } else {
        let mut s = format!(
            "n = {n}: {} tournaments, {} switching classes\n",
            r.tournaments, r.switching_classes
        );
        for a in &r.aut_histogram {
            s += &format!("  |Aut(C)| = {}: {} classes\n", a.order, a.count);
        }
        s += &format!(
            "mass formula: {}\n",
            if r.mass_formula_ok { "ok" } else { "FAIL" }
        );
        s += &format!(
            "class mass formula: {}\n",
            if r.class_mass_ok { "ok" } else { "FAIL" }
        );
        s + &runtime_line(cli, start)
    };
    Ok(Output { body, pass })
}

fn special_cmd(cli: &Cli, r: usize, start: Instant) -> Result<Output> {
    let res = special::find_special(r)?;
    let bound_ok = res
        .specials
        .iter()
        .all(|s| s.lower_bound <= Rational::new(1, r as i128));
    let body = if cli.json {
        serde_json::to_string_pretty(&res)? + "\n"
    } else {
        let mut s = format!(
            "r = {r}: {} classes, {} special ({} of {} with trivial Aut)\n",
            res.classes_scanned,
            res.specials.len(),
            res.trivial_aut_special,
            res.trivial_aut_classes
        );
        for c in &res.specials {
            let best = if c.is_best { "  best" } else { "" };
            s += &format!(
                "{}  |Aut| = {}  bound {}{best}\n",
                c.two_graph,
                c.class_aut_order,
                format_rational(&c.lower_bound)
            );
        }
        s + &runtime_line(cli, start)
    };
    Ok(Output {
        body,
        pass: bound_ok,
    })
}

fn paley_cmd(q: u64, model: Model) -> Result<Output> {
    let body = match model {
        Model::Augmented => {
            let t = paley::paley_tournament(q)?.augment()?;
            format!(
                "{}\n{}\n",
                codec::format_tournament(&t),
                codec::format_two_graph(&OrientedTwoGraph::from_tournament(&t)?)
            )
        }
        Model::Projective => format!(
            "{}\n",
            codec::format_two_graph(&paley::projective_two_graph(q)?)
        ),
    };
    Ok(Output { body, pass: true })
}

fn hypergraph_checks(report: &mut VerificationReport, h: &turan::Hypergraph) -> Result<()> {
    let tri = turan::triangle_free_check(h);
    let witness = tri
        .witness
        .map_or_else(|| "none".to_string(), |w| format!("{w:?}"));
    report.check_with(
        "r-triangle free",
        "no (r+1)-set spans 3 edges",
        format!("witness {witness}"),
        tri.free,
    );
    let dc = turan::decaen_check(h);
    report.check_with(
        "de Caen bound",
        format!("at most {}", show(&dc.bound)),
        dc.edge_count,
        Rational::from_integer(dc.edge_count as i128) <= dc.bound,
    );
    Ok(())
}

fn paley_extremal(q: u64, r: usize, save: Option<&PathBuf>) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("paley-extremal");
    report.input("q", q).input("r", r);
    let big = paley::paley_two_graph(q)?;
    let n = q as usize + 1;
    let h = match r {
        4 => turan::pattern_hypergraph(&big, &paley::paley_two_graph(3)?)?,
        6 if q == 11 => turan::pattern_hypergraph(
            &big,
            &OrientedTwoGraph::from_tournament(&fixtures::figure1())?,
        )?,
        6 => bail!("the r = 6 construction uses q = 11"),
        _ => bail!("--r must be 4 or 6"),
    };
    if let Some(path) = save {
        fs::write(path, h.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    hypergraph_checks(&mut report, &h)?;
    let dc = turan::decaen_check(&h);
    report.check(
        "edges equal the de Caen bound",
        show(&dc.bound),
        h.edge_count(),
    );
    let lambda = turan::design_parameters(&h, r - 1)?.map_or("none".to_string(), |l| l.to_string());
    report.check(
        &format!("{}-({n},{r},{}) design", r - 1, n / r),
        n / r,
        lambda,
    );
    if r == 6 {
        let spans = turan::span_profile(&h, 7)?;
        let support: Vec<usize> = spans.keys().copied().collect();
        report.check_with(
            "7-set spans",
            "subset of [0, 2]",
            format!("{support:?}"),
            support.iter().all(|&k| k == 0 || k == 2),
        );
    }
    Ok(report)
}

fn turan_cmd(input: &PathBuf) -> Result<VerificationReport> {
    let h = turan::Hypergraph::from_json(&read(input)?)?;
    let mut report = VerificationReport::new("turan");
    report
        .input("file", input.display().to_string())
        .input("n", h.n())
        .input("r", h.r())
        .input("edges", h.edge_count());
    hypergraph_checks(&mut report, &h)?;
    let dc = turan::decaen_check(&h);
    report
        .input("de_caen_tight", dc.tight)
        .input("de_caen_design", dc.design_ok);
    if h.r() >= 2 {
        report.input("lambda", turan::design_parameters(&h, h.r() - 1)?);
    }
    if h.r() < h.n() {
        let spans: Vec<(usize, u64)> = turan::span_profile(&h, h.r() + 1)?.into_iter().collect();
        report.input("spans", spans);
    }
    Ok(report)
}

fn uniqueness_cmd(p: usize) -> Result<VerificationReport> {
    let u = fourier::verify_uniqueness_theorem(p)?;
    let chi = fourier::AdmissibleFunction::character(p)?;
    let mut pm = [
        codec::format_admissible(&chi),
        codec::format_admissible(&chi.negate()),
    ];
    pm.sort();
    let mut report = VerificationReport::new("uniqueness");
    report.input("p", p).input("candidates", u.candidates);
    let mut matches = u.convolution_matches.clone();
    matches.sort();
    let mut extremal = u.extremal.clone();
    extremal.sort();
    report.check("f*f = chi*chi", pm.join(" "), matches.join(" "));
    report.check("extremal", pm.join(" "), extremal.join(" "));
    report.check("(f*f)(0) = -(p-1) for all f", true, u.zero_value_ok);
    report.check("extremal implies convolution", true, u.implication_ok);
    report.check("H_chi is the Paley hypergraph", true, u.chi_matches_paley);
    report.check(
        "H_-chi is the image of H_chi under x -> -x",
        true,
        u.negation_isomorphic,
    );
    Ok(report)
}

fn class_from_record(text: &str) -> Result<OrientedTwoGraph> {
    match codec::parse_records(text)?.into_iter().next() {
        Some(Record::Tournament(t)) => Ok(OrientedTwoGraph::from_tournament(&t)?),
        Some(Record::TwoGraph(g)) => Ok(g),
        Some(other) => bail!(
            "expected a T or G line, got {}",
            codec::format_record(&other)
        ),
        None => bail!("input holds no records"),
    }
}

fn expect_cmd(cli: &Cli, input: &PathBuf, n: usize) -> Result<VerificationReport> {
    let g = class_from_record(&read(input)?)?;
    let exact = g.expected_subtournament_count(n)?;
    let mut report = VerificationReport::new("expect");
    report
        .input("class", codec::format_two_graph(&g))
        .input("n", n)
        .input("expected", format_rational(&exact))
        .input("class_aut_order", g.automorphism_count()?);
    if let Some(samples) = cli.samples {
        let seed = cli.seed.context("--samples requires --seed")?;
        let (mean, se) = g.sample_subtournament_count(n, samples, seed)?;
        let value = *exact.numer() as f64 / *exact.denom() as f64;
        report.input("samples", samples).input("seed", seed);
        report.check_with(
            "Monte Carlo within 5 standard errors",
            format!("{value:.6}"),
            format!("{mean:.6} ± {se:.6}"),
            (mean - value).abs() <= 5.0 * se || (se == 0.0 && mean == value),
        );
    }
    Ok(report)
}

fn tri_report(command: &str, g: &tri::ThreeTournament) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(command);
    report.input("three_tournament", codec::format_three_tournament(g));
    let aut = tri::tri_aut_group(g)?.len();
    let formula = tri::count_tri_iso_classes(g)?;
    if g.n() >= 4 {
        report.input("coherent_quadruples", tri::coherent_quadruples(g)?.edges());
    }
    report
        .input("class_aut_order", aut)
        .input("formula_count", formula);
    if (4..=5).contains(&g.n()) {
        let bf = tri::brute_force_tri_count(g)?;
        report.input("aut_orders", bf.aut_orders());
        report.check(
            "level-permutation formula equals direct count",
            bf.count,
            formula,
        );
    }
    Ok(report)
}

fn tri_demo(cli: &Cli, n: usize) -> Result<VerificationReport> {
    use rand::SeedableRng;
    let seed = cli.seed.context("tri-demo requires --seed")?;
    if !(3..=8).contains(&n) {
        bail!("--n must be between 3 and 8");
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let g = tri::ThreeTournament::random(n, &mut rng)?;
    let mut report = tri_report("tri-demo", &g)?;
    report.input("seed", seed);
    Ok(report)
}

fn fixtures_cmd() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("fixtures");
    for ((name, raw, t), aut) in fixtures::all().into_iter().zip([5usize, 9, 1]) {
        report.input(name, raw.trim());
        report.check(
            &format!("{name} round trip"),
            raw.trim(),
            codec::format_tournament(&codec::parse_tournament(raw)?),
        );
        let g = OrientedTwoGraph::from_tournament(&t)?;
        report.check(&format!("{name} class |Aut|"), aut, g.automorphism_count()?);
        report.check(&format!("{name} special"), true, special::is_special(&g)?);
    }
    Ok(report)
}
