//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a checked property fails, 2 on usage or
//! input errors. `CAYLEYFORGE_THREADS` caps the worker pool.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cayley::{build_ball, strip_labels, CayleyBall, FrontierPolicy, GraphExport, Side};
use crate::iso::{
    certified_mn, escalate_separation, find_isomorphism, verify_explicit_iso, SearchResult, Verdict,
    DEFAULT_BUDGET,
};
use crate::presentations::{load_presentation, system_m, truncated_system_m, A, B};
use crate::rewrite::{PairKind, RewritingSystem, DEFAULT_SCHEMA_BOUND};
use crate::word::Word;

pub const THREADS_ENV: &str = "CAYLEYFORGE_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "cayleyforge",
    version,
    about = "String rewriting, Cayley-graph balls and isomorphism checks for finitely generated monoids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Right,
    Left,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Closed,
    WithFrontier,
}

impl From<PolicyArg> for FrontierPolicy {
    fn from(p: PolicyArg) -> FrontierPolicy {
        match p {
            PolicyArg::Closed => FrontierPolicy::Closed,
            PolicyArg::WithFrontier => FrontierPolicy::WithFrontier,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a word to normal form and print every rewrite step.
    Reduce {
        /// Presentation file, or builtin:M / builtin:N.
        #[arg(short, long)]
        presentation: String,
        /// Word to reduce, written as a run of symbols.
        #[arg(short, long, allow_hyphen_values = true)]
        word: String,
    },
    /// Check that every critical pair joins (local confluence).
    Confluence {
        #[arg(short, long)]
        presentation: String,
        /// Largest exponent at which rule schemas are instantiated.
        #[arg(long, default_value_t = DEFAULT_SCHEMA_BOUND)]
        schema_bound: usize,
    },
    /// Build a Cayley-graph ball and write it as text, DOT or JSON.
    Ball {
        #[arg(short, long)]
        presentation: String,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        #[arg(short, long)]
        radius: usize,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = PolicyArg::Closed)]
        policy: PolicyArg,
        /// Drop generator labels before export.
        #[arg(long)]
        unlabelled: bool,
        #[arg(long, default_value_t = DEFAULT_SCHEMA_BOUND)]
        schema_bound: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify the explicit isomorphism between the right balls of M and N,
    /// and confirm it with an independent search.
    VerifyIso {
        #[arg(short, long, default_value_t = 6)]
        radius: usize,
        /// Node-expansion limit for the independent search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Show that a b^(n0+1) a is irreducible under the first n0-1 relations of
    /// M but equals a b a in M.
    TruncationTest {
        #[arg(long)]
        n0: usize,
    },
    /// Look for the smallest radius at which the left balls of M and N differ.
    LeftNoniso {
        #[arg(long, default_value_t = 8)]
        max_radius: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search for an isomorphism between two balls stored as JSON.
    FindIso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Outcome {
    text: String,
    code: u8,
    output: Option<PathBuf>,
}

impl Outcome {
    fn new(text: String, code: u8) -> Self {
        Outcome {
            text,
            code,
            output: None,
        }
    }
}

/// Parses arguments, runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code() as u8;
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    configure_threads();
    match dispatch(cli.command) {
        Ok(outcome) => {
            let written = match &outcome.output {
                Some(path) => std::fs::write(path, &outcome.text).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => outcome.code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    2
                }
            }
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // fails only if the pool was already set up, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn dispatch(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Reduce { presentation, word } => cmd_reduce(&presentation, &word),
        Command::Confluence {
            presentation,
            schema_bound,
        } => cmd_confluence(&presentation, schema_bound),
        Command::Ball {
            presentation,
            side,
            radius,
            format,
            policy,
            unlabelled,
            schema_bound,
            output,
        } => {
            let mut o = cmd_ball(&presentation, side.into(), radius, format, policy.into(), unlabelled, schema_bound)?;
            o.output = output;
            Ok(o)
        }
        Command::VerifyIso {
            radius,
            budget,
            format,
            output,
        } => {
            let mut o = cmd_verify_iso(radius, budget, format)?;
            o.output = output;
            Ok(o)
        }
        Command::TruncationTest { n0 } => cmd_truncation_test(n0),
        Command::LeftNoniso {
            max_radius,
            budget,
            format,
        } => cmd_left_noniso(max_radius, budget, format),
        Command::FindIso {
            first,
            second,
            budget,
            output,
        } => {
            let mut o = cmd_find_iso(&first, &second, budget)?;
            o.output = output;
            Ok(o)
        }
    }
}

fn load(presentation: &str) -> Result<RewritingSystem, Failure> {
    Ok(load_presentation(presentation)?)
}

pub fn cmd_reduce_text(system: &RewritingSystem, word: &Word) -> String {
    let a = system.alphabet();
    let (nf, steps) = system
        .normal_form_trace(word)
        .expect("word was parsed against this alphabet");
    let mut s = String::new();
    let _ = writeln!(s, "input: {}", a.render_nonempty(word));
    for (i, step) in steps.iter().enumerate() {
        let m = &step.applied;
        let _ = writeln!(
            s,
            "step {}: rule {} [{}] at position {}{} -> {}",
            i + 1,
            m.rule_index,
            system.describe_rule(m.rule_index),
            m.position,
            m.exponent.map(|n| format!(" with n = {n}")).unwrap_or_default(),
            a.render_nonempty(&step.result)
        );
    }
    let _ = writeln!(s, "steps: {}", steps.len());
    let _ = writeln!(s, "normal form: {}", a.render_nonempty(&nf));
    s
}

fn cmd_reduce(presentation: &str, word: &str) -> Result<Outcome, Failure> {
    let system = load(presentation)?;
    let w = system.alphabet().parse(word)?;
    Ok(Outcome::new(cmd_reduce_text(&system, &w), 0))
}

fn cmd_confluence(presentation: &str, schema_bound: usize) -> Result<Outcome, Failure> {
    let system = load(presentation)?;
    let a = system.alphabet();
    let mut s = String::new();
    let _ = writeln!(s, "presentation: {presentation}");
    for i in 0..system.rule_count() {
        let _ = writeln!(s, "  rule {i}: {}", system.describe_rule(i));
    }
    let _ = writeln!(s, "length-reducing: {}", system.check_length_reducing());
    let report = system.check_local_confluence(schema_bound);
    let _ = writeln!(
        s,
        "critical pairs: {} ({} overlaps, {} containments)",
        report.pairs_checked(),
        report.overlaps,
        report.containments
    );
    let _ = writeln!(
        s,
        "overlaps resolving to xyxyx: {}/{}",
        report.alternating_resolutions, report.overlaps
    );
    for f in &report.failures {
        let kind = match f.pair.kind {
            PairKind::Overlap => "overlap",
            PairKind::Containment => "containment",
        };
        let _ = writeln!(
            s,
            "non-joining {kind}: {} -> {} | {}; normal forms {} != {}",
            a.render_nonempty(&f.pair.source),
            a.render_nonempty(&f.pair.left_result),
            a.render_nonempty(&f.pair.right_result),
            a.render_nonempty(&f.left_normal_form),
            a.render_nonempty(&f.right_normal_form)
        );
    }
    if let Some(bound) = report.schema_bound {
        let _ = writeln!(
            s,
            "bounded certificate: schema instances checked for exponents up to {bound} only"
        );
    }
    let code = if report.passed() {
        let _ = writeln!(s, "result: locally confluent (complete)");
        0
    } else {
        let _ = writeln!(s, "result: NOT locally confluent ({} failing pairs)", report.failures.len());
        1
    };
    Ok(Outcome::new(s, code))
}

fn ball_text(ball: &CayleyBall) -> String {
    let a = &ball.alphabet;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "side: {}\nradius: {}\npolicy: {}\nvertices: {}\nedges: {}\nfrontier: {}",
        ball.side.as_str(),
        ball.radius,
        ball.policy.as_str(),
        ball.vertices.len(),
        ball.edges.len(),
        ball.frontier.len()
    );
    let mut per_vertex: Vec<Vec<String>> = vec![Vec::new(); ball.vertices.len()];
    for e in &ball.edges {
        per_vertex[e.src].push(format!("{}->{}", a.display(e.generator), e.dst));
    }
    for f in &ball.frontier {
        per_vertex[f.src].push(format!("{}->[{}]", a.display(f.generator), a.render(&f.target)));
    }
    for (i, v) in ball.vertices.iter().enumerate() {
        let _ = writeln!(s, "{i} {}: {}", a.render_nonempty(v), per_vertex[i].join(" "));
    }
    s
}

fn cmd_ball(
    presentation: &str,
    side: Side,
    radius: usize,
    format: Format,
    policy: FrontierPolicy,
    unlabelled: bool,
    schema_bound: usize,
) -> Result<Outcome, Failure> {
    let system = load(presentation)?;
    let complete = system.certify(schema_bound).map_err(|r| {
        Failure(format!(
            "{presentation} is not locally confluent at schema bound {schema_bound} ({} non-joining pairs); balls need unique normal forms",
            r.failures.len()
        ))
    })?;
    let ball = build_ball(&complete, side, radius, policy);
    let text = if unlabelled {
        let g = strip_labels(&ball);
        match format {
            Format::Dot => g.to_dot(),
            Format::Json => g.to_json(),
            Format::Text => {
                let mut s = format!("vertices: {}\narcs: {}\n", g.n, g.arcs.len());
                for (x, y) in &g.arcs {
                    let _ = writeln!(s, "{x} -> {y}");
                }
                s
            }
        }
    } else {
        match format {
            Format::Dot => ball.to_dot(),
            Format::Json => ball.to_json(),
            Format::Text => ball_text(&ball),
        }
    };
    Ok(Outcome::new(text, 0))
}

#[derive(Serialize)]
struct VerifyIsoJson {
    radius: usize,
    vertices: (usize, usize),
    arcs: (usize, usize),
    explicit: crate::iso::IsoReport,
    search_status: &'static str,
    search_expansions: u64,
    search_mapping: Option<Vec<usize>>,
    verified: bool,
}

fn cmd_verify_iso(radius: usize, budget: u64, format: Format) -> Result<Outcome, Failure> {
    let (m, n) = certified_mn();
    let bm = build_ball(&m, Side::Right, radius, FrontierPolicy::Closed);
    let bn = build_ball(&n, Side::Right, radius, FrontierPolicy::Closed);
    let explicit = verify_explicit_iso(&bm, &bn)?;
    let gm = strip_labels(&bm);
    let gn = strip_labels(&bn);
    let search = find_isomorphism(&gm, &gn, budget);
    let (status, validated) = match &search.result {
        SearchResult::Found(cert) => ("found", cert.validate(&gm, &gn).is_ok()),
        SearchResult::NotIsomorphic => ("not_isomorphic", false),
        SearchResult::Indeterminate => ("budget_exhausted", false),
    };
    let verified = explicit.verified() && validated;
    let text = match format {
        Format::Json => {
            let doc = VerifyIsoJson {
                radius,
                vertices: (gm.n, gn.n),
                arcs: (gm.arcs.len(), gn.arcs.len()),
                search_status: status,
                search_expansions: search.expansions,
                search_mapping: search.certificate().map(|c| c.mapping.clone()),
                explicit,
                verified,
            };
            let mut s = serde_json::to_string_pretty(&doc)?;
            s.push('\n');
            s
        }
        Format::Text | Format::Dot => {
            let mut s = String::new();
            let _ = writeln!(s, "radius: {radius}");
            let _ = writeln!(s, "vertices: {} <-> {}", gm.n, gn.n);
            let _ = writeln!(s, "arcs: {} <-> {}", gm.arcs.len(), gn.arcs.len());
            match &explicit.witness {
                None => {
                    let _ = writeln!(
                        s,
                        "explicit map f: verified ({} vertices, {} arc classes checked in both directions)",
                        explicit.vertices_checked, explicit.arcs_checked
                    );
                }
                Some(w) => {
                    let _ = writeln!(s, "explicit map f: FAILED: {w}");
                }
            }
            let _ = match (&search.result, validated) {
                (SearchResult::Found(_), true) => writeln!(
                    s,
                    "independent search: certificate found after {} expansions, validated",
                    search.expansions
                ),
                (SearchResult::Found(_), false) => writeln!(s, "independent search: certificate FAILED validation"),
                (SearchResult::NotIsomorphic, _) => writeln!(s, "independent search: no isomorphism exists"),
                (SearchResult::Indeterminate, _) => {
                    writeln!(s, "independent search: budget of {budget} expansions exhausted")
                }
            };
            let _ = writeln!(s, "result: {}", if verified { "isomorphic" } else { "NOT verified" });
            s
        }
    };
    Ok(Outcome::new(text, if verified { 0 } else { 1 }))
}

fn cmd_truncation_test(n0: usize) -> Result<Outcome, Failure> {
    let truncated = truncated_system_m(n0)?;
    let full = system_m();
    let a = full.alphabet();
    let mut w = Word::power(B, n0 + 1).prepended(A);
    w.push(A);
    let aba = Word(vec![A, B, A]);
    let irreducible = truncated.is_irreducible(&w)?;
    let nf = full.normal_form(&w)?;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "truncated system: a b^n a -> a b a for n = 2..={n0} ({} rules)",
        truncated.rules().len()
    );
    let _ = writeln!(s, "word: a b^{} a = {}", n0 + 1, a.render(&w));
    let _ = writeln!(
        s,
        "irreducible under truncated system: {}",
        if irreducible { "yes" } else { "no" }
    );
    let _ = writeln!(s, "normal form in M: {}", a.render(&nf));
    let pass = irreducible && nf == aba;
    let _ = writeln!(
        s,
        "result: {}",
        if pass {
            "pass (no finite subset of the relations derives this equality)"
        } else {
            "FAIL"
        }
    );
    Ok(Outcome::new(s, if pass { 0 } else { 1 }))
}

fn cmd_left_noniso(max_radius: usize, budget: u64, format: Format) -> Result<Outcome, Failure> {
    if max_radius == 0 {
        return Err(Failure("max radius must be at least 1".into()));
    }
    let (m, n) = certified_mn();
    let report = escalate_separation(&m, &n, Side::Left, max_radius, budget);
    let code = if report.separated_at.is_some() { 0 } else { 1 };
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report)?;
            s.push('\n');
            s
        }
        Format::Text | Format::Dot => {
            let mut s = String::new();
            for o in &report.outcomes {
                let verdict = match &o.verdict {
                    Verdict::FingerprintsDiffer { invariant } => format!("separated ({invariant} differs)"),
                    Verdict::SearchExhausted { expansions } => {
                        format!("separated (exhaustive search, {expansions} expansions)")
                    }
                    Verdict::Isomorphic { .. } => "not separated (balls are isomorphic)".to_string(),
                    Verdict::Indeterminate { expansions } => {
                        format!("undecided (budget of {expansions} expansions exhausted)")
                    }
                };
                let _ = writeln!(
                    s,
                    "radius {}: {} vs {} vertices, {} vs {} arcs: {verdict}",
                    o.radius, o.vertices.0, o.vertices.1, o.arcs.0, o.arcs.1
                );
            }
            match report.separating_outcome() {
                Some(o) => {
                    let _ = writeln!(
                        s,
                        "result: left balls of M and N first differ at radius {}; this separates the finite balls",
                        o.radius
                    );
                }
                None => {
                    let _ = writeln!(s, "result: not separated up to radius {max_radius}");
                }
            }
            s
        }
    };
    Ok(Outcome::new(text, code))
}

#[derive(Serialize)]
struct FindIsoJson {
    status: &'static str,
    mapping: Vec<usize>,
    witness: Option<String>,
    expansions: u64,
}

fn cmd_find_iso(first: &PathBuf, second: &PathBuf, budget: u64) -> Result<Outcome, Failure> {
    let read = |p: &PathBuf| -> Result<CayleyBall, Failure> {
        let text = std::fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
        CayleyBall::from_json(&text).map_err(|e| Failure(format!("{}: {e}", p.display())))
    };
    let g1 = strip_labels(&read(first)?);
    let g2 = strip_labels(&read(second)?);
    let search = find_isomorphism(&g1, &g2, budget);
    let (status, mapping, witness, code) = match &search.result {
        SearchResult::Found(cert) => match cert.validate(&g1, &g2) {
            Ok(()) => ("verified", cert.mapping.clone(), None, 0),
            Err(w) => ("counterexample", cert.mapping.clone(), Some(w.to_string()), 1),
        },
        SearchResult::NotIsomorphic => ("not_isomorphic", vec![], None, 1),
        SearchResult::Indeterminate => ("indeterminate", vec![], None, 1),
    };
    let doc = FindIsoJson {
        status,
        mapping,
        witness,
        expansions: search.expansions,
    };
    let mut s = serde_json::to_string_pretty(&doc)?;
    s.push('\n');
    Ok(Outcome::new(s, code))
}
