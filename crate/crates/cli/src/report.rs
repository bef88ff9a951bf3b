//! Report types and their text and JSON renderings.
//!
//! Every JSON report has the shape
//! `{"tool", "version", "command", "graph": {...}, "results": {...}}`.
//! Vertices always appear by label.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use spanlab::graph::{metrics, to_graph6};
use spanlab::verify::{CheckStatus, TheoremReport, Witness};
use spanlab::{Graph, RuleSet, WalkPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub graph: GraphInfo,
    pub results: Results,
}

impl Report {
    pub fn new(command: &'static str, graph: GraphInfo, results: Results) -> Self {
        Report {
            tool: "spanlab",
            version: env!("CARGO_PKG_VERSION"),
            command,
            graph,
            results,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GraphInfo {
    pub source: String,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub details: Option<GraphDetails>,
}

#[derive(Debug, Serialize)]
pub struct GraphDetails {
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub labels: Vec<String>,
}

impl GraphInfo {
    pub fn of(source: &str, g: &Graph) -> Self {
        GraphInfo {
            source: source.to_string(),
            details: Some(GraphDetails {
                n: g.n(),
                m: g.m(),
                graph6: to_graph6(g),
                labels: g.labels().to_vec(),
            }),
        }
    }

    pub fn source_only(source: &str) -> Self {
        GraphInfo {
            source: source.to_string(),
            details: None,
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Results {
    Span(SpanResults),
    Minwalk(MinwalkResults),
    Analyze(Box<AnalyzeResults>),
    Verify(VerifyResults),
    Generate(GenerateResults),
}

/// Spans keyed by rule, then kind; filtered-out entries are omitted.
#[derive(Debug, Default, Serialize)]
pub struct SpanResults {
    pub spans: SpansByRule,
}

#[derive(Debug, Default, Serialize)]
pub struct SpansByRule {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub traditional: Option<KindSpans>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub active: Option<KindSpans>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lazy: Option<KindSpans>,
}

impl SpansByRule {
    pub fn slot(&mut self, rule: RuleSet) -> &mut Option<KindSpans> {
        match rule {
            RuleSet::Traditional => &mut self.traditional,
            RuleSet::Active => &mut self.active,
            RuleSet::Lazy => &mut self.lazy,
        }
    }

    fn entries(&self) -> impl Iterator<Item = (RuleSet, &KindSpans)> {
        RuleSet::ALL
            .into_iter()
            .zip([&self.traditional, &self.active, &self.lazy])
            .filter_map(|(rule, k)| k.as_ref().map(|k| (rule, k)))
    }
}

#[derive(Debug, Default, Serialize)]
pub struct KindSpans {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<u32>,
}

#[derive(Debug, Serialize)]
pub struct MinwalkResults {
    pub rule: &'static str,
    pub span: u32,
    pub moves: usize,
    pub alice: Vec<String>,
    pub bob: Vec<String>,
    /// Distance between the walkers at each time step.
    pub distances: Vec<u32>,
}

impl MinwalkResults {
    pub fn new(g: &Graph, span: u32, w: &WalkPair) -> Self {
        let dist = metrics(g).dist;
        let names = |walk: &[usize]| walk.iter().map(|&v| g.label(v).to_string()).collect();
        MinwalkResults {
            rule: w.rule.name(),
            span,
            moves: w.moves,
            alice: names(&w.alice),
            bob: names(&w.bob),
            distances: w.alice.iter().zip(&w.bob).map(|(&a, &b)| dist[a][b]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AnalyzeResults {
    pub radius: u32,
    pub diameter: u32,
    pub girth: Option<u32>,
    pub eccentricity: Vec<u32>,
    pub chordal: bool,
    pub interval: IntervalResults,
    pub cut_sets: CutSetResults,
}

#[derive(Debug, Serialize)]
pub struct IntervalResults {
    pub is_interval: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representation: Option<Vec<IntervalEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique_order: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub end_cliques: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessEntry>,
}

#[derive(Debug, Serialize)]
pub struct IntervalEntry {
    pub vertex: String,
    pub left: i64,
    pub right: i64,
}

#[derive(Debug, Serialize)]
pub struct WitnessEntry {
    /// `chordless_cycle` or `asteroidal_triple`.
    pub kind: &'static str,
    pub vertices: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CutSetResults {
    /// Largest set size searched.
    pub cap: usize,
    pub sets: Vec<CutSetEntry>,
}

#[derive(Debug, Serialize)]
pub struct CutSetEntry {
    pub set: Vec<String>,
    pub components: Vec<Vec<String>>,
    pub is_clique: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyResults {
    pub checked: usize,
    pub graphs: Vec<VerifiedGraph>,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Serialize)]
pub struct VerifiedGraph {
    pub source: String,
    #[serde(flatten)]
    pub report: TheoremReport,
}

#[derive(Debug, Serialize)]
pub struct Violation {
    pub source: String,
    pub check: String,
    pub witness: Option<Witness>,
}

#[derive(Debug, Serialize)]
pub struct GenerateResults {
    pub graphs: Vec<GeneratedGraph>,
}

#[derive(Debug, Serialize)]
pub struct GeneratedGraph {
    pub source: String,
    pub graph6: String,
}

fn braces(vs: &[String]) -> String {
    format!("{{{}}}", vs.join(", "))
}

fn status_name(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Holds => "holds",
        CheckStatus::Violated => "violated",
        CheckStatus::NotApplicable => "not-applicable",
    }
}

fn text(report: &Report) -> String {
    let mut out = String::new();
    // generate prints bare graph6 lines so the output can be piped back in
    if let Results::Generate(r) = &report.results {
        for g in &r.graphs {
            writeln!(out, "{}", g.graph6).unwrap();
        }
        return out;
    }
    writeln!(out, "source: {}", report.graph.source).unwrap();
    if let Some(d) = &report.graph.details {
        writeln!(out, "vertices: {}", d.n).unwrap();
        writeln!(out, "edges: {}", d.m).unwrap();
    }
    match &report.results {
        Results::Span(r) => {
            for (rule, kinds) in r.spans.entries() {
                for (kind, value) in [("vertex", kinds.vertex), ("edge", kinds.edge)] {
                    if let Some(value) = value {
                        writeln!(out, "{rule} {kind} {value}").unwrap();
                    }
                }
            }
        }
        Results::Minwalk(r) => {
            writeln!(out, "rule: {}", r.rule).unwrap();
            writeln!(out, "span: {}", r.span).unwrap();
            writeln!(out, "moves: {}", r.moves).unwrap();
            writeln!(out, "step alice bob distance").unwrap();
            for (t, ((a, b), d)) in r.alice.iter().zip(&r.bob).zip(&r.distances).enumerate() {
                writeln!(out, "{t} {a} {b} {d}").unwrap();
            }
        }
        Results::Analyze(r) => {
            writeln!(out, "radius: {}", r.radius).unwrap();
            writeln!(out, "diameter: {}", r.diameter).unwrap();
            match r.girth {
                Some(g) => writeln!(out, "girth: {g}").unwrap(),
                None => writeln!(out, "girth: acyclic").unwrap(),
            }
            writeln!(out, "chordal: {}", r.chordal).unwrap();
            writeln!(out, "interval: {}", r.interval.is_interval).unwrap();
            if let Some(w) = &r.interval.witness {
                writeln!(out, "witness: {} {}", w.kind, w.vertices.join(" ")).unwrap();
            }
            if let Some(rep) = &r.interval.representation {
                for e in rep {
                    writeln!(out, "interval {} [{}, {}]", e.vertex, e.left, e.right).unwrap();
                }
            }
            if let Some(order) = &r.interval.clique_order {
                let cliques: Vec<String> = order.iter().map(|c| braces(c)).collect();
                writeln!(out, "clique order: {}", cliques.join(" ")).unwrap();
            }
            if let Some(ends) = &r.interval.end_cliques {
                let cliques: Vec<String> = ends.iter().map(|c| braces(c)).collect();
                writeln!(out, "end cliques: {}", cliques.join(" ")).unwrap();
            }
            writeln!(
                out,
                "minimal cut sets (size <= {}): {}",
                r.cut_sets.cap,
                r.cut_sets.sets.len()
            )
            .unwrap();
            for c in &r.cut_sets.sets {
                let comps: Vec<String> = c.components.iter().map(|x| braces(x)).collect();
                let kind = if c.is_clique { "clique" } else { "non-clique" };
                writeln!(out, "cut {} {kind} components {}", braces(&c.set), comps.join(" ")).unwrap();
            }
        }
        Results::Verify(r) => {
            for g in &r.graphs {
                let violated = g.report.violations().count();
                writeln!(
                    out,
                    "graph {} {}: {} checks, {violated} violated",
                    g.source,
                    g.report.graph_id,
                    g.report.checks.len()
                )
                .unwrap();
                for c in &g.report.checks {
                    writeln!(out, "  {} {}", c.name, status_name(c.status)).unwrap();
                }
            }
            for v in &r.violations {
                let message = v.witness.as_ref().map_or("", |w| w.message.as_str());
                writeln!(out, "violation {} {}: {message}", v.source, v.check).unwrap();
            }
            writeln!(out, "checked: {}", r.checked).unwrap();
            writeln!(out, "violations: {}", r.violations.len()).unwrap();
        }
        Results::Generate(_) => unreachable!("handled above"),
    }
    out
}

pub fn emit_report(report: &Report, format: OutputFormat) -> Vec<u8> {
    match format {
        OutputFormat::Text => text(report).into_bytes(),
        OutputFormat::Json => {
            let mut bytes = serde_json::to_vec_pretty(report).expect("reports serialize");
            bytes.push(b'\n');
            bytes
        }
    }
}
