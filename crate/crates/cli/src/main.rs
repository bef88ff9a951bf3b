//! `spanlab`: spans, optimal walks and structure of graphs from the command line.
//!
//! Exit status: 0 success, 1 a theorem check was violated, 2 usage or input
//! error, 3 a capacity limit was hit.

mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spanlab::graph::{metrics, to_graph6};
use spanlab::span::span;
use spanlab::structure::{
    end_cliques, interval_certificate, is_chordal, minimal_cut_sets, NonIntervalWitness, DEFAULT_CUT_CAP,
    DEFAULT_REPRESENTATION_CAP,
};
use spanlab::walks::DEFAULT_VERTEX_CAP;
use spanlab::{min_steps, verify_graph, Graph, RuleSet, SpanKind};

use input::InputArgs;
use report::{
    emit_report, AnalyzeResults, CutSetEntry, CutSetResults, GenerateResults, GeneratedGraph, GraphInfo, IntervalEntry,
    IntervalResults, KindSpans, MinwalkResults, OutputFormat, Report, Results, SpanResults, SpansByRule, VerifiedGraph,
    VerifyResults, Violation, WitnessEntry,
};

const CAP_ENV: &str = "SPANLAB_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "spanlab",
    version,
    about = "Spans of graphs, optimal walk pairs and span-1 structure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindFilter {
    Vertex,
    Edge,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rule {
    Traditional,
    Active,
    Lazy,
}

impl From<Rule> for RuleSet {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Traditional => RuleSet::Traditional,
            Rule::Active => RuleSet::Active,
            Rule::Lazy => RuleSet::Lazy,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertex and edge spans under each movement rule
    Span {
        #[command(flatten)]
        input: InputArgs,
        /// Only this rule (default: all three)
        #[arg(long, value_enum)]
        rule: Option<Rule>,
        #[arg(long, value_enum, default_value = "both")]
        kind: KindFilter,
        #[command(flatten)]
        output: Output,
    },
    /// Vertex span with a shortest pair of optimal walks
    Minwalk {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "traditional")]
        rule: Rule,
        /// Largest graph searched (default 10, or $SPANLAB_CAP)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Distances, interval certificate and minimal cut sets
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Largest graph given an interval representation and largest cut
        /// set enumerated (defaults 12 and 4, or $SPANLAB_CAP for both)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Check every theorem on one graph or a run of seeds
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Number of consecutive seeds, starting at --seed, for random families
        #[arg(long)]
        seeds: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Print graphs in graph6 form
    Generate {
        #[command(flatten)]
        input: InputArgs,
        /// Number of consecutive seeds, starting at --seed, for random families
        #[arg(long)]
        seeds: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Capacity(String),
}

impl From<spanlab::Error> for Failure {
    fn from(e: spanlab::Error) -> Self {
        match e {
            spanlab::Error::Capacity { .. } => Failure::Capacity(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Cap from the flag, else the environment, else `default`.
fn resolve_cap(flag: Option<u64>, default: usize) -> Result<usize, Failure> {
    if let Some(cap) = flag {
        return Ok(cap as usize);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(cap) if cap > 0 => Ok(cap),
            _ => Err(Failure::Usage(format!(
                "{CAP_ENV} must be a positive integer, got `{v}`"
            ))),
        },
        Err(_) => Ok(default),
    }
}

fn names(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

fn run_span(input: &InputArgs, rule: Option<Rule>, kind: KindFilter) -> Result<Report, Failure> {
    let loaded = input.load()?;
    let g = &loaded.graph;
    let rules: Vec<RuleSet> = match rule {
        Some(r) => vec![r.into()],
        None => RuleSet::ALL.to_vec(),
    };
    let kinds: Vec<SpanKind> = match kind {
        KindFilter::Vertex => vec![SpanKind::Vertex],
        KindFilter::Edge => vec![SpanKind::Edge],
        KindFilter::Both => SpanKind::ALL.to_vec(),
    };
    let mut spans = SpansByRule::default();
    for rule in rules {
        let mut by_kind = KindSpans::default();
        for &kind in &kinds {
            let value = Some(span(g, rule, kind)?.span);
            match kind {
                SpanKind::Vertex => by_kind.vertex = value,
                SpanKind::Edge => by_kind.edge = value,
            }
        }
        *spans.slot(rule) = Some(by_kind);
    }
    Ok(Report::new(
        "span",
        GraphInfo::of(&loaded.source, g),
        Results::Span(SpanResults { spans }),
    ))
}

fn run_minwalk(input: &InputArgs, rule: Rule, cap: Option<u64>) -> Result<Report, Failure> {
    let loaded = input.load()?;
    let g = &loaded.graph;
    let cap = resolve_cap(cap, DEFAULT_VERTEX_CAP)?;
    let result = min_steps(g, rule.into(), cap)?;
    Ok(Report::new(
        "minwalk",
        GraphInfo::of(&loaded.source, g),
        Results::Minwalk(MinwalkResults::new(g, result.span, &result.walk)),
    ))
}

fn run_analyze(input: &InputArgs, cap: Option<u64>) -> Result<Report, Failure> {
    let loaded = input.load()?;
    let g = &loaded.graph;
    let representation_cap = resolve_cap(cap, DEFAULT_REPRESENTATION_CAP)?;
    let cut_cap = resolve_cap(cap, DEFAULT_CUT_CAP)?;
    let m = metrics(g);
    let cert = interval_certificate(g, representation_cap)?;
    let ends = if cert.is_interval {
        Some(
            end_cliques(g, representation_cap)?
                .iter()
                .map(|c| names(g, c))
                .collect(),
        )
    } else {
        None
    };
    let witness = cert.witness.as_ref().map(|w| match w {
        NonIntervalWitness::ChordlessCycle { cycle } => WitnessEntry {
            kind: "chordless_cycle",
            vertices: names(g, cycle),
        },
        NonIntervalWitness::AsteroidalTriple { triple } => WitnessEntry {
            kind: "asteroidal_triple",
            vertices: names(g, triple),
        },
    });
    let catalog = minimal_cut_sets(g, cut_cap)?;
    Ok(Report::new(
        "analyze",
        GraphInfo::of(&loaded.source, g),
        Results::Analyze(Box::new(AnalyzeResults {
            radius: m.radius,
            diameter: m.diameter,
            girth: m.girth,
            eccentricity: m.eccentricity.clone(),
            chordal: is_chordal(g).is_chordal(),
            interval: IntervalResults {
                is_interval: cert.is_interval,
                representation: cert.representation.as_ref().map(|rep| {
                    rep.iter()
                        .enumerate()
                        .map(|(v, &(left, right))| IntervalEntry {
                            vertex: g.label(v).to_string(),
                            left,
                            right,
                        })
                        .collect()
                }),
                clique_order: cert
                    .clique_order
                    .as_ref()
                    .map(|o| o.iter().map(|c| names(g, c)).collect()),
                end_cliques: ends,
                witness,
            },
            cut_sets: CutSetResults {
                cap: catalog.cap,
                sets: catalog
                    .sets
                    .iter()
                    .map(|c| CutSetEntry {
                        set: names(g, &c.set),
                        components: c.components.iter().map(|x| names(g, x)).collect(),
                        is_clique: c.is_clique,
                    })
                    .collect(),
            },
        })),
    ))
}

/// The graphs named by the input, one per seed for random families.
fn seeded_graphs(input: &InputArgs, seeds: Option<u64>) -> Result<(String, Vec<(String, Graph)>), Failure> {
    let Some(count) = seeds else {
        let loaded = input.load()?;
        return Ok((loaded.source.clone(), vec![(loaded.source, loaded.graph)]));
    };
    let family = match input.family()? {
        Some(f) if f.is_random() => f,
        _ => return Err(Failure::Usage("--seeds needs a random --family".into())),
    };
    let start = input.seed.unwrap_or(0);
    let mut graphs = Vec::new();
    for seed in start..start + count {
        let f = family.with_seed(seed);
        graphs.push((f.to_string(), f.generate()?));
    }
    let described = format!("{} (seeds {start}..{})", family.with_seed(start), start + count);
    Ok((described, graphs))
}

fn run_verify(input: &InputArgs, seeds: Option<u64>) -> Result<Report, Failure> {
    let (source, graphs) = seeded_graphs(input, seeds)?;
    let mut verified = Vec::new();
    let mut violations = Vec::new();
    for (source, g) in graphs {
        let report = verify_graph(&g)?;
        for c in report.violations() {
            violations.push(Violation {
                source: source.clone(),
                check: c.name.clone(),
                witness: c.witness.clone(),
            });
        }
        verified.push(VerifiedGraph { source, report });
    }
    let info = match verified.as_slice() {
        [_] if seeds.is_none() => GraphInfo::of(&source, &input.load()?.graph),
        _ => GraphInfo::source_only(&source),
    };
    Ok(Report::new(
        "verify",
        info,
        Results::Verify(VerifyResults {
            checked: verified.len(),
            graphs: verified,
            violations,
        }),
    ))
}

fn run_generate(input: &InputArgs, seeds: Option<u64>) -> Result<Report, Failure> {
    let (source, graphs) = seeded_graphs(input, seeds)?;
    Ok(Report::new(
        "generate",
        GraphInfo::source_only(&source),
        Results::Generate(GenerateResults {
            graphs: graphs
                .iter()
                .map(|(s, g)| GeneratedGraph {
                    source: s.clone(),
                    graph6: to_graph6(g),
                })
                .collect(),
        }),
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, format) = match &cli.command {
        Command::Span {
            input,
            rule,
            kind,
            output,
        } => (run_span(input, *rule, *kind), output.format),
        Command::Minwalk {
            input,
            rule,
            cap,
            output,
        } => (run_minwalk(input, *rule, *cap), output.format),
        Command::Analyze { input, cap, output } => (run_analyze(input, *cap), output.format),
        Command::Verify { input, seeds, output } => (run_verify(input, *seeds), output.format),
        Command::Generate { input, seeds, output } => (run_generate(input, *seeds), output.format),
    };
    match result {
        Ok(report) => {
            let violated = matches!(&report.results, Results::Verify(v) if !v.violations.is_empty());
            let bytes = emit_report(&report, format);
            if std::io::stdout().write_all(&bytes).is_err() {
                return ExitCode::from(2);
            }
            if violated {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("capacity exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}
