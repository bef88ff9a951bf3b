//! Theorem checks producing [`TheoremReport`]s.

use std::collections::BTreeMap;

use serde::Serialize;

use super::oracle::{brute_force_span, DEFAULT_ORACLE_CAP};
use crate::error::{Error, Result};
use crate::graph::{metrics, to_graph6, Graph};
use crate::product::RuleSet;
use crate::span::{span_report, vertex_span, SpanKind};
use crate::structure::chordal::find_induced_subdivided_claw;
use crate::structure::cuts::{augment, minimal_cut_sets};
use crate::structure::interval::{end_cliques, is_interval, DEFAULT_REPRESENTATION_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Holds,
    Violated,
    NotApplicable,
}

/// Enough to replay a violation: the graph and the values that broke it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub message: String,
    pub values: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    /// Why the check was skipped, when not applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub graph_id: String,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    fn new(h: &Graph) -> Self {
        TheoremReport {
            graph_id: to_graph6(h),
            checks: Vec::new(),
        }
    }

    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Violated)
    }

    pub fn has_violation(&self) -> bool {
        self.violations().next().is_some()
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }

    fn record(&mut self, name: impl Into<String>, outcome: Outcome) {
        let name = name.into();
        let check = match outcome {
            Outcome::Holds => Check {
                name,
                status: CheckStatus::Holds,
                reason: None,
                witness: None,
            },
            Outcome::Skip(reason) => Check {
                name,
                status: CheckStatus::NotApplicable,
                reason: Some(reason),
                witness: None,
            },
            Outcome::Fails(message, values) => Check {
                name,
                status: CheckStatus::Violated,
                reason: None,
                witness: Some(Witness {
                    graph6: self.graph_id.clone(),
                    message,
                    values: values.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
                }),
            },
        };
        self.checks.push(check);
    }
}

enum Outcome {
    Holds,
    Skip(String),
    Fails(String, Vec<(&'static str, i64)>),
}

impl Outcome {
    fn when(ok: bool, message: impl FnOnce() -> String, values: Vec<(&'static str, i64)>) -> Outcome {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Fails(message(), values)
        }
    }
}

fn require_connected(h: &Graph) -> Result<()> {
    if h.n() == 0 || !h.is_connected() {
        Err(Error::Disconnected)
    } else {
        Ok(())
    }
}

fn label_set(h: &Graph, vs: &[usize]) -> String {
    let labels: Vec<&str> = vs.iter().map(|&v| h.label(v)).collect();
    format!("{{{}}}", labels.join(", "))
}

/// For every rule: `0 <= edge <= vertex <= radius` and `vertex - edge <= 1`;
/// on graphs with a cycle the girth lower bounds
/// `traditional >= floor(g/2)`, `active, lazy >= floor(g/2) - 1`.
pub fn check_span_inequalities(h: &Graph) -> Result<TheoremReport> {
    require_connected(h)?;
    let spans = span_report(h)?;
    let m = metrics(h);
    let mut report = TheoremReport::new(h);
    for rule in RuleSet::ALL {
        let v = spans.get(rule, SpanKind::Vertex).span as i64;
        let e = spans.get(rule, SpanKind::Edge).span as i64;
        let rad = m.radius as i64;
        let values = vec![("vertex_span", v), ("edge_span", e), ("radius", rad)];
        report.record(
            format!("{rule}.chain"),
            Outcome::when(
                e <= v && v <= rad,
                || format!("{rule}: edge {e}, vertex {v}, radius {rad}"),
                values,
            ),
        );
        report.record(
            format!("{rule}.difference"),
            Outcome::when(
                v - e <= 1,
                || format!("{rule}: vertex {v} exceeds edge {e} by more than 1"),
                vec![("vertex_span", v), ("edge_span", e)],
            ),
        );
    }
    for rule in RuleSet::ALL {
        let name = format!("{rule}.girth");
        let Some(g) = m.girth else {
            report.record(name, Outcome::Skip("acyclic".into()));
            continue;
        };
        let half = (g / 2) as i64;
        let bound = if rule == RuleSet::Traditional { half } else { half - 1 };
        let v = spans.get(rule, SpanKind::Vertex).span as i64;
        // a bound below zero says nothing
        let ok = bound <= 0 || v >= bound;
        report.record(
            name,
            Outcome::when(
                ok,
                || format!("{rule}: vertex span {v} below girth bound {bound}"),
                vec![("vertex_span", v), ("girth", g as i64), ("bound", bound)],
            ),
        );
    }
    Ok(report)
}

/// Whether `G[S ∪ C]` equals `G[S] ∨ G[C]` on the shared vertex set.
fn is_join(h: &Graph, set: &[usize], component: &[usize]) -> Result<bool> {
    let mut both = set.to_vec();
    both.extend_from_slice(component);
    let whole = h.induced_subgraph(&both)?;
    let s = h.induced_subgraph(set)?;
    let c = h.induced_subgraph(component)?;
    let joined = s.graph.join(&c.graph);
    let origin: Vec<usize> = s.origin.iter().chain(&c.origin).copied().collect();
    let normalise = |edges: Vec<(usize, usize)>, map: &[usize]| {
        let mut out: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
            .collect();
        out.sort_unstable();
        out
    };
    Ok(normalise(whole.graph.edges(), &whole.origin) == normalise(joined.edges(), &origin))
}

/// Largest number of components whose every union of lobes is checked.
const LOBE_UNION_LIMIT: usize = 12;

/// Structure of graphs with strong vertex span 1 that have no universal
/// vertex: every minimal cut set `S` is a clique, every union of `S`-lobes
/// has strong vertex span 1, and all but at most two components `C` of `G - S`
/// satisfy `G[S ∪ C] = G[S] ∨ G[C]`.
pub fn check_span1_structure(h: &Graph) -> Result<TheoremReport> {
    require_connected(h)?;
    let mut report = TheoremReport::new(h);
    let names = ["cut_set_clique", "lobe_span", "join_condition"];
    let sigma = vertex_span(h, RuleSet::Traditional)?.span;
    let skip = if sigma != 1 {
        Some(format!("strong vertex span is {sigma}"))
    } else if h.max_degree() + 1 == h.n() {
        Some("has a universal vertex".to_string())
    } else {
        None
    };
    if let Some(reason) = skip {
        for name in names {
            report.record(name, Outcome::Skip(reason.clone()));
        }
        return Ok(report);
    }
    let catalog = minimal_cut_sets(h, h.n())?;
    let mut clique = Outcome::Holds;
    let mut lobes = Outcome::Holds;
    let mut join = Outcome::Holds;
    for cut in &catalog.sets {
        if !cut.is_clique && matches!(clique, Outcome::Holds) {
            clique = Outcome::Fails(
                format!("minimal cut set {} is not a clique", label_set(h, &cut.set)),
                vec![("size", cut.set.len() as i64)],
            );
        }
        let c = cut.components.len();
        let unions: Vec<u64> = if c <= LOBE_UNION_LIMIT {
            (1..1u64 << c).collect()
        } else {
            (0..c).map(|i| 1 << i).collect()
        };
        for mask in unions {
            if !matches!(lobes, Outcome::Holds) {
                break;
            }
            let mut vs = cut.set.clone();
            for (i, comp) in cut.components.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    vs.extend_from_slice(comp);
                }
            }
            let lobe = h.induced_subgraph(&vs)?;
            let s = vertex_span(&lobe.graph, RuleSet::Traditional)?.span;
            if s != 1 {
                lobes = Outcome::Fails(
                    format!(
                        "lobe union {} of cut set {} has strong vertex span {s}",
                        label_set(h, &lobe.origin),
                        label_set(h, &cut.set)
                    ),
                    vec![("span", s as i64)],
                );
            }
        }
        let mut off = 0;
        for comp in &cut.components {
            if !is_join(h, &cut.set, comp)? {
                off += 1;
            }
        }
        if off > 2 && matches!(join, Outcome::Holds) {
            join = Outcome::Fails(
                format!(
                    "{off} components of G - {} are not joined to it",
                    label_set(h, &cut.set)
                ),
                vec![("non_join_components", off as i64)],
            );
        }
    }
    report.record(names[0], clique);
    report.record(names[1], lobes);
    report.record(names[2], join);
    Ok(report)
}

/// The small graphs attached by the augmentation checks: `K1`, `K2`, two
/// isolated vertices and `P3`.
pub fn augmentation_partners() -> Vec<Graph> {
    vec![
        Graph::empty(1),
        Graph::from_edges(2, &[(0, 1)]).expect("K2"),
        Graph::empty(2),
        Graph::from_edges(3, &[(0, 1), (1, 2)]).expect("P3"),
    ]
}

fn augmentations_have_span_one(h: &Graph, sets: &[Vec<usize>], what: &str) -> Result<Outcome> {
    for set in sets {
        for (i, partner) in augmentation_partners().iter().enumerate() {
            let aug = augment(h, set, partner)?;
            let s = vertex_span(&aug, RuleSet::Traditional)?.span;
            if s != 1 {
                return Ok(Outcome::Fails(
                    format!(
                        "augmenting at {what} {} with partner {i} gives strong vertex span {s}",
                        label_set(h, set)
                    ),
                    vec![("span", s as i64), ("partner", i as i64)],
                ));
            }
        }
    }
    Ok(Outcome::Holds)
}

/// Interval graphs have strong vertex span 1, a tree has span 1 iff it is
/// interval iff it has no induced `S_{1,3}`, and augmenting an interval graph
/// at an end-clique or at a clique minimal cut set keeps span 1.
pub fn check_interval_theorems(h: &Graph) -> Result<TheoremReport> {
    require_connected(h)?;
    let mut report = TheoremReport::new(h);
    let sigma = vertex_span(h, RuleSet::Traditional)?.span;
    let interval = is_interval(h);
    let nontrivial = h.n() >= 2;

    report.record(
        "interval_span_one",
        if !(interval && nontrivial) {
            Outcome::Skip("not a nontrivial interval graph".into())
        } else {
            Outcome::when(
                sigma == 1,
                || format!("interval graph with strong vertex span {sigma}"),
                vec![("span", sigma as i64)],
            )
        },
    );

    report.record(
        "tree_characterization",
        if !(h.is_tree() && nontrivial) {
            Outcome::Skip("not a nontrivial tree".into())
        } else {
            let claw_free = find_induced_subdivided_claw(h).is_none();
            Outcome::when(
                (sigma == 1) == interval && interval == claw_free,
                || format!("tree: span {sigma}, interval {interval}, no induced S_1,3 {claw_free}"),
                vec![
                    ("span", sigma as i64),
                    ("interval", interval as i64),
                    ("claw_free", claw_free as i64),
                ],
            )
        },
    );

    let names = ["end_clique_augmentation", "cut_clique_augmentation"];
    if !(interval && nontrivial) {
        for name in names {
            report.record(name, Outcome::Skip("not a nontrivial interval graph".into()));
        }
    } else if h.n() > DEFAULT_REPRESENTATION_CAP {
        for name in names {
            report.record(
                name,
                Outcome::Skip(format!("more than {DEFAULT_REPRESENTATION_CAP} vertices")),
            );
        }
    } else {
        let ends = end_cliques(h, DEFAULT_REPRESENTATION_CAP)?;
        report.record(names[0], augmentations_have_span_one(h, &ends, "end-clique")?);
        let cliques: Vec<Vec<usize>> = minimal_cut_sets(h, h.n())?
            .sets
            .into_iter()
            .filter(|c| c.is_clique)
            .map(|c| c.set)
            .collect();
        report.record(
            names[1],
            if cliques.is_empty() {
                Outcome::Skip("no minimal cut set".into())
            } else {
                augmentations_have_span_one(h, &cliques, "minimal cut set")?
            },
        );
    }
    Ok(report)
}

/// Solver against the brute-force oracle for all six variants, on graphs the
/// oracle accepts.
pub fn check_oracle_agreement(h: &Graph) -> Result<TheoremReport> {
    require_connected(h)?;
    let mut report = TheoremReport::new(h);
    let spans = (h.n() <= DEFAULT_ORACLE_CAP).then(|| span_report(h)).transpose()?;
    for rule in RuleSet::ALL {
        for kind in SpanKind::ALL {
            let name = format!("{rule}.{kind}.oracle");
            let Some(spans) = &spans else {
                report.record(name, Outcome::Skip(format!("more than {DEFAULT_ORACLE_CAP} vertices")));
                continue;
            };
            let solver = spans.get(rule, kind).span;
            let oracle = brute_force_span(h, rule, kind)?;
            report.record(
                name,
                Outcome::when(
                    solver == oracle,
                    || format!("{rule} {kind} span: solver {solver}, oracle {oracle}"),
                    vec![("solver", solver as i64), ("oracle", oracle as i64)],
                ),
            );
        }
    }
    Ok(report)
}

/// Every check above, merged into one report.
pub fn verify_graph(h: &Graph) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(h);
    for part in [
        check_span_inequalities(h)?,
        check_span1_structure(h)?,
        check_interval_theorems(h)?,
        check_oracle_agreement(h)?,
    ] {
        report.checks.extend(part.checks);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::families::{fixture, generate_family};

    fn g(spec: &str) -> Graph {
        generate_family(spec).unwrap()
    }

    #[test]
    fn figure1_attains_difference_bound() {
        let f1 = fixture("figure1").unwrap();
        let r = check_span_inequalities(&f1).unwrap();
        assert!(!r.has_violation(), "{r:?}");
        assert_eq!(r.status("traditional.difference"), Some(CheckStatus::Holds));
    }

    #[test]
    fn trees_skip_girth() {
        let r = check_span_inequalities(&g("path:5")).unwrap();
        for rule in RuleSet::ALL {
            assert_eq!(r.status(&format!("{rule}.girth")), Some(CheckStatus::NotApplicable));
        }
    }

    #[test]
    fn c7_girth_bound() {
        let c7 = g("cycle:7");
        assert!(vertex_span(&c7, RuleSet::Traditional).unwrap().span >= 3);
        assert!(!check_span_inequalities(&c7).unwrap().has_violation());
    }

    #[test]
    fn span1_structure_examples() {
        let r = check_span1_structure(&fixture("figure2").unwrap()).unwrap();
        for name in ["cut_set_clique", "lobe_span", "join_condition"] {
            assert_eq!(r.status(name), Some(CheckStatus::Holds), "{name}");
        }
        let r = check_span1_structure(&g("star:4")).unwrap();
        assert_eq!(r.status("cut_set_clique"), Some(CheckStatus::NotApplicable));
        let r = check_span1_structure(&g("path:5")).unwrap();
        assert_eq!(r.status("cut_set_clique"), Some(CheckStatus::Holds));
        assert!(!r.has_violation());
    }

    #[test]
    fn join_condition_detects_missing_edges() {
        let p3 = g("path:3");
        assert!(is_join(&p3, &[1], &[0]).unwrap());
        let p4 = g("path:4");
        assert!(!is_join(&p4, &[1], &[2, 3]).unwrap());
    }

    #[test]
    fn interval_examples() {
        let r = check_interval_theorems(&g("subdivided_star:3")).unwrap();
        assert_eq!(r.status("tree_characterization"), Some(CheckStatus::Holds));
        assert_eq!(r.status("interval_span_one"), Some(CheckStatus::NotApplicable));
        assert_eq!(
            vertex_span(&g("subdivided_star:3"), RuleSet::Traditional).unwrap().span,
            2
        );

        let r = check_interval_theorems(&fixture("figure3_base").unwrap()).unwrap();
        for name in [
            "interval_span_one",
            "end_clique_augmentation",
            "cut_clique_augmentation",
        ] {
            assert_eq!(r.status(name), Some(CheckStatus::Holds), "{name}");
        }
    }

    #[test]
    fn figure3_is_a_hypothesis_witness() {
        let f3 = fixture("figure3").unwrap();
        assert_eq!(vertex_span(&f3, RuleSet::Traditional).unwrap().span, 2);
        assert!(!is_interval(&f3));
        assert!(!check_interval_theorems(&f3).unwrap().has_violation());
    }

    #[test]
    fn violations_carry_witnesses() {
        let mut r = TheoremReport::new(&g("path:2"));
        r.record("demo", Outcome::Fails("broken".into(), vec![("x", 3)]));
        let v: Vec<_> = r.violations().collect();
        assert_eq!(v.len(), 1);
        let w = v[0].witness.as_ref().unwrap();
        assert_eq!(w.graph6, "A_");
        assert_eq!(w.values["x"], 3);
    }

    #[test]
    fn verify_graph_on_fixtures() {
        for name in crate::structure::families::FIXTURE_NAMES {
            let r = verify_graph(&fixture(name).unwrap()).unwrap();
            assert!(!r.has_violation(), "{name}: {:?}", r.violations().collect::<Vec<_>>());
        }
    }
}
