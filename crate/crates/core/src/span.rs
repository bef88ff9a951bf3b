//! The six span variants, computed from components of the distance-restricted
//! product graph.
//!
//! A component of the threshold-`k` product is *good* when both projections
//! cover every base vertex, and *edge-good* when additionally its edges cover
//! every base edge in both projections. A walk inside one component can visit
//! every product vertex and edge of it, so the vertex (edge) span is the
//! largest `k` whose product has a good (edge-good) component.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{metrics, Graph};
use crate::product::{build_product, safety_subgraph, ProductGraph, RuleSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpanKind {
    Vertex,
    Edge,
}

impl SpanKind {
    pub const ALL: [SpanKind; 2] = [SpanKind::Vertex, SpanKind::Edge];

    pub fn name(self) -> &'static str {
        match self {
            SpanKind::Vertex => "vertex",
            SpanKind::Edge => "edge",
        }
    }
}

impl fmt::Display for SpanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpanKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "vertex" => Ok(SpanKind::Vertex),
            "edge" => Ok(SpanKind::Edge),
            other => Err(format!("unknown span kind `{other}`")),
        }
    }
}

/// Names the component that witnesses a span value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub rule: RuleSet,
    pub kind: SpanKind,
    pub threshold: u32,
    /// Position of the component in the threshold-level list of
    /// (edge-)good components.
    pub component_id: usize,
    /// The component as (Alice, Bob) vertex pairs, in index order.
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanValue {
    pub span: u32,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleSpans {
    pub vertex: SpanValue,
    pub edge: SpanValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub traditional: RuleSpans,
    pub active: RuleSpans,
    pub lazy: RuleSpans,
}

impl SpanReport {
    pub fn rule(&self, rule: RuleSet) -> &RuleSpans {
        match rule {
            RuleSet::Traditional => &self.traditional,
            RuleSet::Active => &self.active,
            RuleSet::Lazy => &self.lazy,
        }
    }

    pub fn get(&self, rule: RuleSet, kind: SpanKind) -> &SpanValue {
        let spans = self.rule(rule);
        match kind {
            SpanKind::Vertex => &spans.vertex,
            SpanKind::Edge => &spans.edge,
        }
    }
}

/// Whether both projections of `component` cover the base vertex set.
pub fn is_good(p: &ProductGraph, component: &[usize]) -> bool {
    let n = p.base().n();
    let mut alice = vec![false; n];
    let mut bob = vec![false; n];
    for &idx in component {
        alice[p.first(idx)] = true;
        bob[p.second(idx)] = true;
    }
    alice.into_iter().chain(bob).all(|b| b)
}

/// Whether `component` is good and, in each projection, every base edge is
/// the image of some product edge inside the component.
pub fn is_edge_good(p: &ProductGraph, component: &[usize]) -> bool {
    if !is_good(p, component) {
        return false;
    }
    let base = p.base();
    let n = base.n();
    let edges = base.edges();
    let mut edge_id = vec![usize::MAX; n * n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        edge_id[u * n + v] = i;
        edge_id[v * n + u] = i;
    }
    let mut alice = vec![false; edges.len()];
    let mut bob = vec![false; edges.len()];
    let mut inside = vec![false; p.slots()];
    for &idx in component {
        inside[idx] = true;
    }
    for &a in component {
        for &b in p.neighbors(a) {
            if !inside[b] {
                continue;
            }
            let (u, x) = p.pair(a);
            let (u2, x2) = p.pair(b);
            if u != u2 {
                alice[edge_id[u * n + u2]] = true;
            }
            if x != x2 {
                bob[edge_id[x * n + x2]] = true;
            }
        }
    }
    alice.into_iter().chain(bob).all(|b| b)
}

pub fn good_components(p: &ProductGraph) -> Vec<Vec<usize>> {
    p.components().into_iter().filter(|c| is_good(p, c)).collect()
}

pub fn edge_good_components(p: &ProductGraph) -> Vec<Vec<usize>> {
    p.components().into_iter().filter(|c| is_edge_good(p, c)).collect()
}

fn require_connected(h: &Graph) -> Result<()> {
    if h.n() == 0 || !h.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn span_search(h: &Graph, rule: RuleSet, kind: SpanKind) -> Result<SpanValue> {
    require_connected(h)?;
    let radius = metrics(h).radius;
    let full = build_product(h, rule);
    for k in (0..=radius).rev() {
        let restricted = safety_subgraph(&full, k);
        let found = match kind {
            SpanKind::Vertex => good_components(&restricted),
            SpanKind::Edge => edge_good_components(&restricted),
        };
        if let Some(first) = found.into_iter().next() {
            return Ok(SpanValue {
                span: k,
                certificate: Certificate {
                    rule,
                    kind,
                    threshold: k,
                    component_id: 0,
                    pairs: first.iter().map(|&i| restricted.pair(i)).collect(),
                },
            });
        }
    }
    unreachable!("the diagonal component is edge-good at threshold 0 for every connected graph")
}

pub fn vertex_span(h: &Graph, rule: RuleSet) -> Result<SpanValue> {
    span_search(h, rule, SpanKind::Vertex)
}

pub fn edge_span(h: &Graph, rule: RuleSet) -> Result<SpanValue> {
    span_search(h, rule, SpanKind::Edge)
}

pub fn span(h: &Graph, rule: RuleSet, kind: SpanKind) -> Result<SpanValue> {
    span_search(h, rule, kind)
}

pub fn span_report(h: &Graph) -> Result<SpanReport> {
    let spans = |rule| -> Result<RuleSpans> {
        Ok(RuleSpans {
            vertex: vertex_span(h, rule)?,
            edge: edge_span(h, rule)?,
        })
    };
    Ok(SpanReport {
        traditional: spans(RuleSet::Traditional)?,
        active: spans(RuleSet::Active)?,
        lazy: spans(RuleSet::Lazy)?,
    })
}

/// Re-checks a certificate from scratch: the listed pairs must form exactly
/// one connected component of the threshold product, and that component must
/// be (edge-)good.
pub fn verify_certificate(h: &Graph, cert: &Certificate) -> bool {
    let restricted = safety_subgraph(&build_product(h, cert.rule), cert.threshold);
    let mut ids: Vec<usize> = cert.pairs.iter().map(|&(u, v)| restricted.index(u, v)).collect();
    ids.sort_unstable();
    let Some(component) = restricted.components().into_iter().find(|c| c.first() == ids.first()) else {
        return false;
    };
    if component != ids {
        return false;
    }
    match cert.kind {
        SpanKind::Vertex => is_good(&restricted, &component),
        SpanKind::Edge => is_edge_good(&restricted, &component),
    }
}
