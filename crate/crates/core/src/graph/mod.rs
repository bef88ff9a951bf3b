//! Undirected simple graphs with labelled vertices.
//!
//! Vertices are indexed `0..n` in input order; that order is also the
//! tie-breaking order used by every search in the crate.

mod io;
mod metrics;

pub use io::{parse_graph, to_edge_list, to_graph6, Format};
pub use metrics::{metrics, Metrics, INFINITY};

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<usize>>,
}

/// An induced subgraph together with the map from its vertices back to the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `origin[i]` is the parent index of vertex `i` of `graph`.
    pub origin: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices labelled `0..n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            labels: (0..n).map(|i| i.to_string()).collect(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    /// Builds a graph with explicit labels. Loops, duplicate edges and
    /// duplicate labels are rejected.
    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::Parse {
                    line: 0,
                    offset: 0,
                    message: format!("duplicate vertex label `{label}`"),
                });
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop { line: i + 1, vertex: u });
            }
            if adjacency[u].contains(&v) {
                return Err(Error::DuplicateEdge { line: i + 1, u, v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { labels, adjacency })
    }

    /// Same structure, labels replaced by vertex indices.
    pub fn with_index_labels(&self) -> Graph {
        Graph {
            labels: (0..self.n()).map(|i| i.to_string()).collect(),
            adjacency: self.adjacency.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.m());
        for (u, list) in self.adjacency.iter().enumerate() {
            edges.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        edges
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Connected components after deleting `removed`, each sorted, ordered by
    /// smallest vertex.
    pub fn components_avoiding(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut blocked = vec![false; n];
        for &v in removed {
            blocked[v] = true;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if blocked[s] {
                continue;
            }
            blocked[s] = true;
            queue.push_back(s);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &w in &self.adjacency[u] {
                    if !blocked[w] {
                        blocked[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            comp.push(members);
        }
        comp
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.is_connected() && self.m() + 1 == self.n()
    }

    pub fn induced_subgraph(&self, set: &[usize]) -> Result<InducedSubgraph> {
        let n = self.n();
        let mut origin: Vec<usize> = Vec::with_capacity(set.len());
        for &v in set {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            origin.push(v);
        }
        origin.sort_unstable();
        origin.dedup();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in origin.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = origin
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&&w| position[w] != usize::MAX)
                    .map(|&w| position[w])
                    .collect()
            })
            .collect();
        let labels = origin.iter().map(|&v| self.labels[v].clone()).collect();
        Ok(InducedSubgraph {
            graph: Graph { labels, adjacency },
            origin,
        })
    }

    /// Disjoint union of `self` and `other` plus every edge between
    /// `attach` (vertices of `self`) and all vertices of `other`.
    ///
    /// Vertices of `other` follow those of `self`. If any label of `other`
    /// collides with a label of `self`, all of `other` is relabelled with
    /// fresh integers.
    pub(crate) fn glue(&self, other: &Graph, attach: &[usize]) -> Result<Graph> {
        let n = self.n();
        for &s in attach {
            if s >= n {
                return Err(Error::VertexOutOfRange { vertex: s, n });
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(fresh_labels(&self.labels, &other.labels));
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|list| list.iter().map(|&w| w + n).collect::<Vec<_>>()),
        );
        let mut attach: Vec<usize> = attach.to_vec();
        attach.sort_unstable();
        attach.dedup();
        for &s in &attach {
            for h in 0..other.n() {
                adjacency[s].push(n + h);
                adjacency[n + h].push(s);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { labels, adjacency })
    }

    /// Join `self ∨ other`: disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Graph {
        let all: Vec<usize> = (0..self.n()).collect();
        self.glue(other, &all).expect("indices in range")
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adjacency = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph {
            labels: self.labels.clone(),
            adjacency,
        }
    }
}

fn fresh_labels(taken: &[String], wanted: &[String]) -> Vec<String> {
    let used: HashSet<&str> = taken.iter().map(String::as_str).collect();
    if wanted.iter().all(|l| !used.contains(l.as_str())) {
        return wanted.to_vec();
    }
    let mut next = taken
        .iter()
        .filter_map(|l| l.parse::<u64>().ok())
        .max()
        .map_or(taken.len() as u64, |m| m + 1);
    let mut out = Vec::with_capacity(wanted.len());
    for _ in wanted {
        while used.contains(next.to_string().as_str()) {
            next += 1;
        }
        out.push(next.to_string());
        next += 1;
    }
    out
}

/// Label lookup table, for callers mapping many labels at once.
pub fn label_index(g: &Graph) -> HashMap<&str, usize> {
    g.labels().iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
}
