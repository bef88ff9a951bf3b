use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;

/// Distance between vertices in different components.
pub const INFINITY: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    /// Hop distances, `INFINITY` when unreachable.
    pub dist: Vec<Vec<u32>>,
    pub eccentricity: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    /// Length of a shortest cycle; `None` for forests.
    pub girth: Option<u32>,
}

impl Metrics {
    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.dist[u][v]
    }
}

pub(crate) fn bfs_distances(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![INFINITY; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == INFINITY {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Shortest `from`-`to` path length that does not use the edge `from`-`to`.
fn distance_avoiding_edge(g: &Graph, from: usize, to: usize) -> u32 {
    let mut dist = vec![INFINITY; g.n()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if u == from && w == to {
                continue;
            }
            if dist[w] == INFINITY {
                dist[w] = dist[u] + 1;
                if w == to {
                    return dist[w];
                }
                queue.push_back(w);
            }
        }
    }
    INFINITY
}

pub fn metrics(g: &Graph) -> Metrics {
    let n = g.n();
    let dist: Vec<Vec<u32>> = (0..n).map(|s| bfs_distances(g, s)).collect();
    let eccentricity: Vec<u32> = dist.iter().map(|row| row.iter().copied().max().unwrap_or(0)).collect();
    let radius = eccentricity.iter().copied().min().unwrap_or(0);
    let diameter = eccentricity.iter().copied().max().unwrap_or(0);
    let girth = g
        .edges()
        .into_iter()
        .map(|(u, v)| distance_avoiding_edge(g, u, v))
        .filter(|&d| d != INFINITY)
        .map(|d| d + 1)
        .min();
    Metrics {
        dist,
        eccentricity,
        radius,
        diameter,
        girth,
    }
}
