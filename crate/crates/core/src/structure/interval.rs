//! Interval graph recognition with certificates.
//!
//! A graph is interval iff it is chordal and has no asteroidal triple. For a
//! positive answer we also build a representation: an ordering of the
//! maximal cliques in which every vertex occupies a contiguous run (found by
//! pruned backtracking), stretched into intervals with distinct endpoints.

use serde::Serialize;

use super::chordal::{find_asteroidal_triple, is_asteroidal_triple, is_chordal, is_chordless_cycle, Chordality};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest graph for which a representation is built.
pub const DEFAULT_REPRESENTATION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonIntervalWitness {
    ChordlessCycle { cycle: Vec<usize> },
    AsteroidalTriple { triple: [usize; 3] },
}

impl NonIntervalWitness {
    pub fn is_valid(&self, g: &Graph) -> bool {
        match self {
            NonIntervalWitness::ChordlessCycle { cycle } => is_chordless_cycle(g, cycle),
            NonIntervalWitness::AsteroidalTriple { triple } => is_asteroidal_triple(g, *triple),
        }
    }
}

/// Closed interval `[left, right]` per vertex; all endpoints distinct.
pub type Representation = Vec<(i64, i64)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalCertificate {
    pub is_interval: bool,
    pub representation: Option<Representation>,
    /// Maximal cliques in representation order, when interval.
    pub clique_order: Option<Vec<Vec<usize>>>,
    pub witness: Option<NonIntervalWitness>,
}

/// Maximal cliques by Bron-Kerbosch with pivoting. Each clique is sorted and
/// the list is sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn expand(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
            .expect("p is non-empty");
        let mut p = p;
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        for v in candidates {
            let p2 = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            let x2 = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            r.push(v);
            expand(g, r, p2, x2, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    expand(g, &mut Vec::new(), (0..g.n()).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

pub fn is_interval(g: &Graph) -> bool {
    is_chordal(g).is_chordal() && find_asteroidal_triple(g).is_none()
}

/// Orders of `cliques` in which each vertex's cliques are consecutive.
/// With `first` set, only orders starting with that clique are considered.
/// Returns the first order found (as clique indices).
pub fn consecutive_clique_order(n: usize, cliques: &[Vec<usize>], first: Option<usize>) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum State {
        Unseen,
        Open,
        Closed,
    }

    fn place(
        cliques: &[Vec<usize>],
        remaining_count: &mut [usize],
        state: &mut Vec<State>,
        used: &mut [bool],
        order: &mut Vec<usize>,
        next: usize,
    ) -> bool {
        let clique = &cliques[next];
        if clique.iter().any(|&v| state[v] == State::Closed) {
            return false;
        }
        let mut member = vec![false; state.len()];
        clique.iter().for_each(|&v| member[v] = true);
        // an open vertex left out of this clique closes for good
        if (0..state.len()).any(|v| state[v] == State::Open && !member[v] && remaining_count[v] > 0) {
            return false;
        }
        let saved = state.clone();
        for v in 0..state.len() {
            if member[v] {
                state[v] = State::Open;
                remaining_count[v] -= 1;
            } else if state[v] == State::Open {
                state[v] = State::Closed;
            }
        }
        used[next] = true;
        order.push(next);
        if order.len() == cliques.len() {
            return true;
        }
        for cand in 0..cliques.len() {
            if !used[cand] && place(cliques, remaining_count, state, used, order, cand) {
                return true;
            }
        }
        order.pop();
        used[next] = false;
        clique.iter().for_each(|&v| remaining_count[v] += 1);
        *state = saved;
        false
    }

    if cliques.is_empty() {
        return Some(Vec::new());
    }
    let mut remaining_count = vec![0; n];
    for c in cliques {
        c.iter().for_each(|&v| remaining_count[v] += 1);
    }
    let starts: Vec<usize> = match first {
        Some(f) => vec![f],
        None => (0..cliques.len()).collect(),
    };
    for s in starts {
        let mut state = vec![State::Unseen; n];
        let mut used = vec![false; cliques.len()];
        let mut order = Vec::new();
        if place(cliques, &mut remaining_count, &mut state, &mut used, &mut order, s) {
            return Some(order);
        }
    }
    None
}

/// Stretches a consecutive clique order into intervals with distinct integer
/// endpoints. Vertex `v` spans slots `first..=last` of the cliques containing
/// it; within a slot, left ends are staggered by vertex index and right ends
/// sit past every left end.
fn stretch(n: usize, ordered: &[Vec<usize>]) -> Representation {
    let width = 2 * n as i64 + 2;
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0; n];
    for (slot, clique) in ordered.iter().enumerate() {
        for &v in clique {
            first[v] = first[v].min(slot);
            last[v] = slot;
        }
    }
    (0..n)
        .map(|v| {
            let left = first[v] as i64 * width + v as i64;
            let right = last[v] as i64 * width + n as i64 + 1 + v as i64;
            (left, right)
        })
        .collect()
}

/// Whether `rep` is an interval representation of `g` with distinct endpoints.
pub fn realizes(g: &Graph, rep: &Representation) -> bool {
    let n = g.n();
    if rep.len() != n || rep.iter().any(|&(l, r)| l >= r) {
        return false;
    }
    let mut ends: Vec<i64> = rep.iter().flat_map(|&(l, r)| [l, r]).collect();
    ends.sort_unstable();
    ends.dedup();
    if ends.len() != 2 * n {
        return false;
    }
    (0..n).all(|u| {
        (u + 1..n).all(|v| {
            let meet = rep[u].0 <= rep[v].1 && rep[v].0 <= rep[u].1;
            meet == g.has_edge(u, v)
        })
    })
}

pub fn interval_certificate(g: &Graph, cap: usize) -> Result<IntervalCertificate> {
    if let Chordality::NotChordal { cycle } = is_chordal(g) {
        return Ok(IntervalCertificate {
            is_interval: false,
            representation: None,
            clique_order: None,
            witness: Some(NonIntervalWitness::ChordlessCycle { cycle }),
        });
    }
    if let Some(triple) = find_asteroidal_triple(g) {
        return Ok(IntervalCertificate {
            is_interval: false,
            representation: None,
            clique_order: None,
            witness: Some(NonIntervalWitness::AsteroidalTriple { triple }),
        });
    }
    if g.n() > cap {
        return Err(Error::Capacity {
            what: "interval representation",
            n: g.n(),
            cap,
            bound: "clique-order search is exponential".into(),
        });
    }
    let cliques = maximal_cliques(g);
    let order = consecutive_clique_order(g.n(), &cliques, None)
        .expect("chordal asteroidal-triple-free graphs admit a consecutive clique order");
    let ordered: Vec<Vec<usize>> = order.iter().map(|&i| cliques[i].clone()).collect();
    Ok(IntervalCertificate {
        is_interval: true,
        representation: Some(stretch(g.n(), &ordered)),
        clique_order: Some(ordered),
        witness: None,
    })
}

/// Maximal cliques that can be placed first in some consecutive clique order
/// and contain a vertex lying in no other maximal clique.
pub fn end_cliques(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    if !interval_certificate(g, cap)?.is_interval {
        return Err(Error::NotInterval);
    }
    let cliques = maximal_cliques(g);
    let mut membership = vec![0usize; g.n()];
    for c in &cliques {
        c.iter().for_each(|&v| membership[v] += 1);
    }
    Ok((0..cliques.len())
        .filter(|&i| cliques[i].iter().any(|&v| membership[v] == 1))
        .filter(|&i| consecutive_clique_order(g.n(), &cliques, Some(i)).is_some())
        .map(|i| cliques[i].clone())
        .collect())
}
