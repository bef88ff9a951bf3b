//! Products of a graph with itself, one per movement rule, and their
//! restriction to pairs of vertices that are far enough apart.
//!
//! A product vertex `(u, v)` is a joint position: Alice on `u`, Bob on `v`.
//! Its index is `u * n + v`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{metrics, Graph};

/// How the two walkers may move in one time step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleSet {
    /// Each walker stays or moves; strong product.
    Traditional,
    /// Both walkers move; tensor (direct) product.
    Active,
    /// Exactly one walker moves; Cartesian product.
    Lazy,
}

impl RuleSet {
    pub const ALL: [RuleSet; 3] = [RuleSet::Traditional, RuleSet::Active, RuleSet::Lazy];

    pub fn name(self) -> &'static str {
        match self {
            RuleSet::Traditional => "traditional",
            RuleSet::Active => "active",
            RuleSet::Lazy => "lazy",
        }
    }

    /// Whether a step in which Alice moves (`alice_moves`) and Bob moves
    /// (`bob_moves`) is allowed. Moves are along edges; "not moving" means staying.
    pub fn permits(self, alice_moves: bool, bob_moves: bool) -> bool {
        match self {
            RuleSet::Traditional => alice_moves || bob_moves,
            RuleSet::Active => alice_moves && bob_moves,
            RuleSet::Lazy => alice_moves != bob_moves,
        }
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "traditional" | "strong" => Ok(RuleSet::Traditional),
            "active" | "direct" | "tensor" => Ok(RuleSet::Active),
            "lazy" | "cartesian" => Ok(RuleSet::Lazy),
            other => Err(format!("unknown rule set `{other}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ProductGraph {
    base: Graph,
    rule: RuleSet,
    threshold: u32,
    pair_distance: Vec<u32>,
    present: Vec<bool>,
    adjacency: Vec<Vec<usize>>,
}

/// Full product of `h` with itself under `rule` (threshold 0, all `n²` pairs).
pub fn build_product(h: &Graph, rule: RuleSet) -> ProductGraph {
    let n = h.n();
    let dist = metrics(h).dist;
    let pair_distance = (0..n * n).map(|p| dist[p / n][p % n]).collect();
    let mut adjacency = Vec::with_capacity(n * n);
    for u in 0..n {
        for x in 0..n {
            let mut list = Vec::new();
            for (u2, alice_moves) in options(h, u) {
                for (x2, bob_moves) in options(h, x) {
                    if rule.permits(alice_moves, bob_moves) {
                        list.push(u2 * n + x2);
                    }
                }
            }
            list.sort_unstable();
            adjacency.push(list);
        }
    }
    ProductGraph {
        base: h.clone(),
        rule,
        threshold: 0,
        pair_distance,
        present: vec![true; n * n],
        adjacency,
    }
}

fn options(h: &Graph, v: usize) -> impl Iterator<Item = (usize, bool)> + '_ {
    std::iter::once((v, false)).chain(h.neighbors(v).iter().map(|&w| (w, true)))
}

/// Subgraph of `p` induced by the pairs at base distance at least `k`.
pub fn safety_subgraph(p: &ProductGraph, k: u32) -> ProductGraph {
    let present: Vec<bool> = p
        .present
        .iter()
        .zip(&p.pair_distance)
        .map(|(&keep, &d)| keep && d >= k)
        .collect();
    let adjacency = p
        .adjacency
        .iter()
        .enumerate()
        .map(|(i, list)| {
            if present[i] {
                list.iter().copied().filter(|&j| present[j]).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    ProductGraph {
        base: p.base.clone(),
        rule: p.rule,
        threshold: k,
        pair_distance: p.pair_distance.clone(),
        present,
        adjacency,
    }
}

impl ProductGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn rule(&self) -> RuleSet {
        self.rule
    }

    pub fn threshold(&self) -> u32 {
        self.threshold
    }

    /// Number of index slots (`n²`), present or not.
    pub fn slots(&self) -> usize {
        self.present.len()
    }

    pub fn index(&self, u: usize, v: usize) -> usize {
        u * self.base.n() + v
    }

    pub fn pair(&self, idx: usize) -> (usize, usize) {
        let n = self.base.n();
        (idx / n, idx % n)
    }

    /// First projection: Alice's vertex.
    pub fn first(&self, idx: usize) -> usize {
        idx / self.base.n()
    }

    /// Second projection: Bob's vertex.
    pub fn second(&self, idx: usize) -> usize {
        idx % self.base.n()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.present.get(idx).copied().unwrap_or(false)
    }

    /// Present product vertices in index order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.present.len()).filter(|&i| self.present[i])
    }

    pub fn vertex_count(&self) -> usize {
        self.present.iter().filter(|&&b| b).count()
    }

    /// Sorted neighbours; empty for absent vertices.
    pub fn neighbors(&self, idx: usize) -> &[usize] {
        &self.adjacency[idx]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.contains(a) && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices()
            .flat_map(|a| self.adjacency[a].iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Base distance between the two coordinates of `idx`.
    pub fn pair_distance(&self, idx: usize) -> u32 {
        self.pair_distance[idx]
    }

    /// Connected components of the present vertices, each sorted, ordered by
    /// smallest index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.slots()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut members = Vec::new();
            while let Some(a) = stack.pop() {
                members.push(a);
                for &b in &self.adjacency[a] {
                    if !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k2() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    // (a,a)=0 (a,b)=1 (b,a)=2 (b,b)=3
    #[test]
    fn k2_traditional_is_k4() {
        let p = build_product(&k2(), RuleSet::Traditional);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn k2_active_is_matching() {
        let p = build_product(&k2(), RuleSet::Active);
        assert_eq!(p.edges(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn k2_lazy_is_four_cycle() {
        let p = build_product(&k2(), RuleSet::Lazy);
        assert_eq!(p.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn k2_safety_thresholds() {
        let p = build_product(&k2(), RuleSet::Traditional);
        let s1 = safety_subgraph(&p, 1);
        assert_eq!(s1.vertices().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(s1.edges(), vec![(1, 2)]);
        assert_eq!(s1.threshold(), 1);
        let s0 = safety_subgraph(&p, 0);
        assert_eq!(s0.edges(), p.edges());
        assert_eq!(s0.vertex_count(), 4);
        assert_eq!(safety_subgraph(&p, 2).vertex_count(), 0);
    }

    #[test]
    fn parses_rule_names() {
        assert_eq!("Lazy".parse::<RuleSet>().unwrap(), RuleSet::Lazy);
        assert!("sideways".parse::<RuleSet>().is_err());
    }

    fn arb_connected() -> impl Strategy<Value = Graph> {
        (2usize..7, proptest::collection::vec(any::<bool>(), 21), any::<u64>()).prop_map(|(n, mask, salt)| {
            // spanning path in a salted order keeps it connected
            let mut order: Vec<usize> = (0..n).collect();
            order.rotate_left((salt as usize) % n);
            let mut edges: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask[k] && !edges.contains(&(i, j)) {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    proptest! {
        #[test]
        fn strong_is_union_of_tensor_and_cartesian(h in arb_connected()) {
            let strong = build_product(&h, RuleSet::Traditional);
            let tensor = build_product(&h, RuleSet::Active);
            let cart = build_product(&h, RuleSet::Lazy);
            prop_assert_eq!(strong.vertex_count(), h.n() * h.n());
            let mut union = tensor.edges();
            union.extend(cart.edges());
            union.sort_unstable();
            prop_assert_eq!(strong.edges(), union);
            for (a, b) in strong.edges() {
                let ((u, x), (u2, x2)) = (strong.pair(a), strong.pair(b));
                let am = h.has_edge(u, u2);
                let bm = h.has_edge(x, x2);
                prop_assert!((u == u2 || am) && (x == x2 || bm));
                prop_assert_eq!(tensor.has_edge(a, b), am && bm);
                prop_assert_eq!(cart.has_edge(a, b), am != bm);
            }
        }

        #[test]
        fn safety_subgraph_is_induced(h in arb_connected(), k in 0u32..4) {
            for rule in RuleSet::ALL {
                let p = build_product(&h, rule);
                let s = safety_subgraph(&p, k);
                for a in 0..p.slots() {
                    prop_assert_eq!(s.contains(a), p.pair_distance(a) >= k);
                    for b in 0..p.slots() {
                        prop_assert_eq!(s.has_edge(a, b), s.contains(a) && s.contains(b) && p.has_edge(a, b));
                    }
                }
            }
        }
    }
}
