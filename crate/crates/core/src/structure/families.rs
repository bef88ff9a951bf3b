//! Named graph families, seeded random generators, the baked-in fixtures and
//! exhaustive catalogs of small graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const FIXTURE_NAMES: [&str; 4] = ["figure1", "figure2", "figure3", "figure3_base"];

/// Edge probability used by `random:N` when none is given.
pub const DEFAULT_EDGE_PROBABILITY: f64 = 0.3;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n}`: centre 0, leaves `1..=n`.
    Star(usize),
    /// `S_{1,n}`: centre 0, arms `1..=n`, arm `i` continues to `n + i`.
    SubdividedStar(usize),
    RandomInterval {
        n: usize,
        seed: u64,
    },
    RandomConnected {
        n: usize,
        p: f64,
        seed: u64,
    },
    Fixture(String),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::SubdividedStar(n) => write!(f, "subdivided_star:{n}"),
            Family::RandomInterval { n, seed } => write!(f, "random_interval:{n}:{seed}"),
            Family::RandomConnected { n, p, seed } => write!(f, "random:{n}:{p}:{seed}"),
            Family::Fixture(name) => write!(f, "fixture:{name}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `path:N`, `cycle:N`, `complete:N`, `star:N`, `subdivided_star:N`,
    /// `random_interval:N[:SEED]`, `random:N[:P[:SEED]]` and `fixture:NAME`.
    fn from_str(spec: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidFamily {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = spec.split(':').collect();
        let int = |i: usize| -> Result<u64> {
            parts
                .get(i)
                .ok_or_else(|| invalid("missing number"))?
                .parse()
                .map_err(|_| invalid("not a non-negative integer"))
        };
        let size = || int(1).map(|v| v as usize);
        let arity = |max: usize| {
            if parts.len() > max {
                Err(invalid("too many fields"))
            } else {
                Ok(())
            }
        };
        let family = match parts[0] {
            "path" => arity(2).and(size().map(Family::Path)),
            "cycle" => arity(2).and(size().map(Family::Cycle)),
            "complete" => arity(2).and(size().map(Family::Complete)),
            "star" => arity(2).and(size().map(Family::Star)),
            "subdivided_star" => arity(2).and(size().map(Family::SubdividedStar)),
            "random_interval" => {
                arity(3)?;
                let seed = if parts.len() > 2 { int(2)? } else { 0 };
                Ok(Family::RandomInterval { n: size()?, seed })
            }
            "random" | "random_connected" => {
                arity(4)?;
                let p = match parts.get(2) {
                    Some(s) => s.parse::<f64>().map_err(|_| invalid("probability is not a number"))?,
                    None => DEFAULT_EDGE_PROBABILITY,
                };
                if !(0.0..=1.0).contains(&p) {
                    return Err(invalid("probability outside [0, 1]"));
                }
                let seed = if parts.len() > 3 { int(3)? } else { 0 };
                Ok(Family::RandomConnected { n: size()?, p, seed })
            }
            "fixture" => {
                arity(2)?;
                let name = parts.get(1).ok_or_else(|| invalid("missing fixture name"))?;
                Ok(Family::Fixture(name.to_string()))
            }
            _ => Err(invalid("unknown family")),
        }?;
        family.validate().map(|_| family)
    }
}

impl Family {
    fn validate(&self) -> Result<()> {
        let invalid = |reason: &str| {
            Err(Error::InvalidFamily {
                spec: self.to_string(),
                reason: reason.to_string(),
            })
        };
        match *self {
            Family::Cycle(n) if n < 3 => invalid("cycles need at least 3 vertices"),
            Family::Path(0) | Family::Complete(0) => invalid("need at least one vertex"),
            Family::RandomInterval { n: 0, .. } | Family::RandomConnected { n: 0, .. } => {
                invalid("need at least one vertex")
            }
            Family::Fixture(ref name) if !FIXTURE_NAMES.contains(&name.as_str()) => invalid("unknown fixture"),
            _ => Ok(()),
        }
    }

    /// Same spec with the seed replaced, for seeded families.
    pub fn with_seed(&self, seed: u64) -> Family {
        match *self {
            Family::RandomInterval { n, .. } => Family::RandomInterval { n, seed },
            Family::RandomConnected { n, p, .. } => Family::RandomConnected { n, p, seed },
            ref other => other.clone(),
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, Family::RandomInterval { .. } | Family::RandomConnected { .. })
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            Family::Path(n) => Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()),
            Family::Cycle(n) => Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()),
            Family::Complete(n) => {
                let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
                Graph::from_edges(n, &edges)
            }
            Family::Star(n) => Graph::from_edges(n + 1, &(1..=n).map(|i| (0, i)).collect::<Vec<_>>()),
            Family::SubdividedStar(n) => {
                let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
                edges.extend((1..=n).map(|i| (i, n + i)));
                Graph::from_edges(2 * n + 1, &edges)
            }
            Family::RandomInterval { n, seed } => Ok(random_interval(n, seed)),
            Family::RandomConnected { n, p, seed } => Ok(random_connected(n, p, seed)),
            Family::Fixture(ref name) => fixture(name),
        }
    }
}

pub fn generate_family(spec: &str) -> Result<Graph> {
    spec.parse::<Family>()?.generate()
}

/// Connected interval graph on `n` vertices.
///
/// Endpoints are laid out left to right; at each position an interval opens
/// or one of the open intervals closes (chosen at random), never letting the
/// number of open intervals drop to zero before the end, so the union of the
/// intervals has no gap.
pub fn random_interval(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut open: Vec<usize> = Vec::new();
    let mut opened = 0;
    let mut edges = Vec::new();
    while opened < n || !open.is_empty() {
        let can_open = opened < n;
        let can_close = open.len() >= 2 || (open.len() == 1 && opened == n);
        let do_open = can_open && (!can_close || rng.gen_bool(0.5));
        if do_open {
            for &u in &open {
                edges.push((u, opened));
            }
            open.push(opened);
            opened += 1;
        } else {
            let i = rng.gen_range(0..open.len());
            open.swap_remove(i);
        }
    }
    Graph::from_edges(n, &edges).expect("intersection edges are simple")
}

/// Random spanning tree (each vertex, in shuffled order, attaches to a random
/// earlier one) plus every other pair independently with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>()).expect("edges are simple")
}

fn labelled(labels: &[&str], edges: &[(&str, &str)]) -> Graph {
    let idx = |l: &str| labels.iter().position(|&x| x == l).expect("fixture label");
    let edges: Vec<_> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Graph::with_labels(labels.iter().map(|s| s.to_string()).collect(), &edges).expect("fixture is simple")
}

/// Baked-in example graphs.
///
/// * `figure1`: path `p0-p1-p2-p3`, `L` adjacent to all of `p0..p3`, `R`
///   adjacent to `p1` and `p2`.
/// * `figure2`: 4-cycle `c0-c1-c2-c3-c0` with hub `h` adjacent to every `c*`;
///   `h`, `a`, `b` form a triangle and `t` is adjacent to `a` and `b`.
/// * `figure3_base`: the 7-vertex interval graph on `1..7`.
/// * `figure3`: `figure3_base` plus vertex `8` joined to the clique `{2, 4, 5}`.
pub fn fixture(name: &str) -> Result<Graph> {
    let figure3_edges = [
        ("1", "2"),
        ("2", "3"),
        ("3", "6"),
        ("6", "5"),
        ("5", "4"),
        ("4", "1"),
        ("4", "2"),
        ("2", "5"),
        ("5", "3"),
        ("3", "4"),
        ("4", "7"),
        ("7", "2"),
        ("7", "3"),
    ];
    match name {
        "figure1" => Ok(labelled(
            &["p0", "p1", "p2", "p3", "L", "R"],
            &[
                ("p0", "p1"),
                ("p1", "p2"),
                ("p2", "p3"),
                ("L", "p0"),
                ("L", "p1"),
                ("L", "p2"),
                ("L", "p3"),
                ("R", "p1"),
                ("R", "p2"),
            ],
        )),
        "figure2" => Ok(labelled(
            &["c0", "c1", "c2", "c3", "h", "a", "b", "t"],
            &[
                ("c0", "c1"),
                ("c1", "c2"),
                ("c2", "c3"),
                ("c3", "c0"),
                ("h", "c0"),
                ("h", "c1"),
                ("h", "c2"),
                ("h", "c3"),
                ("h", "a"),
                ("h", "b"),
                ("a", "b"),
                ("t", "a"),
                ("t", "b"),
            ],
        )),
        "figure3_base" => Ok(labelled(&["1", "2", "3", "4", "5", "6", "7"], &figure3_edges)),
        "figure3" => {
            let mut edges = figure3_edges.to_vec();
            edges.extend([("2", "8"), ("4", "8"), ("5", "8")]);
            Ok(labelled(&["1", "2", "3", "4", "5", "6", "7", "8"], &edges))
        }
        _ => Err(Error::InvalidFamily {
            spec: format!("fixture:{name}"),
            reason: format!("unknown fixture; known: {}", FIXTURE_NAMES.join(", ")),
        }),
    }
}

/// Adjacency packed as upper-triangle bits: pair `(i, j)`, `i < j`, at bit
/// `j * (j - 1) / 2 + i`.
fn pack(n: usize, has_edge: impl Fn(usize, usize) -> bool) -> u64 {
    let mut bits = 0u64;
    for j in 1..n {
        for i in 0..j {
            if has_edge(i, j) {
                bits |= 1 << (j * (j - 1) / 2 + i);
            }
        }
    }
    bits
}

fn unpack(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bits >> (j * (j - 1) / 2 + i) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("packed graphs are simple")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(perm.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, out);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut perm, &mut out);
    out
}

/// Smallest packed adjacency over all relabellings.
fn canonical(n: usize, bits: u64, perms: &[Vec<usize>]) -> u64 {
    let adj = |i: usize, j: usize| {
        let (a, b) = (i.min(j), i.max(j));
        bits >> (b * (b - 1) / 2 + a) & 1 == 1
    };
    perms.iter().map(|p| pack(n, |i, j| adj(p[i], p[j]))).min().unwrap_or(0)
}

/// One representative of every isomorphism class of graphs on `n` vertices
/// (`n <= 8`). Each class on `n` vertices arises from a class on `n - 1`
/// vertices by adding a vertex, so classes are grown one vertex at a time and
/// deduplicated by canonical form.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive catalog limited to 8 vertices");
    let mut classes: BTreeSet<u64> = BTreeSet::from([0]);
    for size in 2..=n {
        let perms = permutations(size);
        let mut next = BTreeSet::new();
        for &bits in &classes {
            for nb in 0u64..(1 << (size - 1)) {
                let extended = bits | nb << ((size - 1) * (size - 2) / 2);
                next.insert(canonical(size, extended, &perms));
            }
        }
        classes = next;
    }
    classes.into_iter().map(|b| unpack(n, b)).collect()
}

/// Non-isomorphic connected graphs on `n` vertices (`1 <= n <= 8`).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Non-isomorphic trees on `n >= 1` vertices, grown leaf by leaf and
/// deduplicated by their centre-rooted canonical encoding.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut current: Vec<Graph> = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &current {
            for v in 0..t.n() {
                let mut edges = t.edges();
                edges.push((v, size - 1));
                let grown = Graph::from_edges(size, &edges).expect("adding a leaf keeps it simple");
                if seen.insert(tree_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    current
}

fn tree_code(t: &Graph) -> String {
    fn encode(t: &Graph, v: usize, parent: usize) -> String {
        let mut parts: Vec<String> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(t, w, v))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    centres(t)
        .into_iter()
        .map(|c| encode(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn centres(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &leaf in &leaves {
            degree[leaf] = 0;
            for &w in t.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        leaves = next;
    }
    leaves.sort_unstable();
    leaves
}

/// Random graph on `1..=max_n` vertices, any edge density, not necessarily
/// connected.
pub fn random_small_graph(max_n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_specs() {
        assert_eq!("cycle:4".parse::<Family>().unwrap(), Family::Cycle(4));
        assert_eq!(
            "random:8".parse::<Family>().unwrap(),
            Family::RandomConnected {
                n: 8,
                p: DEFAULT_EDGE_PROBABILITY,
                seed: 0
            }
        );
        assert_eq!(
            "random_interval:6:9".parse::<Family>().unwrap(),
            Family::RandomInterval { n: 6, seed: 9 }
        );
        for bad in [
            "cycle:2",
            "blob:3",
            "path",
            "path:x",
            "random:5:1.5",
            "fixture:nope",
            "path:3:4",
        ] {
            assert!(
                matches!(bad.parse::<Family>(), Err(Error::InvalidFamily { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn subdivided_star_shape() {
        let g = generate_family("subdivided_star:3").unwrap();
        assert_eq!((g.n(), g.m()), (7, 6));
        assert!(g.is_tree());
    }

    #[test]
    fn figure1_shape() {
        let g = fixture("figure1").unwrap();
        assert_eq!((g.n(), g.m()), (6, 9));
        let l = g.index_of("L").unwrap();
        assert_eq!(g.degree(l), 4);
        let r = g.index_of("R").unwrap();
        assert_eq!(g.neighbors(r), &[1, 2]);
    }

    #[test]
    fn figure3_induced_pieces() {
        let g = fixture("figure3").unwrap();
        let set: Vec<usize> = ["1", "3", "6", "7"].iter().map(|l| g.index_of(l).unwrap()).collect();
        let sub = g.induced_subgraph(&set).unwrap();
        let edges: Vec<(&str, &str)> = sub
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| (sub.graph.label(u), sub.graph.label(v)))
            .collect();
        assert_eq!(edges, vec![("3", "6"), ("3", "7")]);
        let s: Vec<usize> = ["2", "4", "5"].iter().map(|l| g.index_of(l).unwrap()).collect();
        assert!(g.is_clique(&s));
    }

    #[test]
    fn random_generators_are_seeded() {
        assert_eq!(random_connected(8, 0.3, 5), random_connected(8, 0.3, 5));
        assert_eq!(random_interval(8, 5), random_interval(8, 5));
        for seed in 0..50 {
            assert!(random_connected(7, 0.2, seed).is_connected());
            assert!(random_interval(7, seed).is_connected());
        }
    }

    #[test]
    fn catalog_sizes() {
        // graphs and connected graphs on n vertices, and trees
        let graphs = [1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(all_graphs(n).len(), graphs[n - 1], "n = {n}");
            assert_eq!(connected_graphs(n).len(), connected[n - 1], "n = {n}");
        }
        let tree_counts = [1, 1, 1, 2, 3, 6, 11, 23, 47];
        for n in 1..=9 {
            assert_eq!(trees(n).len(), tree_counts[n - 1], "n = {n}");
            assert!(trees(n).iter().all(Graph::is_tree));
        }
    }
}
