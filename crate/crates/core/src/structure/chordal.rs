//! Chordality, asteroidal triples and induced subdivided claws.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Chordality {
    /// A perfect elimination ordering, first-eliminated vertex first.
    Chordal { elimination_order: Vec<usize> },
    /// A chordless cycle of length at least four, in cyclic order.
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Lexicographic breadth-first search; ties go to the smallest index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("an unnumbered vertex remains");
        numbered[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    if order.len() != n || position.contains(&usize::MAX) {
        return false;
    }
    order.iter().enumerate().all(|(i, &v)| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| position[w] > i).collect();
        g.is_clique(&later)
    })
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let mut order = lex_bfs(g);
    order.reverse();
    if is_perfect_elimination_ordering(g, &order) {
        return Chordality::Chordal {
            elimination_order: order,
        };
    }
    let cycle = find_chordless_cycle(g).expect("a graph without a perfect elimination ordering has a hole");
    Chordality::NotChordal { cycle }
}

/// Some induced cycle of length at least four, if any.
///
/// For each vertex `v` and non-adjacent pair `x, y` of its neighbours, a
/// shortest `x`-`y` path avoiding the rest of `N[v]` closes a chordless cycle
/// through `v`. Every hole is found this way from any of its vertices.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in nb {
                    blocked[w] = w != x && w != y;
                }
                if let Some(path) = shortest_path(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if !blocked[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Whether `from` and `to` are joined by a path avoiding `N[avoid]`.
fn connected_avoiding(g: &Graph, from: usize, to: usize, avoid: usize) -> bool {
    let mut blocked = vec![false; g.n()];
    blocked[avoid] = true;
    for &w in g.neighbors(avoid) {
        blocked[w] = true;
    }
    if blocked[from] || blocked[to] {
        return false;
    }
    shortest_path(g, from, to, &blocked).is_some()
}

pub fn is_asteroidal_triple(g: &Graph, [a, b, c]: [usize; 3]) -> bool {
    let independent = a != b && b != c && a != c && !g.has_edge(a, b) && !g.has_edge(b, c) && !g.has_edge(a, c);
    independent && connected_avoiding(g, a, b, c) && connected_avoiding(g, b, c, a) && connected_avoiding(g, a, c, b)
}

/// Lexicographically first asteroidal triple, by brute force over
/// independent triples.
pub fn find_asteroidal_triple(g: &Graph) -> Option<[usize; 3]> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if is_asteroidal_triple(g, [a, b, c]) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// An induced copy of the subdivided claw `S_{1,3}` as
/// `[centre, a1, a2, a3, b1, b2, b3]` with `ai` adjacent to the centre and `bi`.
pub fn find_induced_subdivided_claw(g: &Graph) -> Option<[usize; 7]> {
    let n = g.n();
    for x in 0..n {
        let nb = g.neighbors(x);
        for (i, &a1) in nb.iter().enumerate() {
            for (j, &a2) in nb.iter().enumerate().skip(i + 1) {
                for &a3 in &nb[j + 1..] {
                    let arms = [a1, a2, a3];
                    if !g.is_clique(&[a1, a2]) && !g.is_clique(&[a1, a3]) && !g.is_clique(&[a2, a3]) {
                        if let Some(ends) = claw_ends(g, x, arms) {
                            return Some([x, a1, a2, a3, ends[0], ends[1], ends[2]]);
                        }
                    }
                }
            }
        }
    }
    None
}

fn claw_ends(g: &Graph, x: usize, arms: [usize; 3]) -> Option<[usize; 3]> {
    let candidates = |i: usize| -> Vec<usize> {
        g.neighbors(arms[i])
            .iter()
            .copied()
            .filter(|&b| b != x && !g.has_edge(b, x))
            .filter(|&b| {
                (0..3)
                    .filter(|&j| j != i)
                    .all(|j| b != arms[j] && !g.has_edge(b, arms[j]))
            })
            .collect()
    };
    let (c0, c1, c2) = (candidates(0), candidates(1), candidates(2));
    for &b0 in &c0 {
        for &b1 in &c1 {
            if b1 == b0 || g.has_edge(b0, b1) {
                continue;
            }
            for &b2 in &c2 {
                if b2 != b0 && b2 != b1 && !g.has_edge(b0, b2) && !g.has_edge(b1, b2) {
                    return Some([b0, b1, b2]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::families::{fixture, Family};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Family::Complete(n).generate().unwrap()
    }

    #[test]
    fn trees_are_chordal() {
        let t = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        match is_chordal(&t) {
            Chordality::Chordal { elimination_order } => {
                assert!(is_perfect_elimination_ordering(&t, &elimination_order))
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn c4_witness_is_itself() {
        match is_chordal(&cycle(4)) {
            Chordality::NotChordal { cycle: c } => {
                assert_eq!(c.len(), 4);
                assert!(is_chordless_cycle(&cycle(4), &c));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn figure2_has_a_column_hole() {
        let g = fixture("figure2").unwrap();
        let Chordality::NotChordal { cycle } = is_chordal(&g) else {
            panic!("figure2 is not chordal");
        };
        assert!(is_chordless_cycle(&g, &cycle));
        let mut labels: Vec<&str> = cycle.iter().map(|&v| g.label(v)).collect();
        labels.sort_unstable();
        assert_eq!(labels, ["c0", "c1", "c2", "c3"]);
    }

    #[test]
    fn asteroidal_triples() {
        assert_eq!(find_asteroidal_triple(&complete(5)), None);
        assert_eq!(find_asteroidal_triple(&cycle(4)), None);
        let s13 = Family::SubdividedStar(3).generate().unwrap();
        let t = find_asteroidal_triple(&s13).unwrap();
        let mut leaves: Vec<usize> = (0..s13.n()).filter(|&v| s13.degree(v) == 1).collect();
        leaves.sort_unstable();
        assert_eq!(t.to_vec(), leaves);
        assert!(is_asteroidal_triple(&s13, t));
        // C6 has the alternate vertices as an asteroidal triple
        assert!(is_asteroidal_triple(&cycle(6), [0, 2, 4]));
    }

    #[test]
    fn subdivided_claw_detection() {
        let s13 = Family::SubdividedStar(3).generate().unwrap();
        let found = find_induced_subdivided_claw(&s13).unwrap();
        assert_eq!(found[0], 0);
        let caterpillar = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(find_induced_subdivided_claw(&caterpillar), None);
        // adding a chord between two arm ends destroys inducedness
        let mut edges = s13.edges();
        edges.push((4, 5));
        let g = Graph::from_edges(7, &edges).unwrap();
        assert_eq!(find_induced_subdivided_claw(&g), None);
    }
}
