//! Brute-force spans and minimum move counts taken straight from the walk
//! definitions. Nothing here touches product graphs or the solver: distances
//! come from a local Floyd-Warshall, moves are enumerated on the base graph
//! and the search runs over (positions, covered sets) states.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::RuleSet;
use crate::span::SpanKind;

/// Largest graph the oracle accepts by default.
pub const DEFAULT_ORACLE_CAP: usize = 6;

/// Largest graph accepted by [`brute_force_min_moves`] by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 5;

const UNREACHABLE: u32 = u32::MAX;

fn floyd_warshall(h: &Graph) -> Vec<Vec<u32>> {
    let n = h.n();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if h.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if d[u][w] != UNREACHABLE && d[w][v] != UNREACHABLE && d[u][w] + d[w][v] < d[u][v] {
                    d[u][v] = d[u][w] + d[w][v];
                }
            }
        }
    }
    d
}

/// Joint moves from `(a, b)`; a standing walker is represented by its own
/// vertex. The step where nobody moves is never produced.
fn joint_moves(h: &Graph, rule: RuleSet, a: usize, b: usize) -> Vec<(usize, usize)> {
    let options = |v: usize| {
        std::iter::once(v)
            .chain(h.neighbors(v).iter().copied())
            .collect::<Vec<_>>()
    };
    let mut out = Vec::new();
    for &a2 in &options(a) {
        for &b2 in &options(b) {
            let (am, bm) = (a2 != a, b2 != b);
            let allowed = match rule {
                RuleSet::Traditional => am || bm,
                RuleSet::Active => am && bm,
                RuleSet::Lazy => am != bm,
            };
            if allowed {
                out.push((a2, b2));
            }
        }
    }
    out
}

fn check_input(h: &Graph, cap: usize) -> Result<Vec<Vec<u32>>> {
    if h.n() > cap {
        return Err(Error::Capacity {
            what: "brute-force oracle",
            n: h.n(),
            cap,
            bound: "state space grows as n^2 * 4^n (vertex) or n^2 * 4^m (edge)".into(),
        });
    }
    let d = floyd_warshall(h);
    if h.n() == 0 || d.iter().flatten().any(|&x| x == UNREACHABLE) {
        return Err(Error::Disconnected);
    }
    Ok(d)
}

/// Index of every edge of `h` as a bit position.
fn edge_bits(h: &Graph) -> HashMap<(usize, usize), u32> {
    h.edges().into_iter().enumerate().map(|(i, e)| (e, i as u32)).collect()
}

/// Bit set gained by stepping from `from` to `to` for the given kind.
fn gained(kind: SpanKind, bits: &HashMap<(usize, usize), u32>, from: usize, to: usize) -> u64 {
    match kind {
        SpanKind::Vertex => 1 << to,
        SpanKind::Edge if from == to => 0,
        SpanKind::Edge => 1 << bits[&(from.min(to), from.max(to))],
    }
}

/// Whether some pair of walks keeping distance at least `k` covers every
/// vertex (or edge) in both coordinates. Depth-first search over states
/// `(a, b, seen_by_alice, seen_by_bob)` from every admissible start.
fn full_cover_reachable(h: &Graph, d: &[Vec<u32>], rule: RuleSet, kind: SpanKind, k: u32) -> bool {
    let n = h.n();
    let bits = edge_bits(h);
    let targets = match kind {
        SpanKind::Vertex => n,
        SpanKind::Edge => h.m(),
    };
    let full: u64 = (1u64 << targets) - 1;
    let start_mask = |v: usize| match kind {
        SpanKind::Vertex => 1u64 << v,
        SpanKind::Edge => 0,
    };
    let mut seen: HashSet<(usize, usize, u64, u64)> = HashSet::new();
    let mut stack = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if d[a][b] >= k {
                let s = (a, b, start_mask(a), start_mask(b));
                if seen.insert(s) {
                    stack.push(s);
                }
            }
        }
    }
    while let Some((a, b, ma, mb)) = stack.pop() {
        if ma == full && mb == full {
            return true;
        }
        for (a2, b2) in joint_moves(h, rule, a, b) {
            if d[a2][b2] < k {
                continue;
            }
            let next = (a2, b2, ma | gained(kind, &bits, a, a2), mb | gained(kind, &bits, b, b2));
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    false
}

/// Same question as [`full_cover_reachable`], answered per start position.
///
/// Every joint move can be undone, so from a start `s` a walk can visit any
/// reachable configuration and come back to `s`. Chaining such excursions
/// covers the union of everything reachable, so only the positions need to
/// be searched. Used for edge kinds, where covered-edge masks are too many to
/// enumerate.
fn union_cover_reachable(h: &Graph, d: &[Vec<u32>], rule: RuleSet, kind: SpanKind, k: u32) -> bool {
    let n = h.n();
    let bits = edge_bits(h);
    let targets = match kind {
        SpanKind::Vertex => n,
        SpanKind::Edge => h.m(),
    };
    let full: u64 = (1u64 << targets) - 1;
    let mut explored = vec![vec![false; n]; n];
    for a0 in 0..n {
        for b0 in 0..n {
            if d[a0][b0] < k || explored[a0][b0] {
                continue;
            }
            let (mut ma, mut mb) = match kind {
                SpanKind::Vertex => (1u64 << a0, 1u64 << b0),
                SpanKind::Edge => (0, 0),
            };
            explored[a0][b0] = true;
            let mut stack = vec![(a0, b0)];
            while let Some((a, b)) = stack.pop() {
                for (a2, b2) in joint_moves(h, rule, a, b) {
                    if d[a2][b2] < k {
                        continue;
                    }
                    ma |= gained(kind, &bits, a, a2);
                    mb |= gained(kind, &bits, b, b2);
                    if !explored[a2][b2] {
                        explored[a2][b2] = true;
                        stack.push((a2, b2));
                    }
                }
            }
            if ma == full && mb == full {
                return true;
            }
        }
    }
    false
}

/// Span by brute force, refusing graphs above [`DEFAULT_ORACLE_CAP`].
pub fn brute_force_span(h: &Graph, rule: RuleSet, kind: SpanKind) -> Result<u32> {
    brute_force_span_with_cap(h, rule, kind, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_span_with_cap(h: &Graph, rule: RuleSet, kind: SpanKind, cap: usize) -> Result<u32> {
    let d = check_input(h, cap)?;
    let diameter = d.iter().flatten().copied().max().unwrap_or(0);
    let feasible = |k: u32| match kind {
        SpanKind::Vertex => full_cover_reachable(h, &d, rule, kind, k),
        SpanKind::Edge => union_cover_reachable(h, &d, rule, kind, k),
    };
    Ok((0..=diameter).rev().find(|&k| feasible(k)).unwrap_or(0))
}

/// Edge span computed with full covered-edge masks; only practical for a
/// handful of edges. Kept to cross-check the excursion shortcut.
pub fn brute_force_edge_span_full_state(h: &Graph, rule: RuleSet) -> Result<u32> {
    let d = check_input(h, DEFAULT_ORACLE_CAP)?;
    let diameter = d.iter().flatten().copied().max().unwrap_or(0);
    Ok((0..=diameter)
        .rev()
        .find(|&k| full_cover_reachable(h, &d, rule, SpanKind::Edge, k))
        .unwrap_or(0))
}

/// Vertex span and the fewest moves of a pair of surjective walks attaining
/// it, by iterative deepening over walk pairs in the base graph.
///
/// Branches are cut when the remaining budget cannot cover the vertices still
/// unseen (one new vertex per walker per move) and when a state has already
/// failed with at least as much budget left.
pub fn brute_force_min_moves(h: &Graph, rule: RuleSet, cap: usize) -> Result<(u32, usize)> {
    let d = check_input(h, cap)?;
    let span = brute_force_span_with_cap(h, rule, SpanKind::Vertex, cap)?;
    let n = h.n();
    let full: u64 = (1 << n) - 1;

    struct Search<'a> {
        h: &'a Graph,
        d: &'a [Vec<u32>],
        rule: RuleSet,
        k: u32,
        full: u64,
        failed: HashMap<(usize, usize, u64, u64), usize>,
    }

    impl Search<'_> {
        fn covers_within(&mut self, a: usize, b: usize, ma: u64, mb: u64, budget: usize) -> bool {
            if ma == self.full && mb == self.full {
                return true;
            }
            let missing = (self.full & !ma).count_ones().max((self.full & !mb).count_ones()) as usize;
            if missing > budget {
                return false;
            }
            let key = (a, b, ma, mb);
            if self.failed.get(&key).is_some_and(|&b| b >= budget) {
                return false;
            }
            for (a2, b2) in joint_moves(self.h, self.rule, a, b) {
                if self.d[a2][b2] >= self.k && self.covers_within(a2, b2, ma | 1 << a2, mb | 1 << b2, budget - 1) {
                    return true;
                }
            }
            self.failed.insert(key, budget);
            false
        }
    }

    let mut search = Search {
        h,
        d: &d,
        rule,
        k: span,
        full,
        failed: HashMap::new(),
    };
    for budget in 0.. {
        for a in 0..n {
            for b in 0..n {
                if d[a][b] >= span && search.covers_within(a, b, 1 << a, 1 << b, budget) {
                    return Ok((span, budget));
                }
            }
        }
    }
    unreachable!("a covering walk exists at the span")
}
