//! Shortest pairs of optimal vertex walks.
//!
//! A covering walk in a threshold product is found by breadth-first search
//! over [`CoverState`]s: the joint position together with the sets of base
//! vertices each walker has already seen. The search is seeded with every
//! vertex of every good component and expands neighbours in index order, so
//! the first goal state discovered ends the lexicographically least walk among
//! the shortest ones.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{metrics, Graph};
use crate::product::{build_product, safety_subgraph, ProductGraph, RuleSet};
use crate::span::{good_components, vertex_span};

/// Default largest base graph accepted by [`min_steps`].
pub const DEFAULT_VERTEX_CAP: usize = 10;

/// Dense visited sets are used up to this many states (bits).
const DENSE_STATE_LIMIT: u128 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkPair {
    pub alice: Vec<usize>,
    pub bob: Vec<usize>,
    pub rule: RuleSet,
    /// Minimum distance between the walkers over time.
    pub safety: u32,
    pub moves: usize,
}

impl WalkPair {
    pub fn new(h: &Graph, alice: Vec<usize>, bob: Vec<usize>, rule: RuleSet) -> Result<Self> {
        check_shape(h, &alice, &bob)?;
        let dist = metrics(h).dist;
        let safety = pair_safety(&dist, &alice, &bob);
        let moves = alice.len() - 1;
        Ok(WalkPair {
            alice,
            bob,
            rule,
            safety,
            moves,
        })
    }

    pub fn from_labels<S: AsRef<str>>(h: &Graph, alice: &[S], bob: &[S], rule: RuleSet) -> Result<Self> {
        let lookup = |walk: &[S]| -> Result<Vec<usize>> { walk.iter().map(|l| h.index_of(l.as_ref())).collect() };
        Self::new(h, lookup(alice)?, lookup(bob)?, rule)
    }

    pub fn alice_labels<'g>(&self, h: &'g Graph) -> Vec<&'g str> {
        self.alice.iter().map(|&v| h.label(v)).collect()
    }

    pub fn bob_labels<'g>(&self, h: &'g Graph) -> Vec<&'g str> {
        self.bob.iter().map(|&v| h.label(v)).collect()
    }

    /// Re-rooted pair: walk back from position `start` to the beginning, run
    /// the whole walk forwards, then walk back from the end to position `end`.
    pub fn rerooted(&self, h: &Graph, start: usize, end: usize) -> Result<Self> {
        let last = self.alice.len().saturating_sub(1);
        for p in [start, end] {
            if p > last {
                return Err(Error::VertexOutOfRange { vertex: p, n: last + 1 });
            }
        }
        let order: Vec<usize> = (0..=start).rev().chain(1..=last).chain((end..last).rev()).collect();
        let pick = |walk: &[usize]| order.iter().map(|&i| walk[i]).collect();
        Self::new(h, pick(&self.alice), pick(&self.bob), self.rule)
    }
}

fn check_shape(h: &Graph, alice: &[usize], bob: &[usize]) -> Result<()> {
    if alice.len() != bob.len() {
        return Err(Error::UnequalLengths {
            alice: alice.len(),
            bob: bob.len(),
        });
    }
    if alice.is_empty() {
        return Err(Error::EmptyWalk);
    }
    let n = h.n();
    if let Some(&v) = alice.iter().chain(bob).find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

fn pair_safety(dist: &[Vec<u32>], alice: &[usize], bob: &[usize]) -> u32 {
    alice.iter().zip(bob).map(|(&a, &b)| dist[a][b]).min().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkValidation {
    /// Time steps `t` whose transition `t -> t+1` breaks the movement rule.
    pub illegal_steps: Vec<usize>,
    pub alice_surjective: bool,
    pub bob_surjective: bool,
    pub safety: u32,
    /// Recorded `safety` and `moves` agree with the sequences.
    pub record_consistent: bool,
    pub meets_threshold: bool,
    pub valid: bool,
}

/// Checks legality of every step, surjectivity of both walks and the safety
/// distance against `k`.
///
/// Under traditional rules a step where nobody moves is legal (it is a valid
/// walk), under active rules both walkers must move and under lazy rules
/// exactly one must.
pub fn validate_walk_pair(w: &WalkPair, h: &Graph, k: u32) -> Result<WalkValidation> {
    check_shape(h, &w.alice, &w.bob)?;
    let dist = metrics(h).dist;
    let step_ok = |a: usize, b: usize| a == b || h.has_edge(a, b);
    let mut illegal_steps = Vec::new();
    for t in 0..w.alice.len() - 1 {
        let (a, a2, b, b2) = (w.alice[t], w.alice[t + 1], w.bob[t], w.bob[t + 1]);
        let (am, bm) = (a != a2, b != b2);
        let rule_ok = w.rule.permits(am, bm) || (w.rule == RuleSet::Traditional && !am && !bm);
        if !(step_ok(a, a2) && step_ok(b, b2) && rule_ok) {
            illegal_steps.push(t);
        }
    }
    let covers = |walk: &[usize]| {
        let mut seen = vec![false; h.n()];
        walk.iter().for_each(|&v| seen[v] = true);
        seen.into_iter().all(|s| s)
    };
    let alice_surjective = covers(&w.alice);
    let bob_surjective = covers(&w.bob);
    let safety = pair_safety(&dist, &w.alice, &w.bob);
    let record_consistent = safety == w.safety && w.moves + 1 == w.alice.len();
    let meets_threshold = safety >= k;
    Ok(WalkValidation {
        valid: illegal_steps.is_empty() && alice_surjective && bob_surjective && record_consistent && meets_threshold,
        illegal_steps,
        alice_surjective,
        bob_surjective,
        safety,
        record_consistent,
        meets_threshold,
    })
}

/// Search state: joint position plus the base vertices seen by each walker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoverState {
    pub position: usize,
    pub covered_alice: u64,
    pub covered_bob: u64,
}

impl CoverState {
    fn start(p: &ProductGraph, position: usize) -> Self {
        CoverState {
            position,
            covered_alice: 1 << p.first(position),
            covered_bob: 1 << p.second(position),
        }
    }

    fn step(self, p: &ProductGraph, position: usize) -> Self {
        CoverState {
            position,
            covered_alice: self.covered_alice | 1 << p.first(position),
            covered_bob: self.covered_bob | 1 << p.second(position),
        }
    }

    fn key(self, n: usize) -> u64 {
        ((self.position as u64) << (2 * n)) | (self.covered_alice << n) | self.covered_bob
    }
}

enum Visited {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl Visited {
    fn new(slots: usize, n: usize) -> Self {
        let states = slots as u128 * (1u128 << (2 * n));
        if states <= DENSE_STATE_LIMIT {
            Visited::Dense(vec![0; (states as usize).div_ceil(64)])
        } else {
            Visited::Sparse(HashSet::new())
        }
    }

    /// Marks `key`; returns whether it was new.
    fn insert(&mut self, key: u64) -> bool {
        match self {
            Visited::Dense(bits) => {
                let (word, bit) = ((key / 64) as usize, key % 64);
                let fresh = bits[word] & (1 << bit) == 0;
                bits[word] |= 1 << bit;
                fresh
            }
            Visited::Sparse(set) => set.insert(key),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringWalk {
    pub moves: usize,
    /// Product vertex indices, `moves + 1` of them.
    pub sequence: Vec<usize>,
}

/// Shortest walk in `p` whose projections both cover the base vertex set,
/// or `None` when `p` has no good component.
///
/// # Panics
///
/// If the base graph has more than 30 vertices (the cover masks are packed
/// into one 64-bit key).
pub fn shortest_covering_walk(p: &ProductGraph) -> Option<CoveringWalk> {
    let n = p.base().n();
    assert!(n <= 30, "covering-walk search supports at most 30 base vertices");
    let full: u64 = (1u64 << n) - 1;
    let is_goal = |s: CoverState| s.covered_alice == full && s.covered_bob == full;

    let mut sources: Vec<usize> = good_components(p).into_iter().flatten().collect();
    sources.sort_unstable();
    if sources.is_empty() {
        return None;
    }

    let mut visited = Visited::new(p.slots(), n);
    // layers[d][i] = (state, index of its parent in layers[d - 1])
    let mut layers: Vec<Vec<(CoverState, u32)>> = Vec::new();
    let mut first = Vec::with_capacity(sources.len());
    for &s in &sources {
        let state = CoverState::start(p, s);
        if visited.insert(state.key(n)) {
            if is_goal(state) {
                return Some(CoveringWalk {
                    moves: 0,
                    sequence: vec![s],
                });
            }
            first.push((state, u32::MAX));
        }
    }
    layers.push(first);

    loop {
        let current = layers.last().expect("at least one layer");
        if current.is_empty() {
            return None;
        }
        let mut next = Vec::new();
        let mut goal = None;
        'expand: for (i, &(state, _)) in current.iter().enumerate() {
            for &nb in p.neighbors(state.position) {
                let succ = state.step(p, nb);
                if visited.insert(succ.key(n)) {
                    next.push((succ, i as u32));
                    if is_goal(succ) {
                        goal = Some(next.len() - 1);
                        break 'expand;
                    }
                }
            }
        }
        layers.push(next);
        if let Some(mut at) = goal {
            let mut sequence = Vec::with_capacity(layers.len());
            for layer in layers.iter().rev() {
                let (state, parent) = layer[at];
                sequence.push(state.position);
                at = parent as usize;
            }
            sequence.reverse();
            return Some(CoveringWalk {
                moves: sequence.len() - 1,
                sequence,
            });
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinSteps {
    pub span: u32,
    pub moves: usize,
    pub walk: WalkPair,
    /// The underlying product walk as (Alice, Bob) pairs.
    pub product_walk: Vec<(usize, usize)>,
}

/// Vertex span of `h` under `rule` together with a shortest pair of optimal
/// walks. Base graphs above `cap` vertices are refused: the search space has
/// up to `n² · 4ⁿ` states.
pub fn min_steps(h: &Graph, rule: RuleSet, cap: usize) -> Result<MinSteps> {
    let n = h.n();
    if n > cap {
        return Err(Error::Capacity {
            what: "min_steps",
            n,
            cap,
            bound: format!("search space up to n^2 * 4^n = {} states", state_bound(n)),
        });
    }
    let span = vertex_span(h, rule)?.span;
    let restricted = safety_subgraph(&build_product(h, rule), span);
    let walk = shortest_covering_walk(&restricted).expect("a good component exists at the vertex span");
    let product_walk: Vec<(usize, usize)> = walk.sequence.iter().map(|&i| restricted.pair(i)).collect();
    let pair = WalkPair::new(
        h,
        product_walk.iter().map(|&(a, _)| a).collect(),
        product_walk.iter().map(|&(_, b)| b).collect(),
        rule,
    )?;
    Ok(MinSteps {
        span,
        moves: walk.moves,
        walk: pair,
        product_walk,
    })
}

/// `n² · 4ⁿ`, saturating.
pub fn state_bound(n: usize) -> u128 {
    if 2 * n >= 120 {
        return u128::MAX;
    }
    (n as u128 * n as u128).saturating_mul(1u128 << (2 * n))
}
