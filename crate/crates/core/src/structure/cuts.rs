//! Minimal cut sets, S-lobes and augmentation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraph};

/// Default largest cut set enumerated.
pub const DEFAULT_CUT_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSet {
    pub set: Vec<usize>,
    /// Components of `G - set`, each sorted.
    pub components: Vec<Vec<usize>>,
    pub is_clique: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSetCatalog {
    /// Largest set size searched.
    pub cap: usize,
    pub sets: Vec<CutSet>,
}

fn is_cut_set(g: &Graph, set: &[usize]) -> bool {
    g.components_avoiding(set).len() > g.components().len()
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All minimal cut sets of size at most `cap`, ordered by size then
/// lexicographically.
///
/// A cut set is minimal iff it contains no smaller minimal cut set, so sets
/// are generated by increasing size and filtered against those already found.
pub fn minimal_cut_sets(g: &Graph, cap: usize) -> Result<CutSetCatalog> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut sets: Vec<CutSet> = Vec::new();
    for size in 1..=cap.min(n.saturating_sub(2)) {
        let mut found = Vec::new();
        for_each_subset(n, size, |subset| {
            let contains_smaller = sets.iter().any(|c| c.set.iter().all(|v| subset.contains(v)));
            if !contains_smaller && is_cut_set(g, subset) {
                found.push(CutSet {
                    set: subset.to_vec(),
                    components: g.components_avoiding(subset),
                    is_clique: g.is_clique(subset),
                });
            }
        });
        sets.extend(found);
    }
    Ok(CutSetCatalog { cap, sets })
}

/// One lobe per component of `G - S`, induced by that component together
/// with `S`. When `S` does not separate `G` the only lobe is `G` itself.
pub fn s_lobes(g: &Graph, set: &[usize]) -> Result<Vec<InducedSubgraph>> {
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let components = g.components_avoiding(set);
    if components.len() <= 1 {
        return Ok(vec![g.induced_subgraph(&(0..g.n()).collect::<Vec<_>>())?]);
    }
    components
        .into_iter()
        .map(|comp| {
            let mut vs = comp;
            vs.extend_from_slice(set);
            g.induced_subgraph(&vs)
        })
        .collect()
}

/// `aug(G, S, H)`: disjoint union of `g` and `h` plus every edge between `S`
/// and `V(h)`. Vertices of `h` are appended after those of `g`.
pub fn augment(g: &Graph, set: &[usize], h: &Graph) -> Result<Graph> {
    g.glue(h, set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::families::{fixture, Family};

    fn labels(g: &Graph, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| g.label(v).to_string()).collect()
    }

    #[test]
    fn p3_has_centre() {
        let cat = minimal_cut_sets(&Family::Path(3).generate().unwrap(), DEFAULT_CUT_CAP).unwrap();
        assert_eq!(cat.sets.len(), 1);
        assert_eq!(cat.sets[0].set, vec![1]);
        assert_eq!(cat.sets[0].components, vec![vec![0], vec![2]]);
    }

    #[test]
    fn c4_antipodal_pairs() {
        let cat = minimal_cut_sets(&Family::Cycle(4).generate().unwrap(), DEFAULT_CUT_CAP).unwrap();
        let sets: Vec<_> = cat.sets.iter().map(|c| c.set.clone()).collect();
        assert_eq!(sets, vec![vec![0, 2], vec![1, 3]]);
        assert!(cat.sets.iter().all(|c| !c.is_clique));
    }

    #[test]
    fn complete_has_none() {
        let cat = minimal_cut_sets(&Family::Complete(5).generate().unwrap(), DEFAULT_CUT_CAP).unwrap();
        assert!(cat.sets.is_empty());
    }

    #[test]
    fn lobes_of_p3() {
        let lobes = s_lobes(&Family::Path(3).generate().unwrap(), &[1]).unwrap();
        assert_eq!(lobes.len(), 2);
        for l in &lobes {
            assert_eq!((l.graph.n(), l.graph.m()), (2, 1));
        }
    }

    #[test]
    fn lobes_of_figure3_base() {
        let g = fixture("figure3_base").unwrap();
        let s: Vec<usize> = ["2", "4", "5"].iter().map(|l| g.index_of(l).unwrap()).collect();
        let lobes = s_lobes(&g, &s).unwrap();
        let sets: Vec<Vec<String>> = lobes.iter().map(|l| labels(&g, &l.origin)).collect();
        assert_eq!(sets, vec![vec!["1", "2", "4", "5"], vec!["2", "3", "4", "5", "6", "7"]]);
    }

    #[test]
    fn lobes_without_separation() {
        let g = Family::Cycle(5).generate().unwrap();
        for set in [vec![], vec![0]] {
            let lobes = s_lobes(&g, &set).unwrap();
            assert_eq!(lobes.len(), 1);
            assert_eq!(lobes[0].graph, g);
        }
    }

    #[test]
    fn augment_builds_figure3() {
        let base = fixture("figure3_base").unwrap();
        let s: Vec<usize> = ["2", "4", "5"].iter().map(|l| base.index_of(l).unwrap()).collect();
        let k1 = Graph::with_labels(vec!["8".into()], &[]).unwrap();
        let aug = augment(&base, &s, &k1).unwrap();
        assert_eq!(aug, fixture("figure3").unwrap());
    }

    #[test]
    fn augment_with_everything_adds_universal_vertex() {
        let g = Family::Cycle(5).generate().unwrap();
        let all: Vec<usize> = (0..5).collect();
        let aug = augment(&g, &all, &Graph::empty(1)).unwrap();
        assert_eq!(aug.degree(5), 5);
        assert_eq!(aug.label(5), "5");
        assert_eq!(aug.m(), 10);
    }

    #[test]
    fn subset_enumeration_counts() {
        let mut count = 0;
        for_each_subset(6, 3, |_| count += 1);
        assert_eq!(count, 20);
    }
}
