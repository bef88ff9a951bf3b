use proptest::prelude::*;
use spanlab::span::{span, verify_certificate};
use spanlab::structure::cuts::{augment, minimal_cut_sets, s_lobes};
use spanlab::structure::families::{
    all_graphs, connected_graphs, random_connected, random_interval, random_small_graph,
};
use spanlab::structure::interval::{interval_certificate, is_interval, realizes, DEFAULT_REPRESENTATION_CAP};
use spanlab::{min_steps, validate_walk_pair, Graph, RuleSet, SpanKind};

/// Interval recognition by trying every order of the 2n endpoints: opening
/// an interval makes it adjacent to everything currently open.
fn has_interval_order(g: &Graph) -> bool {
    fn extend(g: &Graph, opened: &mut Vec<bool>, open: &mut Vec<usize>, closed: &mut Vec<bool>) -> bool {
        let n = g.n();
        if closed.iter().all(|&c| c) {
            return true;
        }
        for v in 0..n {
            if !opened[v] && open.iter().all(|&u| g.has_edge(u, v)) {
                // every earlier-closed vertex must not be a neighbour
                if (0..n).any(|u| closed[u] && g.has_edge(u, v)) {
                    continue;
                }
                opened[v] = true;
                open.push(v);
                if extend(g, opened, open, closed) {
                    return true;
                }
                open.pop();
                opened[v] = false;
            }
        }
        for i in 0..open.len() {
            let v = open[i];
            // closing is only safe once all neighbours have appeared
            if g.neighbors(v).iter().all(|&w| opened[w]) {
                open.remove(i);
                closed[v] = true;
                if extend(g, opened, open, closed) {
                    return true;
                }
                closed[v] = false;
                open.insert(i, v);
            }
        }
        false
    }
    let n = g.n();
    extend(g, &mut vec![false; n], &mut Vec::new(), &mut vec![false; n])
}

#[test]
fn interval_recognition_matches_endpoint_search() {
    let mut interval = 0;
    for n in 1..=6 {
        for g in all_graphs(n) {
            let expected = has_interval_order(&g);
            assert_eq!(is_interval(&g), expected, "{:?}", g.edges());
            let cert = interval_certificate(&g, DEFAULT_REPRESENTATION_CAP).unwrap();
            assert_eq!(cert.is_interval, expected);
            match (&cert.representation, &cert.witness) {
                (Some(rep), None) => assert!(realizes(&g, rep)),
                (None, Some(w)) => assert!(w.is_valid(&g)),
                other => panic!("inconsistent certificate {other:?}"),
            }
            interval += expected as usize;
        }
    }
    // interval graphs on up to 6 vertices: 1 + 2 + 4 + 10 + 27 + 92
    assert_eq!(interval, 136);
}

#[test]
fn minimal_cut_set_vertices_see_every_component() {
    for n in 3..=6 {
        for g in connected_graphs(n) {
            for cut in minimal_cut_sets(&g, n).unwrap().sets {
                assert!(cut.components.len() >= 2);
                for &s in &cut.set {
                    for comp in &cut.components {
                        assert!(comp.iter().any(|&c| g.has_edge(s, c)), "{:?} {:?}", g.edges(), cut.set);
                    }
                }
                for lobe in s_lobes(&g, &cut.set).unwrap() {
                    assert!(lobe.graph.is_connected());
                }
            }
        }
    }
}

#[test]
fn minimal_cut_sets_are_minimal() {
    for g in connected_graphs(6) {
        for cut in minimal_cut_sets(&g, 6).unwrap().sets {
            for skip in 0..cut.set.len() {
                let smaller: Vec<usize> = cut
                    .set
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                assert_eq!(g.components_avoiding(&smaller).len(), 1);
            }
        }
    }
}

#[test]
fn solver_certificates_check_out() {
    for seed in 0..60 {
        let g = random_connected(2 + (seed % 7) as usize, 0.35, seed);
        for rule in RuleSet::ALL {
            for kind in SpanKind::ALL {
                let value = span(&g, rule, kind).unwrap();
                assert!(verify_certificate(&g, &value.certificate), "seed {seed} {rule} {kind}");
            }
        }
    }
}

#[test]
fn rerooted_optimal_walks_stay_valid() {
    for seed in 0..20 {
        let g = random_connected(3 + (seed % 4) as usize, 0.3, seed);
        let r = min_steps(&g, RuleSet::Traditional, 10).unwrap();
        let last = r.walk.moves;
        for (start, end) in [(0, last), (last / 2, 0), (last, last / 2)] {
            let re = r.walk.rerooted(&g, start, end).unwrap();
            assert_eq!(re.alice[0], r.walk.alice[start]);
            assert_eq!(*re.bob.last().unwrap(), r.walk.bob[end]);
            assert!(validate_walk_pair(&re, &g, r.span).unwrap().valid, "seed {seed}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn augmentation_restricts_to_original(seed in 0u64..10_000, pick in 0usize..64) {
        let g = random_interval(2 + (seed % 8) as usize, seed);
        let h = random_small_graph(4, seed ^ 0x5eed);
        let set: Vec<usize> = (0..g.n()).filter(|v| pick >> (v % 6) & 1 == 1).collect();
        let aug = augment(&g, &set, &h).unwrap();
        prop_assert_eq!(aug.n(), g.n() + h.n());
        prop_assert_eq!(aug.m(), g.m() + h.m() + set.len() * h.n());
        let back = aug.induced_subgraph(&(0..g.n()).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(back.graph, g);
    }

    #[test]
    fn vertex_span_at_most_radius(seed in 0u64..10_000) {
        let g = random_connected(1 + (seed % 9) as usize, 0.3, seed);
        let rad = spanlab::graph::metrics(&g).radius;
        for rule in RuleSet::ALL {
            prop_assert!(span(&g, rule, SpanKind::Vertex).unwrap().span <= rad);
        }
    }
}
