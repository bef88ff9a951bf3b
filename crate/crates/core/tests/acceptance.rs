//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use spanlab::span::{span, span_report, vertex_span};
use spanlab::structure::chordal::find_induced_subdivided_claw;
use spanlab::structure::families::{connected_graphs, random_connected, random_interval, random_small_graph, trees};
use spanlab::structure::{augment, end_cliques, fixture, is_chordal, minimal_cut_sets, DEFAULT_REPRESENTATION_CAP};
use spanlab::verify::{brute_force_min_moves, brute_force_span, check_span1_structure, check_span_inequalities};
use spanlab::walks::DEFAULT_VERTEX_CAP;
use spanlab::{min_steps, validate_walk_pair, Graph, RuleSet, SpanKind, WalkPair};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strong(h: &Graph) -> u32 {
    vertex_span(h, RuleSet::Traditional).expect("connected").span
}

fn labels(h: &Graph, vs: &[&str]) -> Vec<usize> {
    vs.iter().map(|l| h.index_of(l).unwrap()).collect()
}

fn criterion_1() -> Outcome {
    let g = fixture("figure1").map_err(|e| e.to_string())?;
    let v = span(&g, RuleSet::Traditional, SpanKind::Vertex).unwrap().span;
    let e = span(&g, RuleSet::Traditional, SpanKind::Edge).unwrap().span;
    ensure(v == 2 && e == 1, || format!("vertex {v}, edge {e}"))?;
    Ok(format!("figure1 traditional vertex span {v}, edge span {e}"))
}

fn criterion_2() -> Outcome {
    let g = fixture("figure3").unwrap();
    let alice = ["1", "2", "8", "4", "7", "3", "6", "5", "6", "6", "6", "5", "8"];
    let bob = ["5", "6", "6", "6", "5", "8", "2", "1", "2", "8", "4", "7", "3"];
    let w = WalkPair::from_labels(&g, &alice, &bob, RuleSet::Traditional).map_err(|e| e.to_string())?;
    let check = validate_walk_pair(&w, &g, 2).unwrap();
    ensure(check.valid, || format!("walks rejected: {check:?}"))?;
    ensure(check.safety == 2, || format!("safety {}", check.safety))?;
    ensure(check.alice_surjective && check.bob_surjective, || {
        "walks not surjective".into()
    })?;
    let s = strong(&g);
    ensure(s == 2, || format!("solver span {s}"))?;
    Ok(format!(
        "figure3 walks valid with safety {}, solver span {s}",
        check.safety
    ))
}

fn criterion_3() -> Outcome {
    let g = fixture("figure2").unwrap();
    let s = strong(&g);
    let chordal = is_chordal(&g).is_chordal();
    ensure(s == 1 && !chordal, || format!("span {s}, chordal {chordal}"))?;
    Ok(format!("figure2 strong vertex span {s}, chordal {chordal}"))
}

fn criterion_4() -> Outcome {
    let mut graphs = 0;
    let mut comparisons = 0;
    for n in 1..=6 {
        for h in connected_graphs(n) {
            graphs += 1;
            let report = span_report(&h).unwrap();
            for rule in RuleSet::ALL {
                for kind in SpanKind::ALL {
                    let solver = report.get(rule, kind).span;
                    let oracle = brute_force_span(&h, rule, kind).unwrap();
                    ensure(solver == oracle, || {
                        format!("{rule} {kind} on {:?}: solver {solver}, oracle {oracle}", h.edges())
                    })?;
                    comparisons += 1;
                }
            }
        }
    }
    Ok(format!(
        "{graphs} connected graphs (n <= 6, exhaustive), {comparisons} comparisons, 0 mismatches"
    ))
}

fn fuzz_graph(seed: u64) -> Graph {
    let n = 2 + (seed % 7) as usize;
    let p = [0.1, 0.25, 0.4, 0.6][(seed / 7 % 4) as usize];
    random_connected(n, p, seed)
}

fn criterion_5() -> Outcome {
    let mut checks = 0;
    for seed in 0..500 {
        let h = fuzz_graph(seed);
        let report = check_span_inequalities(&h).unwrap();
        if let Some(v) = report.violations().next() {
            return Err(format!("seed {seed}: {} {:?}", v.name, v.witness));
        };
        checks += report.checks.len();
    }
    Ok(format!(
        "500 random connected graphs (n <= 8), {checks} checks, 0 violations"
    ))
}

fn criterion_6() -> Outcome {
    for seed in 0..200 {
        let n = 2 + (seed % 9) as usize;
        let h = random_interval(n, seed);
        let s = strong(&h);
        ensure(s == 1, || format!("interval graph seed {seed} (n = {n}) has span {s}"))?;
    }
    let mut count = 0;
    for n in 2..=9 {
        for t in trees(n) {
            let s = strong(&t);
            let claw_free = find_induced_subdivided_claw(&t).is_none();
            ensure((s == 1) == claw_free, || {
                format!("tree {:?}: span {s}, claw free {claw_free}", t.edges())
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "200 random interval graphs have span 1; {count} trees (2 <= n <= 9) characterised"
    ))
}

fn criterion_7() -> Outcome {
    let mut end_triples = 0;
    let mut cut_triples = 0;
    let mut seed = 0u64;
    while end_triples < 50 || cut_triples < 50 {
        seed += 1;
        ensure(seed < 10_000, || "ran out of seeds".into())?;
        let n = 2 + (seed % 9) as usize;
        let g = random_interval(n, seed);
        let h = random_small_graph(4, seed);
        if end_triples < 50 {
            let ends = end_cliques(&g, DEFAULT_REPRESENTATION_CAP).unwrap();
            let k = &ends[(seed as usize) % ends.len()];
            let s = strong(&augment(&g, k, &h).unwrap());
            ensure(s == 1, || format!("end-clique seed {seed}: span {s}"))?;
            end_triples += 1;
        }
        if cut_triples < 50 {
            let cuts: Vec<Vec<usize>> = minimal_cut_sets(&g, g.n())
                .unwrap()
                .sets
                .into_iter()
                .filter(|c| c.is_clique)
                .map(|c| c.set)
                .collect();
            if !cuts.is_empty() {
                let k = &cuts[(seed as usize) % cuts.len()];
                let s = strong(&augment(&g, k, &h).unwrap());
                ensure(s == 1, || format!("cut-set seed {seed}: span {s}"))?;
                cut_triples += 1;
            }
        }
    }
    let base = fixture("figure3_base").unwrap();
    let set = labels(&base, &["2", "4", "5"]);
    let minimal: Vec<Vec<usize>> = minimal_cut_sets(&base, base.n())
        .unwrap()
        .sets
        .into_iter()
        .map(|c| c.set)
        .collect();
    let ends = end_cliques(&base, DEFAULT_REPRESENTATION_CAP).unwrap();
    ensure(
        base.is_clique(&set) && !minimal.contains(&set) && !ends.contains(&set),
        || "{2,4,5} should be a clique that is neither a minimal cut set nor an end-clique".into(),
    )?;
    let k1 = Graph::with_labels(vec!["8".into()], &[]).unwrap();
    let s = strong(&augment(&base, &set, &k1).unwrap());
    ensure(s == 2, || format!("figure3 augmentation span {s}"))?;
    Ok(format!(
        "{end_triples} end-clique and {cut_triples} cut-set augmentations have span 1; figure3 witness span {s}"
    ))
}

fn criterion_8() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for h in connected_graphs(n) {
            for rule in RuleSet::ALL {
                let fast = min_steps(&h, rule, DEFAULT_VERTEX_CAP).unwrap();
                let naive = brute_force_min_moves(&h, rule, 5).unwrap();
                ensure((fast.span, fast.moves) == naive, || {
                    format!(
                        "{rule} on {:?}: min_steps {:?}, enumeration {naive:?}",
                        h.edges(),
                        (fast.span, fast.moves)
                    )
                })?;
                let check = validate_walk_pair(&fast.walk, &h, fast.span).unwrap();
                ensure(check.valid && fast.walk.moves == fast.moves, || {
                    format!("{rule} on {:?}: {check:?}", h.edges())
                })?;
                cases += 1;
            }
        }
    }
    let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let k2_moves = min_steps(&k2, RuleSet::Traditional, DEFAULT_VERTEX_CAP).unwrap().moves;
    let c4_moves = min_steps(&c4, RuleSet::Traditional, DEFAULT_VERTEX_CAP).unwrap().moves;
    ensure(k2_moves == 1 && c4_moves == 3, || {
        format!("K2 {k2_moves}, C4 {c4_moves}")
    })?;
    Ok(format!(
        "{cases} (graph, rule) cases match enumeration; K2 1 move, C4 3 moves"
    ))
}

fn criterion_9() -> Outcome {
    let mut pool: Vec<Graph> = (1..=6).flat_map(connected_graphs).collect();
    for seed in 0..500 {
        let n = 3 + (seed % 6) as usize;
        pool.push(if seed % 2 == 0 {
            random_interval(n, seed)
        } else {
            fuzz_graph(seed)
        });
    }
    let mut applicable = 0;
    for h in &pool {
        if strong(h) != 1 || h.max_degree() + 1 == h.n() {
            continue;
        }
        applicable += 1;
        let report = check_span1_structure(h).unwrap();
        if let Some(v) = report.violations().next() {
            return Err(format!("{}: {} {:?}", report.graph_id, v.name, v.witness));
        };
    }
    ensure(applicable > 0, || "no applicable graphs".into())?;
    Ok(format!(
        "{} graphs fuzzed, {applicable} with span 1 and no universal vertex, 0 violations",
        pool.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 9] = [
        ("figure 1 spans", criterion_1, 1),
        ("figure 3 walks and span", criterion_2, 1),
        ("figure 2 span and chordality", criterion_3, 1),
        ("oracle equivalence", criterion_4, 300),
        ("span inequality fuzz", criterion_5, 600),
        ("interval and tree theorems", criterion_6, 300),
        ("augmentation theorems", criterion_7, 300),
        ("minimum steps", criterion_8, 300),
        ("span-1 structure", criterion_9, 600),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{msg}; took {elapsed:.2?}, limit {limit} s"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS {name} ({elapsed:.2?}): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
