//! Cross-module properties on randomized instances.

use std::collections::BTreeSet;

use clutterkit::chordality::{
    apply_subclutter_steps, is_chordal, is_simplicial_subclutter, validate_simplicial_sequence, ChordalMode,
    SimplicialSequence, SubclutterSteps,
};
use clutterkit::decomposable::random_decomposable;
use clutterkit::ideals::{
    find_linear_quotients_order, is_squarefree_lexsegment, is_squarefree_stable, is_squarefree_strongly_stable,
    OrderedIdeal,
};
use clutterkit::resolution::{has_linear_resolution, Field};
use clutterkit::search::Budget;
use clutterkit::{UniformClutter, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Closes a family of d-sets under `u ↦ u \ {m(u)} ∪ {i}` for `i < m(u)`, `i ∉ u`.
fn stable_closure(seeds: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut out: BTreeSet<VertexSet> = seeds.into_iter().collect();
    let mut stack: Vec<VertexSet> = out.iter().copied().collect();
    while let Some(u) = stack.pop() {
        let m = u.max().unwrap();
        for i in (1..m).filter(|&i| !u.contains(i)) {
            let v = u.without(m).with(i);
            if out.insert(v) {
                stack.push(v);
            }
        }
    }
    out.into_iter().collect()
}

fn random_d_set(rng: &mut ChaCha8Rng, n: usize, d: usize) -> VertexSet {
    let all: Vec<VertexSet> = VertexSet::full(n).subsets_of_size(d).collect();
    all[rng.gen_range(0..all.len())]
}

#[test]
fn squarefree_stable_ideals_come_from_chordal_simplicial_subclutters() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let d = rng.gen_range(2..=3);
        let n = rng.gen_range(d + 1..=7);
        let seeds: Vec<VertexSet> = (0..rng.gen_range(1..=3)).map(|_| random_d_set(&mut rng, n, d)).collect();
        let gens = stable_closure(seeds);
        let ideal = OrderedIdeal::from_sets(n, &gens).unwrap();
        assert!(is_squarefree_stable(&ideal).unwrap().holds);
        assert!(find_linear_quotients_order(&ideal, Budget::default()).outcome.is_found());

        // I = I(C̄), so C is the complement of the generator clutter.
        let c = UniformClutter::new(n, d, gens).unwrap().complement();
        assert!(is_chordal(&c, ChordalMode::Complete, Budget::default()).verdict.is_chordal(), "{c}");
        let complete = UniformClutter::complete(n, d).unwrap();
        let steps = is_simplicial_subclutter(&complete, &c, Budget::default()).unwrap();
        assert!(steps.outcome.is_found(), "{c}");
    }
}

#[test]
fn recognizer_hierarchy() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..500 {
        let n = rng.gen_range(3..=6);
        let d = rng.gen_range(1..n);
        let all: Vec<VertexSet> = VertexSet::full(n).subsets_of_size(d).collect();
        let mut gens: Vec<VertexSet> = all.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if gens.is_empty() {
            gens.push(all[0]);
        }
        // Lexsegments and closures are rare at random; mix some in.
        if rng.gen_bool(0.3) {
            gens = all[..rng.gen_range(1..=all.len())].to_vec();
        } else if rng.gen_bool(0.3) {
            gens = stable_closure(gens);
        }
        let ideal = OrderedIdeal::from_sets(n, &gens).unwrap();
        let stable = is_squarefree_stable(&ideal).unwrap().holds;
        let strongly = is_squarefree_strongly_stable(&ideal).unwrap().holds;
        let lex = is_squarefree_lexsegment(&ideal).unwrap().holds;
        assert!(!lex || strongly, "{gens:?}");
        assert!(!strongly || stable, "{gens:?}");
    }
}

/// Perfect elimination ordering test for graphs, independent of the clutter code.
fn is_chordal_graph(n: usize, edges: &[(u32, u32)]) -> bool {
    let mut adj = vec![0u64; n + 1];
    for &(a, b) in edges {
        adj[a as usize] |= 1 << b;
        adj[b as usize] |= 1 << a;
    }
    let mut alive: u64 = (1..=n).fold(0, |m, v| m | 1 << v);
    'outer: while alive != 0 {
        for v in 1..=n {
            if alive & (1 << v) == 0 {
                continue;
            }
            let nb = adj[v] & alive;
            let clique = (1..=n).filter(|&u| nb & (1 << u) != 0).all(|u| nb & !(adj[u] | 1 << u) == 0);
            if clique {
                alive &= !(1 << v);
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[test]
fn graph_chordality_matches_linear_resolution_of_the_complement_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..150 {
        let n = rng.gen_range(3..=7);
        let p = rng.gen_range(0.2..0.9);
        let mut edges = Vec::new();
        for a in 1..=n as u32 {
            for b in a + 1..=n as u32 {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let g = UniformClutter::new(n, 2, edges.iter().map(|&(a, b)| VertexSet::of(&[a, b]))).unwrap();
        let chordal = is_chordal(&g, ChordalMode::Complete, Budget::default()).verdict.is_chordal();
        assert_eq!(chordal, is_chordal_graph(n, &edges), "{g}");
        let ideal = OrderedIdeal::circuit_ideal(&g.complement());
        assert_eq!(has_linear_resolution(&ideal, Field::Q, Budget::unlimited()).unwrap(), chordal, "{g}");
    }
}

#[test]
fn simplicial_sequences_of_complete_clutters_are_linear_quotient_orders() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..2000 {
        let n = rng.gen_range(3..=6);
        let d = rng.gen_range(2..=n.min(4));
        let available = clutterkit::vertex_set::binomial(n, d - 1) as usize;
        let len = rng.gen_range(1..=available.min(5));
        let mut seq: Vec<VertexSet> = Vec::new();
        while seq.len() < len {
            let e = random_d_set(&mut rng, n, d - 1);
            if !seq.contains(&e) {
                seq.push(e);
            }
        }
        let complete = UniformClutter::complete(n, d).unwrap();
        let valid = validate_simplicial_sequence(&complete, &SimplicialSequence::new(seq.clone())).is_ok();
        let lq = OrderedIdeal::from_sets(n, &seq).unwrap().has_linear_quotients_in_order();
        assert_eq!(valid, lq, "n={n} d={d} {seq:?}");
    }
}

/// Decomposable clutters are conjectured to be chordal. A counterexample would be
/// a finding, so it is printed rather than failed.
#[test]
fn decomposable_clutters_probe_chordality() {
    let mut counterexamples = Vec::new();
    for seed in 0..200 {
        let n = 4 + (seed % 3) as usize;
        let (c, _) = random_decomposable(n, 3, seed).unwrap();
        match is_chordal(&c, ChordalMode::Complete, Budget::default()).verdict {
            v if v.is_chordal() => {}
            v => counterexamples.push(format!("seed {seed}: {c} -> {v:?}")),
        }
    }
    for line in &counterexamples {
        eprintln!("decomposable but not shown chordal: {line}");
    }
}

/// Whether simplicial subclutters of chordal clutters stay chordal is open; this
/// probes random one-step subclutters and prints any counterexample candidate.
#[test]
fn simplicial_subclutters_of_chordal_clutters_probe_chordality() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut checked = 0;
    for seed in 0..300 {
        let (c, _) = random_decomposable(rng.gen_range(4..=6), rng.gen_range(2..=3), seed).unwrap();
        if !is_chordal(&c, ChordalMode::Complete, Budget::default()).verdict.is_chordal() {
            continue;
        }
        let candidates = c.simplicial_maximal_subcircuits();
        if candidates.is_empty() {
            continue;
        }
        let e = candidates[rng.gen_range(0..candidates.len())];
        let through: Vec<VertexSet> = c.circuits().iter().copied().filter(|f| e.is_subset(*f)).collect();
        let removed: Vec<VertexSet> = through.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        let removed = if removed.is_empty() { vec![through[0]] } else { removed };
        let steps = SubclutterSteps::from_pairs(vec![(e, removed)]);
        let sub = apply_subclutter_steps(&c, &steps).unwrap();
        checked += 1;
        if !is_chordal(&sub, ChordalMode::Complete, Budget::default()).verdict.is_chordal() {
            eprintln!("chordal {c} has a non-chordal simplicial subclutter {sub} via {steps:?}");
        }
    }
    assert!(checked > 100, "only {checked} instances probed");
}
