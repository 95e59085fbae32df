//! Squarefree stable, strongly stable, lexsegment and matroidal ideals.
//!
//! cargo run --example stable_recognizers

use clutterkit::catalog;
use clutterkit::chordality::{is_chordal, is_simplicial_subclutter, ChordalMode};
use clutterkit::ideals::{
    is_matroidal, is_squarefree_lexsegment, is_squarefree_stable, is_squarefree_strongly_stable, OrderedIdeal,
};
use clutterkit::search::Budget;
use clutterkit::{UniformClutter, VertexSet};

fn report(name: &str, ideal: &OrderedIdeal) {
    let stable = is_squarefree_stable(ideal).unwrap();
    println!("{name}:");
    println!("  stable {}, strongly stable {}, lexsegment {}, matroidal {}",
        stable.holds,
        is_squarefree_strongly_stable(ideal).unwrap().holds,
        is_squarefree_lexsegment(ideal).unwrap().holds,
        is_matroidal(ideal).unwrap().holds,
    );
    for v in stable.violations.iter().take(3) {
        println!("  violation: {}", serde_json::to_string(v).unwrap());
    }
}

fn main() {
    let ideal = OrderedIdeal::circuit_ideal(&catalog::ex2().complement());
    report("complement ideal of the twelve-circuit clutter", &ideal);

    // A squarefree stable ideal.
    let gens: Vec<VertexSet> = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [1, 2, 5], [2, 3, 4]].map(|s| VertexSet::of(&s)).to_vec();
    let ideal = OrderedIdeal::from_sets(5, &gens).unwrap();
    report("(x1x2x3, x1x2x4, x1x3x4, x1x2x5, x2x3x4)", &ideal);

    // I = I(C̄): the clutter C is the complement of the generators.
    let c = UniformClutter::new(5, 3, gens).unwrap().complement();
    println!("C = {c}");
    println!("  chordal: {}", is_chordal(&c, ChordalMode::Complete, Budget::default()).verdict.is_chordal());
    let complete = UniformClutter::complete(5, 3).unwrap();
    let steps = is_simplicial_subclutter(&complete, &c, Budget::default()).unwrap();
    println!("  simplicial subclutter of C_{{5,3}}: {}", serde_json::to_string(&steps.outcome.found()).unwrap());
}
