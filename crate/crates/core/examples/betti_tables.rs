//! Graded Betti tables over several fields.
//!
//! cargo run --example betti_tables

use clutterkit::catalog;
use clutterkit::ideals::OrderedIdeal;
use clutterkit::resolution::{betti_numbers, simplicial_homology_ranks, Field};
use clutterkit::search::Budget;
use clutterkit::{SimplicialComplex, VertexSet};

fn main() {
    let ideal = OrderedIdeal::circuit_ideal(&catalog::ex2().complement());
    let square = ideal.power(2).unwrap();
    for field in Field::DEFAULTS {
        let t = betti_numbers(&ideal, field, Budget::unlimited()).unwrap();
        println!("I, {t}regularity {:?}\n", t.regularity());
        let t2 = betti_numbers(&square, field, Budget::unlimited()).unwrap();
        println!("I^2, {t2}non-linear entries: {:?}\n", t2.nonlinear_entries(6));
    }

    let cycle = [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]].map(|e| VertexSet::of(&e));
    let c5 = OrderedIdeal::from_sets(5, &cycle).unwrap();
    println!("five-cycle, {}", betti_numbers(&c5, Field::Q, Budget::unlimited()).unwrap());

    // The six-vertex real projective plane: its homology sees the characteristic.
    let rp2 = SimplicialComplex::from_lists(
        6,
        &[
            &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
            &[2, 3, 5], &[3, 4, 6], &[2, 4, 5], &[3, 5, 6], &[2, 4, 6],
        ],
    )
    .unwrap();
    for field in Field::DEFAULTS {
        println!("RP2 reduced homology over {field}: {:?}", simplicial_homology_ranks(&rp2, field).unwrap().ranks());
    }
}
