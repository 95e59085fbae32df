//! Check and search for linear-quotients orders of squarefree monomial ideals.
//!
//! cargo run --example linear_quotients

use clutterkit::catalog;
use clutterkit::ideals::{find_linear_quotients_order, OrderedIdeal};
use clutterkit::search::Budget;

fn main() {
    let c = catalog::ex_lq_not_decomposable();
    let printed = OrderedIdeal::from_sets(c.n(), &catalog::ex_lq_not_decomposable_order()).unwrap();
    println!("generators in the published order:");
    println!("  u1 = {}", printed.generators()[0]);
    for (k, g) in printed.generators().iter().enumerate().skip(1) {
        let colon = printed.prefix(k).colon(g);
        println!("  u{} = {g}   (u1..u{k}) : u{} = {:?}", k + 1, k + 1, colon.generators());
    }
    println!("linear quotients in this order: {:?}", printed.linear_quotients_check());

    // Moving u5 to the front breaks it: (x2x4x5) : x1x2x3 = (x4x5).
    let moved = printed.reordered(&[4, 0, 1, 2, 3, 5]).unwrap();
    println!("u5 first: {:?}", moved.linear_quotients_check());

    let ideal = OrderedIdeal::circuit_ideal(&catalog::ex2().complement());
    let found = find_linear_quotients_order(&ideal, Budget::default());
    let order = found.outcome.into_found().expect("the twelve-circuit clutter is decomposable");
    let ordered = ideal.reordered(&order).unwrap();
    println!("\nI(complement of the twelve-circuit clutter), order found in {} nodes:", found.stats.nodes);
    println!("  {:?}", ordered.generators());

    let pentagon = OrderedIdeal::from_sets(
        5,
        &[[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]].map(|e| clutterkit::VertexSet::of(&e)),
    )
    .unwrap();
    println!("five-cycle edge ideal: {:?}", find_linear_quotients_order(&pentagon, Budget::default()).outcome);
}
