//! Shellings, extendable shellability, and the bridge to linear quotients.
//!
//! cargo run --example shelling_bridge

use clutterkit::catalog;
use clutterkit::ideals::{find_linear_quotients_order, OrderedIdeal};
use clutterkit::search::Budget;
use clutterkit::shelling::{find_shelling, is_extendably_shellable, is_shelling_order, ExtendableOptions};
use clutterkit::{SimplicialComplex, VertexSet};

fn main() {
    // The dual of the clique complex of a decomposable clutter is shellable.
    let c = catalog::umbrella();
    let dual = c.clique_complex().alexander_dual();
    println!("dual of the umbrella's clique complex: {dual}");
    let ideal = OrderedIdeal::circuit_ideal(&c.complement());
    let perm = find_linear_quotients_order(&ideal, Budget::default()).outcome.into_found().unwrap();
    let facets: Vec<VertexSet> =
        ideal.reordered(&perm).unwrap().sets().unwrap().iter().map(|g| g.complement(c.n())).collect();
    println!("facet order from a linear-quotients order: {facets:?}");
    println!("is a shelling: {:?}", is_shelling_order(&dual, &facets).unwrap());
    println!("direct search: {:?}", find_shelling(&dual, Budget::default()).unwrap().outcome);

    let bowtie = SimplicialComplex::from_lists(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
    println!("\nbowtie shellable: {}", find_shelling(&bowtie, Budget::default()).unwrap().outcome.is_found());

    let skeleton = SimplicialComplex::simplex(5).pure_skeleton(2);
    let r = is_extendably_shellable(&skeleton, ExtendableOptions::default()).unwrap();
    println!("2-skeleton of the 4-simplex: {:?} ({} prefix sets)", r.verdict, r.states);

    let stuck = SimplicialComplex::from_lists(
        6,
        &[&[1, 2, 5], &[1, 2, 6], &[1, 3, 5], &[1, 3, 6], &[2, 3, 4], &[2, 3, 5], &[2, 4, 6], &[3, 4, 5], &[4, 5, 6]],
    )
    .unwrap();
    println!("shellable: {}", find_shelling(&stuck, Budget::default()).unwrap().outcome.is_found());
    let r = is_extendably_shellable(&stuck, ExtendableOptions::default()).unwrap();
    println!("but not extendably: {}", serde_json::to_string(&r).unwrap());
}
