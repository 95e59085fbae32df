//! Leaf orders of quasi-forests and decomposition certificates of their skeletons.
//!
//! cargo run --example quasi_forests

use clutterkit::decomposable::verify_certificate;
use clutterkit::quasiforest::{find_leaf_order, is_leaf, quasiforest_skeleton_clutter, random_quasi_forest};
use clutterkit::{SimplicialComplex, VertexSet};

fn main() {
    let delta = SimplicialComplex::from_lists(7, &[&[1, 2, 3, 4], &[3, 4, 5], &[4, 5, 6, 7]]).unwrap();
    println!("Δ = {delta}");
    for &f in delta.facets() {
        println!("  {f}: {:?}", is_leaf(&delta, f).unwrap());
    }
    match find_leaf_order(&delta) {
        Some(order) => println!("leaf order: {:?}", order.facets),
        None => println!("not a quasi-forest"),
    }

    let (seed, tree) = (0..)
        .map(|seed| (seed, random_quasi_forest(8, seed).unwrap()))
        .find(|(_, t)| t.facets().iter().filter(|f| f.len() >= 3).count() >= 3)
        .unwrap();
    println!("\nrandom quasi-forest (seed {seed}): {tree}");
    let order = find_leaf_order(&tree).unwrap();
    println!("leaf order: {:?}", order.facets);
    let (clutter, cert) = quasiforest_skeleton_clutter(&tree, 2).unwrap();
    println!("clutter of the pure 2-skeleton: {clutter}");
    println!("certificate of size {} verifies: {:?}", cert.size(), verify_certificate(&clutter, &cert));

    let hollow = SimplicialComplex::new(4, VertexSet::full(4).subsets_of_size(3)).unwrap();
    println!("\nhollow tetrahedron has a leaf order: {}", find_leaf_order(&hollow).is_some());
}
