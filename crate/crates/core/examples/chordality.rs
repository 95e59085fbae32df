//! Decide chordality of two clutters and replay a simplicial order step by step.
//!
//! cargo run --example chordality

use clutterkit::catalog;
use clutterkit::chordality::{is_chordal, validate_simplicial_sequence, ChordalMode, SimplicialSequence};
use clutterkit::search::Budget;

fn main() {
    let c = catalog::figure2_c();
    println!("C = {c}");
    let report = is_chordal(&c, ChordalMode::Complete, Budget::default());
    match report.verdict.order() {
        Some(order) => {
            println!("chordal; simplicial order found after {} nodes:", report.stats.nodes);
            for (i, e) in order.elements.iter().enumerate() {
                println!("  e{} = {e}", i + 1);
            }
        }
        None => println!("verdict: {:?}", report.verdict),
    }

    let printed = catalog::figure2_c_order();
    let mut residual = c.clone();
    for (i, e) in printed.elements.iter().enumerate() {
        println!(
            "step {}: delete {e}, closed neighborhood {} is a clique: {}",
            i + 1,
            residual.closed_neighborhood(*e).unwrap(),
            residual.is_simplicial(*e).unwrap()
        );
        residual = residual.delete(*e);
    }
    let whole = validate_simplicial_sequence(&c, &SimplicialSequence::new(printed.elements.clone())).unwrap();
    println!("residual after the published order: {} circuits", whole.len());

    let d = catalog::figure2_d();
    println!("\nD = {d}");
    let report = is_chordal(&d, ChordalMode::Complete, Budget::default());
    println!("chordal: {}", report.verdict.is_chordal());
    println!("maximal subcircuits: {}", d.maximal_subcircuits().len());
    println!("simplicial maximal subcircuits: {:?}", d.simplicial_maximal_subcircuits());
}
