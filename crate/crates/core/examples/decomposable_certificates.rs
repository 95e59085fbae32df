//! Build, verify and search for decomposition certificates.
//!
//! cargo run --example decomposable_certificates

use clutterkit::catalog;
use clutterkit::decomposable::{glue, is_decomposable, random_decomposable, verify_certificate, DecompOptions, DecompVerdict};
use clutterkit::{UniformClutter, VertexSet};

fn main() {
    // Two complete clutters glued over the clique {1,2,4}.
    let left = UniformClutter::complete_on(5, 3, VertexSet::of(&[1, 2, 3, 4])).unwrap();
    let right = UniformClutter::complete_on(5, 3, VertexSet::of(&[1, 2, 4, 5])).unwrap();
    let glued = glue(&left, &right).unwrap();
    println!("glued: {glued}");

    let umbrella = catalog::umbrella();
    let cert = catalog::umbrella_certificate();
    println!("umbrella: {umbrella}");
    println!("published construction verifies: {:?}", verify_certificate(&umbrella, &cert));
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());

    for (name, c) in [
        ("glued tetrahedra", catalog::figure3()),
        ("twelve-circuit clutter", catalog::ex2()),
        ("linear quotients, not decomposable", catalog::ex_lq_not_decomposable()),
    ] {
        let report = is_decomposable(&c, DecompOptions::default());
        print!("{name}: ");
        match report.verdict {
            DecompVerdict::Decomposable(cert) => {
                println!("decomposable, certificate with {} nodes", cert.size());
            }
            DecompVerdict::Refuted(r) => {
                println!("refuted (exact: {})", r.exact);
                for line in r.log {
                    println!("  {line}");
                }
            }
            DecompVerdict::Exhausted => println!("budget exhausted"),
        }
    }

    let (c, cert) = random_decomposable(7, 3, 42).unwrap();
    println!("\nrandom decomposable (seed 42): {c}");
    println!("certificate verifies: {:?}", verify_certificate(&c, &cert));
}
