//! Extendable shellability of skeletons of a simplex against chordality of the
//! residual clutters, for every pair 2 <= d <= n <= 6.
//!
//! cargo run --release --example simon_verification

use std::time::Instant;

use clutterkit::search::Budget;
use clutterkit::shelling::{simon_equivalence_check, SIMON_MAX_N};

fn main() {
    println!("{:>2} {:>2} {:>10} {:>10} {:>8} {:>6} {:>9}", "n", "d", "extendable", "states", "chordal", "agree", "ms");
    for n in 2..=SIMON_MAX_N {
        for d in 2..=n {
            let start = Instant::now();
            let r = simon_equivalence_check(n, d, Budget::default()).unwrap();
            println!(
                "{:>2} {:>2} {:>10} {:>10} {:>8} {:>6} {:>9.1}",
                n,
                d,
                r.skeleton_extendably_shellable,
                r.num_residual_states,
                r.all_residuals_chordal,
                r.equivalence_holds,
                start.elapsed().as_secs_f64() * 1e3
            );
        }
    }
}
