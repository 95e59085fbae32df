//! Named worked instances: a chordal and a non-chordal clutter, two glued
//! decomposable clutters with their constructions, a non-decomposable clutter
//! with linear quotients, and a decomposable clutter whose ideal has a
//! non-linear square. Function names follow the `paper-example` names.

use crate::chordality::{SimplicialSequence, SubclutterSteps};
use crate::decomposable::DecompCertificate;
use crate::clutter::UniformClutter;
use crate::vertex_set::VertexSet;

fn vs(v: &[u32]) -> VertexSet {
    VertexSet::of(v)
}

fn clutter(n: usize, circuits: &[&[u32]]) -> UniformClutter {
    UniformClutter::from_lists(n, 3, circuits).expect("catalog clutter is valid")
}

/// A chordal clutter: 8 circuits on `[6]`, `C_{4,3}` on `[4]` plus four circuits through `{1,2}`.
pub fn figure2_c() -> UniformClutter {
    clutter(
        6,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[2, 3, 4],
            &[1, 2, 5],
            &[1, 2, 6],
            &[1, 5, 6],
            &[2, 5, 6],
        ],
    )
}

/// The published simplicial order of [`figure2_c`].
pub fn figure2_c_order() -> SimplicialSequence {
    SimplicialSequence::new(vec![
        vs(&[1, 3]),
        vs(&[1, 4]),
        vs(&[2, 4]),
        vs(&[1, 2]),
        vs(&[2, 6]),
        vs(&[1, 5]),
    ])
}

/// A non-chordal clutter on `[5]` with no simplicial maximal subcircuit.
pub fn figure2_d() -> UniformClutter {
    clutter(
        5,
        &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 5], &[2, 4, 5], &[3, 4, 5]],
    )
}

/// `C_{4,3}` on `[4]` minus `{2,3,4}`, glued over `{4}` to `C_{4,3}` on `{4,5,6,7}`.
pub fn figure3() -> UniformClutter {
    clutter(
        7,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[4, 5, 6],
            &[4, 5, 7],
            &[4, 6, 7],
            &[5, 6, 7],
        ],
    )
}

/// The published construction of [`figure3`]: one subclutter step on a
/// complete leaf, glued to a second complete leaf.
pub fn figure3_certificate() -> DecompCertificate {
    DecompCertificate::union(
        DecompCertificate::substep(
            DecompCertificate::complete(vs(&[1, 2, 3, 4])),
            SubclutterSteps::from_pairs(vec![(vs(&[2, 3]), vec![vs(&[2, 3, 4])])]),
        ),
        DecompCertificate::complete(vs(&[4, 5, 6, 7])),
    )
}

/// The "umbrella": decomposable, yet not the pure 2-skeleton of any quasi-forest.
pub fn umbrella() -> UniformClutter {
    clutter(5, &[&[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 2, 5]])
}

/// The published construction of [`umbrella`]: two complete leaves glued over
/// `{1,2,4}`, then two subclutter steps.
pub fn umbrella_certificate() -> DecompCertificate {
    DecompCertificate::substep(
        DecompCertificate::union(
            DecompCertificate::complete(vs(&[1, 2, 3, 4])),
            DecompCertificate::complete(vs(&[1, 2, 4, 5])),
        ),
        SubclutterSteps::from_pairs(vec![
            (vs(&[3, 4]), vec![vs(&[2, 3, 4])]),
            (vs(&[2, 4]), vec![vs(&[1, 2, 4]), vs(&[2, 4, 5])]),
        ]),
    )
}

/// A clutter on `[5]` whose complement ideal has linear quotients but which is not decomposable.
pub fn ex_lq_not_decomposable() -> UniformClutter {
    clutter(5, &[&[1, 2, 5], &[1, 3, 5], &[1, 4, 5], &[2, 3, 4]])
}

/// Generators of the complement ideal of [`ex_lq_not_decomposable`], in the published order.
pub fn ex_lq_not_decomposable_order() -> Vec<VertexSet> {
    vec![
        vs(&[1, 2, 3]),
        vs(&[1, 2, 4]),
        vs(&[1, 3, 4]),
        vs(&[3, 4, 5]),
        vs(&[2, 4, 5]),
        vs(&[2, 3, 5]),
    ]
}

/// The 12-circuit decomposable clutter on `[6]` whose complement ideal squared
/// has no linear resolution.
pub fn ex2() -> UniformClutter {
    clutter(
        6,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 2, 5],
            &[1, 2, 6],
            &[1, 3, 4],
            &[1, 3, 5],
            &[1, 4, 6],
            &[1, 5, 6],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 4, 5],
            &[2, 4, 6],
        ],
    )
}

/// The four published steps carving [`ex2`] out of `C_{6,3}`.
pub fn ex2_steps() -> SubclutterSteps {
    SubclutterSteps::from_pairs(vec![
        (vs(&[5, 6]), vec![vs(&[2, 5, 6]), vs(&[3, 5, 6]), vs(&[4, 5, 6])]),
        (vs(&[3, 6]), vec![vs(&[1, 3, 6]), vs(&[3, 4, 6])]),
        (vs(&[3, 4]), vec![vs(&[2, 3, 4]), vs(&[3, 4, 5])]),
        (vs(&[4, 5]), vec![vs(&[1, 4, 5])]),
    ])
}
