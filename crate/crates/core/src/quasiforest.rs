//! Leaves, leaf orders and quasi-forests, and the decomposable clutters
//! formed by the pure skeletons of quasi-forests.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clutter::UniformClutter;
use crate::complex::SimplicialComplex;
use crate::decomposable::DecompCertificate;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafCheck {
    pub is_leaf: bool,
    /// A facet `G ≠ F` with `H ∩ F ⊆ G ∩ F` for every other facet `H`.
    pub branch: Option<VertexSet>,
}

/// Whether `f` is a leaf of `Δ`: the only facet, or a facet with a branch.
pub fn is_leaf(d: &SimplicialComplex, f: VertexSet) -> Result<LeafCheck> {
    if !d.is_facet(f) {
        return Err(Error::NotAFacet(f));
    }
    Ok(leaf_in(d.facets(), f))
}

fn leaf_in(facets: &[VertexSet], f: VertexSet) -> LeafCheck {
    let others: Vec<VertexSet> = facets.iter().copied().filter(|&h| h != f).collect();
    if others.is_empty() {
        return LeafCheck {
            is_leaf: true,
            branch: None,
        };
    }
    let branch = others
        .iter()
        .copied()
        .find(|&g| others.iter().all(|&h| (h & f).is_subset(g & f)));
    LeafCheck {
        is_leaf: branch.is_some(),
        branch,
    }
}

/// Vertices of `f` lying in no other facet.
pub fn free_vertices(d: &SimplicialComplex, f: VertexSet) -> VertexSet {
    d.facets()
        .iter()
        .filter(|&&h| h != f)
        .fold(f, |acc, &h| acc - h)
}

/// Facets `F_1, …, F_q` with each `F_i` (`i ≥ 2`) a leaf of `⟨F_1, …, F_i⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafOrder {
    pub facets: Vec<VertexSet>,
}

impl LeafOrder {
    pub fn is_valid_for(&self, d: &SimplicialComplex) -> bool {
        let mut sorted = self.facets.clone();
        sorted.sort_unstable();
        sorted == d.facets()
            && (1..self.facets.len()).all(|i| leaf_in(&self.facets[..=i], self.facets[i]).is_leaf)
    }
}

/// A leaf order, found by repeatedly peeling a leaf off the end.
pub fn find_leaf_order(d: &SimplicialComplex) -> Option<LeafOrder> {
    let facets = d.facets().to_vec();
    let mut failed = HashSet::new();
    let mut reversed = Vec::new();
    peel(&facets, &mut reversed, &mut failed).then(|| {
        reversed.reverse();
        LeafOrder { facets: reversed }
    })
}

fn peel(current: &[VertexSet], reversed: &mut Vec<VertexSet>, failed: &mut HashSet<Vec<VertexSet>>) -> bool {
    if current.len() <= 1 {
        reversed.extend_from_slice(current);
        return true;
    }
    if failed.contains(current) {
        return false;
    }
    for &f in current {
        if !leaf_in(current, f).is_leaf {
            continue;
        }
        let rest: Vec<VertexSet> = current.iter().copied().filter(|&h| h != f).collect();
        reversed.push(f);
        if peel(&rest, reversed, failed) {
            return true;
        }
        reversed.pop();
    }
    failed.insert(current.to_vec());
    false
}

/// `F(Δ^[d])` as a `(d+1)`-uniform clutter on the vertices of `Δ`, with a
/// decomposability certificate built along a leaf order: the skeleton of
/// `⟨F_1, …, F_{r-1}⟩` glued to the complete clutter on `F_r` over
/// `F_r ∩ (F_1 ∪ ⋯ ∪ F_{r-1})`.
pub fn quasiforest_skeleton_clutter(
    delta: &SimplicialComplex,
    d: usize,
) -> Result<(UniformClutter, DecompCertificate)> {
    if d == 0 {
        return Err(Error::InvalidArgument("skeleton dimension must be positive".into()));
    }
    if delta.is_void() {
        return Err(Error::InvalidArgument("the void complex has no skeleton clutter".into()));
    }
    let order = find_leaf_order(delta).ok_or(Error::NotAQuasiForest)?;
    let mut facets = order.facets.into_iter();
    let first = facets.next().expect("non-void complex");
    let cert = facets.fold(DecompCertificate::complete(first), |acc, f| {
        DecompCertificate::union(acc, DecompCertificate::complete(f))
    });
    let clutter = cert
        .build(delta.n(), d + 1)
        .map_err(|r| Error::GlueRejected(r.to_string()))?;
    Ok((clutter, cert))
}

/// A random quasi-forest on at most `max_vertices` vertices, deterministic in `seed`.
///
/// Each new facet is a proper subset of an existing facet plus at least one
/// new vertex, so it is a leaf with that facet as branch.
pub fn random_quasi_forest(max_vertices: usize, seed: u64) -> Result<SimplicialComplex> {
    if max_vertices == 0 || max_vertices > crate::vertex_set::MAX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "need 1 ≤ vertices ≤ {}",
            crate::vertex_set::MAX_VERTICES
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = max_vertices as u32;
    let first_size = rng.gen_range(1..=max_vertices.min(4)) as u32;
    let mut facets = vec![VertexSet::of(&(1..=first_size).collect::<Vec<_>>())];
    let mut next = first_size + 1;
    while next <= n && rng.gen_bool(0.85) {
        let branch = *facets.choose(&mut rng).expect("at least one facet");
        let keep: Vec<u32> = branch.iter().filter(|_| rng.gen_bool(0.6)).collect();
        let mut keep = VertexSet::of(&keep);
        if keep == branch {
            keep = keep.without(branch.max().expect("facets are non-empty"));
        }
        let fresh = rng.gen_range(1..=(n - next + 1).min(2));
        let added: Vec<u32> = (next..next + fresh).collect();
        next += fresh;
        facets.push(keep | VertexSet::of(&added));
    }
    SimplicialComplex::new(max_vertices, facets)
}
