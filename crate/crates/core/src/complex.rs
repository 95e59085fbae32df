//! Simplicial complexes given by their facets.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simplicial complex on `[n]`, stored as its sorted facet antichain.
///
/// The void complex has no facets and no faces at all. The complex whose only
/// facet is `∅` is different: it has exactly the empty face.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Facets must form an antichain of subsets of `[n]`.
    pub fn new<I>(n: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > MAX_VERTICES {
            return Err(Error::UniverseTooLarge(n));
        }
        let mut list: Vec<VertexSet> = facets.into_iter().collect();
        for f in &list {
            if f.max_vertex() > n {
                return Err(Error::VertexOutOfRange {
                    vertex: f.max_vertex() as u32,
                    n,
                });
            }
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(w[0]));
        }
        for &a in &list {
            if let Some(&b) = list.iter().find(|&&b| a.is_proper_subset(b)) {
                return Err(Error::NotAnAntichain(b, a));
            }
        }
        Ok(SimplicialComplex { n, facets: list })
    }

    /// `⟨F₁, …, F_t⟩`: the complex generated by arbitrary sets, keeping the maximal ones.
    pub fn generated_by<I>(n: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let sets: Vec<VertexSet> = sets.into_iter().collect();
        Self::new(n, maximal_sets(sets))
    }

    pub fn from_lists(n: usize, facets: &[&[u32]]) -> Result<Self> {
        let sets = facets
            .iter()
            .map(|f| VertexSet::from_vertices(n, f.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, sets)
    }

    pub(crate) fn from_facets_unchecked(n: usize, mut facets: Vec<VertexSet>) -> Self {
        facets.sort_unstable();
        SimplicialComplex { n, facets }
    }

    /// The full simplex `⟨[n]⟩`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest facet size minus one; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_facet(&self, f: VertexSet) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|&g| f.is_subset(g))
    }

    /// Union of the facets.
    pub fn vertex_support(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, &f| acc | f)
    }

    /// Every face, in canonical order. Exponential; meant for small complexes.
    pub fn faces(&self) -> Vec<VertexSet> {
        let set: BTreeSet<VertexSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        set.into_iter().collect()
    }

    /// `f_{-1}, f_0, …, f_dim`: number of faces per size. Empty for the void complex.
    pub fn f_vector(&self) -> Vec<u64> {
        let Some(dim) = self.dim() else {
            return vec![];
        };
        let mut f = vec![0u64; (dim + 2) as usize];
        for face in self.faces() {
            f[face.len()] += 1;
        }
        f
    }

    /// `Δ^(i)`: all faces of dimension at most `i`.
    pub fn skeleton(&self, i: usize) -> SimplicialComplex {
        let mut sets = Vec::new();
        for &f in &self.facets {
            if f.len() <= i + 1 {
                sets.push(f);
            } else {
                sets.extend(f.subsets_of_size(i + 1));
            }
        }
        SimplicialComplex::from_facets_unchecked(self.n, maximal_sets(sets))
    }

    /// `Δ^[i]`: the complex whose facets are the `i`-faces of `Δ`.
    pub fn pure_skeleton(&self, i: usize) -> SimplicialComplex {
        let set: BTreeSet<VertexSet> = self
            .facets
            .iter()
            .flat_map(|f| f.subsets_of_size(i + 1))
            .collect();
        SimplicialComplex {
            n: self.n,
            facets: set.into_iter().collect(),
        }
    }

    /// `Δ|W = {F ∈ Δ : F ⊆ W}`.
    pub fn induced(&self, w: VertexSet) -> SimplicialComplex {
        let sets: Vec<VertexSet> = self.facets.iter().map(|&f| f & w).collect();
        SimplicialComplex::from_facets_unchecked(self.n, maximal_sets(sets))
    }

    /// Inclusion-minimal subsets of `[n]` that are not faces, in canonical order.
    ///
    /// These are the minimal transversals of the facet complements. The void
    /// complex has `∅` as its only minimal non-face.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let full = VertexSet::full(self.n);
        let mut transversals = vec![VertexSet::EMPTY];
        for &f in &self.facets {
            let edge = full - f;
            let mut next = Vec::with_capacity(transversals.len());
            for &t in &transversals {
                if !t.is_disjoint(edge) {
                    next.push(t);
                } else {
                    next.extend(edge.iter().map(|v| t.with(v)));
                }
            }
            transversals = minimal_sets(next);
        }
        transversals.sort_unstable();
        transversals
    }

    /// Facets of `Δ∨` are the complements of the minimal non-faces of `Δ`.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let facets = self
            .minimal_nonfaces()
            .into_iter()
            .map(|s| s.complement(self.n))
            .collect();
        SimplicialComplex::from_facets_unchecked(self.n, facets)
    }
}

/// Inclusion-maximal members, deduplicated and sorted.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.len()));
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|&m| s.is_subset(m)) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

/// Inclusion-minimal members, deduplicated and sorted.
pub(crate) fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by_key(|s| s.len());
    let mut out: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|&m| m.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, {:?})", self.n, self.facets)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, c) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "⟩")
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexWire {
    n: usize,
    facets: Vec<Vec<u32>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexWire {
            n: self.n,
            facets: self.facets.iter().map(|f| f.to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = ComplexWire::deserialize(de)?;
        let facets = wire
            .facets
            .into_iter()
            .map(|f| VertexSet::from_vertices(wire.n, f))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        SimplicialComplex::new(wire.n, facets).map_err(D::Error::custom)
    }
}
