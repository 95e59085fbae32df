//! Uniform clutters: antichains of equal-size circuits on a vertex set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A `d`-uniform clutter on a vertex set `V ⊆ [n]`.
///
/// `V` defaults to `[n]`; it only differs when a clutter is a piece of a
/// larger construction (a glued component, an induced subclutter). Vertices
/// of `V` lying in no circuit are isolated points of the clutter. Circuits
/// are kept sorted in the canonical order of [`VertexSet`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniformClutter {
    n: usize,
    d: usize,
    vertices: VertexSet,
    circuits: Vec<VertexSet>,
}

impl UniformClutter {
    /// A clutter on `[n]`. Fails on wrongly sized, out-of-range or repeated circuits.
    pub fn new<I>(n: usize, d: usize, circuits: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > MAX_VERTICES {
            return Err(Error::UniverseTooLarge(n));
        }
        Self::on_vertices(n, d, VertexSet::full(n), circuits)
    }

    /// A clutter whose vertex set is `vertices ⊆ [n]`.
    pub fn on_vertices<I>(n: usize, d: usize, vertices: VertexSet, circuits: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > MAX_VERTICES {
            return Err(Error::UniverseTooLarge(n));
        }
        if d == 0 {
            return Err(Error::InvalidArgument("circuit size d must be positive".into()));
        }
        if vertices.max_vertex() > n {
            return Err(Error::VertexOutOfRange {
                vertex: vertices.max_vertex() as u32,
                n,
            });
        }
        let mut list: Vec<VertexSet> = Vec::new();
        for c in circuits {
            if c.len() != d {
                return Err(Error::WrongCircuitSize {
                    circuit: c,
                    size: c.len(),
                    d,
                });
            }
            if c.max_vertex() > n {
                return Err(Error::VertexOutOfRange {
                    vertex: c.max_vertex() as u32,
                    n,
                });
            }
            if !c.is_subset(vertices) {
                return Err(Error::CircuitOutsideVertexSet(c));
            }
            list.push(c);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(w[0]));
        }
        Ok(UniformClutter {
            n,
            d,
            vertices,
            circuits: list,
        })
    }

    /// Convenience constructor from vertex lists, e.g. `&[&[1, 2, 3], &[1, 2, 4]]`.
    pub fn from_lists(n: usize, d: usize, circuits: &[&[u32]]) -> Result<Self> {
        let sets = circuits
            .iter()
            .map(|c| VertexSet::from_vertices(n, c.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, d, sets)
    }

    /// Builds from circuits already known to be valid, sorting and deduplicating.
    pub(crate) fn from_parts(
        n: usize,
        d: usize,
        vertices: VertexSet,
        mut circuits: Vec<VertexSet>,
    ) -> Self {
        circuits.sort_unstable();
        circuits.dedup();
        debug_assert!(circuits
            .iter()
            .all(|c| c.len() == d && c.is_subset(vertices)));
        UniformClutter {
            n,
            d,
            vertices,
            circuits,
        }
    }

    /// The complete `d`-uniform clutter on `[n]`. When `n < d` it has no
    /// circuits and every vertex is an isolated point.
    pub fn complete(n: usize, d: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UniverseTooLarge(n));
        }
        Self::complete_on(n, d, VertexSet::full(n))
    }

    /// The complete `d`-uniform clutter on `vertices ⊆ [n]`.
    pub fn complete_on(n: usize, d: usize, vertices: VertexSet) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("circuit size d must be positive".into()));
        }
        if n > MAX_VERTICES || vertices.max_vertex() > n {
            return Err(Error::VertexOutOfRange {
                vertex: vertices.max_vertex() as u32,
                n,
            });
        }
        Ok(Self::from_parts(
            n,
            d,
            vertices,
            vertices.subsets_of_size(d).collect(),
        ))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn circuits(&self) -> &[VertexSet] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, circuit: VertexSet) -> bool {
        self.circuits.binary_search(&circuit).is_ok()
    }

    /// Vertices lying in at least one circuit.
    pub fn support(&self) -> VertexSet {
        self.circuits
            .iter()
            .fold(VertexSet::EMPTY, |acc, &c| acc | c)
    }

    pub fn is_complete(&self) -> bool {
        self.circuits.len() as u64 == crate::vertex_set::binomial(self.vertices.len(), self.d)
    }

    /// Same circuits, different declared vertex set.
    pub fn with_vertices(&self, vertices: VertexSet) -> Result<Self> {
        Self::on_vertices(self.n, self.d, vertices, self.circuits.iter().copied())
    }

    /// `C_{V,d} \ C`: the `d`-subsets of the vertex set that are not circuits.
    pub fn complement(&self) -> UniformClutter {
        let circuits = self
            .vertices
            .subsets_of_size(self.d)
            .filter(|s| !self.contains(*s))
            .collect();
        Self::from_parts(self.n, self.d, self.vertices, circuits)
    }

    /// Circuits contained in `w`; the vertex set shrinks to `V ∩ w`.
    pub fn induced(&self, w: VertexSet) -> UniformClutter {
        let circuits = self
            .circuits
            .iter()
            .copied()
            .filter(|c| c.is_subset(w))
            .collect();
        Self::from_parts(self.n, self.d, self.vertices & w, circuits)
    }

    /// `|F| < d`, or every `d`-subset of `F` is a circuit.
    pub fn is_clique(&self, f: VertexSet) -> bool {
        if f.len() < self.d {
            return true;
        }
        // Counting beats enumerating subsets when F is large relative to C.
        if crate::vertex_set::binomial(f.len(), self.d) > self.circuits.len() as u64 {
            return false;
        }
        f.subsets_of_size(self.d).all(|s| self.contains(s))
    }

    /// Maximal cliques inside the vertex set: the facets of the clique complex.
    pub fn clique_complex(&self) -> SimplicialComplex {
        let verts: Vec<u32> = self.vertices.to_vec();
        let mut facets = Vec::new();
        self.extend_cliques(&verts, 0, VertexSet::EMPTY, &mut facets);
        SimplicialComplex::from_facets_unchecked(self.n, facets)
    }

    fn extend_cliques(
        &self,
        verts: &[u32],
        from: usize,
        clique: VertexSet,
        facets: &mut Vec<VertexSet>,
    ) {
        for (i, &v) in verts.iter().enumerate().skip(from) {
            if self.can_extend(clique, v) {
                self.extend_cliques(verts, i + 1, clique.with(v), facets);
            }
        }
        // Maximal iff no vertex at all (earlier ones included) extends it.
        let maximal = verts
            .iter()
            .all(|&v| clique.contains(v) || !self.can_extend(clique, v));
        if maximal {
            facets.push(clique);
        }
    }

    /// Whether `clique ∪ {v}` is a clique, given `clique` is one.
    fn can_extend(&self, clique: VertexSet, v: u32) -> bool {
        if clique.len() + 1 < self.d {
            return true;
        }
        clique
            .subsets_of_size(self.d - 1)
            .all(|s| self.contains(s.with(v)))
    }
}

impl fmt::Debug for UniformClutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniformClutter(n={}, d={}", self.n, self.d)?;
        if self.vertices != VertexSet::full(self.n) {
            write!(f, ", V={}", self.vertices)?;
        }
        write!(f, ", {:?})", self.circuits)
    }
}

impl fmt::Display for UniformClutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.circuits.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Wire form: `{"n": int, "d": int, "circuits": [[int, ...], ...]}`, plus an
/// optional `"vertices"` list when the vertex set is not all of `[n]`.
#[derive(Serialize, Deserialize)]
struct ClutterWire {
    n: usize,
    d: usize,
    circuits: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<u32>>,
}

impl Serialize for UniformClutter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClutterWire {
            n: self.n,
            d: self.d,
            circuits: self.circuits.iter().map(|c| c.to_vec()).collect(),
            vertices: (self.vertices != VertexSet::full(self.n)).then(|| self.vertices.to_vec()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniformClutter {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = ClutterWire::deserialize(de)?;
        if wire.n > MAX_VERTICES {
            return Err(D::Error::custom(Error::UniverseTooLarge(wire.n)));
        }
        let parse = |list: Vec<u32>| VertexSet::from_vertices(wire.n, list);
        let vertices = match wire.vertices {
            Some(v) => parse(v).map_err(D::Error::custom)?,
            None => VertexSet::full(wire.n),
        };
        let circuits = wire
            .circuits
            .into_iter()
            .map(parse)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        UniformClutter::on_vertices(wire.n, wire.d, vertices, circuits).map_err(D::Error::custom)
    }
}
