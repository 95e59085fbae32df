use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bitmask::BitMask;
use crate::clutter::UniformClutter;
use crate::error::{Error, Result};
use crate::ideals::Monomial;
use crate::search::{Budget, Meter, OutOfBudget, Search, SearchResult};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A monomial ideal of `K[x₁, …, x_n]` with an ordered list of generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl OrderedIdeal {
    pub fn new(n: usize, generators: Vec<Monomial>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UniverseTooLarge(n));
        }
        if let Some(g) = generators.iter().find(|g| g.n() != n) {
            return Err(Error::DimensionMismatch(n, g.n()));
        }
        Ok(OrderedIdeal { n, generators })
    }

    pub fn zero(n: usize) -> Self {
        OrderedIdeal {
            n,
            generators: vec![],
        }
    }

    /// `(x_F : F ∈ sets)` in the given order.
    pub fn from_sets(n: usize, sets: &[VertexSet]) -> Result<Self> {
        if let Some(s) = sets.iter().find(|s| s.max_vertex() > n) {
            return Err(Error::VertexOutOfRange {
                vertex: s.max_vertex() as u32,
                n,
            });
        }
        Self::new(n, sets.iter().map(|&s| Monomial::from_set(n, s)).collect())
    }

    /// The circuit ideal `I(C) = (x_T : T ∈ C)`, generators in canonical order.
    /// `I(∅) = 0`.
    pub fn circuit_ideal(c: &UniformClutter) -> Self {
        OrderedIdeal {
            n: c.n(),
            generators: c
                .circuits()
                .iter()
                .map(|&t| Monomial::from_set(c.n(), t))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Supports of the generators, if all are squarefree.
    pub fn sets(&self) -> Option<Vec<VertexSet>> {
        self.generators.iter().map(Monomial::as_set).collect()
    }

    /// The common generator degree, if there is one.
    pub fn generating_degree(&self) -> Option<u32> {
        let d = self.generators.first()?.degree();
        self.generators.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.is_zero() || self.generating_degree().is_some()
    }

    /// `u ∈ I` iff some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    pub fn is_minimal(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            self.generators
                .iter()
                .enumerate()
                .all(|(j, h)| i == j || !h.divides(g))
        })
    }

    /// Same ideal, minimal generators in canonical order.
    pub fn minimalized(&self) -> OrderedIdeal {
        OrderedIdeal {
            n: self.n,
            generators: minimal_generators(self.generators.clone()),
        }
    }

    /// The generators permuted by `order` (indices into the current list).
    pub fn reordered(&self, order: &[usize]) -> Result<OrderedIdeal> {
        let mut seen = vec![false; self.len()];
        for &i in order {
            if i >= self.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation);
            }
        }
        if order.len() != self.len() {
            return Err(Error::NotAPermutation);
        }
        Ok(OrderedIdeal {
            n: self.n,
            generators: order.iter().map(|&i| self.generators[i].clone()).collect(),
        })
    }

    /// `I : v`, generated by `u / gcd(u, v)` over the generators, minimalized.
    pub fn colon(&self, v: &Monomial) -> OrderedIdeal {
        OrderedIdeal {
            n: self.n,
            generators: minimal_generators(self.generators.iter().map(|u| u.quotient(v)).collect()),
        }
    }

    /// The first `k` generators as an ideal.
    pub fn prefix(&self, k: usize) -> OrderedIdeal {
        OrderedIdeal {
            n: self.n,
            generators: self.generators[..k].to_vec(),
        }
    }

    /// Whether every minimal generator is a variable. The zero ideal qualifies.
    pub fn is_generated_by_variables(&self) -> bool {
        self.minimalized().generators.iter().all(|g| g.degree() == 1)
    }

    pub fn product(&self, other: &OrderedIdeal) -> Result<OrderedIdeal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let gens = self
            .generators
            .iter()
            .flat_map(|u| other.generators.iter().map(move |v| u.mul(v)))
            .collect();
        Ok(OrderedIdeal {
            n: self.n,
            generators: minimal_generators(gens),
        })
    }

    /// `I^k` with minimal generators, `k ≥ 1`.
    pub fn power(&self, k: u32) -> Result<OrderedIdeal> {
        if k == 0 {
            return Err(Error::InvalidArgument("power exponent must be at least 1".into()));
        }
        let mut acc = self.minimalized();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Checks linear quotients in the given order: for each `i` and `j < i`
    /// some `k < i` has `u_k / gcd(u_k, u_i)` a variable dividing `u_j / gcd(u_j, u_i)`.
    pub fn linear_quotients_check(&self) -> LqCheck {
        for i in 1..self.generators.len() {
            if !admissible_after(&self.generators[..i], &self.generators[i]) {
                return LqCheck {
                    holds: false,
                    first_failure: Some(i + 1),
                };
            }
        }
        LqCheck {
            holds: true,
            first_failure: None,
        }
    }

    pub fn has_linear_quotients_in_order(&self) -> bool {
        self.linear_quotients_check().holds
    }
}

/// Verdict of a linear-quotients check; `first_failure` is the 1-based
/// position of the first generator whose colon ideal is not generated by variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LqCheck {
    pub holds: bool,
    pub first_failure: Option<usize>,
}

fn admissible_after(prefix: &[Monomial], u: &Monomial) -> bool {
    let quotients: Vec<Monomial> = prefix.iter().map(|p| p.quotient(u)).collect();
    let linear = quotients
        .iter()
        .filter(|q| q.degree() == 1)
        .fold(VertexSet::EMPTY, |acc, q| acc | q.support());
    quotients.iter().all(|q| !q.support().is_disjoint(linear))
}

/// Divisibility-minimal members, deduplicated, in canonical order.
pub fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.canonical_cmp(b));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Searches for an order of the generators with linear quotients.
///
/// Whether a generator can come next depends only on the set already placed,
/// so failed sets are memoized. Returns indices into `ideal.generators()`.
pub fn find_linear_quotients_order(
    ideal: &OrderedIdeal,
    budget: Budget,
) -> SearchResult<Vec<usize>> {
    if !ideal.is_equigenerated() {
        log::warn!("linear-quotients search on a non-equigenerated ideal");
    }
    let gens = ideal.generators();
    let r = gens.len();
    // linear_var[k][i]: the variable u_k / gcd(u_k, u_i) when it has degree 1.
    // support[k][i]: support of u_k / gcd(u_k, u_i).
    let mut linear_var = vec![vec![VertexSet::EMPTY; r]; r];
    let mut support = vec![vec![VertexSet::EMPTY; r]; r];
    for k in 0..r {
        for i in 0..r {
            let q = gens[k].quotient(&gens[i]);
            if q.degree() == 1 {
                linear_var[k][i] = q.support();
            }
            support[k][i] = q.support();
        }
    }
    let tables = LqTables {
        linear_var,
        support,
    };
    let mut search = LqSearch {
        tables: &tables,
        r,
        failed: HashSet::new(),
        order: Vec::with_capacity(r),
    };
    let mut meter = Meter::new(budget);
    let outcome = match search.run(&BitMask::new(r), &mut meter) {
        Ok(true) => Search::Found(search.order),
        Ok(false) => Search::NotFound,
        Err(OutOfBudget) => Search::Exhausted,
    };
    SearchResult {
        outcome,
        stats: meter.stats,
    }
}

struct LqTables {
    linear_var: Vec<Vec<VertexSet>>,
    support: Vec<Vec<VertexSet>>,
}

impl LqTables {
    fn admissible(&self, placed: &BitMask, i: usize) -> bool {
        let linear = placed
            .iter()
            .fold(VertexSet::EMPTY, |acc, k| acc | self.linear_var[k][i]);
        placed
            .iter()
            .all(|j| !self.support[j][i].is_disjoint(linear))
    }
}

struct LqSearch<'a> {
    tables: &'a LqTables,
    r: usize,
    failed: HashSet<BitMask>,
    order: Vec<usize>,
}

impl LqSearch<'_> {
    fn run(&mut self, placed: &BitMask, meter: &mut Meter) -> std::result::Result<bool, OutOfBudget> {
        if self.order.len() == self.r {
            return Ok(true);
        }
        if self.failed.contains(placed) {
            meter.hit();
            return Ok(false);
        }
        meter.tick()?;
        for i in 0..self.r {
            if placed.contains(i) || !self.tables.admissible(placed, i) {
                continue;
            }
            let mut next = placed.clone();
            next.insert(i);
            self.order.push(i);
            if self.run(&next, meter)? {
                return Ok(true);
            }
            self.order.pop();
        }
        self.failed.insert(placed.clone());
        Ok(false)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealWire {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sets: Option<Vec<Vec<u32>>>,
}

/// Wire form `{"n": int, "generators": [[exponent, ...], ...]}`. Squarefree
/// ideals may instead be given as `{"n": int, "sets": [[vertex, ...], ...]}`.
impl Serialize for OrderedIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealWire {
            n: self.n,
            generators: Some(
                self.generators
                    .iter()
                    .map(|g| g.exponents().to_vec())
                    .collect(),
            ),
            sets: None,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrderedIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = IdealWire::deserialize(de)?;
        match (wire.generators, wire.sets) {
            (Some(gens), None) => {
                OrderedIdeal::new(wire.n, gens.into_iter().map(Monomial::new).collect())
                    .map_err(D::Error::custom)
            }
            (None, Some(sets)) => {
                let sets = sets
                    .into_iter()
                    .map(|s| VertexSet::from_vertices(wire.n, s))
                    .collect::<Result<Vec<_>>>()
                    .map_err(D::Error::custom)?;
                OrderedIdeal::from_sets(wire.n, &sets).map_err(D::Error::custom)
            }
            _ => Err(D::Error::custom(
                "expected exactly one of \"generators\" or \"sets\"",
            )),
        }
    }
}
