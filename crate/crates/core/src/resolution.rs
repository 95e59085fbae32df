//! Graded Betti numbers, regularity and linearity of resolutions for monomial ideals.
//!
//! For each multidegree `b` in the lcm lattice of the minimal generators,
//! `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))` where `K^b(I)` is the upper Koszul
//! simplicial complex `{F ⊆ supp(b) : x^{b-F} ∈ I}`. The graded numbers are
//! `β_{i,j} = Σ_{|b| = j} β_{i,b}`. All arithmetic is exact.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideals::{Monomial, OrderedIdeal};
use crate::search::Budget;
use crate::vertex_set::VertexSet;

/// Default cap on the vertices of a complex handed to the homology routine.
pub const DEFAULT_HOMOLOGY_VERTICES: usize = 16;

/// Coefficient field. Serialized as `"Q"`, `"F2"`, `"F3"`, ...
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub const Q: Field = Field::Rational;
    pub const F2: Field = Field::Prime(2);
    pub const F3: Field = Field::Prime(3);

    /// The fields "over all fields" claims are sampled on.
    pub const DEFAULTS: [Field; 3] = [Field::Q, Field::F2, Field::F3];
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown field {s:?}; use Q or Fp for a prime p"));
        if s == "Q" || s == "QQ" {
            return Ok(Field::Rational);
        }
        let p: u32 = s.strip_prefix('F').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let is_prime = p >= 2 && (2..p).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k));
        if !is_prime || p > 65_521 {
            return Err(bad());
        }
        Ok(Field::Prime(p))
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Ranks of reduced homology `H̃_{-1}, H̃_0, …, H̃_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedHomology {
    ranks: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_k`; zero outside the stored range.
    pub fn rank(&self, k: isize) -> usize {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.ranks.get(i).copied())
            .unwrap_or(0)
    }

    /// Ranks starting at `H̃_{-1}`.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Reduced homology of `Δ` over `field`, with at most 16 vertices in the support.
pub fn simplicial_homology_ranks(d: &SimplicialComplex, field: Field) -> Result<ReducedHomology> {
    simplicial_homology_ranks_bounded(d, field, DEFAULT_HOMOLOGY_VERTICES)
}

pub fn simplicial_homology_ranks_bounded(
    d: &SimplicialComplex,
    field: Field,
    max_vertices: usize,
) -> Result<ReducedHomology> {
    let support = d.vertex_support();
    if support.len() > max_vertices {
        return Err(Error::BoundExceeded(format!(
            "complex has {} vertices, bound is {max_vertices}",
            support.len()
        )));
    }
    let mut faces: HashSet<VertexSet> = HashSet::new();
    for &f in d.facets() {
        if !faces.contains(&f) {
            faces.extend(f.subsets());
        }
    }
    Ok(reduced_homology(faces.into_iter().collect(), field))
}

/// Homology of a downward-closed family of faces.
fn reduced_homology(faces: Vec<VertexSet>, field: Field) -> ReducedHomology {
    let Some(top) = faces.iter().map(|f| f.len()).max() else {
        return ReducedHomology { ranks: vec![] };
    };
    // by_size[s] lists faces with s vertices, i.e. chains in degree s - 1.
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.len()].push(f);
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    // rank of ∂ from size s to size s - 1, for s = 1..=top.
    let mut boundary_rank = vec![0usize; top + 2];
    for s in 1..=top {
        boundary_rank[s] = boundary_matrix_rank(&by_size[s], &by_size[s - 1], field);
    }
    let ranks = (0..=top)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect();
    ReducedHomology { ranks }
}

fn boundary_matrix_rank(rows: &[VertexSet], cols: &[VertexSet], field: Field) -> usize {
    if rows.is_empty() || cols.is_empty() {
        return 0;
    }
    let col_of = |f: VertexSet| cols.binary_search(&f).expect("faces are downward closed");
    let entries: Vec<Vec<(usize, i64)>> = rows
        .iter()
        .map(|&face| {
            face.iter()
                .enumerate()
                .map(|(k, v)| (col_of(face.without(v)), if k % 2 == 0 { 1 } else { -1 }))
                .collect()
        })
        .collect();
    match field {
        Field::Prime(p) => rank_mod_p(&entries, cols.len(), p as u64),
        Field::Rational => rank_rational(&entries, cols.len()),
    }
}

fn rank_mod_p(rows: &[Vec<(usize, i64)>], ncols: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![0u64; ncols];
            for &(c, v) in r {
                row[c] = (v.rem_euclid(p as i64)) as u64;
            }
            row
        })
        .collect();
    let inv = |a: u64| pow_mod(a, p - 2, p);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let scale = inv(m[rank][col]);
        for x in &mut m[rank][col..] {
            *x = *x * scale % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn rank_rational(rows: &[Vec<(usize, i64)>], ncols: usize) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![BigRational::zero(); ncols];
            for &(c, v) in r {
                row[c] = BigRational::from_integer(v.into());
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let scale = BigRational::one() / &m[rank][col];
        for x in &mut m[rank][col..] {
            *x = &*x * &scale;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    if !y.is_zero() {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Graded Betti numbers `β_{i,j}` of an ideal over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub field: Field,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new(field: Field) -> Self {
        BettiTable {
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    fn add(&mut self, i: usize, j: u32, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    /// Non-zero entries `(i, j, β_{i,j})` in increasing `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`, or `None` for the zero ideal.
    pub fn regularity(&self) -> Option<i64> {
        self.entries().map(|(i, j, _)| j as i64 - i as i64).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries().map(|(i, _, _)| i).max()
    }

    /// Entries with `j - i > d`, the obstructions to a `d`-linear resolution.
    pub fn nonlinear_entries(&self, d: u32) -> Vec<(usize, u32, u64)> {
        self.entries()
            .filter(|&(i, j, _)| j as i64 - i as i64 > d as i64)
            .collect()
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay2-style table: row `j - i`, column `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Betti table over {}", self.field)?;
        let (Some(pd), Some(reg)) = (self.projective_dimension(), self.regularity()) else {
            return writeln!(f, "  (zero ideal)");
        };
        let low = self.entries().map(|(i, j, _)| j as i64 - i as i64).min().unwrap();
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        for row in low..=reg {
            write!(f, "{row:>5}:")?;
            for i in 0..=pd {
                let j = row + i as i64;
                match self.get(i, j as u32) {
                    0 => write!(f, "{:>6}", ".")?,
                    b => write!(f, "{b:>6}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct BettiWire {
    field: Field,
    entries: Vec<BettiEntry>,
}

#[derive(Serialize, Deserialize)]
struct BettiEntry {
    i: usize,
    j: u32,
    beta: u64,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BettiWire {
            field: self.field,
            entries: self
                .entries()
                .map(|(i, j, beta)| BettiEntry { i, j, beta })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = BettiWire::deserialize(d)?;
        let mut t = BettiTable::new(wire.field);
        for e in wire.entries {
            t.add(e.i, e.j, e.beta);
        }
        Ok(t)
    }
}

/// Graded Betti numbers of `I` over `field`.
///
/// The budget caps the number of candidate multidegrees (the box below the
/// lcm of all generators).
pub fn betti_numbers(ideal: &OrderedIdeal, field: Field, budget: Budget) -> Result<BettiTable> {
    let gens = ideal.minimalized().generators().to_vec();
    let mut table = BettiTable::new(field);
    if gens.is_empty() {
        return Ok(table);
    }
    let n = ideal.n();
    let top = gens.iter().fold(Monomial::one(n), |acc, g| acc.lcm(g));
    if top.support().len() > DEFAULT_HOMOLOGY_VERTICES {
        return Err(Error::BoundExceeded(format!(
            "lcm of the generators has {} variables, bound is {DEFAULT_HOMOLOGY_VERTICES}",
            top.support().len()
        )));
    }
    let boxes = top
        .exponents()
        .iter()
        .try_fold(1u64, |acc, &e| acc.checked_mul(e as u64 + 1));
    match boxes {
        Some(b) if b <= budget.max_nodes => {}
        _ => {
            return Err(Error::BoundExceeded(format!(
                "multidegree box exceeds the budget of {}",
                budget.max_nodes
            )))
        }
    }
    let candidates = box_below(&top);
    let found: Vec<(usize, u32, u64)> = candidates
        .par_iter()
        .filter(|b| in_lcm_lattice(&gens, b))
        .flat_map_iter(|b| {
            let j = b.degree();
            // ranks()[s] is H̃_{s-1}, which carries β_s.
            let h = reduced_homology(upper_koszul_faces(&gens, b), field);
            h.ranks
                .into_iter()
                .enumerate()
                .filter(|&(_, r)| r > 0)
                .map(move |(s, r)| (s, j, r as u64))
        })
        .collect();
    for (i, j, beta) in found {
        table.add(i, j, beta);
    }
    Ok(table)
}

/// All monomials dividing `top`.
fn box_below(top: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Vec::<u32>::new()];
    for &e in top.exponents() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=e).map(move |k| {
                    let mut p = prefix.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

fn in_lcm_lattice(gens: &[Monomial], b: &Monomial) -> bool {
    let below: Vec<&Monomial> = gens.iter().filter(|g| g.divides(b)).collect();
    !below.is_empty() && below.iter().fold(Monomial::one(b.n()), |acc, g| acc.lcm(g)) == *b
}

fn upper_koszul_faces(gens: &[Monomial], b: &Monomial) -> Vec<VertexSet> {
    b.support()
        .subsets()
        .filter(|&f| {
            let mut e = b.exponents().to_vec();
            for v in f.iter() {
                e[v as usize - 1] -= 1;
            }
            let m = Monomial::new(e);
            gens.iter().any(|g| g.divides(&m))
        })
        .collect()
}

/// `reg(I)`, or `None` for the zero ideal.
pub fn regularity(ideal: &OrderedIdeal, field: Field, budget: Budget) -> Result<Option<i64>> {
    Ok(betti_numbers(ideal, field, budget)?.regularity())
}

/// Whether an ideal generated in degree `d` has `β_{i,j} = 0` for all `j - i > d`.
/// The zero ideal counts as linear.
pub fn has_linear_resolution(ideal: &OrderedIdeal, field: Field, budget: Budget) -> Result<bool> {
    let min = ideal.minimalized();
    if min.is_zero() {
        return Ok(true);
    }
    let d = min.generating_degree().ok_or(Error::NotEquigenerated)?;
    Ok(betti_numbers(&min, field, budget)?.nonlinear_entries(d).is_empty())
}
