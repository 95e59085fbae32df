//! Closed neighborhoods, simplicial elements, simplicial sequences,
//! chordality and simplicial subclutters.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::bitmask::BitMask;
use crate::clutter::UniformClutter;
use crate::error::{Error, Result};
use crate::search::{Budget, Meter, OutOfBudget, Search, SearchResult, SearchStats};
use crate::vertex_set::VertexSet;

impl UniformClutter {
    fn check_subcircuit_size(&self, e: VertexSet) -> Result<()> {
        if e.len() + 1 != self.d() {
            return Err(Error::NotSubcircuitSize { set: e, d: self.d() });
        }
        Ok(())
    }

    /// `N[e] = e ∪ {c : e ∪ {c} ∈ C}`.
    pub fn closed_neighborhood(&self, e: VertexSet) -> Result<VertexSet> {
        self.check_subcircuit_size(e)?;
        Ok(self.neighborhood_unchecked(e))
    }

    pub(crate) fn neighborhood_unchecked(&self, e: VertexSet) -> VertexSet {
        self.circuits()
            .iter()
            .filter(|c| e.is_subset(**c))
            .fold(e, |acc, &c| acc | c)
    }

    pub fn is_maximal_subcircuit(&self, e: VertexSet) -> Result<bool> {
        self.check_subcircuit_size(e)?;
        Ok(self.circuits().iter().any(|c| e.is_subset(*c)))
    }

    /// `SC(C)`, in canonical order.
    pub fn maximal_subcircuits(&self) -> Vec<VertexSet> {
        let set: BTreeSet<VertexSet> = self
            .circuits()
            .iter()
            .flat_map(|c| c.subsets_of_size(self.d() - 1))
            .collect();
        set.into_iter().collect()
    }

    /// Whether `N[e]` is a clique. Vacuously true when `e ∉ SC(C)`.
    pub fn is_simplicial(&self, e: VertexSet) -> Result<bool> {
        self.check_subcircuit_size(e)?;
        Ok(self.is_clique(self.neighborhood_unchecked(e)))
    }

    /// `SC(C) ∩ Simp(C)`, in canonical order.
    pub fn simplicial_maximal_subcircuits(&self) -> Vec<VertexSet> {
        self.maximal_subcircuits()
            .into_iter()
            .filter(|&e| self.is_clique(self.neighborhood_unchecked(e)))
            .collect()
    }

    /// `C \ e = {F ∈ C : e ⊄ F}`.
    pub fn delete(&self, e: VertexSet) -> UniformClutter {
        let circuits = self
            .circuits()
            .iter()
            .copied()
            .filter(|c| !e.is_subset(*c))
            .collect();
        UniformClutter::from_parts(self.n(), self.d(), self.vertices(), circuits)
    }

    /// Removes the given circuits; the vertex set is unchanged.
    pub fn without_circuits(&self, removed: &[VertexSet]) -> UniformClutter {
        let circuits = self
            .circuits()
            .iter()
            .copied()
            .filter(|c| !removed.contains(c))
            .collect();
        UniformClutter::from_parts(self.n(), self.d(), self.vertices(), circuits)
    }

    /// Adds circuits (which must have size `d` and lie in the vertex set).
    pub fn with_circuits(&self, added: &[VertexSet]) -> Result<UniformClutter> {
        let mut all = self.circuits().to_vec();
        for &a in added {
            if !self.contains(a) {
                all.push(a);
            }
        }
        UniformClutter::on_vertices(self.n(), self.d(), self.vertices(), all)
    }
}

/// A sequence `e₁, …, e_r` of `(d-1)`-sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialSequence {
    pub elements: Vec<VertexSet>,
}

impl SimplicialSequence {
    pub fn new(elements: Vec<VertexSet>) -> Self {
        SimplicialSequence { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Checks each `e_i` is simplicial over the residual `C \ e₁ \ ⋯ \ e_{i-1}` and
/// returns the final residual. Errors carry the 1-based index of the first failure.
pub fn validate_simplicial_sequence(
    c: &UniformClutter,
    seq: &SimplicialSequence,
) -> Result<UniformClutter> {
    let mut cur = c.clone();
    for (i, &e) in seq.elements.iter().enumerate() {
        if !cur.is_simplicial(e)? {
            return Err(Error::NotSimplicialElement {
                index: i + 1,
                element: e,
            });
        }
        cur = cur.delete(e);
    }
    Ok(cur)
}

/// Circuits of a fixed base clutter, indexed so that sub-clutters can be
/// handled as bit masks over circuit positions.
#[derive(Clone, Debug)]
pub(crate) struct ClutterIndex {
    pub base: UniformClutter,
    position: HashMap<VertexSet, usize>,
    /// Maximal subcircuits of the base, canonical order.
    pub subcircuits: Vec<VertexSet>,
    /// For each subcircuit, positions of the base circuits containing it.
    pub containing: Vec<Vec<usize>>,
    /// For each circuit, indices of its `(d-1)`-subsets in `subcircuits`.
    pub faces_of: Vec<Vec<usize>>,
}

impl ClutterIndex {
    pub fn new(base: &UniformClutter) -> Self {
        let position: HashMap<VertexSet, usize> = base
            .circuits()
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        let subcircuits = base.maximal_subcircuits();
        let sub_pos: HashMap<VertexSet, usize> =
            subcircuits.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut containing = vec![Vec::new(); subcircuits.len()];
        let mut faces_of = Vec::with_capacity(base.len());
        for (ci, &c) in base.circuits().iter().enumerate() {
            let mut faces = Vec::new();
            for e in c.subsets_of_size(base.d() - 1) {
                let ei = sub_pos[&e];
                containing[ei].push(ci);
                faces.push(ei);
            }
            faces_of.push(faces);
        }
        ClutterIndex {
            base: base.clone(),
            position,
            subcircuits,
            containing,
            faces_of,
        }
    }

    pub fn full_mask(&self) -> BitMask {
        BitMask::full(self.base.len())
    }

    pub fn mask_of(&self, c: &UniformClutter) -> Option<BitMask> {
        let mut m = BitMask::new(self.base.len());
        for circuit in c.circuits() {
            m.insert(*self.position.get(circuit)?);
        }
        Some(m)
    }

    #[inline]
    fn present(&self, mask: &BitMask, circuit: VertexSet) -> bool {
        self.position
            .get(&circuit)
            .is_some_and(|&i| mask.contains(i))
    }

    pub fn neighborhood(&self, mask: &BitMask, ei: usize) -> VertexSet {
        self.containing[ei]
            .iter()
            .filter(|&&ci| mask.contains(ci))
            .fold(self.subcircuits[ei], |acc, &ci| acc | self.base.circuits()[ci])
    }

    pub fn is_clique(&self, mask: &BitMask, f: VertexSet) -> bool {
        let d = self.base.d();
        f.len() < d || f.subsets_of_size(d).all(|s| self.present(mask, s))
    }

    pub fn is_simplicial(&self, mask: &BitMask, ei: usize) -> bool {
        self.is_clique(mask, self.neighborhood(mask, ei))
    }

    /// Indices of the simplicial maximal subcircuits of the masked clutter.
    pub fn simplicial_maximal(&self, mask: &BitMask) -> Vec<usize> {
        let mut seen = BitMask::new(self.subcircuits.len());
        let mut out = Vec::new();
        for ci in mask.iter() {
            for &ei in &self.faces_of[ci] {
                if !seen.contains(ei) {
                    seen.insert(ei);
                    if self.is_simplicial(mask, ei) {
                        out.push(ei);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn delete(&self, mask: &BitMask, ei: usize) -> BitMask {
        let mut m = mask.clone();
        for &ci in &self.containing[ei] {
            m.remove(ci);
        }
        m
    }
}

/// How `is_chordal` explores deletion orders.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChordalMode {
    /// Always delete the canonically first simplicial maximal subcircuit.
    Greedy,
    /// Backtrack over all choices, memoized on the residual.
    #[default]
    Complete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChordalVerdict {
    /// A simplicial order emptying the clutter.
    Chordal(SimplicialSequence),
    NotChordal,
    /// Greedy deletion got stuck; other orders were not explored.
    Inconclusive,
    Exhausted,
}

impl ChordalVerdict {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalVerdict::Chordal(_))
    }

    pub fn order(&self) -> Option<&SimplicialSequence> {
        match self {
            ChordalVerdict::Chordal(s) => Some(s),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordalReport {
    pub verdict: ChordalVerdict,
    pub stats: SearchStats,
}

/// Decides chordality. In complete mode the answer is exact unless the budget runs out.
pub fn is_chordal(c: &UniformClutter, mode: ChordalMode, budget: Budget) -> ChordalReport {
    let index = ClutterIndex::new(c);
    match mode {
        ChordalMode::Greedy => greedy(&index, budget),
        ChordalMode::Complete => {
            let mut search = ChordalSearch::new(&index);
            let mut meter = Meter::new(budget);
            let verdict = match search.decide(&index.full_mask(), &mut meter) {
                Ok(true) => ChordalVerdict::Chordal(search.order_from(&index.full_mask())),
                Ok(false) => ChordalVerdict::NotChordal,
                Err(OutOfBudget) => ChordalVerdict::Exhausted,
            };
            ChordalReport {
                verdict,
                stats: meter.stats,
            }
        }
    }
}

fn greedy(index: &ClutterIndex, budget: Budget) -> ChordalReport {
    let mut meter = Meter::new(budget);
    let mut mask = index.full_mask();
    let mut order = Vec::new();
    let verdict = loop {
        if mask.is_empty() {
            break ChordalVerdict::Chordal(SimplicialSequence::new(order));
        }
        if meter.tick().is_err() {
            break ChordalVerdict::Exhausted;
        }
        match index.simplicial_maximal(&mask).first() {
            Some(&ei) => {
                order.push(index.subcircuits[ei]);
                mask = index.delete(&mask, ei);
            }
            None => break ChordalVerdict::Inconclusive,
        }
    };
    ChordalReport {
        verdict,
        stats: meter.stats,
    }
}

/// Memoized chordality over sub-clutters of one base clutter. The memo
/// survives across calls, so many residuals of the same base share work.
pub(crate) struct ChordalSearch<'a> {
    index: &'a ClutterIndex,
    /// `Some(ei)`: chordal, first deleting subcircuit `ei`. `None`: not chordal.
    memo: HashMap<BitMask, Option<usize>>,
}

impl<'a> ChordalSearch<'a> {
    pub fn new(index: &'a ClutterIndex) -> Self {
        ChordalSearch {
            index,
            memo: HashMap::new(),
        }
    }

    pub fn decide(&mut self, mask: &BitMask, meter: &mut Meter) -> std::result::Result<bool, OutOfBudget> {
        if mask.is_empty() {
            return Ok(true);
        }
        if let Some(r) = self.memo.get(mask) {
            meter.hit();
            return Ok(r.is_some());
        }
        meter.tick()?;
        for ei in self.index.simplicial_maximal(mask) {
            let next = self.index.delete(mask, ei);
            if self.decide(&next, meter)? {
                self.memo.insert(mask.clone(), Some(ei));
                return Ok(true);
            }
        }
        self.memo.insert(mask.clone(), None);
        Ok(false)
    }

    /// Follows the memo from a state already decided chordal.
    pub fn order_from(&self, mask: &BitMask) -> SimplicialSequence {
        let mut mask = mask.clone();
        let mut order = Vec::new();
        while !mask.is_empty() {
            let ei = self.memo[&mask].expect("state decided chordal");
            order.push(self.index.subcircuits[ei]);
            mask = self.index.delete(&mask, ei);
        }
        SimplicialSequence::new(order)
    }
}

/// Lengths of all simplicial orders of `C`, plus the number of reachable
/// non-empty residuals that have no simplicial maximal subcircuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderLengths {
    pub lengths: BTreeSet<usize>,
    pub dead_ends: usize,
    pub states: usize,
}

pub fn simplicial_order_lengths(c: &UniformClutter) -> OrderLengths {
    fn walk(
        index: &ClutterIndex,
        mask: &BitMask,
        memo: &mut HashMap<BitMask, BTreeSet<usize>>,
        dead_ends: &mut usize,
    ) -> BTreeSet<usize> {
        if mask.is_empty() {
            return BTreeSet::from([0]);
        }
        if let Some(l) = memo.get(mask) {
            return l.clone();
        }
        let choices = index.simplicial_maximal(mask);
        if choices.is_empty() {
            *dead_ends += 1;
        }
        let mut out = BTreeSet::new();
        for ei in choices {
            let next = index.delete(mask, ei);
            out.extend(walk(index, &next, memo, dead_ends).into_iter().map(|l| l + 1));
        }
        memo.insert(mask.clone(), out.clone());
        out
    }
    let index = ClutterIndex::new(c);
    let mut memo = HashMap::new();
    let mut dead_ends = 0;
    let lengths = walk(&index, &index.full_mask(), &mut memo, &mut dead_ends);
    OrderLengths {
        lengths,
        dead_ends,
        states: memo.len(),
    }
}

/// `Σ_{i=0}^{n-2} C(i, d-2)`: the common length of the simplicial orders of `C_{n,d}`.
pub fn complete_order_length(n: usize, d: usize) -> u64 {
    if d < 2 || n < 2 {
        return 0;
    }
    (0..=n - 2)
        .map(|i| crate::vertex_set::binomial(i, d - 2))
        .sum()
}

/// One step `(e, A)` of a simplicial-subclutter construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubclutterStep {
    pub e: VertexSet,
    #[serde(rename = "A")]
    pub removed: Vec<VertexSet>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubclutterSteps {
    pub steps: Vec<SubclutterStep>,
}

impl SubclutterSteps {
    pub fn new(steps: Vec<SubclutterStep>) -> Self {
        SubclutterSteps { steps }
    }

    pub fn from_pairs(pairs: Vec<(VertexSet, Vec<VertexSet>)>) -> Self {
        SubclutterSteps {
            steps: pairs
                .into_iter()
                .map(|(e, removed)| SubclutterStep { e, removed })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Drops steps that remove nothing.
    pub fn normalized(mut self) -> Self {
        self.steps.retain(|s| !s.removed.is_empty());
        for s in &mut self.steps {
            s.removed.sort_unstable();
        }
        self
    }
}

/// Applies `C \ A₁ \ ⋯ \ A_t`, checking that each `e_i` is simplicial over the
/// current clutter and each removed circuit is present and contains `e_i`.
pub fn apply_subclutter_steps(c: &UniformClutter, steps: &SubclutterSteps) -> Result<UniformClutter> {
    let mut cur = c.clone();
    for (i, step) in steps.steps.iter().enumerate() {
        if !cur.is_simplicial(step.e)? {
            return Err(Error::StepNotSimplicial {
                index: i + 1,
                element: step.e,
            });
        }
        for &f in &step.removed {
            if !step.e.is_subset(f) || !cur.contains(f) {
                return Err(Error::StepBadRemoval {
                    index: i + 1,
                    element: step.e,
                    circuit: f,
                });
            }
        }
        cur = cur.without_circuits(&step.removed);
    }
    Ok(cur)
}

/// Searches for steps turning `C` into the proper subclutter `D`.
///
/// Circuits of `D` are never removed, so every state lies between `D` and `C`.
/// Failed states are memoized; `NotFound` means the whole space was closed.
pub fn is_simplicial_subclutter(
    c: &UniformClutter,
    d: &UniformClutter,
    budget: Budget,
) -> Result<SearchResult<SubclutterSteps>> {
    if c.d() != d.d() || c.n() != d.n() {
        return Err(Error::NotASubclutter("different uniformity or universe".into()));
    }
    let index = ClutterIndex::new(c);
    let target = index
        .mask_of(d)
        .ok_or_else(|| Error::NotASubclutter("a circuit of D is not in C".into()))?;
    if target == index.full_mask() {
        return Err(Error::NotASubclutter("D equals C".into()));
    }
    let mut search = SubclutterSearch {
        index: &index,
        target: &target,
        failed: std::collections::HashSet::new(),
        path: Vec::new(),
    };
    let mut meter = Meter::new(budget);
    let outcome = match search.run(&index.full_mask(), &mut meter) {
        Ok(true) => Search::Found(SubclutterSteps::new(search.path)),
        Ok(false) => Search::NotFound,
        Err(OutOfBudget) => Search::Exhausted,
    };
    Ok(SearchResult {
        outcome,
        stats: meter.stats,
    })
}

struct SubclutterSearch<'a> {
    index: &'a ClutterIndex,
    target: &'a BitMask,
    failed: std::collections::HashSet<BitMask>,
    path: Vec<SubclutterStep>,
}

impl SubclutterSearch<'_> {
    fn run(&mut self, mask: &BitMask, meter: &mut Meter) -> std::result::Result<bool, OutOfBudget> {
        if mask == self.target {
            return Ok(true);
        }
        if self.failed.contains(mask) {
            meter.hit();
            return Ok(false);
        }
        meter.tick()?;
        let removable = mask.and_not(self.target);
        for ei in 0..self.index.subcircuits.len() {
            let cand: Vec<usize> = self.index.containing[ei]
                .iter()
                .copied()
                .filter(|&ci| removable.contains(ci))
                .collect();
            if cand.is_empty() || !self.index.is_simplicial(mask, ei) {
                continue;
            }
            // Non-empty subsets of the candidates, largest first.
            let mut subsets: Vec<u32> = (1..1u32 << cand.len()).collect();
            subsets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
            for s in subsets {
                let mut next = mask.clone();
                let mut removed = Vec::new();
                for (k, &ci) in cand.iter().enumerate() {
                    if s & (1 << k) != 0 {
                        next.remove(ci);
                        removed.push(self.index.base.circuits()[ci]);
                    }
                }
                self.path.push(SubclutterStep {
                    e: self.index.subcircuits[ei],
                    removed,
                });
                if self.run(&next, meter)? {
                    return Ok(true);
                }
                self.path.pop();
            }
        }
        self.failed.insert(mask.clone());
        Ok(false)
    }
}
