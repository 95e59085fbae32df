//! Shelling orders, shellability, extendable shellability, and the comparison
//! between extendable shellability of `⟨[n]⟩^(n-d)` and chordality of the
//! residuals of `C_{n,d}`.
//!
//! Whether a facet can be appended to a partial shelling depends only on the
//! set of facets already placed, so all searches run over facet subsets.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitmask::BitMask;
use crate::chordality::{ChordalSearch, ClutterIndex};
use crate::clutter::UniformClutter;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::search::{Budget, Meter, Search, SearchResult, SearchStats};
use crate::vertex_set::{binomial, VertexSet};

/// Default cap on the facet count for extendable shellability.
pub const DEFAULT_EXTENDABLE_FACETS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingCheck {
    pub holds: bool,
    /// 1-based position of the first facet whose intersection with the
    /// earlier ones is not pure of codimension one.
    pub first_failure: Option<usize>,
}

/// For facet `i` and earlier facet `j`: the facets `k` with `|F_k ∩ F_i| = |F_i| - 1`
/// and `F_j ∩ F_i ⊆ F_k ∩ F_i`. Facet `i` may follow the set `S` iff every
/// `j ∈ S` has such a `k` in `S`.
struct Appendability {
    facets: Vec<VertexSet>,
    cover: Vec<Vec<u64>>,
}

impl Appendability {
    fn new(facets: &[VertexSet]) -> Result<Self> {
        if facets.len() > 64 {
            return Err(Error::BoundExceeded(format!(
                "{} facets; subset searches handle at most 64",
                facets.len()
            )));
        }
        let m = facets.len();
        let mut cover = vec![vec![0u64; m]; m];
        for i in 0..m {
            let fi = facets[i];
            let ridges: Vec<usize> = (0..m)
                .filter(|&k| k != i && (facets[k] & fi).len() + 1 == fi.len())
                .collect();
            for j in (0..m).filter(|&j| j != i) {
                let meet = facets[j] & fi;
                for &k in &ridges {
                    if meet.is_subset(facets[k] & fi) {
                        cover[i][j] |= 1 << k;
                    }
                }
            }
        }
        Ok(Appendability {
            facets: facets.to_vec(),
            cover,
        })
    }

    fn len(&self) -> usize {
        self.facets.len()
    }

    fn full(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    #[inline]
    fn can_append(&self, placed: u64, i: usize) -> bool {
        if placed == 0 {
            return true;
        }
        let cover = &self.cover[i];
        let mut rest = placed;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            if cover[j] & placed == 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }

    fn appendable(&self, placed: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| placed & (1 << i) == 0 && self.can_append(placed, i))
    }
}

fn warn_if_impure(d: &SimplicialComplex) {
    if !d.is_pure() {
        log::warn!("complex is not pure; applying the shelling condition verbatim");
    }
}

/// Checks that each `F_i`, `i ≥ 2`, meets `⟨F_1, …, F_{i-1}⟩` in a complex
/// that is pure of dimension `dim F_i - 1`.
pub fn is_shelling_order(d: &SimplicialComplex, order: &[VertexSet]) -> Result<ShellingCheck> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != d.facets() {
        return Err(Error::NotAPermutation);
    }
    warn_if_impure(d);
    for i in 1..order.len() {
        let fi = order[i];
        let meets: Vec<VertexSet> = order[..i].iter().map(|&g| g & fi).collect();
        let pure = meets
            .iter()
            .filter(|&&m| !meets.iter().any(|&o| m.is_proper_subset(o)))
            .all(|m| m.len() + 1 == fi.len());
        if !pure {
            return Ok(ShellingCheck {
                holds: false,
                first_failure: Some(i + 1),
            });
        }
    }
    Ok(ShellingCheck {
        holds: true,
        first_failure: None,
    })
}

/// A shelling order of `Δ`, found by depth-first search over placed facet sets.
pub fn find_shelling(d: &SimplicialComplex, budget: Budget) -> Result<SearchResult<Vec<VertexSet>>> {
    warn_if_impure(d);
    let app = Appendability::new(d.facets())?;
    let mut meter = Meter::new(budget);
    let mut failed: HashSet<u64> = HashSet::new();
    let mut order = Vec::new();
    let outcome = match shell_from(&app, 0, &mut order, &mut failed, &mut meter) {
        Ok(true) => Search::Found(order.iter().map(|&i| app.facets[i]).collect()),
        Ok(false) => Search::NotFound,
        Err(_) => Search::Exhausted,
    };
    Ok(SearchResult {
        outcome,
        stats: meter.stats,
    })
}

fn shell_from(
    app: &Appendability,
    placed: u64,
    order: &mut Vec<usize>,
    failed: &mut HashSet<u64>,
    meter: &mut Meter,
) -> std::result::Result<bool, crate::search::OutOfBudget> {
    if placed == app.full() {
        return Ok(true);
    }
    if failed.contains(&placed) {
        meter.hit();
        return Ok(false);
    }
    meter.tick()?;
    for i in app.appendable(placed) {
        order.push(i);
        if shell_from(app, placed | (1 << i), order, failed, meter)? {
            return Ok(true);
        }
        order.pop();
    }
    failed.insert(placed);
    Ok(false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ExtendableVerdict {
    Extendable,
    /// A shelling of a proper facet-subcomplex that cannot be continued.
    NotExtendable { stuck: Vec<VertexSet> },
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendableReport {
    #[serde(flatten)]
    pub verdict: ExtendableVerdict,
    /// Reachable shellable facet sets, the empty set excluded.
    pub states: u64,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtendableOptions {
    pub budget: Budget,
    pub max_facets: usize,
}

impl Default for ExtendableOptions {
    fn default() -> Self {
        ExtendableOptions {
            budget: Budget::default(),
            max_facets: DEFAULT_EXTENDABLE_FACETS,
        }
    }
}

/// Whether every shelling of a facet-subcomplex extends to a shelling of `Δ`.
///
/// Explores all shellable facet sets level by level. `Δ` is extendably
/// shellable iff every reachable proper set has an appendable facet; otherwise
/// a shortest stuck shelling is returned.
pub fn is_extendably_shellable(d: &SimplicialComplex, options: ExtendableOptions) -> Result<ExtendableReport> {
    if d.facets().len() > options.max_facets {
        return Err(Error::BoundExceeded(format!(
            "{} facets, bound is {}",
            d.facets().len(),
            options.max_facets
        )));
    }
    warn_if_impure(d);
    let app = Appendability::new(d.facets())?;
    let mut meter = Meter::new(options.budget);
    // Every state remembers one predecessor and the facet added to reach it.
    let mut parents: HashMap<u64, (u64, usize)> = HashMap::new();
    let mut level: Vec<u64> = vec![0];
    let mut states = 0u64;
    while !level.is_empty() {
        if level[0] == app.full() {
            break;
        }
        let expanded: Vec<(u64, Vec<usize>)> = level
            .par_iter()
            .map(|&s| (s, app.appendable(s).collect()))
            .collect();
        if let Some((s, _)) = expanded.iter().find(|(_, next)| next.is_empty()) {
            let stuck = reconstruct(&parents, *s)
                .into_iter()
                .map(|i| app.facets[i])
                .collect();
            return Ok(ExtendableReport {
                verdict: ExtendableVerdict::NotExtendable { stuck },
                states: states + level.len() as u64,
                stats: meter.stats,
            });
        }
        let mut next: HashMap<u64, (u64, usize)> = HashMap::new();
        for (s, adds) in expanded {
            for i in adds {
                let child = s | (1 << i);
                match next.get_mut(&child) {
                    Some(best) => {
                        meter.hit();
                        *best = (*best).min((s, i));
                    }
                    None => {
                        if meter.tick().is_err() {
                            return Ok(ExtendableReport {
                                verdict: ExtendableVerdict::Exhausted,
                                states,
                                stats: meter.stats,
                            });
                        }
                        next.insert(child, (s, i));
                    }
                }
            }
        }
        states += next.len() as u64;
        let mut keys: Vec<u64> = next.keys().copied().collect();
        keys.sort_unstable();
        parents.extend(next);
        level = keys;
    }
    Ok(ExtendableReport {
        verdict: ExtendableVerdict::Extendable,
        states,
        stats: meter.stats,
    })
}

fn reconstruct(parents: &HashMap<u64, (u64, usize)>, mut s: u64) -> Vec<usize> {
    let mut order = Vec::new();
    while s != 0 {
        let (p, i) = parents[&s];
        order.push(i);
        s = p;
    }
    order.reverse();
    order
}

/// Outcome of comparing the two sides of the Simon equivalence for `(n, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimonReport {
    pub n: usize,
    pub d: usize,
    pub skeleton_extendably_shellable: bool,
    pub num_residual_states: u64,
    pub all_residuals_chordal: bool,
    pub equivalence_holds: bool,
}

/// Largest `n` accepted by [`simon_equivalence_check`].
pub const SIMON_MAX_N: usize = 6;

/// Decides both sides independently: extendable shellability of
/// `⟨[n]⟩^(n-d)` by the facet-set search, and chordality of every residual
/// `C_{n,d} \ e_1 \ ⋯ \ e_t` over all simplicial sequences.
pub fn simon_equivalence_check(n: usize, d: usize, budget: Budget) -> Result<SimonReport> {
    if n > SIMON_MAX_N {
        return Err(Error::BoundExceeded(format!("n = {n}, bound is {SIMON_MAX_N}")));
    }
    if d < 2 || d > n {
        return Err(Error::InvalidArgument(format!("need 2 ≤ d ≤ n, got n={n}, d={d}")));
    }
    let skeleton = SimplicialComplex::simplex(n).pure_skeleton(n - d);
    let facets = binomial(n, d - 1) as usize;
    let shell = is_extendably_shellable(
        &skeleton,
        ExtendableOptions {
            budget,
            max_facets: facets,
        },
    )?;
    let skeleton_extendably_shellable = match shell.verdict {
        ExtendableVerdict::Extendable => true,
        ExtendableVerdict::NotExtendable { .. } => false,
        ExtendableVerdict::Exhausted => {
            return Err(Error::BoundExceeded("extendable shellability search exhausted".into()))
        }
    };
    let residuals = residual_states(n, d, budget)?;
    let all_residuals_chordal = residuals.all_chordal;
    Ok(SimonReport {
        n,
        d,
        skeleton_extendably_shellable,
        num_residual_states: residuals.deleted_sets.len() as u64,
        all_residuals_chordal,
        equivalence_holds: skeleton_extendably_shellable == all_residuals_chordal,
    })
}

struct Residuals {
    /// The `(d-1)`-subsets of `[n]`, indexing the bits of `deleted_sets`.
    #[cfg_attr(not(test), allow(dead_code))]
    elements: Vec<VertexSet>,
    /// Every `{e_1, …, e_t}` for a simplicial sequence of `C_{n,d}`, empty set included.
    deleted_sets: HashSet<u64>,
    all_chordal: bool,
}

fn residual_states(n: usize, d: usize, budget: Budget) -> Result<Residuals> {
    let base = UniformClutter::complete(n, d)?;
    let index = ClutterIndex::new(&base);
    let elements: Vec<VertexSet> = {
        let mut e: Vec<VertexSet> = VertexSet::full(n).subsets_of_size(d - 1).collect();
        e.sort_unstable();
        e
    };
    // Subcircuit indices of the elements in `index`; all (d-1)-sets are subcircuits of C_{n,d}.
    let sub: Vec<usize> = elements
        .iter()
        .map(|e| index.subcircuits.binary_search(e).expect("complete clutter"))
        .collect();
    let mut meter = Meter::new(budget);
    let mut chordal_meter = Meter::new(budget);
    let mut chordal = ChordalSearch::new(&index);
    let mut seen: HashSet<u64> = HashSet::from([0]);
    let mut stack: Vec<(u64, BitMask)> = vec![(0, index.full_mask())];
    let mut all_chordal = true;
    let exhausted = |_| Error::BoundExceeded("residual search exhausted".into());
    while let Some((set, mask)) = stack.pop() {
        meter.tick().map_err(exhausted)?;
        if !chordal.decide(&mask, &mut chordal_meter).map_err(exhausted)? {
            all_chordal = false;
        }
        for (k, &ei) in sub.iter().enumerate() {
            if set & (1 << k) != 0 {
                continue;
            }
            let next = set | (1 << k);
            if seen.contains(&next) || !index.is_simplicial(&mask, ei) {
                continue;
            }
            seen.insert(next);
            stack.push((next, index.delete(&mask, ei)));
        }
    }
    Ok(Residuals {
        elements,
        deleted_sets: seen,
        all_chordal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::chordality::{validate_simplicial_sequence, SimplicialSequence};
    use crate::decomposable::random_decomposable;
    use crate::ideals::{find_linear_quotients_order, Monomial, OrderedIdeal};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn vs(v: &[u32]) -> VertexSet {
        VertexSet::of(v)
    }

    fn complex(n: usize, f: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, f).unwrap()
    }

    /// The ideal `(x_{[n] \ F_1}, …, x_{[n] \ F_r})` in the given order.
    fn dual_ideal(n: usize, order: &[VertexSet]) -> OrderedIdeal {
        let gens = order
            .iter()
            .map(|&f| Monomial::from_set(n, f.complement(n)))
            .collect();
        OrderedIdeal::new(n, gens).unwrap()
    }

    #[test]
    fn small_shelling_orders() {
        let path = complex(3, &[&[1, 2], &[2, 3]]);
        assert!(is_shelling_order(&path, &[vs(&[1, 2]), vs(&[2, 3])]).unwrap().holds);
        let split = complex(4, &[&[1, 2], &[3, 4]]);
        for order in [[vs(&[1, 2]), vs(&[3, 4])], [vs(&[3, 4]), vs(&[1, 2])]] {
            let c = is_shelling_order(&split, &order).unwrap();
            assert_eq!(c.first_failure, Some(2));
        }
        assert_eq!(
            is_shelling_order(&path, &[vs(&[1, 2])]),
            Err(Error::NotAPermutation)
        );
        let points = complex(3, &[&[1], &[2], &[3]]);
        assert!(is_shelling_order(&points, &[vs(&[2]), vs(&[1]), vs(&[3])]).unwrap().holds);
    }

    #[test]
    fn finding_shellings() {
        for n in 2..=6 {
            for i in 0..n {
                let sk = SimplicialComplex::simplex(n).pure_skeleton(i);
                let r = find_shelling(&sk, Budget::default()).unwrap();
                let order = r.outcome.found().unwrap();
                assert!(is_shelling_order(&sk, order).unwrap().holds);
            }
        }
        let split = complex(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(find_shelling(&split, Budget::default()).unwrap().outcome, Search::NotFound);
        // Two triangles meeting at a vertex.
        let bowtie = complex(5, &[&[1, 2, 3], &[3, 4, 5]]);
        assert!(!find_shelling(&bowtie, Budget::default()).unwrap().outcome.is_found());
    }

    #[test]
    fn duals_of_decomposable_clique_complexes_shell() {
        for c in [catalog::figure3(), catalog::umbrella(), catalog::ex2()] {
            let dual = c.clique_complex().alexander_dual();
            let r = find_shelling(&dual, Budget::default()).unwrap();
            assert!(r.outcome.is_found(), "{c}");
        }
    }

    #[test]
    fn linear_quotients_orders_give_shellings_of_the_dual() {
        for seed in 0..40 {
            let (c, _) = random_decomposable(6, 3, seed).unwrap();
            let ideal = OrderedIdeal::circuit_ideal(&c.complement());
            if ideal.is_zero() {
                continue;
            }
            let perm = find_linear_quotients_order(&ideal, Budget::default())
                .outcome
                .into_found()
                .unwrap();
            let ordered = ideal.reordered(&perm).unwrap();
            let facets: Vec<VertexSet> = ordered
                .sets()
                .unwrap()
                .into_iter()
                .map(|g| g.complement(6))
                .collect();
            let dual = c.clique_complex().alexander_dual();
            assert!(is_shelling_order(&dual, &facets).unwrap().holds, "seed {seed}");
        }
    }

    #[test]
    fn extendable_shellability_small() {
        let single = SimplicialComplex::simplex(4);
        let r = is_extendably_shellable(&single, ExtendableOptions::default()).unwrap();
        assert_eq!(r.verdict, ExtendableVerdict::Extendable);
        for n in 2..=6usize {
            for i in n.saturating_sub(3)..n {
                let sk = SimplicialComplex::simplex(n).pure_skeleton(i);
                let r = is_extendably_shellable(&sk, ExtendableOptions::default()).unwrap();
                assert_eq!(r.verdict, ExtendableVerdict::Extendable, "n={n} i={i}");
            }
        }
        for n in 3..=7 {
            let sk = SimplicialComplex::simplex(n).pure_skeleton(n - 2);
            let r = is_extendably_shellable(&sk, ExtendableOptions::default()).unwrap();
            assert_eq!(r.verdict, ExtendableVerdict::Extendable);
        }
    }

    #[test]
    fn disjoint_edges_get_stuck_after_one_facet() {
        let split = complex(4, &[&[1, 2], &[3, 4]]);
        let r = is_extendably_shellable(&split, ExtendableOptions::default()).unwrap();
        let ExtendableVerdict::NotExtendable { stuck } = r.verdict else {
            panic!("expected a stuck shelling");
        };
        assert_eq!(stuck, vec![vs(&[1, 2])]);
    }

    #[test]
    fn shellable_but_not_extendably_shellable() {
        let d = complex(
            6,
            &[
                &[1, 2, 5],
                &[1, 2, 6],
                &[1, 3, 5],
                &[1, 3, 6],
                &[2, 3, 4],
                &[2, 3, 5],
                &[2, 4, 6],
                &[3, 4, 5],
                &[4, 5, 6],
            ],
        );
        let order = find_shelling(&d, Budget::default()).unwrap().outcome.into_found().unwrap();
        assert!(is_shelling_order(&d, &order).unwrap().holds);
        let r = is_extendably_shellable(&d, ExtendableOptions::default()).unwrap();
        let ExtendableVerdict::NotExtendable { stuck } = r.verdict else {
            panic!("expected a stuck shelling");
        };
        assert!(is_prefix_shelling(&d, &stuck));
        for f in d.facets().iter().filter(|f| !stuck.contains(f)) {
            let mut longer = stuck.clone();
            longer.push(*f);
            assert!(!is_prefix_shelling(&d, &longer), "{f} extends the stuck shelling");
        }
    }

    fn is_prefix_shelling(d: &SimplicialComplex, order: &[VertexSet]) -> bool {
        let sub = SimplicialComplex::new(d.n(), order.iter().copied()).unwrap();
        is_shelling_order(&sub, order).unwrap().holds
    }

    #[test]
    fn extendable_respects_facet_bound() {
        let sk = SimplicialComplex::simplex(7).pure_skeleton(2);
        assert!(matches!(
            is_extendably_shellable(&sk, ExtendableOptions::default()),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn simon_small_cases() {
        for (n, d) in [(4, 3), (5, 3), (5, 2), (4, 2), (4, 4), (5, 4)] {
            let r = simon_equivalence_check(n, d, Budget::default()).unwrap();
            assert!(r.skeleton_extendably_shellable, "{n},{d}");
            assert!(r.all_residuals_chordal, "{n},{d}");
            assert!(r.equivalence_holds);
        }
        assert!(simon_equivalence_check(7, 3, Budget::default()).is_err());
        assert!(simon_equivalence_check(5, 1, Budget::default()).is_err());
        assert!(simon_equivalence_check(4, 5, Budget::default()).is_err());
    }

    #[test]
    fn residual_states_match_shellable_facet_sets() {
        for (n, d) in [(4, 3), (5, 3), (5, 2), (5, 4)] {
            let res = residual_states(n, d, Budget::default()).unwrap();
            let sk = SimplicialComplex::simplex(n).pure_skeleton(n - d);
            let app = Appendability::new(sk.facets()).unwrap();
            // Bit k of a deleted set is element k; its facet is the complement.
            let facet_bit = |k: usize| {
                let f = res.elements[k].complement(n);
                app.facets.iter().position(|&g| g == f).unwrap()
            };
            let mut shellable: HashSet<u64> = HashSet::from([0]);
            let mut stack = vec![0u64];
            while let Some(s) = stack.pop() {
                for i in app.appendable(s) {
                    if shellable.insert(s | (1 << i)) {
                        stack.push(s | (1 << i));
                    }
                }
            }
            let mapped: HashSet<u64> = res
                .deleted_sets
                .iter()
                .map(|&set| {
                    (0..res.elements.len())
                        .filter(|k| set & (1 << k) != 0)
                        .fold(0u64, |acc, k| acc | (1 << facet_bit(k)))
                })
                .collect();
            assert_eq!(mapped, shellable, "n={n} d={d}");
        }
    }

    #[test]
    fn simon_report_json() {
        let r = simon_equivalence_check(4, 3, Budget::default()).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        for key in [
            "n",
            "d",
            "skeleton_extendably_shellable",
            "num_residual_states",
            "all_residuals_chordal",
            "equivalence_holds",
        ] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert_eq!(json.as_object().unwrap().len(), 6);
    }

    fn arb_pure(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
        (2..=max_n).prop_flat_map(move |n| {
            (1..n, any::<u64>()).prop_map(move |(k, seed)| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut all: Vec<VertexSet> = VertexSet::full(n).subsets_of_size(k).collect();
                all.shuffle(&mut rng);
                let m = rng.gen_range(1..=all.len().min(max_facets));
                SimplicialComplex::new(n, all.into_iter().take(m)).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn shelling_matches_linear_quotients_of_dual(d in arb_pure(7, 8), seed in any::<u64>()) {
            let mut order = d.facets().to_vec();
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let shell = is_shelling_order(&d, &order).unwrap().holds;
            let lq = dual_ideal(d.n(), &order).has_linear_quotients_in_order();
            prop_assert_eq!(shell, lq);
        }

        #[test]
        fn appendability_depends_only_on_the_placed_set(d in arb_pure(6, 8), seed in any::<u64>()) {
            let app = Appendability::new(d.facets()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = d.facets().len();
            let k = rng.gen_range(0..m);
            let mut prefix: Vec<usize> = (0..m).collect();
            prefix.shuffle(&mut rng);
            prefix.truncate(k);
            let placed = prefix.iter().fold(0u64, |acc, &i| acc | (1 << i));
            for i in (0..m).filter(|i| !prefix.contains(i)) {
                let mut a: Vec<VertexSet> = prefix.iter().map(|&j| d.facets()[j]).collect();
                a.push(d.facets()[i]);
                let mut b = a[..k].to_vec();
                b.shuffle(&mut rng);
                b.push(d.facets()[i]);
                // The shelling condition for the last facet only, from the definition.
                let last_ok = |o: &[VertexSet]| {
                    let (&f, earlier) = o.split_last().unwrap();
                    let meets: Vec<VertexSet> = earlier.iter().map(|&g| g & f).collect();
                    meets
                        .iter()
                        .filter(|&&m| !meets.iter().any(|&x| m.is_proper_subset(x)))
                        .all(|m| m.len() + 1 == f.len())
                };
                prop_assert_eq!(last_ok(&a), last_ok(&b));
                prop_assert_eq!(last_ok(&a), app.can_append(placed, i));
            }
        }

        #[test]
        fn simplicial_sequences_give_shellable_prefixes(seed in any::<u64>(), n in 4usize..=6, d in 2usize..=4) {
            prop_assume!(d <= n);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let base = UniformClutter::complete(n, d).unwrap();
            let mut cur = base.clone();
            let mut seq = Vec::new();
            let mut pool: Vec<VertexSet> = VertexSet::full(n).subsets_of_size(d - 1).collect();
            pool.shuffle(&mut rng);
            for e in pool {
                if cur.is_simplicial(e).unwrap() && rng.gen_bool(0.8) {
                    seq.push(e);
                    cur = cur.delete(e);
                }
            }
            prop_assert!(validate_simplicial_sequence(&base, &SimplicialSequence::new(seq.clone())).is_ok());
            let facets: Vec<VertexSet> = seq.iter().map(|e| e.complement(n)).collect();
            prop_assume!(!facets.is_empty());
            prop_assert!(is_prefix_shelling(&SimplicialComplex::new(n, facets.iter().copied()).unwrap(), &facets));
        }
    }
}
