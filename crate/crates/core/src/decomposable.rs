//! Decomposable clutters: certificates, verification, recognition and random generation.
//!
//! A clutter is decomposable when it is built by the rules
//!
//! 1. the complete clutter on a vertex set;
//! 2. `C₁ ∪ C₂` for decomposable `C₁, C₂` with incomparable vertex sets whose
//!    intersection is a clique in both;
//! 3. any simplicial subclutter of a decomposable clutter.
//!
//! Vertex sets are tracked explicitly: a simplicial subclutter keeps the
//! vertex set of its parent, and a glued union lives on `V(C₁) ∪ V(C₂)`.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chordality::{apply_subclutter_steps, SubclutterStep, SubclutterSteps};
use crate::clutter::UniformClutter;
use crate::error::{Error, Result};
use crate::search::{Budget, Meter, OutOfBudget, SearchStats};
use crate::vertex_set::VertexSet;

/// A derivation tree witnessing decomposability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DecompCertificate {
    Complete {
        vertices: VertexSet,
    },
    Union {
        left: Box<DecompCertificate>,
        right: Box<DecompCertificate>,
    },
    Substep {
        parent: Box<DecompCertificate>,
        steps: Vec<SubclutterStep>,
    },
}

impl DecompCertificate {
    pub fn complete(vertices: VertexSet) -> Self {
        DecompCertificate::Complete { vertices }
    }

    pub fn union(left: DecompCertificate, right: DecompCertificate) -> Self {
        DecompCertificate::Union {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn substep(parent: DecompCertificate, steps: SubclutterSteps) -> Self {
        DecompCertificate::Substep {
            parent: Box::new(parent),
            steps: steps.steps,
        }
    }

    /// Rebuilds the clutter the certificate describes.
    pub fn build(&self, n: usize, d: usize) -> std::result::Result<UniformClutter, Rejection> {
        self.build_at(n, d, "root")
    }

    fn build_at(
        &self,
        n: usize,
        d: usize,
        path: &str,
    ) -> std::result::Result<UniformClutter, Rejection> {
        let reject = |rule: &str, reason: String| Rejection {
            path: path.to_string(),
            rule: rule.to_string(),
            reason,
        };
        match self {
            DecompCertificate::Complete { vertices } => UniformClutter::complete_on(n, d, *vertices)
                .map_err(|e| reject("complete", e.to_string())),
            DecompCertificate::Union { left, right } => {
                let l = left.build_at(n, d, &format!("{path}.left"))?;
                let r = right.build_at(n, d, &format!("{path}.right"))?;
                glue(&l, &r).map_err(|e| reject("union", e.to_string()))
            }
            DecompCertificate::Substep { parent, steps } => {
                let p = parent.build_at(n, d, &format!("{path}.parent"))?;
                let out = apply_subclutter_steps(&p, &SubclutterSteps::new(steps.clone()))
                    .map_err(|e| reject("substep", e.to_string()))?;
                if out == p {
                    return Err(reject("substep", "steps remove no circuit".into()));
                }
                Ok(out)
            }
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            DecompCertificate::Complete { .. } => 1,
            DecompCertificate::Union { left, right } => 1 + left.size() + right.size(),
            DecompCertificate::Substep { parent, .. } => 1 + parent.size(),
        }
    }
}

/// Why a certificate failed: the node (e.g. `root.left.parent`), the rule applied there, and the reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub path: String,
    pub rule: String,
    pub reason: String,
}

impl std::fmt::Display for Rejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({}): {}", self.path, self.rule, self.reason)
    }
}

/// Checks that `cert` reconstructs exactly `c`, vertex set included.
pub fn verify_certificate(
    c: &UniformClutter,
    cert: &DecompCertificate,
) -> std::result::Result<(), Rejection> {
    let built = cert.build(c.n(), c.d())?;
    if built.vertices() != c.vertices() {
        return Err(Rejection {
            path: "root".into(),
            rule: "match".into(),
            reason: format!(
                "certificate builds vertex set {} but the clutter has {}",
                built.vertices(),
                c.vertices()
            ),
        });
    }
    if built.circuits() != c.circuits() {
        return Err(Rejection {
            path: "root".into(),
            rule: "match".into(),
            reason: format!("certificate builds {built} instead of {c}"),
        });
    }
    Ok(())
}

/// Preconditions of the glue rule.
pub fn check_glue(c1: &UniformClutter, c2: &UniformClutter) -> Result<()> {
    if c1.n() != c2.n() || c1.d() != c2.d() {
        return Err(Error::GlueRejected("different universe or uniformity".into()));
    }
    let (v1, v2) = (c1.vertices(), c2.vertices());
    if v1.is_subset(v2) || v2.is_subset(v1) {
        return Err(Error::GlueRejected(format!("vertex sets {v1} and {v2} are comparable")));
    }
    let s = v1 & v2;
    if !c1.is_clique(s) {
        return Err(Error::GlueRejected(format!("intersection {s} is not a clique in left")));
    }
    if !c2.is_clique(s) {
        return Err(Error::GlueRejected(format!("intersection {s} is not a clique in right")));
    }
    Ok(())
}

/// `C₁ ∪ C₂` on `V(C₁) ∪ V(C₂)`.
pub fn glue(c1: &UniformClutter, c2: &UniformClutter) -> Result<UniformClutter> {
    check_glue(c1, c2)?;
    let mut circuits = c1.circuits().to_vec();
    circuits.extend_from_slice(c2.circuits());
    Ok(UniformClutter::from_parts(
        c1.n(),
        c1.d(),
        c1.vertices() | c2.vertices(),
        circuits,
    ))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecompOptions {
    pub budget: Budget,
    /// Cap on the circuits re-added along one chain of parent steps; `None`
    /// leaves the chain unbounded so that a closed search is an exact refutation.
    pub max_readded: Option<usize>,
}


#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompVerdict {
    Decomposable(DecompCertificate),
    Refuted(Refutation),
    Exhausted,
}

/// The argument closing all three rules at the top level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    /// False when the parent-step bound cut off part of the search.
    pub exact: bool,
    pub log: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompReport {
    pub verdict: DecompVerdict,
    pub stats: SearchStats,
}

/// Decides decomposability by the exact recursion: `C` is decomposable iff it
/// is complete, or splits as a glue of two decomposable induced pieces, or is
/// a one-step simplicial subclutter of a decomposable `C ∪ A`.
///
/// One step suffices because dropping the last step of any simplicial-subclutter
/// derivation leaves a decomposable parent. Glue pieces shrink the vertex set and
/// parents grow towards the complete clutter, so the recursion terminates.
pub fn is_decomposable(c: &UniformClutter, options: DecompOptions) -> DecompReport {
    let mut search = DecompSearch {
        d: c.d(),
        n: c.n(),
        max_readded: options.max_readded,
        memo: HashMap::new(),
        bounded: false,
    };
    let mut meter = Meter::new(options.budget);
    let start = State {
        vertices: c.vertices(),
        circuits: c.circuits().to_vec(),
    };
    let verdict = match search.decide(&start, options.max_readded, &mut meter) {
        Ok(Some(cert)) => DecompVerdict::Decomposable(cert),
        Ok(None) => DecompVerdict::Refuted(Refutation {
            exact: !search.bounded,
            log: refutation_log(c, search.bounded, options.max_readded),
        }),
        Err(OutOfBudget) => DecompVerdict::Exhausted,
    };
    DecompReport {
        verdict,
        stats: meter.stats,
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct State {
    vertices: VertexSet,
    circuits: Vec<VertexSet>,
}

impl State {
    fn clutter(&self, n: usize, d: usize) -> UniformClutter {
        UniformClutter::from_parts(n, d, self.vertices, self.circuits.clone())
    }
}

struct DecompSearch {
    n: usize,
    d: usize,
    max_readded: Option<usize>,
    memo: HashMap<(State, Option<usize>), Option<DecompCertificate>>,
    bounded: bool,
}

impl DecompSearch {
    fn decide(
        &mut self,
        state: &State,
        allowance: Option<usize>,
        meter: &mut Meter,
    ) -> std::result::Result<Option<DecompCertificate>, OutOfBudget> {
        let key = (state.clone(), allowance);
        if let Some(r) = self.memo.get(&key) {
            meter.hit();
            return Ok(r.clone());
        }
        meter.tick()?;
        let c = state.clutter(self.n, self.d);
        let result = if c.is_complete() {
            Some(DecompCertificate::complete(state.vertices))
        } else if let Some(cert) = self.try_glue(&c, meter)? {
            Some(cert)
        } else {
            self.try_parents(&c, allowance, meter)?
        };
        self.memo.insert(key, result.clone());
        Ok(result)
    }

    fn try_glue(
        &mut self,
        c: &UniformClutter,
        meter: &mut Meter,
    ) -> std::result::Result<Option<DecompCertificate>, OutOfBudget> {
        for (v1, v2) in glue_splits(c) {
            let s1 = State {
                vertices: v1,
                circuits: c.induced(v1).circuits().to_vec(),
            };
            let s2 = State {
                vertices: v2,
                circuits: c.induced(v2).circuits().to_vec(),
            };
            let Some(left) = self.decide(&s1, self.max_readded, meter)? else {
                continue;
            };
            let Some(right) = self.decide(&s2, self.max_readded, meter)? else {
                continue;
            };
            return Ok(Some(DecompCertificate::union(left, right)));
        }
        Ok(None)
    }

    fn try_parents(
        &mut self,
        c: &UniformClutter,
        allowance: Option<usize>,
        meter: &mut Meter,
    ) -> std::result::Result<Option<DecompCertificate>, OutOfBudget> {
        for (e, addable) in single_step_candidates(c) {
            // Non-empty subsets of the addable circuits, largest first.
            let mut subsets: Vec<u32> = (1..1u32 << addable.len()).collect();
            subsets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
            for s in subsets {
                let added: Vec<VertexSet> = addable
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| s & (1 << k) != 0)
                    .map(|(_, &f)| f)
                    .collect();
                let next_allowance = match allowance {
                    Some(a) if added.len() > a => {
                        self.bounded = true;
                        continue;
                    }
                    Some(a) => Some(a - added.len()),
                    None => None,
                };
                let parent = c.with_circuits(&added).expect("added circuits are valid");
                if !parent.is_simplicial(e).expect("e has size d - 1") {
                    continue;
                }
                let state = State {
                    vertices: parent.vertices(),
                    circuits: parent.circuits().to_vec(),
                };
                if let Some(pc) = self.decide(&state, next_allowance, meter)? {
                    let mut removed = added;
                    removed.sort_unstable();
                    let step = SubclutterSteps::new(vec![SubclutterStep { e, removed }]);
                    return Ok(Some(merge_substep(pc, step)));
                }
            }
        }
        Ok(None)
    }
}

/// Folds consecutive substeps into one node.
fn merge_substep(parent: DecompCertificate, step: SubclutterSteps) -> DecompCertificate {
    match parent {
        DecompCertificate::Substep { parent, mut steps } => {
            steps.extend(step.steps);
            DecompCertificate::Substep { parent, steps }
        }
        other => DecompCertificate::substep(other, step),
    }
}

/// All `(V₁, V₂)` with `V₁ ∪ V₂ = V`, incomparable, `V₁ ∩ V₂` a clique, and
/// every circuit inside `V₁` or `V₂`.
///
/// With `S = V₁ ∩ V₂` fixed, no circuit may meet both `V₁ \ S` and `V₂ \ S`,
/// so these are unions of components of the co-occurrence graph on `V \ S`.
fn glue_splits(c: &UniformClutter) -> Vec<(VertexSet, VertexSet)> {
    let v = c.vertices();
    let mut out = Vec::new();
    for s in v.subsets() {
        if s.len() + 2 > v.len() || !c.is_clique(s) {
            continue;
        }
        let comps = components(c, v - s);
        if comps.len() < 2 {
            continue;
        }
        // Component 0 always goes left, which skips mirrored splits.
        for mask in 0..(1u64 << (comps.len() - 1)) - 1 {
            let mut left = s | comps[0];
            let mut right = s;
            for (k, &comp) in comps.iter().enumerate().skip(1) {
                if mask & (1 << (k - 1)) != 0 {
                    left = left | comp;
                } else {
                    right = right | comp;
                }
            }
            out.push((left, right));
        }
    }
    out
}

/// Components of `rest` where two vertices are joined when some circuit holds both.
fn components(c: &UniformClutter, rest: VertexSet) -> Vec<VertexSet> {
    let mut comps: Vec<VertexSet> = rest.iter().map(VertexSet::singleton).collect();
    for &f in c.circuits() {
        let touched = f & rest;
        if touched.len() < 2 {
            continue;
        }
        let (hit, keep): (Vec<VertexSet>, Vec<VertexSet>) =
            comps.into_iter().partition(|comp| !comp.is_disjoint(touched));
        comps = keep;
        comps.push(hit.into_iter().fold(VertexSet::EMPTY, |a, b| a | b));
    }
    comps.sort();
    comps
}

/// For each `(d-1)`-set `e`, the missing circuits `F ⊃ e` for which `e` is
/// simplicial over `C ∪ {F}`. Any one-step parent `C ∪ A` through `e` has `A`
/// inside this list, since removing circuits through `e` keeps `e` simplicial.
fn single_step_candidates(c: &UniformClutter) -> Vec<(VertexSet, Vec<VertexSet>)> {
    let mut out = Vec::new();
    for e in c.vertices().subsets_of_size(c.d() - 1) {
        let addable: Vec<VertexSet> = (c.vertices() - e)
            .iter()
            .map(|v| e.with(v))
            .filter(|&f| !c.contains(f))
            .filter(|&f| {
                c.with_circuits(&[f])
                    .map(|p| p.is_simplicial(e).unwrap_or(false))
                    .unwrap_or(false)
            })
            .collect();
        if !addable.is_empty() {
            out.push((e, addable));
        }
    }
    out
}

fn refutation_log(c: &UniformClutter, bounded: bool, max_readded: Option<usize>) -> Vec<String> {
    let mut log = vec![format!(
        "rule (i): not complete, {} of {} circuits present on {}",
        c.len(),
        crate::vertex_set::binomial(c.vertices().len(), c.d()),
        c.vertices()
    )];
    let splits = glue_splits(c);
    if splits.is_empty() {
        log.push("rule (ii): no clique separator splits the vertex set".into());
    } else {
        log.push(format!(
            "rule (ii): {} glue splits examined, none with both pieces decomposable",
            splits.len()
        ));
    }
    let candidates = single_step_candidates(c);
    if candidates.is_empty() {
        log.push(
            "rule (iii): no (e, F) with F a missing circuit containing e and e simplicial over C ∪ {F}; no last step exists"
                .into(),
        );
    } else {
        let pairs: usize = candidates.iter().map(|(_, a)| a.len()).sum();
        log.push(format!(
            "rule (iii): {pairs} (e, F) last-step candidates, no parent decomposable"
        ));
    }
    if bounded {
        log.push(format!(
            "parent chains were capped at {} re-added circuits; the refutation holds only up to that bound",
            max_readded.unwrap_or(0)
        ));
    }
    log
}

/// A random decomposable clutter on `[n]` with a certificate, deterministic in `seed`.
pub fn random_decomposable(n: usize, d: usize, seed: u64) -> Result<(UniformClutter, DecompCertificate)> {
    if d < 2 || n < d {
        return Err(Error::InvalidArgument(format!("need n ≥ d ≥ 2, got n={n}, d={d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (c, cert) = random_on(n, d, VertexSet::full(n), 0, &mut rng);
    debug_assert!(verify_certificate(&c, &cert).is_ok());
    Ok((c, cert))
}

fn random_on(
    n: usize,
    d: usize,
    v: VertexSet,
    depth: usize,
    rng: &mut ChaCha8Rng,
) -> (UniformClutter, DecompCertificate) {
    let (mut c, mut cert) = random_glue(n, d, v, depth, rng).unwrap_or_else(|| {
        let c = UniformClutter::complete_on(n, d, v).expect("vertex set within [n]");
        (c, DecompCertificate::complete(v))
    });
    if rng.gen_bool(0.7) {
        let mut steps = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            let simp = c.simplicial_maximal_subcircuits();
            let Some(&e) = simp.choose(rng) else { break };
            let through: Vec<VertexSet> =
                c.circuits().iter().copied().filter(|f| e.is_subset(*f)).collect();
            let mut removed: Vec<VertexSet> =
                through.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            if removed.is_empty() {
                removed.push(*through.choose(rng).expect("e is a maximal subcircuit"));
            }
            c = c.without_circuits(&removed);
            steps.push(SubclutterStep { e, removed });
        }
        if !steps.is_empty() {
            cert = merge_substep(cert, SubclutterSteps::new(steps));
        }
    }
    (c, cert)
}

fn random_glue(
    n: usize,
    d: usize,
    v: VertexSet,
    depth: usize,
    rng: &mut ChaCha8Rng,
) -> Option<(UniformClutter, DecompCertificate)> {
    if v.len() < 3 || depth >= 3 || rng.gen_bool(0.35) {
        return None;
    }
    let mut verts = v.to_vec();
    verts.shuffle(rng);
    let s_len = rng.gen_range(0..=d.min(v.len() - 2));
    let s = VertexSet::of(&verts[..s_len]);
    let rest = &verts[s_len..];
    let cut = rng.gen_range(1..rest.len());
    let v1 = s | VertexSet::of(&rest[..cut]);
    let v2 = s | VertexSet::of(&rest[cut..]);
    let (c1, cert1) = random_on(n, d, v1, depth + 1, rng);
    let (c2, cert2) = random_on(n, d, v2, depth + 1, rng);
    let c = glue(&c1, &c2).ok()?;
    Some((c, DecompCertificate::union(cert1, cert2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn vs(v: &[u32]) -> VertexSet {
        VertexSet::of(v)
    }

    #[test]
    fn published_glue_certificate_verifies() {
        let cert = catalog::figure3_certificate();
        assert_eq!(verify_certificate(&catalog::figure3(), &cert), Ok(()));
        let k7 = UniformClutter::complete(7, 3).unwrap();
        assert_eq!(verify_certificate(&k7, &cert).unwrap_err().rule, "match");
        let small = verify_certificate(&catalog::figure2_d(), &cert).unwrap_err();
        assert_eq!((small.path.as_str(), small.rule.as_str()), ("root.right", "complete"));
    }

    #[test]
    fn complete_leaf_verifies() {
        let k = UniformClutter::complete(5, 3).unwrap();
        assert!(verify_certificate(&k, &DecompCertificate::complete(VertexSet::full(5))).is_ok());
    }

    #[test]
    fn rejections_name_the_node() {
        let bad = DecompCertificate::union(
            DecompCertificate::complete(vs(&[1, 2, 3, 4])),
            DecompCertificate::complete(vs(&[2, 3, 4, 5])),
        );
        let c = UniformClutter::complete(5, 3).unwrap();
        // {2,3,4} is a clique in both, so this glue is legal but builds the wrong clutter.
        assert_eq!(verify_certificate(&c, &bad).unwrap_err().rule, "match");
        let inner = DecompCertificate::substep(
            DecompCertificate::complete(vs(&[1, 2, 3, 4])),
            SubclutterSteps::from_pairs(vec![(vs(&[2, 3]), vec![vs(&[1, 2, 4])])]),
        );
        let nested = DecompCertificate::union(DecompCertificate::complete(vs(&[4, 5, 6])), inner);
        let err = nested.build(6, 3).unwrap_err();
        assert_eq!(err.path, "root.right");
        assert_eq!(err.rule, "substep");
        let noop = DecompCertificate::substep(
            DecompCertificate::complete(vs(&[1, 2, 3])),
            SubclutterSteps::from_pairs(vec![(vs(&[1, 2]), vec![])]),
        );
        assert_eq!(noop.build(3, 3).unwrap_err().rule, "substep");
    }

    #[test]
    fn glue_examples() {
        let k7 = UniformClutter::complete(7, 3).unwrap();
        let c1 = k7.induced(vs(&[1, 2, 3, 4])).without_circuits(&[vs(&[2, 3, 4])]);
        let c2 = k7.induced(vs(&[4, 5, 6, 7]));
        assert_eq!(glue(&c1, &c2).unwrap(), catalog::figure3());
        let k5 = UniformClutter::complete(5, 3).unwrap();
        let u1 = k5.induced(vs(&[1, 2, 3, 4]));
        let u2 = k5.induced(vs(&[1, 2, 4, 5]));
        assert_eq!(glue(&u1, &u2).unwrap().len(), 7);
        let disjoint = glue(&k7.induced(vs(&[1, 2, 3])), &k7.induced(vs(&[4, 5, 6]))).unwrap();
        assert_eq!(disjoint.len(), 2);
        assert!(matches!(glue(&u1, &u1), Err(Error::GlueRejected(_))));
        let holed = u1.without_circuits(&[vs(&[1, 2, 4])]);
        assert!(glue(&holed, &u2).is_err());
    }

    #[test]
    fn umbrella_printed_construction_verifies() {
        assert_eq!(verify_certificate(&catalog::umbrella(), &catalog::umbrella_certificate()), Ok(()));
    }

    #[test]
    fn recognition_of_worked_examples() {
        for c in [catalog::figure3(), catalog::umbrella(), catalog::ex2(), catalog::figure2_c()] {
            let r = is_decomposable(&c, DecompOptions::default());
            match r.verdict {
                DecompVerdict::Decomposable(cert) => {
                    assert_eq!(verify_certificate(&c, &cert), Ok(()))
                }
                other => panic!("{c}: {other:?}"),
            }
        }
    }

    #[test]
    fn non_decomposable_example_is_refuted_exactly() {
        let r = is_decomposable(&catalog::ex_lq_not_decomposable(), DecompOptions::default());
        let DecompVerdict::Refuted(refutation) = r.verdict else {
            panic!("expected a refutation, got {:?}", r.verdict);
        };
        assert!(refutation.exact);
        assert!(refutation.log.iter().any(|l| l.contains("no last step exists")));
        assert!(refutation.log.iter().any(|l| l.contains("no clique separator")));
    }

    #[test]
    fn non_chordal_five_vertex_clutter_is_not_decomposable() {
        let r = is_decomposable(&catalog::figure2_d(), DecompOptions::default());
        assert!(matches!(r.verdict, DecompVerdict::Refuted(_)));
    }

    #[test]
    fn tiny_budget_exhausts() {
        let opts = DecompOptions {
            budget: Budget::nodes(1),
            max_readded: None,
        };
        assert_eq!(
            is_decomposable(&catalog::figure2_d(), opts).verdict,
            DecompVerdict::Exhausted
        );
    }

    #[test]
    fn random_generation_is_deterministic_and_verifies() {
        for seed in 0..60 {
            for (n, d) in [(5, 2), (6, 3), (7, 3), (6, 4)] {
                let (c, cert) = random_decomposable(n, d, seed).unwrap();
                assert_eq!(verify_certificate(&c, &cert), Ok(()), "seed {seed}");
                assert_eq!(random_decomposable(n, d, seed).unwrap(), (c, cert));
            }
        }
        assert!(random_decomposable(2, 3, 0).is_err());
    }

    #[test]
    fn random_decomposable_complements_have_linear_quotients() {
        use crate::ideals::{find_linear_quotients_order, OrderedIdeal};
        for seed in 0..40 {
            let (c, _) = random_decomposable(6, 3, seed).unwrap();
            let i = OrderedIdeal::circuit_ideal(&c.complement());
            let r = find_linear_quotients_order(&i, Budget::default());
            assert!(r.outcome.is_found(), "seed {seed}: {c}");
        }
    }

    #[test]
    fn glue_of_verified_certificates_verifies() {
        let widen = |c: &UniformClutter, by: u32| {
            let sh = |s: VertexSet| VertexSet::of(&s.iter().map(|v| v + by).collect::<Vec<_>>());
            UniformClutter::on_vertices(7, 3, sh(c.vertices()), c.circuits().iter().map(|&f| sh(f)))
                .unwrap()
        };
        for seed in 0..40 {
            let (a, ca) = random_decomposable(4, 3, seed).unwrap();
            let (b, cb) = random_decomposable(4, 3, seed + 1000).unwrap();
            // b moves onto {4,5,6,7}, sharing only vertex 4 with a.
            let glued = glue(&widen(&a, 0), &widen(&b, 3)).unwrap();
            let cert = DecompCertificate::union(ca, shift_cert(&cb, 3));
            assert_eq!(verify_certificate(&glued, &cert), Ok(()));
        }
    }

    fn shift_cert(c: &DecompCertificate, by: u32) -> DecompCertificate {
        let sh = |s: VertexSet| VertexSet::of(&s.iter().map(|v| v + by).collect::<Vec<_>>());
        match c {
            DecompCertificate::Complete { vertices } => DecompCertificate::complete(sh(*vertices)),
            DecompCertificate::Union { left, right } => {
                DecompCertificate::union(shift_cert(left, by), shift_cert(right, by))
            }
            DecompCertificate::Substep { parent, steps } => DecompCertificate::Substep {
                parent: Box::new(shift_cert(parent, by)),
                steps: steps
                    .iter()
                    .map(|s| SubclutterStep {
                        e: sh(s.e),
                        removed: s.removed.iter().map(|&f| sh(f)).collect(),
                    })
                    .collect(),
            },
        }
    }

    #[test]
    fn certificate_json_shape() {
        let cert = catalog::figure3_certificate();
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["kind"], "union");
        assert_eq!(json["left"]["kind"], "substep");
        assert_eq!(json["left"]["parent"]["vertices"], serde_json::json!([1, 2, 3, 4]));
        assert_eq!(json["left"]["steps"][0]["A"], serde_json::json!([[2, 3, 4]]));
        let back: DecompCertificate = serde_json::from_value(json).unwrap();
        assert_eq!(back, cert);
    }
}
