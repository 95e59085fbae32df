//! Squarefree stable, strongly stable, lexsegment and matroidal ideals.
//!
//! Each property is checked on the minimal generators only; membership is
//! divisibility by a generator. Every violation found is reported.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::OrderedIdeal;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// `x_added · (u / x_removed)` is not in the ideal.
    Exchange {
        generator: VertexSet,
        removed: u32,
        added: u32,
        image: VertexSet,
    },
    /// A squarefree monomial of the same degree, lex-larger than a generator, is missing.
    LexMissing {
        generator: VertexSet,
        missing: VertexSet,
    },
    /// No `x_j | v` with `x_j ∤ u` makes `x_j · (u / x_removed)` a member.
    NoMatroidExchange {
        generator: VertexSet,
        partner: VertexSet,
        removed: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recognition {
    pub holds: bool,
    pub violations: Vec<Violation>,
}

impl Recognition {
    fn from(violations: Vec<Violation>) -> Self {
        Recognition {
            holds: violations.is_empty(),
            violations,
        }
    }
}

/// Minimal squarefree generators as sets, plus a membership test.
struct Squarefree {
    gens: Vec<VertexSet>,
}

impl Squarefree {
    fn of(ideal: &OrderedIdeal) -> Result<Self> {
        let min = ideal.minimalized();
        let gens = min.sets().ok_or(Error::NotSquarefree)?;
        Ok(Squarefree { gens })
    }

    fn equigenerated(ideal: &OrderedIdeal) -> Result<Self> {
        let s = Self::of(ideal)?;
        if !ideal.is_equigenerated() {
            return Err(Error::NotEquigenerated);
        }
        Ok(s)
    }

    fn contains(&self, f: VertexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(f))
    }
}

/// For each generator `u` and `i < m(u)` with `x_i ∤ u`: `x_i (u / x_{m(u)}) ∈ I`.
pub fn is_squarefree_stable(ideal: &OrderedIdeal) -> Result<Recognition> {
    let sf = Squarefree::of(ideal)?;
    let mut out = Vec::new();
    for &u in &sf.gens {
        let Some(m) = u.max() else { continue };
        for i in (1..m).filter(|&i| !u.contains(i)) {
            let image = u.without(m).with(i);
            if !sf.contains(image) {
                out.push(Violation::Exchange {
                    generator: u,
                    removed: m,
                    added: i,
                    image,
                });
            }
        }
    }
    Ok(Recognition::from(out))
}

/// For each generator `u`, `x_j | u` and `i < j` with `x_i ∤ u`: `x_i (u / x_j) ∈ I`.
pub fn is_squarefree_strongly_stable(ideal: &OrderedIdeal) -> Result<Recognition> {
    let sf = Squarefree::of(ideal)?;
    let mut out = Vec::new();
    for &u in &sf.gens {
        for j in u.iter() {
            for i in (1..j).filter(|&i| !u.contains(i)) {
                let image = u.without(j).with(i);
                if !sf.contains(image) {
                    out.push(Violation::Exchange {
                        generator: u,
                        removed: j,
                        added: i,
                        image,
                    });
                }
            }
        }
    }
    Ok(Recognition::from(out))
}

/// For each generator `u` and squarefree `v` with `deg v = deg u` and `v ≥_lex u`: `v ∈ I`.
pub fn is_squarefree_lexsegment(ideal: &OrderedIdeal) -> Result<Recognition> {
    let sf = Squarefree::equigenerated(ideal)?;
    let mut out = Vec::new();
    let Some(&first) = sf.gens.first() else {
        return Ok(Recognition::from(out));
    };
    // For squarefree monomials of one degree, lex-larger means smaller as a sorted list.
    let all: Vec<VertexSet> = VertexSet::full(ideal.n())
        .subsets_of_size(first.len())
        .collect();
    for &u in &sf.gens {
        for &v in all.iter().filter(|&&v| v < u) {
            if !sf.contains(v) {
                out.push(Violation::LexMissing {
                    generator: u,
                    missing: v,
                });
            }
        }
    }
    Ok(Recognition::from(out))
}

/// For generators `u, v` and `x_i | u`, `x_i ∤ v`: some `x_j | v`, `x_j ∤ u`
/// has `x_j (u / x_i) ∈ I`.
pub fn is_matroidal(ideal: &OrderedIdeal) -> Result<Recognition> {
    let sf = Squarefree::equigenerated(ideal)?;
    let mut out = Vec::new();
    for &u in &sf.gens {
        for &v in &sf.gens {
            for i in (u - v).iter() {
                let ok = (v - u).iter().any(|j| sf.contains(u.without(i).with(j)));
                if !ok {
                    out.push(Violation::NoMatroidExchange {
                        generator: u,
                        partner: v,
                        removed: i,
                    });
                }
            }
        }
    }
    Ok(Recognition::from(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ideals::Monomial;

    fn sets(n: usize, s: &[&[u32]]) -> OrderedIdeal {
        let v: Vec<VertexSet> = s.iter().map(|x| VertexSet::of(x)).collect();
        OrderedIdeal::from_sets(n, &v).unwrap()
    }

    #[test]
    fn small_strongly_stable_lexsegment() {
        let i = sets(3, &[&[1, 2], &[1, 3]]);
        assert!(is_squarefree_strongly_stable(&i).unwrap().holds);
        assert!(is_squarefree_stable(&i).unwrap().holds);
        assert!(is_squarefree_lexsegment(&i).unwrap().holds);
        let gap = sets(3, &[&[1, 3]]);
        assert!(!is_squarefree_lexsegment(&gap).unwrap().holds);
    }

    #[test]
    fn twelve_circuit_example_is_neither_stable_nor_matroidal() {
        let i = OrderedIdeal::circuit_ideal(&catalog::ex2().complement());
        let stable = is_squarefree_stable(&i).unwrap();
        assert!(!stable.holds);
        assert!(stable.violations.contains(&Violation::Exchange {
            generator: VertexSet::of(&[3, 5, 6]),
            removed: 6,
            added: 1,
            image: VertexSet::of(&[1, 3, 5]),
        }));
        assert!(!is_matroidal(&i).unwrap().holds);
        assert!(!is_squarefree_strongly_stable(&i).unwrap().holds);
        assert!(!is_squarefree_lexsegment(&i).unwrap().holds);
    }

    #[test]
    fn input_checks() {
        let sq = OrderedIdeal::new(2, vec![Monomial::new(vec![2, 0])]).unwrap();
        assert_eq!(is_squarefree_stable(&sq), Err(Error::NotSquarefree));
        let mixed = sets(3, &[&[1], &[2, 3]]);
        assert_eq!(is_matroidal(&mixed), Err(Error::NotEquigenerated));
        assert!(is_squarefree_stable(&mixed).is_ok());
    }

    #[test]
    fn matroidal_example() {
        // Squarefree Veronese ideals are matroidal.
        let all: Vec<VertexSet> = VertexSet::full(5).subsets_of_size(2).collect();
        let i = OrderedIdeal::from_sets(5, &all).unwrap();
        assert!(is_matroidal(&i).unwrap().holds);
        let path = sets(4, &[&[1, 2], &[3, 4]]);
        assert!(!is_matroidal(&path).unwrap().holds);
    }
}
