//! Explicit linear-quotients orders for the complement ideals of glued clutters.

use std::cmp::Reverse;

use crate::clutter::UniformClutter;
use crate::decomposable::check_glue;
use crate::error::{Error, Result};
use crate::ideals::{Monomial, OrderedIdeal};
use crate::vertex_set::VertexSet;

/// The squarefree degree-`d` monomials on `N₁ ∪ N₂ ∪ N₃` meeting both `N₁`
/// and `N₂`, in an order with linear quotients.
///
/// After relabelling so that `N₁ < N₂ < N₃` (keeping the order inside each
/// part), a monomial with `d - l` variables in `N₁` and `l'` in `N₂` lies in
/// block `(l, l')`. Blocks come in increasing `(l, l')`; inside a block,
/// monomials increase lexicographically for `x₁ > ⋯ > x_n` in the relabelled
/// variables. Generators keep their original labels.
pub fn partition_order(
    n: usize,
    d: usize,
    n1: VertexSet,
    n2: VertexSet,
    n3: VertexSet,
) -> Result<OrderedIdeal> {
    if !n1.is_disjoint(n2) || !n1.is_disjoint(n3) || !n2.is_disjoint(n3) {
        return Err(Error::InvalidPartition("parts must be pairwise disjoint".into()));
    }
    let all = n1 | n2 | n3;
    if all.max_vertex() > n {
        return Err(Error::InvalidPartition(format!("parts must lie in [1, {n}]")));
    }
    if d == 0 {
        return Err(Error::InvalidPartition("degree must be positive".into()));
    }
    let relabel: Vec<u32> = n1.iter().chain(n2.iter()).chain(n3.iter()).collect();
    let rank = |v: u32| relabel.iter().position(|&w| w == v).unwrap();
    type Keyed = ((usize, usize), Reverse<Vec<usize>>, VertexSet);
    let mut keyed: Vec<Keyed> = all
        .subsets_of_size(d)
        .filter(|f| !f.is_disjoint(n1) && !f.is_disjoint(n2))
        .map(|f| {
            let l = d - (f & n1).len();
            let l2 = (f & n2).len();
            let mut ranks: Vec<usize> = f.iter().map(rank).collect();
            ranks.sort_unstable();
            // Smaller rank lists are lex-larger monomials, so reverse them.
            ((l, l2), Reverse(ranks), f)
        })
        .collect();
    keyed.sort();
    OrderedIdeal::new(
        n,
        keyed
            .into_iter()
            .map(|(_, _, f)| Monomial::from_set(n, f))
            .collect(),
    )
}

/// Order for `I(C̄)` where `C = C₁ ∪ C₂` is glued over the clique `V(C₁) ∩ V(C₂)`:
/// the block of sets meeting both private parts, then `order1`, then `order2`.
///
/// `order1` and `order2` must list the minimal generators of `I(C̄₁)` and
/// `I(C̄₂)`, complements taken inside `V(C₁)` and `V(C₂)`.
pub fn glued_order(
    c1: &UniformClutter,
    c2: &UniformClutter,
    order1: &OrderedIdeal,
    order2: &OrderedIdeal,
) -> Result<OrderedIdeal> {
    check_glue(c1, c2)?;
    for (c, order) in [(c1, order1), (c2, order2)] {
        let expected = OrderedIdeal::circuit_ideal(&c.complement()).minimalized();
        if order.minimalized() != expected || order.len() != expected.len() {
            return Err(Error::InvalidArgument(
                "order does not list the complement ideal's generators".into(),
            ));
        }
    }
    let (v1, v2) = (c1.vertices(), c2.vertices());
    let t = partition_order(c1.n(), c1.d(), v1 - v2, v2 - v1, v1 & v2)?;
    let gens = t
        .generators()
        .iter()
        .chain(order1.generators())
        .chain(order2.generators())
        .cloned()
        .collect();
    OrderedIdeal::new(c1.n(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ideals::find_linear_quotients_order;
    use crate::search::Budget;

    fn vs(v: &[u32]) -> VertexSet {
        VertexSet::of(v)
    }

    #[test]
    fn partition_order_small_cases() {
        let i = partition_order(4, 2, vs(&[1, 2]), vs(&[3, 4]), VertexSet::EMPTY).unwrap();
        let got: Vec<VertexSet> = i.sets().unwrap();
        assert_eq!(got, vec![vs(&[2, 4]), vs(&[2, 3]), vs(&[1, 4]), vs(&[1, 3])]);
        assert!(i.has_linear_quotients_in_order());
        let single = partition_order(2, 2, vs(&[1]), vs(&[2]), VertexSet::EMPTY).unwrap();
        assert_eq!(single.sets().unwrap(), vec![vs(&[1, 2])]);
        let with_n3 = partition_order(3, 2, vs(&[1]), vs(&[2]), vs(&[3])).unwrap();
        assert_eq!(with_n3.sets().unwrap(), vec![vs(&[1, 2])]);
        assert!(partition_order(3, 2, vs(&[1, 2]), vs(&[2]), VertexSet::EMPTY).is_err());
    }

    #[test]
    fn partition_order_is_exhaustively_valid() {
        // Every assignment of up to 7 vertices to N1, N2, N3 or unused, d ≤ 4.
        for n in 0..=7usize {
            for code in 0..4u32.pow(n as u32) {
                let mut parts = [VertexSet::EMPTY; 3];
                let mut c = code;
                for v in 1..=n as u32 {
                    if c % 4 < 3 {
                        parts[(c % 4) as usize] = parts[(c % 4) as usize].with(v);
                    }
                    c /= 4;
                }
                for d in 2..=4 {
                    let i = partition_order(n, d, parts[0], parts[1], parts[2]).unwrap();
                    assert!(
                        i.has_linear_quotients_in_order(),
                        "N1={} N2={} N3={} d={d}",
                        parts[0],
                        parts[1],
                        parts[2]
                    );
                }
            }
        }
    }

    fn lq_order(c: &UniformClutter) -> OrderedIdeal {
        let i = OrderedIdeal::circuit_ideal(&c.complement());
        let r = find_linear_quotients_order(&i, Budget::default());
        i.reordered(r.outcome.found().unwrap()).unwrap()
    }

    #[test]
    fn glued_order_for_two_glued_tetrahedra() {
        let k7 = UniformClutter::complete(7, 3).unwrap();
        let c1 = k7.induced(vs(&[1, 2, 3, 4])).without_circuits(&[vs(&[2, 3, 4])]);
        let c2 = k7.induced(vs(&[4, 5, 6, 7]));
        let (o1, o2) = (lq_order(&c1), lq_order(&c2));
        assert!(o2.is_zero());
        let g = glued_order(&c1, &c2, &o1, &o2).unwrap();
        assert!(g.has_linear_quotients_in_order());
        let whole = OrderedIdeal::circuit_ideal(&catalog::figure3().complement());
        assert_eq!(g.minimalized(), whole);
        assert_eq!(g.len(), whole.len());
    }

    #[test]
    fn restricting_a_glued_order_keeps_linear_quotients() {
        let k = UniformClutter::complete(5, 3).unwrap();
        let c1 = k.induced(vs(&[1, 2, 3, 4]));
        let c1 = c1.without_circuits(&[vs(&[2, 3, 4])]);
        let c2 = k.induced(vs(&[3, 4, 5]));
        let g = glued_order(&c1, &c2, &lq_order(&c1), &lq_order(&c2)).unwrap();
        assert!(g.has_linear_quotients_in_order());
        let own: Vec<Monomial> = OrderedIdeal::circuit_ideal(&c1.complement())
            .generators()
            .to_vec();
        let restricted: Vec<Monomial> = g
            .generators()
            .iter()
            .filter(|u| own.contains(u))
            .cloned()
            .collect();
        assert!(OrderedIdeal::new(5, restricted).unwrap().has_linear_quotients_in_order());
    }

    #[test]
    fn glue_preconditions_are_enforced() {
        let k = UniformClutter::complete(4, 3).unwrap();
        let a = k.induced(vs(&[1, 2, 3]));
        let z = OrderedIdeal::zero(4);
        assert!(glued_order(&a, &k, &z, &z).is_err());
    }
}
