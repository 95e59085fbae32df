use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::vertex_set::VertexSet;

/// A monomial `x₁^{a₁} ⋯ x_n^{a_n}` stored as its exponent vector.
///
/// Generator lists are sorted with [`Monomial::canonical_cmp`], under which
/// squarefree monomials of one degree sort like their supports.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    /// `x_i` for 1-based `i`.
    pub fn variable(n: usize, i: u32) -> Self {
        let mut m = Self::one(n);
        m.exponents[i as usize - 1] = 1;
        m
    }

    /// `x_F = ∏_{i ∈ F} x_i`.
    pub fn from_set(n: usize, f: VertexSet) -> Self {
        let mut m = Self::one(n);
        for v in f.iter() {
            m.exponents[v as usize - 1] = 1;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: u32) -> u32 {
        self.exponents[i as usize - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&a| a == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&a| a <= 1)
    }

    /// `supp(u) = {i : x_i | u}`.
    pub fn support(&self) -> VertexSet {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .fold(VertexSet::EMPTY, |s, (i, _)| s.with(i as u32 + 1))
    }

    /// The support, when the monomial is squarefree.
    pub fn as_set(&self) -> Option<VertexSet> {
        self.is_squarefree().then(|| self.support())
    }

    /// `m(u)`: the largest variable index dividing `u`.
    pub fn max_index(&self) -> Option<u32> {
        self.exponents
            .iter()
            .rposition(|&a| a > 0)
            .map(|p| p as u32 + 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    /// `u / gcd(u, v)`.
    pub fn quotient(&self, v: &Monomial) -> Monomial {
        self.zip_with(v, |a, b| a.saturating_sub(b))
    }

    /// `u / x_i`; `None` if `x_i ∤ u`.
    pub fn divide_variable(&self, i: u32) -> Option<Monomial> {
        let k = i as usize - 1;
        (self.exponents[k] > 0).then(|| {
            let mut m = self.clone();
            m.exponents[k] -= 1;
            m
        })
    }

    pub fn times_variable(&self, i: u32) -> Monomial {
        let mut m = self.clone();
        m.exponents[i as usize - 1] += 1;
        m
    }

    /// Lexicographic comparison with `x₁ > x₂ > ⋯ > x_n`.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exponents.cmp(&other.exponents)
    }

    /// Canonical generator order: degree ascending, then lex-larger first.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.lex_cmp(self))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &a) in self.exponents.iter().enumerate() {
            match a {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, a)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
