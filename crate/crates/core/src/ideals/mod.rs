//! Monomial ideals: colon ideals, linear quotients, explicit orders and recognizers.

mod ideal;
mod monomial;
mod orders;
mod recognizers;

pub use ideal::{find_linear_quotients_order, minimal_generators, LqCheck, OrderedIdeal};
pub use monomial::Monomial;
pub use orders::{glued_order, partition_order};
pub use recognizers::{
    is_matroidal, is_squarefree_lexsegment, is_squarefree_stable, is_squarefree_strongly_stable,
    Recognition, Violation,
};
