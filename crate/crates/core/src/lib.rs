//! Uniform clutters, chordality, decomposability, linear quotients,
//! graded Betti numbers and shellability of simplicial complexes.
//!
//! ```
//! use clutterkit::catalog;
//! use clutterkit::chordality::{is_chordal, ChordalMode};
//! use clutterkit::decomposable::{is_decomposable, verify_certificate, DecompOptions, DecompVerdict};
//! use clutterkit::ideals::{find_linear_quotients_order, OrderedIdeal};
//! use clutterkit::search::Budget;
//!
//! let c = catalog::umbrella();
//! assert!(is_chordal(&c, ChordalMode::Complete, Budget::default()).verdict.is_chordal());
//! let DecompVerdict::Decomposable(cert) = is_decomposable(&c, DecompOptions::default()).verdict else {
//!     panic!("the umbrella is decomposable");
//! };
//! assert!(verify_certificate(&c, &cert).is_ok());
//! let ideal = OrderedIdeal::circuit_ideal(&c.complement());
//! assert!(find_linear_quotients_order(&ideal, Budget::default()).outcome.is_found());
//! ```

pub mod bitmask;
pub mod catalog;
pub mod chordality;
pub mod cli;
pub mod clutter;
pub mod complex;
pub mod decomposable;
pub mod error;
pub mod ideals;
pub mod quasiforest;
pub mod resolution;
pub mod search;
pub mod shelling;
pub mod vertex_set;

pub use clutter::UniformClutter;
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use vertex_set::VertexSet;
