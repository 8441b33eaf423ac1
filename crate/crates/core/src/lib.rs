//! Finite-group computations around order-dividing bijections.
//!
//! A bijection `f: G -> C` between groups of equal order is *order dividing*
//! when the order of every `g` divides the order of `f(g)`. This crate
//! provides:
//!
//! * normal-form arithmetic, element orders and order spectra for cyclic,
//!   dihedral, direct-product-of-cyclic and generalized quaternion groups
//!   ([`group`], [`spectrum`]);
//! * the explicit linear maps `D_2n -> Z_2n` and `Z_p x Z_kp -> Z_kp^2`
//!   together with an element-by-element verifier ([`maps`]);
//! * a spectrum-level existence decision via integral max-flow, with
//!   certificates and an independent backtracking oracle ([`existence`]);
//! * an exhaustive search over swapped coefficient pairs on dihedral groups
//!   ([`conjecture`]);
//! * serialization of every report as fixed-width tables, CSV or JSON
//!   ([`render`]).

pub mod arith;
pub mod conjecture;
pub mod error;
pub mod existence;
mod flow;
pub mod group;
pub mod maps;
pub mod render;
pub mod spectrum;

pub use error::{Error, Result};
pub use group::{Element, Family, GroupSpec};
pub use maps::{ComparisonMode, LinearMapSpec, VerificationReport};
pub use spectrum::OrderSpectrum;

/// Default cap on the number of elements any enumeration may visit.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;
