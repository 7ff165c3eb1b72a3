//! Monomial ideals, symbolic powers of edge ideals and their
//! Castelnuovo-Mumford regularity.
//!
//! Regularity is computed from degree complexes ([`regularity::reg_takayama`])
//! and cross-checked against a Koszul-complex Betti oracle
//! ([`regularity::betti_oracle`]). The [`harness`] module runs the graph
//! census and the closed-form checks on top of these.

pub mod complex;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod ideal;
pub mod linalg;
pub mod regularity;
pub mod symbolic;

/// Variable sets are `u32` bitmasks and face sets are bitsets over `2^n`.
pub const MAX_VARS: usize = 16;

pub use complex::{complex_of_ideal, ideal_of_complex, CombineMode, ComplexKind, HomologyProfile, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use ideal::{minimalize, Exponent, IdealKind, Monomial, MonomialIdeal, VarSet};
pub use linalg::{PrimeField, DEFAULT_PRIME};
pub use regularity::{
    betti_oracle, betti_table, degree_complex, gamma_exponents, reg_betti, reg_takayama, BettiTable,
    RegularityCertificate, TakayamaResult,
};
pub use symbolic::{differential_member, expansion, fourth_closure, minimal_primes, symbolic_power};
