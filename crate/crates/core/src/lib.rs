//! Neutrosophic entropy and its seven-component decomposition.
//!
//! A neutrosophic triple `(mu, omega, nu)` holds degrees of truth,
//! neutrality and falsity, each in `[0, 1]`. This crate computes
//!
//! - the derived indices: net truth, ignorance, contradiction, ambiguity
//!   ([`triple`]);
//! - two entropy variants built from the Czekanowski and Ruzicka
//!   similarities, and their classical special cases ([`entropy`]);
//! - the partition of each triple into truth, falsity, ambiguity,
//!   ignorance, contradiction, neutrality and saturation, which sum to 1
//!   ([`decomposition`]);
//! - dataset I/O, grid sweeps and PPM heatmaps ([`io`]), a seeded invariant
//!   checker ([`check`]) and the `neutro` CLI ([`cli`]).
//!
//! ```
//! use neutrosophic::{decompose, entropy_value, EntropyVariant, NeutrosophicTriple};
//!
//! let t = NeutrosophicTriple::new(0.8, 0.2, 0.1).unwrap();
//! let e = entropy_value(&t, EntropyVariant::Ruzicka);
//! assert!((e - 0.3).abs() < 1e-12);
//!
//! let h = decompose(&t, EntropyVariant::Ruzicka);
//! assert!((h.sum() - 1.0).abs() < 1e-12);
//! assert!((h.uncertainty() - e).abs() < 1e-12);
//! ```

pub mod check;
pub mod cli;
pub mod decomposition;
pub mod entropy;
pub mod io;
pub mod triple;

pub use decomposition::{
    decompose, decompose_by_cases, reduced_partition, Component, ConstructionCase,
    DecompositionError, HeptaDecomposition, ReducedPartition,
};
pub use entropy::{
    distances, entropy, entropy_reduced, entropy_reduced_with, entropy_value, EntropyBreakdown,
    EntropyVariant, ReductionError,
};
pub use triple::{
    classify, derive_indices, DerivedIndices, DomainError, Field, InformationKind,
    NeutrosophicTriple, Tolerance,
};
