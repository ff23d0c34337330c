//! Operator systems of tolerance relations on finite point sets.
//!
//! A tolerance relation is a reflexive, symmetric (not necessarily
//! transitive) relation on a set. The matrices supported on such a relation
//! form a non-unital operator system inside the full matrix algebra. This
//! crate builds those systems for finite point sets and computes their
//! invariants:
//!
//! - combinatorial algebra of relations: composition, closure, diameter,
//!   and construction from finite metrics ([`relation`]);
//! - the support-constrained matrix subspace, its positivity cones and
//!   product-span oracles ([`opsys`]);
//! - propagation number and enveloping-algebra block structure, with the
//!   band and circulant example families ([`invariants`]);
//! - the dual system: positive-semidefinite completions, trace-norm
//!   minimization, Jordan decomposition, and purity of restricted vector
//!   states ([`states`]);
//! - discrete metric laboratories: interval partitions, discretized
//!   circles, weighted-graph metrics, and the composition-law checker
//!   ([`metric`]).
//!
//! Every theorem-backed value computed here is paired with an independent
//! brute-force oracle; the [`verify`] module bundles those cross-checks
//! into runnable suites. The `tolsys` binary exposes everything on the
//! command line.

pub mod error;
pub mod invariants;
pub mod io;
pub mod metric;
pub mod opsys;
pub mod relation;
pub mod report;
pub mod states;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use relation::{BoolMatrix, FiniteMetric, Relation};
