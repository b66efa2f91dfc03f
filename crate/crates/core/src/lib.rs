// Index loops over Cayley tables and index pairs (i != j, table[i][j] vs
// table[j][i]) mirror the algebraic identities they implement; iterator
// rewrites would obscure them.
#![allow(clippy::needless_range_loop)]

//! A toolkit for finite commutative semigroups with zero and their
//! zero-divisor graphs.
//!
//! The library is organized around one structural fact, exercised here as
//! executable code: a graph that is uniquely complemented, has exactly one
//! complement per vertex, and has clique number `n >= 3` is the
//! zero-divisor graph of the power set of an `n`-element set under
//! intersection — and the isomorphism can be computed, checked, and
//! inverted back into a multiplication table.
//!
//! - [`semigroup`] — validated Cayley tables, the power-set semigroups,
//!   zero-divisor sets, and a plain-text table format;
//! - [`zdgraph`] — zero-divisor graphs and the graph theory they need:
//!   orthogonality, complements, cores, exact maximum cliques, edge-list
//!   and DOT output;
//! - [`recognizer`] — the decision pipeline from bare graph to verified
//!   isomorphism, plus the reconstruction of the table and the equation
//!   suite tying the two sides together;
//! - [`enumerator`] — exhaustive and sampled generation of small
//!   semigroups, with the structural laws their graphs must satisfy;
//! - [`bits`] — the small fixed-capacity bit set used throughout.

pub mod bits;
pub mod enumerator;
pub mod recognizer;
pub mod semigroup;
pub mod zdgraph;

pub use recognizer::{recognize, recognize_capped, Diagnosis, Recognition};
pub use semigroup::{powerset_semigroup, CayleySemigroup};
pub use zdgraph::{zero_divisor_graph, Graph, ZdGraph};
