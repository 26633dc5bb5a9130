//! Zero-sum directed cycles in labelled complete digraphs, and the
//! independent-matching machinery behind them.
//!
//! A complete digraph whose arcs carry vectors from `Z_p^d` always contains a
//! directed cycle with label sum zero once it has enough vertices. This crate
//! implements the constructive route to such a cycle:
//!
//! * [`gf`] — exact arithmetic and linear algebra over `Z_p^d`,
//! * [`matroid`] — independence oracles (linear, free, direct sums),
//! * [`hypergraph`] — multi-hypergraphs with matroid-labelled hyperedges,
//! * [`matching`] — maximal independent matchings, the exchange/peel step,
//!   spanning matchings with deletion budgets, and disjoint basis matchings,
//! * [`cycle`] — the zero-sum pipeline: triple hypergraph, base cycle,
//!   detour selection, witness verification, and brute-force oracles,
//! * [`cli`] — instance/witness file formats, experiment commands and
//!   stress suites (exposed through the `zerosum` binary),
//! * [`instances`] — seeded random instance generators shared by the stress
//!   suites, tests and examples.
//!
//! Every operation is deterministic; randomness enters only through explicit
//! seeds. See the `examples/` directory for a runnable tour.

pub mod cli;
pub mod cycle;
pub mod gf;
pub mod hypergraph;
pub mod instances;
pub mod matching;
pub mod matroid;

mod error;

pub use error::{Error, Result};

pub use cycle::{CycleWitness, LabelledDigraph};
pub use gf::{FieldSpec, GroupVector, SpanBasis};
pub use hypergraph::{HyperedgeId, LabelledHypergraph, Matching, Vertex};
pub use matroid::{ElementId, Matroid};
