//! Maximal isolated temporal cliques.
//!
//! A temporal graph is a fixed vertex set with one edge layer per time step.
//! A temporal clique `(C, [a, b])` is a vertex set that is complete in every
//! layer of the window; it is isolated when few edges leave `C` during the
//! window, under one of six aggregation rules ([`IsolationKind`]) with a
//! rational threshold ([`IsolationParam`]).
//!
//! [`Enumerator`] lists the maximal isolated temporal cliques of a graph for
//! every kind except usually-max; [`oracle`] holds exhaustive references for
//! small instances.

pub mod enumerate;
pub mod error;
pub mod graph;
pub mod ingest;
pub mod isolation;
pub mod oracle;
pub mod param;

pub use enumerate::{enumerate_maximal_isolated, Enumerator, ResultSet, TemporalClique, Trimming};
pub use error::{Error, Result};
pub use graph::{IntersectionView, StaticGraph, TemporalGraph, TimeWindow, Vertex};
pub use isolation::{is_isolated, outdeg_profile, IsolationKind, IsolationSpec, OutdegProfile};
pub use param::IsolationParam;
