//! Exact invariants of squarefree monomial ideals.
//!
//! The library computes the asymptotic resurgence, Waldschmidt constant,
//! skew Waldschmidt constants, Newton-polyhedron facets, symbolic powers,
//! containment tables and related bounds of a squarefree monomial ideal —
//! all in exact rational arithmetic. Everything reduces to two polyhedra:
//! the symbolic polyhedron (cover half-spaces, governs symbolic powers) and
//! the Newton polyhedron (governs integral closures of powers). A brute
//! force symbolic-power oracle provides independent ground truth for the
//! polyhedral computations.
//!
//! Non-squarefree monomial ideals are supported when the caller supplies an
//! H-representation of the symbolic polyhedron.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod hypergraph;
pub mod ideal;
pub mod invariants;
pub mod oracle;
pub mod polyhedra;
pub mod rat;

pub use error::{Error, Result};
pub use rat::Rat;
