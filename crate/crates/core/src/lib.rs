//! Perfect-matching polynomials, Pfaffians of oriented graphs and the
//! sign-matrix counting machinery behind exponential lower bounds on
//! Pfaffian numbers.
//!
//! The crate is organised bottom-up:
//!
//! - [`polyalg`]: exact multilinear polynomials in edge variables.
//! - [`graphs`]: graphs, the named graph families, perfect-matching
//!   enumeration and the matching-covered test.
//! - [`pfaffian`]: orientations, matching signs, symbolic and numeric
//!   Pfaffians, Pfaffian-orientation search.
//! - [`bipartite`]: biadjacency matrices, sign matrices and the
//!   Pfaffian/signed-determinant identity for bipartite graphs.
//! - [`signcount`]: censuses of sign matrices and the block covering
//!   argument.
//! - [`pfnum`]: k-Pfaffian certificates, exact Pfaffian numbers of small
//!   graphs and lower-bound reports.
//! - [`suites`]: the verification suites driven by the CLI.

pub mod bipartite;
pub mod error;
pub mod graphs;
pub mod linalg;
pub mod pfaffian;
pub mod pfnum;
pub mod polyalg;
pub mod signcount;
pub mod suites;

pub use error::{Error, Result};

/// Enumeration caps shared by the operations that can blow up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of perfect matchings any enumeration may produce.
    pub matchings: usize,
    /// Maximum edge count for exhaustive orientation search.
    pub search_edges: usize,
    /// Maximum edge count accepted by the exact Pfaffian number search.
    pub exact_edges: usize,
    /// Maximum matching count accepted by the exact Pfaffian number search.
    pub exact_matchings: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            matchings: 1_000_000,
            search_edges: 24,
            exact_edges: 12,
            exact_matchings: 24,
        }
    }
}
