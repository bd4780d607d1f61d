//! Exact invariants of knot, link and spatial-graph diagrams: the Kauffman
//! bracket and Jones polynomial, the Yamada polynomial and its Jaeger
//! specialization, and θ-curve associated links.

pub mod bracket;
pub mod construct;
pub mod diagram;
pub mod fixtures;
pub mod graph;
pub mod laurent;
pub mod theta;
pub mod union_find;
pub mod yamada;

pub use diagram::{parse_diagram, validate_diagram, Diagram};
pub use graph::AbstractGraph;
pub use laurent::{LaurentError, LaurentPoly, RationalFn};
pub use theta::ThetaDiagram;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// State-sum limits and algorithm switches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest crossing count for the 2^c bracket state sum.
    pub naive_bracket: usize,
    /// Largest crossing count for the 3^c Yamada state sum.
    pub yamada: usize,
    /// Use tangle contraction for brackets above `naive_bracket`.
    pub fast_bracket: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Self { naive_bracket: 22, yamada: 9, fast_bracket: true }
    }
}
