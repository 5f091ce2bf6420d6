//! Resolution of the coarse central fiber, blow-downs and genus arithmetic.

mod build;
mod config;
mod contract;
mod diagrams;
mod genus;
mod hj;
mod toric;

use thiserror::Error;

use crate::orbiscroll::ScrollError;

pub use build::{build_coarse_fiber_config, fiber_layout, AttachSpec, Attachment, FiberLayout, Position};
pub use config::{CurveConfig, Edge, Role, Vertex};
pub use contract::{contract_minus_ones, contract_with, default_choice, Contraction};
pub use diagrams::{diagram_for, diagrams, parse_golden_diagram, Diagram, GoldenDiagram};
pub use genus::{
    delta_invariant, genus_rh, geometric_genus, normalization_genus, pa_hirzebruch, AkSing, NormalizationRoute,
    SurfaceModel,
};
pub use hj::{hj_expand, hj_reconstruct, Chain, Cqs};
pub use toric::{derive_attach_spec, toric_chain};

/// Failures of the resolution and genus computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("1/{r}(1,{q}) is not a coprime pair with 0 < q < r")]
    NotCoprime { r: i64, q: i64 },
    #[error("chain entry {0} is below 2")]
    ChainEntry(i64),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("edge references unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("line {line}: cannot parse {text:?}")]
    Parse { line: usize, text: String },
    #[error("attach position {0} does not exist")]
    MissingPosition(String),
    #[error("{0} is not integral")]
    NonIntegral(String),
    #[error("contracted surface is not a plane or Hirzebruch model: {0}")]
    UnrecognizedModel(String),
    #[error("A_{0} is not a singularity label (need k >= -1)")]
    BadSingularity(i64),
    #[error("genus {0} is negative")]
    NegativeGenus(i64),
    #[error("Riemann-Hurwitz gives a non-integral genus ({0}/2 + 1)")]
    GenusNotIntegral(i64),
    #[error(transparent)]
    Scroll(#[from] ScrollError),
}
