//! Virtual representations as weight multisets, their Chern classes, and
//! restriction along maps of character lattices.

mod catalog;
mod expr;
mod express;
mod lattice;
mod virtualrep;

pub use catalog::Catalog;
pub use expr::parse_rep;
pub use express::{express_in, Expression};
pub use lattice::{Lattice, LatticeMap, LatticeRef};
pub use virtualrep::{normalize_mod_det, VirtualRep};

use thiserror::Error;

use crate::exactpoly::PolyError;
use crate::intlinalg::LinAlgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("lattice mismatch: expected {expected}, found {found}")]
    LatticeMismatch { expected: String, found: String },
    #[error("weight of length {found} in lattice {lattice} of rank {expected}")]
    Arity {
        lattice: String,
        expected: usize,
        found: usize,
    },
    #[error("subtrahend weight {0} is not contained in the representation")]
    NotContained(String),
    #[error("operation needs a genuine representation (non-negative multiplicities)")]
    NotGenuine,
    #[error("{0} is not homogeneous of positive degree")]
    NotHomogeneous(String),
    #[error("no integral expression{}", rational.as_ref().map(|r| format!("; rational solution {r}")).unwrap_or_default())]
    NoIntegralExpression { rational: Option<String> },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
