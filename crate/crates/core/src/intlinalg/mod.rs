//! Exact integer matrix normal forms and sublattice comparison.

mod hermite;
mod lattice;
mod matrix;
mod smith;

pub use hermite::{hermite_normal_form, HermiteForm};
pub use lattice::{
    kernel_basis, lattice_basis, membership, rational_rank, rational_solution, recombine,
    submodule_compare, Comparison, Membership, Relation,
};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithForm};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0}")]
    Shape(String),
}
