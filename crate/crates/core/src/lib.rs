//! Exact polynomial, lattice and representation computations behind the
//! `chowcheck` checks of the Chow ring of `BPGL3`.

pub mod cli;
pub mod exactpoly;
pub mod groups;
pub mod intlinalg;
pub mod paperchecks;
pub mod presented;
pub mod repcalc;
