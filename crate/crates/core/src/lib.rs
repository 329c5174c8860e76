//! Exact computations on finite-dimensional (right) Leibniz algebras.
//!
//! An algebra is given by structure constants over a prime field F_p or the
//! rationals. On top of that the crate computes the usual structural
//! invariants (Leibniz kernel, square-zero subalgebra, centre, series,
//! Frattini ideal), enumerates subalgebra lattices over prime fields, decides
//! modularity and related lattice conditions, and checks a catalogue of
//! known structure results against concrete algebras.
//!
//! All arithmetic is exact. Heavy scans are data-parallel when the `parallel`
//! feature is enabled (the default); see [`par`].

pub mod algebra;
pub mod any;
pub mod catalog;
pub mod error;
pub mod field;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod par;
pub mod structure;
pub mod verify;

pub use algebra::{LeibnizAlgebra, Quotient, StructureTensor};
pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, FiniteField, PrimeField, Rationals};
pub use lattice::SubalgebraLattice;
pub use linalg::{Matrix, Subspace, Vector};

/// Resource limits for exhaustive scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Upper bound on the number of vectors (or vector pairs) a scan may visit.
    pub max_elements: u64,
    /// Upper bound on the number of nodes in a subalgebra lattice.
    pub max_nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_elements: 1_000_000,
            max_nodes: 5_000,
        }
    }
}
