//! Exact-arithmetic toolkit for positive self-adjoint Hopf (PSH) algebras,
//! the symmetric-function ring as the flagship instance, the Heisenberg
//! double with its Fock-space action, and a fully explicit based model of
//! graded 2-vector spaces with mates and Beck-Chevalley checking.
//!
//! Everything is computed over the integers or the rationals; there is no
//! floating point anywhere. All graded structures carry an explicit
//! truncation bound, and every operation in scope is degree-additive or
//! degree-non-increasing, so truncated verification is sound.

pub mod error;
pub mod heisenberg;
pub mod hopfcat;
pub mod linalg;
pub mod mutants;
pub mod partitions;
pub mod psh;
pub mod report;
pub mod schurcalc;
pub mod symfunc;
pub mod twovect;
pub mod wreath;

pub use error::{CoreError, Result};
pub use partitions::{generate_partitions, generate_tuples, Partition};
pub use psh::{PshAlgebra, PshTensor, SetMap};
pub use report::{Check, Report};
pub use symfunc::{
    basis_element, coproduct, inner, lr_coefficient, multiply, op_delta, op_m, BasisKind,
    SymTensor,
};
