//! Plane partitions and their relatives: exact enumeration, symmetry classes,
//! product formulas, and the bijections connecting them to lattice paths,
//! lozenge tilings, tableaux and alternating sign matrices.

pub mod arith;
pub mod dimer;
pub mod error;
pub mod gogmagog;
pub mod lgv;
pub mod linalg;
pub mod partition;
pub mod plane;
pub mod poly;
pub mod qseries;
pub mod schur;
pub mod symmetry;
pub mod trace;

pub use error::{Error, Result};
pub use partition::Partition;
pub use plane::{BoxDims, PlanePartition, ReversePlanePartition};
pub use poly::QPolynomial;
pub use symmetry::{SymmetryClass, Weight};
