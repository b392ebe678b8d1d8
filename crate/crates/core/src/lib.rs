//! Order ideals of the m x n grid, their antichain modules, and the
//! tilting/Serre computations built on top of them.
//!
//! Everything is exact: rationals with big integers for linear algebra,
//! big integers for K0 matrices.

pub mod antichain;
pub mod auslander;
pub mod combinatorics;
pub mod error;
pub mod export;
pub mod homalg;
pub mod k0;
pub mod lattice;
pub mod linalg;
pub mod quiver;
pub mod suite;
pub mod ycat;

pub use antichain::{Antichain, ModuleSupport, PropertyFlags};
pub use combinatorics::{Configuration, EnhancedPartition, Side};
pub use error::{Error, Result};
pub use homalg::{ChainMap, CochainOfSpaces, InjectiveComplex, ProjectiveComplex};
pub use lattice::{GridLattice, Interval, Partition};
pub use linalg::{QMat, Q};
pub use quiver::{Orientation, QuiverPresentation};


#[cfg(test)]
mod tests;
