//! Exact computations with finite-dimensional regular Hom-Leibniz algebras
//! over the rationals: split root-space decompositions, connections of
//! roots, class ideals and simplicity verdicts.

pub mod algebra;
pub mod connections;
pub mod corpus;
pub mod decomposition;
pub mod diagnostics;
pub mod error;
pub mod io;
pub mod linalg;
pub mod report;
pub mod roots;

pub use algebra::HomAlgebra;
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, Subspace, Vector};
pub use roots::{decompose, Root, SplitDecomposition};
