//! Exact computer-algebra engine for pivotal module categories over
//! finite-dimensional Hopf algebras: duality data, simple-module
//! ambidexterity tests, and modified trace / dimension functions on
//! projective modules.

pub mod ambi;
pub mod builders;
pub mod decomp;
pub mod factor;
pub mod hopf;
pub mod modcat;
pub mod field;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod poly;

pub use field::{Field, FieldError, FieldKind, Scalar};
pub use matrix::{Matrix, MatrixError};
pub use poly::Polynomial;
