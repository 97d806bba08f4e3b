//! Külshammer ideals and related invariants over prime fields.
//!
//! The crate is layered bottom-up: [`exactla`] does the linear algebra,
//! [`algebra`] and [`kulshammer`] work with finite-dimensional algebras,
//! [`hochschild`] builds bar complexes, [`graded_category`] handles
//! window-truncated graded categories and [`dualnumbers`] models the
//! homotopy category of perfect complexes over `k[x]/x^2`.

pub mod algebra;
pub mod category;
pub mod dualnumbers;
pub mod error;
pub mod exactla;
pub mod graded_category;
pub mod hochschild;
pub mod kulshammer;

pub use algebra::{AlgebraSpec, FinDimAlgebra};
pub use error::{Error, Result};
pub use exactla::{Fp, Matrix, Quotient, Subspace};
