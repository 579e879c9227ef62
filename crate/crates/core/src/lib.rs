//! Exact computations with multipliers and derivations of finite-dimensional
//! commutative algebras and their modules, together with the Hochschild and de
//! Rham complexes built from them.

pub mod algebra;
pub mod checks;
pub mod complex;
pub mod derham;
pub mod derivation;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod gauge;
pub mod hochschild;
pub mod io;
pub mod module;
pub mod multiplier;
pub mod operators;
pub mod oracle;
pub mod sampling;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use exactlin::{Matrix, Scalar, Subspace};
pub use module::ModuleOverAlgebra;
pub use operators::{Carrier, Operator, OperatorKind, OperatorSpace, PairOperator};
