//! Exact-arithmetic Lie superalgebras and nilpotent orbit invariants.

pub mod analysis;
pub mod error;
pub mod exceptional;
pub mod field;
pub mod linalg;
pub mod matrixalg;
pub mod superalg;

pub use error::{Error, Result};
pub use field::{FieldTag, Poly, Rational, RationalFunction, Scalar};
pub use linalg::{Coordinates, Matrix, Subspace};
pub use superalg::{GradedDecomposition, Parity, Projection, SuperAlgebra};

/// A superalgebra over ℚ.
pub type QAlgebra = SuperAlgebra<Rational>;
/// A superalgebra over ℚ(α).
pub type AlphaAlgebra = SuperAlgebra<RationalFunction>;
/// A vector over ℚ.
pub type QVector = Vec<Rational>;
