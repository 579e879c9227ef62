use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspace is not contained in the given superspace")]
    Containment,

    #[error("malformed input: {0}")]
    Shape(String),

    #[error("not commutative: b{i}*b{j} != b{j}*b{i}")]
    NotCommutative { i: usize, j: usize },

    #[error("not associative: (b{i}*b{j})*b{k} != b{i}*(b{j}*b{k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    #[error("not a module: a{i}.(a{j}.m{k}) != (a{i}*a{j}).m{k}")]
    NotAModule { i: usize, j: usize, k: usize },

    #[error("the algebra has no unit element")]
    NoUnit,

    #[error("operator is not a multiplier of the algebra")]
    NotAMultiplier,

    #[error("operator is not a derivation of the algebra")]
    NotADerivation,

    #[error("module is not free over its base algebra")]
    NotFree,

    #[error("module is not the adjoint module of its base algebra")]
    NotAdjointModule,

    #[error("potential is not an algebra-linear map into End_A(M): {0}")]
    PotentialNotALinear(String),

    #[error("map is not linear over the base algebra: {0}")]
    NotALinear(String),

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("cochains are not composable: {0}")]
    NotComposable(String),

    #[error("the two carriers live over different base algebras")]
    MixedBaseAlgebra,

    #[error("residual G(kappa) is nonzero on basis pair ({i}, {j})")]
    NonzeroResidual { i: usize, j: usize },

    #[error("curvature F(kappa) is nonzero on basis pair ({i}, {j})")]
    NonzeroCurvature { i: usize, j: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("oracle refused: problem size {needed} exceeds cap {cap}")]
    CapExceeded { needed: usize, cap: usize },

    #[error("oracle mismatch for {statement}: primary {primary}, oracle {oracle}")]
    Mismatch { statement: String, primary: usize, oracle: usize },

    #[error("element does not lie in the expected solution space: {0}")]
    NotInSpace(String),
}

pub type Result<T> = std::result::Result<T, Error>;
