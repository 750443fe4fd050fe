pub mod derops;
pub mod diffops;
pub mod error;
pub mod lattice;
pub mod lie;
pub mod morphisms;
pub mod presentations;
pub mod scalars;
pub mod symfun;
pub mod verify;

pub use derops::{DerAlgebra, DerOp, FiltDegree};
pub use diffops::{DiffAlgebra, DiffDegree, DiffOp};
pub use error::{Error, Result};
pub use lie::{LieAlgebra, LieElem};
pub use scalars::{Param, ParamAssignment, Scalar, ScalarMatrix};
pub use morphisms::{eval_expr, theta, vartheta, Morphism, Theta, Vartheta};
pub use presentations::{GenSym, LieExpr, RelationInstance};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    pub mod scalars {}
    #[doc = include_str!("../../../book/src/difference-operators.md")]
    pub mod difference_operators {}
    #[doc = include_str!("../../../book/src/differential-operators.md")]
    pub mod differential_operators {}
    #[doc = include_str!("../../../book/src/relations.md")]
    pub mod relations {}
    #[doc = include_str!("../../../book/src/homomorphisms.md")]
    pub mod homomorphisms {}
    #[doc = include_str!("../../../book/src/shift-operators.md")]
    pub mod shift_operators {}
    #[doc = include_str!("../../../book/src/miki.md")]
    pub mod miki {}
    #[doc = include_str!("../../../book/src/commutative.md")]
    pub mod commutative {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
}
