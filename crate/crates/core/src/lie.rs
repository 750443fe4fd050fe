//! Interfaces shared by the two operator algebras.

use std::fmt;

use crate::error::Result;
use crate::scalars::Scalar;

/// A vector in one of the centrally extended operator algebras.
pub trait LieElem: Clone + PartialEq + fmt::Display + fmt::Debug + Send + Sync {
    fn size(&self) -> usize;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Scalar) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(&-Scalar::one()))
    }
}

/// A Lie algebra whose elements are concrete operators.
pub trait LieAlgebra: Send + Sync {
    type Elem: LieElem;

    fn n(&self) -> usize;
    fn zero(&self) -> Self::Elem;
    fn bracket(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
}
