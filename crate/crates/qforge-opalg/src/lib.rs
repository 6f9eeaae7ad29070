//! Operator algebras for exact q-series work: the Weyl algebra in theta and
//! lambda, q-difference operators in a shift sigma acting on lambda-series,
//! compilers from hypergeometric and factorial-ratio data, relation guessing,
//! the classical-limit expansion in hbar, and Newton polygons with edge
//! polynomials.

use thiserror::Error;

pub mod classical;
pub mod guess;
pub mod hbar;
pub mod json;
pub mod newton;
pub mod polyops;
pub mod qdiff;
pub mod weyl;

pub use classical::{
    factorial_series, pf_operator, qpf_factorial_operator, qpf_operator, ratio_to_operator,
};
pub use guess::{guess_qdiff, required_terms, GuessReport};
pub use hbar::hbar_degenerate;
pub use newton::{newton_polygon, NewtonPolygonData, PolygonEdge};
pub use qdiff::{QDiffOperator, QPoly, QScalar};
pub use weyl::{ThetaRing, WeylOp, WeylOperator};

#[derive(Debug, Error)]
pub enum OpalgError {
    /// Right division requires a divisor whose leading coefficient is nonzero.
    #[error("division by the zero operator")]
    DivisionByZeroOperator,
    /// Hypergeometric lower parameters must contain a unit entry.
    #[error("lower parameter list contains no unit entry")]
    MissingUnitParameter,
    #[error("guessing needs {required} series terms, got {supplied}")]
    Underdetermined { supplied: usize, required: usize },
    #[error("no relation within the requested shift order and degree")]
    NoRelation,
    /// A candidate relation fit the window but failed on a held-out term.
    #[error("candidate relation fails on held-out term {index}")]
    HoldoutMismatch { index: usize },
    #[error("zero operator has no Newton polygon")]
    ZeroOperator,
    #[error("malformed operator json: {0}")]
    BadOperatorJson(String),
}
