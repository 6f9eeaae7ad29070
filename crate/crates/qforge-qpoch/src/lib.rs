//! q-Pochhammer expansions at roots of unity: finite symbols as exact jets,
//! infinite symbols as prefactor data plus exponential series, the q-Gamma
//! and q-Beta jets assembled from them, Gaussian binomials, and the bracket
//! normalization for rational parameters.

pub mod bracket;
pub mod poch;
pub mod prefactor;
pub mod qbinom;
pub mod series;

pub use bracket::{bracket, resid};
pub use poch::{
    poch_finite_at_zeta, poch_finite_hbar, poch_finite_series, poch_finite_sym, poch_infinite_log,
    poch_ratio_series, q_beta_at_root, q_gamma_at_root, PochFiniteSym, PochInfiniteLog, QGamma,
};
pub use prefactor::PochPrefactor;
pub use qbinom::{q_binomial, q_factorial, q_int, q_multinomial};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum QpochError {
    #[error("order {m} is not coprime to the denominator of {a}")]
    NotCoprime { a: String, m: u64 },
    #[error("gamma factor at a non-positive integer argument {0}")]
    GammaPole(String),
    #[error("prefactor does not reduce to a scalar: {0}")]
    NotScalar(String),
}
