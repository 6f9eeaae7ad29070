//! Hypergeometric families and their q-deformations at roots of unity:
//! classical and q-coefficient series, factorial-ratio presentations, the
//! jet-coefficient expansion operators D_m transporting classical solutions
//! to q-series, the normalized cohomology-valued class built from them,
//! Frobenius solution bases with nilpotent exponent shifts, and prime-power
//! congruence checks between the two coefficient worlds.

use thiserror::Error;

pub mod compat;
pub mod data;
pub mod dm;
pub mod frob;
pub mod hasse;
pub mod omega;
pub mod series;

pub use data::{DeformStyle, HGData};
pub use dm::{build_dm, dm_remainder, remainder_valuations, DmOperator};
pub use frob::{frobenius_basis, FrobeniusFamily, FrobeniusGroup};
pub use hasse::{hasse_check, HasseReport};
pub use omega::{build_omega_class, OmegaClass};
pub use series::{classical_coeffs, hg_series, q_coeffs, HgSeries, Variant};

#[derive(Debug, Clone, Error)]
pub enum HypergError {
    /// Upper and lower parameter lists must have equal positive length.
    #[error("parameter lists are empty or of unequal length")]
    Unbalanced,
    /// Parameters must lie in (0,1], be disjoint between the two lists,
    /// pair up strictly increasing, and end with a unit lower parameter.
    #[error("invalid parameter data: {0}")]
    BadParameters(String),
    #[error("order {m} is not coprime to the family denominator {n}")]
    NotCoprime { m: u64, n: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// A q-Pochhammer denominator vanishes at the chosen root of unity.
    #[error("vanishing denominator at the root of unity, index {0}")]
    VanishingDenominator(u64),
    /// A coefficient has the checked prime in its denominator.
    #[error("coefficient at index {0} is not integral at the prime")]
    NotIntegralAtPrime(u64),
    /// Jet samples did not fit a rational function within the degree caps.
    #[error("block reconstruction failed at class {class}, jet order {order}")]
    Interpolation { class: u64, order: usize },
    /// Remainder operators exist only at the unit center.
    #[error("remainder requested away from the unit center (m = {0})")]
    RemainderAtRoot(u64),
    /// A class block was expected to be a polynomial with rational entries.
    #[error("block is not a rational polynomial in theta")]
    NonPolynomialBlock,
    #[error(transparent)]
    Qpoch(#[from] qforge_qpoch::QpochError),
    #[error("operator construction failed: {0}")]
    Opalg(String),
}

impl From<qforge_opalg::OpalgError> for HypergError {
    fn from(e: qforge_opalg::OpalgError) -> Self {
        HypergError::Opalg(e.to_string())
    }
}
