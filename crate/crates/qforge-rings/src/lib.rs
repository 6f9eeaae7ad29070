//! Exact arithmetic tower: rationals, cyclotomic numbers, symbolic roots of
//! unity, p-adic and ramified p-adic numbers, truncated series jets, and the
//! generic polynomial/linear-algebra containers built over them.

pub mod bernoulli;
pub mod cpadic;
pub mod cyclo;
pub mod jet;
pub mod laurent;
pub mod linalg;
pub mod nt;
pub mod padic;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod ring;
pub mod zeta;

pub use cpadic::CycloPadic;
pub use cyclo::{cyclotomic_poly, CycloNum};
pub use jet::{jet_recenter, JetSeries, PadicJet, Tps};
pub use laurent::LaurentPoly;
pub use linalg::Matrix;
pub use padic::PadicNum;
pub use poly::Poly;
pub use rat::{rat, rat_i, rat_parse, rat_str, Rat};
pub use ratfunc::RatFunc;
pub use ring::{Field, Ring};
pub use zeta::RootOfUnity;
