//! Exact series expansions for time-delay statistics of chaotic cavities with
//! absorption and broken time-reversal symmetry.
//!
//! The absorption time-delay operator is `Q(γ) = (1 − R)/γ` where `R` is the
//! sub-unitary reflection matrix and `γ = τ_d/τ_a`. Its Schur-moments
//! `⟨s_λ(Q)⟩`, the power-sum moments `⟨p_λ(Q)⟩`, and the moments and
//! cumulants of the Wigner time delay `τ_W = Tr(Q)/M` are produced as
//! truncated series in one of three variables:
//!
//! * `1/M`, many open channels, coefficients rational in `γ`;
//! * `γ`, weak absorption, coefficients rational in `M`;
//! * `1/γ`, strong absorption, coefficients rational in `M`.
//!
//! All arithmetic is exact. Times are measured in units of the dwell time.

pub mod algebra;
pub mod combinatorics;
pub mod engine;
pub mod error;
pub mod expr;
pub mod statistics;
pub mod verify;

pub use algebra::{
    Polynomial, Rational, RationalFunction, Symbol, TruncatedSeries, Variable,
};
pub use combinatorics::{Partition, Tables};
pub use engine::{Engine, Regime, RegimeRequest};
pub use error::{Error, Result};
pub use statistics::{Statistic, StatisticRequest};
