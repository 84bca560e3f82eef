//! Exact numerics for secant planes and ramified linear series on curves.
//!
//! - [`arith`]: arbitrary-precision counts and rationals, binomials, factorials.
//! - [`series`]: Brill-Noether numbers, Schubert indices, vanishing sequences.
//! - [`secant`]: dimension counts and existence verdicts for secant-plane varieties.
//! - [`counts`]: Castelnuovo's and Cayley's secant-plane counts.
//! - [`chains`]: limit linear series on elliptic chains and the secant gluing data.
//! - [`ramify`]: vanishing thresholds for powers of ramified series.
//! - [`cli`]: the command-line front end used by the `secant-planes` binary.
//!
//! Everything is computed exactly; there are no floating-point paths.

pub mod arith;
pub mod chains;
pub mod cli;
pub mod counts;
pub mod error;
pub mod ramify;
pub mod secant;
pub mod series;

pub use arith::{binomial, factorial, BigCount, ExactRational};
pub use chains::{
    build_secant_construction, count_chain_series, enumerate_chain_series,
    gamma_dimension_identity, propagate_step, ChainPath, ChainSpec, SecantConstruction,
};
pub use counts::{castelnuovo, cayley_r3, consistency_check, SecantCount};
pub use error::{Error, Result};
pub use ramify::{power_bound, square_bound, PowerBound};
pub use secant::{secant_verdict, SecantProblem, SecantVerdict, VerdictStatus};
pub use series::{rho, SchubertIndex, SeriesParams, VanishingSequence};
