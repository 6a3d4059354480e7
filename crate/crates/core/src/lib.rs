//! Zeta functions defined by partial Euler products.
//!
//! A [`ZetaSystem`] is a countable family of primes with norms and
//! Frobenius classes in a finite cyclic group `G`. Restricting the Euler
//! product to primes whose Frobenius has a fixed order `n` gives the
//! partial zeta function `ζ_{P_n}`. For `#G = q` prime it satisfies
//!
//! ```text
//! ζ_{P_q}(s)^q / ζ_{P_q}(qs) = ζ_P(s)^q / Z_P(s) =: g(s)
//! ```
//!
//! which continues `ζ_{P_q}(s)^{q^r}` into `Re s > 1/q^r`.
//!
//! Modules:
//! - [`euler`]: prime data, truncated Euler products with tail bounds.
//! - [`group`]: characters of cyclic groups, truncated `L_P` and `Z_P`.
//! - [`continuation`]: functional-equation residuals, the recursive
//!   continuation, singularity catalogs and natural-boundary diagnostics.
//! - [`numberfield`]: abelian systems over ℚ, Dirichlet L-functions and
//!   critical-strip zero catalogs.
//! - [`graph`]: Ihara zeta functions, voltage covers, graph L-functions
//!   and the exact partial zeta series.
//! - [`exact`]: exact rational polynomials, power series, cyclotomic
//!   numbers and determinants.

pub mod continuation;
pub mod error;
pub mod euler;
pub mod exact;
pub mod graph;
pub mod group;
pub mod numberfield;
pub mod primes;
pub mod spec;

pub use error::{Result, ZetaError};
pub use euler::{PrimeBackend, PrimeDatum, TailMode, Truncated, TruncationPolicy, ZetaSystem};
pub use group::{Character, CyclicGroup};

/// Crate version embedded in CLI outputs.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
