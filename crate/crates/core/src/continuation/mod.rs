//! Functional equations, the recursive continuation of `ζ_{P_q}` and the
//! singularity bookkeeping behind the natural-boundary criterion.

pub mod boundary;
pub mod catalog;
pub mod evaluator;
pub mod feq;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;

pub use boundary::{boundary_report, BoundaryReport, Gap, Trend, Verdict};
pub use catalog::{
    counting_functions, lambda_q, mq_classes, omega_set, Counts, MqClass, SingularPoint, SingularityCatalog,
};
pub use evaluator::{continue_f_power, ContinuedValue, PartialZetaEvaluator, TruncatedPartial, PROXIMITY_RADIUS};
pub use feq::{composite_feq_residual, feq_residual, nested_composite_residual, overlap_residual, truncated_log_g};

/// Where an evaluator for `g` gets its values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    RationalInU,
    ExternalCatalog,
}

/// `g(s) = ζ_P(s)^q / Z_P(s)`, continued meromorphically.
pub trait GFunction: Send + Sync {
    /// Some logarithm of `g(s)`; only integer powers of `g` are ever formed,
    /// so the branch is irrelevant.
    fn log_eval(&self, s: Complex64) -> Result<Complex64>;

    fn eval(&self, s: Complex64) -> Result<Complex64> {
        Ok(self.log_eval(s)?.exp())
    }

    fn provenance(&self) -> Provenance;

    /// Singular points used for proximity checks, if known.
    fn catalog(&self) -> Option<&SingularityCatalog> {
        None
    }
}

/// `log ζ_{P_q}(w)` on `Re w > 1` with an error bound.
pub trait PartialLogSource: Send + Sync {
    /// Returns `(log value, bound on |log error|, certified)`.
    fn log_partial(&self, w: Complex64) -> Result<(Complex64, f64, bool)>;
}

/// A `g` given by an external catalog and an evaluation callback
/// (e.g. imported spectral data).
pub struct CatalogG<F> {
    catalog: SingularityCatalog,
    callback: F,
}

impl<F> CatalogG<F>
where
    F: Fn(Complex64) -> Result<Complex64> + Send + Sync,
{
    /// `callback` returns `log g(s)`.
    pub fn new(catalog: SingularityCatalog, callback: F) -> Self {
        Self { catalog, callback }
    }
}

impl<F> GFunction for CatalogG<F>
where
    F: Fn(Complex64) -> Result<Complex64> + Send + Sync,
{
    fn log_eval(&self, s: Complex64) -> Result<Complex64> {
        (self.callback)(s)
    }

    fn provenance(&self) -> Provenance {
        Provenance::ExternalCatalog
    }

    fn catalog(&self) -> Option<&SingularityCatalog> {
        Some(&self.catalog)
    }
}
