//! Finite-height natural-boundary diagnostics.
//!
//! The hypotheses (`β_j → ∞`, `β_j^{1/j} → 1`) are asymptotic; here they are
//! only observed as trends, and the no-gap condition is probed on log-spaced
//! windows of `(ε, T]`.

use serde::{Deserialize, Serialize};

use super::catalog::{lambda_q, SingularityCatalog};
use crate::error::{Result, ZetaError};

/// Minimum number of `Λ_q` classes for a report.
pub const MIN_CLASSES: usize = 10;
/// Largest least-squares slope of `log β_j` against `j` (last half) still
/// read as subexponential growth.
pub const SLOPE_LIMIT: f64 = 0.25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ConsistentWithNaturalBoundary,
    Inconclusive,
    GapFound,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trend {
    /// `β_J^{1/J}` for the last index `J` (indices start at 0, so `j >= 1` only).
    pub last_root: f64,
    /// `β_j^{1/j}` for `j = 1..`.
    pub roots: Vec<f64>,
    /// Least-squares slope of `log β_j` against `j` over the last half.
    pub log_slope: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Gap {
    pub t1: f64,
    pub t2: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub betas: Vec<f64>,
    pub trend: Trend,
    /// Imaginary parts of the `Ω_q` points in `[ε, T]`.
    pub omega: Vec<f64>,
    /// Empty probe windows with `Ω_q` points on both sides.
    pub gaps: Vec<Gap>,
    /// Largest ratio between consecutive `Ω_q` heights in `[ε, T]`.
    pub largest_gap: Option<Gap>,
    pub epsilon: f64,
    pub height: f64,
    pub delta: f64,
    pub verdict: Verdict,
}

/// Builds the report from the `Λ_q` classes of the catalog below `height`.
pub fn boundary_report(
    cat: &SingularityCatalog,
    q: u32,
    height: f64,
    window_count: usize,
    delta: f64,
) -> Result<BoundaryReport> {
    if !(delta > 0.0) || window_count == 0 {
        return Err(ZetaError::InvalidInput("δ must be positive and window_count nonzero".into()));
    }
    let mut betas: Vec<f64> = lambda_q(cat, q).iter().map(|c| c.representative.im).filter(|&b| b < height).collect();
    betas.sort_by(f64::total_cmp);
    if betas.len() < MIN_CLASSES {
        return Err(ZetaError::InsufficientData(format!(
            "{} classes in Λ_q below T = {height}; need at least {MIN_CLASSES}",
            betas.len()
        )));
    }
    let betas_report = betas.clone();
    let trend = trend(&betas);

    let qf = q as f64;
    let epsilon = betas[0] / qf;
    let mut omega = Vec::new();
    for &b in &betas {
        let mut t = b;
        while t >= epsilon {
            if t <= height {
                omega.push(t);
            }
            t /= qf;
        }
    }
    omega.sort_by(f64::total_cmp);
    omega.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * a.abs());

    let mut gaps: Vec<Gap> = Vec::new();
    let span = (height / epsilon).ln();
    let lo = omega[0];
    let hi = *omega.last().expect("nonempty");
    for i in 0..window_count {
        let t1 = epsilon * (span * i as f64 / window_count as f64).exp();
        let t2 = t1 * (1.0 + delta);
        if t2 > height {
            break;
        }
        let inside = omega.iter().any(|&t| t > t1 && t < t2);
        if !inside && lo <= t1 && hi >= t2 {
            match gaps.last_mut() {
                Some(g) if g.t2 >= t1 => g.t2 = t2,
                _ => gaps.push(Gap { t1, t2 }),
            }
        }
    }
    let largest_gap =
        omega.windows(2).map(|w| Gap { t1: w[0], t2: w[1] }).max_by(|a, b| (a.t2 / a.t1).total_cmp(&(b.t2 / b.t1)));

    let verdict = if !gaps.is_empty() {
        Verdict::GapFound
    } else if trend.log_slope <= SLOPE_LIMIT {
        Verdict::ConsistentWithNaturalBoundary
    } else {
        Verdict::Inconclusive
    };
    Ok(BoundaryReport { betas: betas_report, trend, omega, gaps, largest_gap, epsilon, height, delta, verdict })
}

fn trend(betas: &[f64]) -> Trend {
    let roots: Vec<f64> = betas.iter().enumerate().skip(1).map(|(j, b)| b.powf(1.0 / j as f64)).collect();
    let start = betas.len() / 2;
    let pts: Vec<(f64, f64)> = betas[start..].iter().enumerate().map(|(i, b)| ((start + i) as f64, b.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Trend { last_root: *roots.last().unwrap_or(&f64::NAN), roots, log_slope: if sxx > 0.0 { sxy / sxx } else { 0.0 } }
}
