//! The recursive continuation
//! `f(s)^{q^r} = f(q^r s) · Π_{i<r} g(q^i s)^{q^{r-i-1}}` on `Re s > 1/q^r`.

use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{GFunction, PartialLogSource};
use crate::error::{Result, ZetaError};
use crate::euler::{truncated_zeta_pn, TruncationPolicy, ZetaSystem};

/// Evaluations closer than this to a singular point of `g` are refused.
pub const PROXIMITY_RADIUS: f64 = 1e-6;

/// `ζ_{P_q}` on `Re w > 1` from the truncated Euler product.
pub struct TruncatedPartial {
    sys: ZetaSystem,
    policy: TruncationPolicy,
}

impl TruncatedPartial {
    pub fn new(sys: ZetaSystem, policy: TruncationPolicy) -> Self {
        Self { sys, policy }
    }
}

impl PartialLogSource for TruncatedPartial {
    fn log_partial(&self, w: Complex64) -> Result<(Complex64, f64, bool)> {
        let t = truncated_zeta_pn(&self.sys, self.sys.group_order(), w, &self.policy)?;
        Ok((t.log, t.tail, t.certified))
    }
}

/// `f(s)^{q^r}` in log form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContinuedValue {
    pub s: Complex64,
    pub depth: u32,
    /// A logarithm of `f(s)^{q^r}`.
    pub log: Complex64,
    pub log_abs: f64,
    /// Argument in `(-π, π]`.
    pub arg: f64,
    pub value: Complex64,
    /// Bound on `|log error|` inherited from `f(q^r s)`.
    pub tail: f64,
    pub certified: bool,
}

pub struct PartialZetaEvaluator {
    q: u32,
    depth: u32,
    g: Arc<dyn GFunction>,
    base: Arc<dyn PartialLogSource>,
}

impl PartialZetaEvaluator {
    pub fn new(q: u32, depth: u32, g: Arc<dyn GFunction>, base: Arc<dyn PartialLogSource>) -> Result<Self> {
        if q < 2 {
            return Err(ZetaError::InvalidInput(format!("q = {q} must be at least 2")));
        }
        if depth > 30 {
            return Err(ZetaError::InvalidInput(format!("depth {depth} is unreasonably large")));
        }
        Ok(Self { q, depth, g, base })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Same `g` and base, another depth.
    pub fn with_depth(&self, depth: u32) -> Result<Self> {
        Self::new(self.q, depth, self.g.clone(), self.base.clone())
    }

    /// `1/q^r`.
    pub fn abscissa(&self) -> f64 {
        (self.q as f64).powi(-(self.depth as i32))
    }

    pub fn evaluate(&self, s: Complex64) -> Result<ContinuedValue> {
        if s.re <= self.abscissa() {
            return Err(ZetaError::Domain(format!("Re s = {} is not above 1/q^r = {}", s.re, self.abscissa())));
        }
        let qf = self.q as f64;
        let r = self.depth as i32;
        let mut log = Complex64::new(0.0, 0.0);
        let mut w = s;
        for i in 0..r {
            self.check_proximity(w)?;
            log += self.g.log_eval(w)? * qf.powi(r - i - 1);
            w *= qf;
        }
        let (lf, tail, certified) = self.base.log_partial(w)?;
        log += lf;
        let value = log.exp();
        Ok(ContinuedValue {
            s,
            depth: self.depth,
            log,
            log_abs: log.re,
            arg: super::feq::wrap(log).im,
            value,
            tail,
            certified,
        })
    }

    fn check_proximity(&self, w: Complex64) -> Result<()> {
        let one = Complex64::new(1.0, 0.0);
        let d = (w - one).norm();
        if d < PROXIMITY_RADIUS {
            return Err(ZetaError::SingularityProximity { s: w, point: one, distance: d });
        }
        if let Some(cat) = self.g.catalog() {
            if let Some((p, d)) = cat.nearest(w) {
                if d < PROXIMITY_RADIUS {
                    return Err(ZetaError::SingularityProximity { s: w, point: p.location(), distance: d });
                }
            }
        }
        Ok(())
    }
}

/// `f(s)^{q^r}`.
pub fn continue_f_power(ev: &PartialZetaEvaluator, s: Complex64) -> Result<Complex64> {
    Ok(ev.evaluate(s)?.value)
}
