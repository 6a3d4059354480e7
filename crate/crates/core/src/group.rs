//! Characters of finite cyclic groups and the L-functions `L_P(s, χ)`.
//!
//! Only one-dimensional representations are modelled, so `Z_P` is the
//! plain product of `L_P(s, χ_j)` over all characters of `G`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ZetaError};
use crate::euler::{euler_log, Truncated, TruncationPolicy, ZetaSystem};
use crate::primes::divisors;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicGroup {
    order: u32,
}

impl CyclicGroup {
    pub fn new(order: u32) -> Result<Self> {
        if order < 2 {
            return Err(ZetaError::InvalidInput(format!("cyclic group order must be >= 2, got {order}")));
        }
        Ok(Self { order })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn character(&self, index: u32) -> Character {
        Character { order: self.order, index: index % self.order }
    }

    /// All characters, trivial first.
    pub fn characters(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.order).map(move |j| self.character(j))
    }
}

/// The character `k ↦ exp(2πi·j·k/order)` of ℤ/order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Character {
    pub order: u32,
    pub index: u32,
}

impl Character {
    pub fn is_trivial(&self) -> bool {
        self.index % self.order == 0
    }

    pub fn conjugate(&self) -> Self {
        Self { order: self.order, index: (self.order - self.index % self.order) % self.order }
    }

    /// `χ(k)`. Exact for the real values `±1`.
    pub fn value(&self, class: u32) -> Complex64 {
        root_of_unity(self.index as u64 * class as u64, self.order as u64)
    }
}

/// `exp(2πi·k/m)`, exact at `1` and `-1`.
pub fn root_of_unity(k: u64, m: u64) -> Complex64 {
    let r = k % m;
    if r == 0 {
        Complex64::new(1.0, 0.0)
    } else if 2 * r == m {
        Complex64::new(-1.0, 0.0)
    } else {
        let theta = 2.0 * std::f64::consts::PI * r as f64 / m as f64;
        Complex64::new(theta.cos(), theta.sin())
    }
}

pub fn character_value(chi: &Character, class: u32) -> Complex64 {
    chi.value(class)
}

/// Truncated `L_P(s, χ) = Π (1 - χ(φ(p)) N(p)^{-s})^{-1}` over `norm <= cutoff`.
pub fn truncated_l(sys: &ZetaSystem, chi: &Character, s: Complex64, pol: &TruncationPolicy) -> Result<Truncated> {
    check_character(sys, chi)?;
    let primes = sys.primes(pol.cutoff)?;
    let (log, factors) = euler_log(&primes, s, |p| Some(chi.value(p.frob_class)))?;
    let (tail, certified) = pol.tail(sys, s.re);
    Ok(Truncated { log, tail, certified, factors })
}

/// Truncated `Z_P(s) = Π_j L_P(s, χ_j)` over the same primes.
pub fn truncated_z(sys: &ZetaSystem, s: Complex64, pol: &TruncationPolicy) -> Result<Truncated> {
    let group = CyclicGroup::new(sys.group_order())?;
    let mut log = Complex64::new(0.0, 0.0);
    let mut factors = 0;
    for chi in group.characters() {
        let t = truncated_l(sys, &chi, s, pol)?;
        log += t.log;
        factors = t.factors;
    }
    let (tail, certified) = pol.tail(sys, s.re);
    Ok(Truncated { log, tail: tail * group.order() as f64, certified, factors })
}

/// `|log Z_P(s) - Σ_{n | #G} (#G/n)·log ζ_{P_n}(ns)|` over the primes up to `cutoff`.
///
/// The identity holds prime by prime, so the residual is pure rounding.
pub fn zp_factorization_residual(sys: &ZetaSystem, s: Complex64, cutoff: f64) -> Result<f64> {
    let m = sys.group_order();
    let pol = TruncationPolicy::new(cutoff);
    let z = if m >= 2 { truncated_z(sys, s, &pol)?.log } else { crate::euler::truncated_zeta(sys, s, &pol)?.log };
    let primes = sys.primes(cutoff)?;
    let one = Complex64::new(1.0, 0.0);
    let mut rhs = Complex64::new(0.0, 0.0);
    for n in divisors(m as u64) {
        let n = n as u32;
        let ns = s * n as f64;
        let (log, _) = euler_log(&primes, ns, |p| (p.frob_order == n).then_some(one))?;
        rhs += log * (m / n) as f64;
    }
    Ok((z - rhs).norm())
}

fn check_character(sys: &ZetaSystem, chi: &Character) -> Result<()> {
    if chi.order != sys.group_order() {
        return Err(ZetaError::InvalidInput(format!(
            "character of ℤ/{} used on a system with #G = {}",
            chi.order,
            sys.group_order()
        )));
    }
    Ok(())
}
