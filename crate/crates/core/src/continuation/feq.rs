//! Residuals of the functional equations over a common truncated prime set.

use num_complex::Complex64;

use super::GFunction;
use crate::error::{Result, ZetaError};
use crate::euler::{truncated_zeta, truncated_zeta_pn, TruncationPolicy, ZetaSystem};
use crate::group::{truncated_l, truncated_z, CyclicGroup};
use crate::primes::{is_prime, prime_factors};

fn check_re_above_one(s: Complex64) -> Result<()> {
    if s.re <= 1.0 {
        return Err(ZetaError::Domain(format!("Re s = {} must exceed 1", s.re)));
    }
    Ok(())
}

fn prime_order(sys: &ZetaSystem) -> Result<u32> {
    let q = sys.group_order();
    if !is_prime(q as u64) {
        return Err(ZetaError::InvalidInput(format!("#G = {q} is not prime")));
    }
    Ok(q)
}

/// Wraps the imaginary part into `(-π, π]`.
pub(crate) fn wrap(z: Complex64) -> Complex64 {
    use std::f64::consts::PI;
    let mut im = z.im.rem_euclid(2.0 * PI);
    if im > PI {
        im -= 2.0 * PI;
    }
    Complex64::new(z.re, im)
}

/// `q·log ζ_P(s) - log Z_P(s)` truncated at `X`, with its tail bound.
pub fn truncated_log_g(sys: &ZetaSystem, s: Complex64, cutoff: f64) -> Result<(Complex64, f64)> {
    let q = sys.group_order() as f64;
    let pol = TruncationPolicy::new(cutoff);
    let z = truncated_zeta(sys, s, &pol)?;
    let big = truncated_z(sys, s, &pol)?;
    Ok((z.log * q - big.log, q * z.tail + big.tail))
}

/// `|log[ζ_{P_q}(s)^q / ζ_{P_q}(qs)] - log[ζ_P(s)^q / Z_P(s)]|` over the primes up to `X`.
pub fn feq_residual(sys: &ZetaSystem, s: Complex64, cutoff: f64) -> Result<f64> {
    check_re_above_one(s)?;
    let q = prime_order(sys)?;
    let pol = TruncationPolicy::new(cutoff);
    let lhs = truncated_zeta_pn(sys, q, s, &pol)?.log * q as f64 - truncated_zeta_pn(sys, q, s * q as f64, &pol)?.log;
    let (rhs, _) = truncated_log_g(sys, s, cutoff)?;
    Ok((lhs - rhs).norm())
}

/// `|log g(s) - log g_X(s)|` (modulo `2πi`) against the truncated products,
/// together with the truncation bound it should respect.
pub fn overlap_residual(g: &dyn GFunction, sys: &ZetaSystem, s: Complex64, cutoff: f64) -> Result<(f64, f64)> {
    check_re_above_one(s)?;
    let (trunc, tail) = truncated_log_g(sys, s, cutoff)?;
    let exact = g.log_eval(s)?;
    Ok((wrap(exact - trunc).norm(), tail))
}

fn composite_parts(sys: &ZetaSystem) -> Result<(u32, u32)> {
    let m = sys.group_order();
    let f = prime_factors(m as u64);
    if f.len() != 2 || (f[0] * f[1]) as u32 != m {
        return Err(ZetaError::GroupOrder(m));
    }
    Ok((f[0] as u32, f[1] as u32))
}

/// `log Z_P^{(H)}(s)` for the subgroup `H` of order `h`: the product of the
/// `L_P(s, χ)` over the characters trivial on the complement, i.e. `χ^h = 1`.
fn log_z_subgroup(sys: &ZetaSystem, h: u32, s: Complex64, pol: &TruncationPolicy) -> Result<Complex64> {
    let m = sys.group_order();
    let group = CyclicGroup::new(m)?;
    let step = m / h;
    let mut acc = Complex64::new(0.0, 0.0);
    for t in 0..h {
        acc += truncated_l(sys, &group.character(t * step), s, pol)?.log;
    }
    Ok(acc)
}

/// Both sides of the composite-order identity, as logs.
fn composite_sides(sys: &ZetaSystem, s: Complex64, cutoff: f64) -> Result<(Complex64, Complex64)> {
    check_re_above_one(s)?;
    let (q1, q2) = composite_parts(sys)?;
    let m = q1 * q2;
    let pol = TruncationPolicy::new(cutoff);
    let zpm = |w: Complex64| truncated_zeta_pn(sys, m, w, &pol).map(|t| t.log);
    let lhs =
        zpm(s * m as f64)? + zpm(s)? * m as f64 - zpm(s * q1 as f64)? * q2 as f64 - zpm(s * q2 as f64)? * q1 as f64;
    let rhs = truncated_z(sys, s, &pol)?.log + truncated_zeta(sys, s, &pol)?.log * m as f64
        - log_z_subgroup(sys, q1, s, &pol)? * q2 as f64
        - log_z_subgroup(sys, q2, s, &pol)? * q1 as f64;
    Ok((lhs, rhs))
}

/// Residual of the composite-order identity for `#G = q₁q₂`.
pub fn composite_feq_residual(sys: &ZetaSystem, s: Complex64, cutoff: f64) -> Result<f64> {
    let (lhs, rhs) = composite_sides(sys, s, cutoff)?;
    Ok((lhs - rhs).norm())
}

/// Residual of `f(s)^{q₁}/f(q₁s) = g(s)` with `f = ζ_{P_{q₁q₂}}(s)^{q₂}/ζ_{P_{q₁q₂}}(q₂s)`
/// and `g` the right-hand side of the composite identity.
pub fn nested_composite_residual(sys: &ZetaSystem, s: Complex64, cutoff: f64) -> Result<f64> {
    let (q1, q2) = composite_parts(sys)?;
    let m = q1 * q2;
    let pol = TruncationPolicy::new(cutoff);
    let log_f = |w: Complex64| -> Result<Complex64> {
        Ok(truncated_zeta_pn(sys, m, w, &pol)?.log * q2 as f64 - truncated_zeta_pn(sys, m, w * q2 as f64, &pol)?.log)
    };
    let lhs = log_f(s)? * q1 as f64 - log_f(s * q1 as f64)?;
    let (_, rhs) = composite_sides(sys, s, cutoff)?;
    Ok((lhs - rhs).norm())
}
