//! Hurwitz zeta, Dirichlet L-functions, the Riemann zeta and xi functions.

use num_complex::Complex64;

use super::character::DirichletCharacter;
use crate::error::{Result, ZetaError};

/// `B_{2k}` for `k = 1..=10`.
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// Hurwitz zeta `ζ(s, a) = Σ_{n>=0} (n + a)^{-s}` for `a > 0`, `s ≠ 1`,
/// by Euler–Maclaurin summation.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Complex64 {
    hurwitz_regular(s, a) + (s - 1.0).inv()
}

/// `ζ(s, a) - 1/(s - 1)`, finite at `s = 1`.
fn hurwitz_regular(s: Complex64, a: f64) -> Complex64 {
    let n = 50usize.max((2.0 * s.im.abs()).ceil() as usize);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        sum += (-s * (k as f64 + a).ln()).exp();
    }
    let x = n as f64 + a;
    let lx = x.ln();
    let x_ms = (-s * lx).exp();
    // x^{1-s}/(s-1) - 1/(s-1), continuous through s = 1.
    let t = (1.0 - s) * lx;
    let integral = if t.norm() < 1e-6 { -lx * (1.0 + t * 0.5 + t * t / 6.0) } else { (t.exp() - 1.0) / (s - 1.0) };
    sum += integral + x_ms * 0.5;
    // Σ B_{2k}/(2k)! · s(s+1)…(s+2k-2) · x^{-s-2k+1}
    let mut poch = s;
    let mut xpow = x_ms / x;
    let mut fact = 2.0;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let k = k + 1;
        sum += poch * xpow * (b / fact);
        let j = 2 * k as u32;
        poch *= (s + (j - 1) as f64) * (s + j as f64);
        xpow /= x * x;
        fact *= ((j + 1) * (j + 2)) as f64;
    }
    sum
}

/// Riemann zeta.
pub fn zeta(s: Complex64) -> Result<Complex64> {
    if (s - 1.0).norm() < 1e-15 {
        return Err(ZetaError::PoleAtOne);
    }
    Ok(hurwitz_zeta(s, 1.0))
}

/// `L(s, χ) = m^{-s} Σ_a χ(a) ζ(s, a/m)`. Principal characters have a pole at 1.
pub fn dirichlet_l(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    if chi.is_principal() && (s - 1.0).norm() < 1e-15 {
        return Err(ZetaError::PoleAtOne);
    }
    let m = chi.modulus();
    if m == 1 {
        return zeta(s);
    }
    let mf = m as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    // The 1/(s-1) parts cancel unless χ is principal.
    let mut weight = Complex64::new(0.0, 0.0);
    for a in 1..m {
        let c = chi.value(a);
        if c.norm() > 0.0 {
            acc += c * hurwitz_regular(s, a as f64 / mf);
            weight += c;
        }
    }
    if chi.is_principal() {
        acc += weight / (s - 1.0);
    }
    Ok(acc * (-s * mf.ln()).exp())
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `log Γ(z)` (Lanczos, reflection for `Re z < 1/2`). Any branch; `exp` of it is Γ.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    use std::f64::consts::PI;
    if z.re < 0.5 {
        let pi = Complex64::new(PI, 0.0);
        return pi.ln() - (z * PI).sin().ln() - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += *c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// `ξ(s) = s(s-1)/2 · π^{-s/2} Γ(s/2) ζ(s)`, entire.
pub fn xi(s: Complex64) -> Complex64 {
    use std::f64::consts::PI;
    if (s - 1.0).norm() < 1e-12 {
        return Complex64::new(0.5, 0.0);
    }
    let z = hurwitz_zeta(s, 1.0);
    let pre = 0.5 * s * (s - 1.0);
    pre * (-(s * 0.5) * PI.ln() + ln_gamma(s * 0.5)).exp() * z
}
