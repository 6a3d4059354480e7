//! `ζ_{P_q}` of a voltage cover as an exact power series in `u = q_g^{-s}`,
//! by direct enumeration and by the functional-equation recursion, and `g`
//! as a rational function of `u`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cycles::{primitive_classes, DEFAULT_CLASS_BUDGET};
use super::ihara::ihara_det;
use super::voltage::VoltageGraph;
use crate::continuation::{GFunction, Provenance, SingularPoint, SingularityCatalog, PROXIMITY_RADIUS};
use crate::error::{Result, ZetaError};
use crate::exact::poly::Polynomial;
use crate::exact::series::PowerSeries;

/// Largest truncation order accepted for graph series.
pub const MAX_SERIES_ORDER: usize = 24;

/// `G(u) = num(u) / den(u)` with `num = Π_{j>=1} det(I - uT_{χ_j})` and
/// `den = ζ_X(u)^{-(q_c-1)}`, reduced to lowest terms with `num(0) = den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn of_cover(vg: &VoltageGraph) -> Result<Self> {
        let num = vg.nontrivial_l_product()?;
        let den = ihara_det(vg.base())?.pow(vg.q_c() as usize - 1);
        let common = num.gcd(&den);
        let mut num = num.div_exact(&common)?;
        let mut den = den.div_exact(&common)?;
        let c = den.coeff(0);
        if c.is_zero() {
            return Err(ZetaError::InvalidInput("denominator of G vanishes at u = 0".into()));
        }
        num = num.scale(&c.recip());
        den = den.scale(&c.recip());
        Ok(Self { num, den })
    }

    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        PowerSeries::from_poly(&self.num, order).div(&PowerSeries::from_poly(&self.den, order))
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_SERIES_ORDER {
        return Err(ZetaError::Budget(format!("series order {order} exceeds {MAX_SERIES_ORDER}")));
    }
    Ok(())
}

/// `Π (1 - u^{ν(p)})^{-1}` over primitive classes whose voltage sum has order `q_c`.
pub fn direct_series(vg: &VoltageGraph, order: usize) -> Result<PowerSeries> {
    check_order(order)?;
    let volt = vg.arc_voltages();
    let mut by_len = vec![0i64; order + 1];
    for c in primitive_classes(vg.base(), order, DEFAULT_CLASS_BUDGET)? {
        if c.voltage_sum(&volt, vg.q_c()) != 0 {
            by_len[c.length()] += 1;
        }
    }
    euler_series(&by_len, order)
}

/// `exp(Σ_ν c_ν Σ_k u^{kν}/k)`, i.e. `Π_ν (1 - u^ν)^{-c_ν}`.
pub(crate) fn euler_series(by_len: &[i64], order: usize) -> Result<PowerSeries> {
    let mut log = vec![BigRational::zero(); order + 1];
    for (nu, &c) in by_len.iter().enumerate().skip(1) {
        if c == 0 {
            continue;
        }
        let mut k = 1;
        while k * nu <= order {
            log[k * nu] += BigRational::new(c.into(), (k as i64).into());
            k += 1;
        }
    }
    PowerSeries::new(log, order).exp()
}

/// The unique `F` with `F(0) = 1` and `F(u)^{q_c} = F(u^{q_c}) G(u)`.
pub fn recursive_series(vg: &VoltageGraph, order: usize) -> Result<PowerSeries> {
    check_order(order)?;
    let g = RationalFunction::of_cover(vg)?.series(order)?;
    solve_recursion(&g, vg.q_c(), order)
}

/// Fixed-point iteration `F ← (F(u^q)·G)^{1/q}`; each pass fixes the
/// coefficients up to `q` times further out, so it stops after `O(log order)` passes.
pub(crate) fn solve_recursion(g: &PowerSeries, q: u32, order: usize) -> Result<PowerSeries> {
    if !g.coeff(0).is_one() {
        return Err(ZetaError::InvalidInput("G(0) must be 1".into()));
    }
    let mut f = PowerSeries::one(order);
    for _ in 0..=order + 1 {
        let next = (&f.substitute_power(q as usize) * g).nth_root(q)?;
        if next == f {
            return Ok(f);
        }
        f = next;
    }
    Err(ZetaError::Budget("recursion did not stabilize".into()))
}

/// Both routes to the partial zeta series of a cover.
pub fn partial_zeta_series(vg: &VoltageGraph, order: usize) -> Result<(PowerSeries, PowerSeries)> {
    Ok((direct_series(vg, order)?, recursive_series(vg, order)?))
}

/// Maps the roots of `num` (zeros, positive order) and `den` (poles, negative
/// order) from `u` to `s` with `u = q_g^{-s}`, keeping `0 < Re s < 1`, `0 < Im s < T`.
pub fn graph_singularities_in_s(
    num: &Polynomial,
    den: &Polynomial,
    q_g: u32,
    height: f64,
) -> Result<SingularityCatalog> {
    let common = num.gcd(den);
    let num = num.div_exact(&common)?;
    let den = den.div_exact(&common)?;
    let ln_q = (q_g as f64).ln();
    let period = 2.0 * PI / ln_q;
    let edge = 1e-9;
    let mut points = Vec::new();
    for (poly, sign) in [(&num, 1i64), (&den, -1i64)] {
        if poly.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (factor, mult) in poly.square_free_decomposition() {
            if factor.degree().unwrap_or(0) == 0 {
                continue;
            }
            for u0 in factor.complex_roots()? {
                let re = -u0.norm().ln() / ln_q;
                if !(re > edge && re < 1.0 - edge) {
                    continue;
                }
                let base = (-u0.arg() / ln_q).rem_euclid(period);
                let mut im = if base <= edge { period } else { base };
                while im < height {
                    points.push(SingularPoint::new(Complex64::new(re, im), sign * mult as i64)?);
                    im += period;
                }
            }
        }
    }
    SingularityCatalog::new(points, height)
}

/// `g` of a cover, evaluated through `G(q_g^{-s})`.
pub struct RationalG {
    q_g: u32,
    rational: RationalFunction,
    num: Vec<f64>,
    den: Vec<f64>,
    catalog: Option<SingularityCatalog>,
}

impl RationalG {
    pub fn new(vg: &VoltageGraph) -> Result<Self> {
        let rational = RationalFunction::of_cover(vg)?;
        Ok(Self { q_g: vg.q_g(), num: rational.num.to_f64(), den: rational.den.to_f64(), rational, catalog: None })
    }

    /// Attaches the singularities below `height` for proximity checks.
    pub fn with_catalog(mut self, height: f64) -> Result<Self> {
        self.catalog = Some(self.singularities(height)?);
        Ok(self)
    }

    pub fn rational(&self) -> &RationalFunction {
        &self.rational
    }

    pub fn singularities(&self, height: f64) -> Result<SingularityCatalog> {
        graph_singularities_in_s(&self.rational.num, &self.rational.den, self.q_g, height)
    }

    pub fn u_of(&self, s: Complex64) -> Complex64 {
        (-s * (self.q_g as f64).ln()).exp()
    }
}

impl GFunction for RationalG {
    fn log_eval(&self, s: Complex64) -> Result<Complex64> {
        if let Some(cat) = &self.catalog {
            if let Some((p, d)) = cat.nearest(s) {
                if d < PROXIMITY_RADIUS {
                    return Err(ZetaError::SingularityProximity { s, point: p.location(), distance: d });
                }
            }
        }
        let u = self.u_of(s);
        let n = crate::exact::poly::horner(&self.num, u);
        let d = crate::exact::poly::horner(&self.den, u);
        if n.norm() == 0.0 || d.norm() == 0.0 {
            return Err(ZetaError::SingularityProximity { s, point: s, distance: 0.0 });
        }
        Ok(n.ln() - d.ln())
    }

    fn provenance(&self) -> Provenance {
        Provenance::RationalInU
    }

    fn catalog(&self) -> Option<&SingularityCatalog> {
        self.catalog.as_ref()
    }
}

/// `1/ζ_X` from the Euler product over all classes of length `<= order`, truncated.
pub fn euler_product_inverse(vg_base: &super::multigraph::MultiGraph, order: usize) -> Result<PowerSeries> {
    check_order(order)?;
    let mut by_len = vec![0i64; order + 1];
    for c in primitive_classes(vg_base, order, DEFAULT_CLASS_BUDGET)? {
        by_len[c.length()] += 1;
    }
    euler_series(&by_len, order)?.inverse()
}
