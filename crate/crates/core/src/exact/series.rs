//! Truncated power series in `u` with exact rational coefficients.
//!
//! A series of order `L` knows its coefficients of `u^0 ..= u^L`; every
//! operation is exact up to that order.

use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{rat, Polynomial};
use crate::error::{Result, ZetaError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// Series of order `order` from the given leading coefficients (padded with zeros).
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_poly(p: &Polynomial, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigRational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `f(u^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let order = self.order();
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > order {
                break;
            }
            out[i * k] = c.clone();
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(ZetaError::InvalidInput("series inverse needs a nonzero constant term".into()));
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// `f^alpha` for rational `alpha`, requiring `f(0) = 1`. Uses `f g' = alpha f' g`.
    pub fn pow_rational(&self, alpha: &BigRational) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(ZetaError::InvalidInput("rational power needs constant term 1".into()));
        }
        let n = self.order();
        let mut g = vec![BigRational::zero(); n + 1];
        g[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let w = alpha * rat(j as i64) - rat((k - j) as i64);
                acc += w * &self.coeffs[j] * &g[k - j];
            }
            g[k] = acc / rat(k as i64);
        }
        Ok(Self { coeffs: g })
    }

    /// The unique `k`-th root with constant term 1.
    pub fn nth_root(&self, k: u32) -> Result<Self> {
        self.pow_rational(&BigRational::new(1.into(), (k as i64).into()))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `log f` for `f(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(ZetaError::InvalidInput("series log needs constant term 1".into()));
        }
        let n = self.order();
        let deriv = self.derivative();
        let ratio = deriv.div(&self.truncate(n.saturating_sub(1)))?;
        let mut out = vec![BigRational::zero(); n + 1];
        for k in 1..=n {
            out[k] = ratio.coeffs[k - 1].clone() / rat(k as i64);
        }
        Ok(Self { coeffs: out })
    }

    /// `exp f` for `f(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(ZetaError::InvalidInput("series exp needs constant term 0".into()));
        }
        let n = self.order();
        let mut e = vec![BigRational::zero(); n + 1];
        e[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += rat(j as i64) * &self.coeffs[j] * &e[k - j];
                }
            }
            e[k] = acc / rat(k as i64);
        }
        Ok(Self { coeffs: e })
    }

    /// Derivative, of order one less (order 0 stays order 0).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::new(Vec::new(), 0);
        }
        Self { coeffs: (1..=n).map(|i| &self.coeffs[i] * rat(i as i64)).collect() }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect() }
    }
}
