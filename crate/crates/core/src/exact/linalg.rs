//! Exact determinants and polynomial interpolation.
//!
//! Determinants of polynomial matrices `M(u)` are obtained by evaluating
//! at the integer nodes `u = 0, 1, …, deg` and interpolating exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::Cyclotomic;
use super::poly::{rat, Polynomial};

/// Minimal field interface for elimination and interpolation.
pub trait Field: Clone {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &BigRational) -> Self;
}

impl Field for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &BigRational) -> Self {
        self * r
    }
}

impl Field for Cyclotomic {
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Cyclotomic::zero(self.order())
    }
    fn one_like(&self) -> Self {
        Cyclotomic::one(self.order())
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        Cyclotomic::inv(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic::scale(self, r)
    }
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Determinant over a field by Gaussian elimination.
pub fn det_field<F: Field>(mut m: Vec<Vec<F>>) -> F {
    let n = m.len();
    assert!(n > 0, "empty matrix");
    let mut det = m[0][0].one_like();
    for k in 0..n {
        let pivot = match (k..n).find(|&r| !m[r][k].is_zero()) {
            Some(r) => r,
            None => return m[0][0].zero_like(),
        };
        if pivot != k {
            m.swap(k, pivot);
            det = det.neg();
        }
        let inv = m[k][k].inv();
        det = det.mul(&m[k][k]);
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].mul(&inv);
            for j in k..n {
                let t = factor.mul(&m[k][j]);
                m[i][j] = m[i][j].sub(&t);
            }
        }
    }
    det
}

/// Coefficients (ascending) of the unique polynomial of degree `< values.len()`
/// taking `values[i]` at `u = i`.
pub fn interpolate<F: Field>(values: &[F]) -> Vec<F> {
    let n = values.len();
    if n == 0 {
        return Vec::new();
    }
    let mut dd = values.to_vec();
    for level in 1..n {
        let inv = BigRational::new(1.into(), (level as i64).into());
        for i in (level..n).rev() {
            dd[i] = dd[i].sub(&dd[i - 1]).scale(&inv);
        }
    }
    // Newton form → monomial basis.
    let zero = values[0].zero_like();
    let mut coeffs = vec![dd[n - 1].clone()];
    for k in (0..n - 1).rev() {
        // coeffs ← coeffs·(u - k) + dd[k]
        let mut next = vec![zero.clone(); coeffs.len() + 1];
        let node = rat(k as i64);
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.scale(&node));
        }
        next[0] = next[0].add(&dd[k]);
        coeffs = next;
    }
    coeffs
}

/// `det M(u)` for an integer polynomial matrix of degree at most `degree` in `u`.
pub fn det_poly_integer<B>(degree: usize, build: B) -> Polynomial
where
    B: Fn(i64) -> Vec<Vec<BigInt>>,
{
    let values: Vec<BigRational> =
        (0..=degree).map(|u| BigRational::from_integer(det_bareiss(build(u as i64)))).collect();
    Polynomial::new(interpolate(&values))
}

/// `det M(u)` over ℚ(ζ_q), returned as ascending cyclotomic coefficients.
pub fn det_poly_cyclotomic<B>(degree: usize, build: B) -> Vec<Cyclotomic>
where
    B: Fn(i64) -> Vec<Vec<Cyclotomic>>,
{
    let values: Vec<Cyclotomic> = (0..=degree).map(|u| det_field(build(u as i64))).collect();
    let mut coeffs = interpolate(&values);
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_field_elimination() {
        let m = ints(&[&[0, 2, 1], &[3, -1, 4], &[5, 9, -2]]);
        let d = det_bareiss(m.clone());
        let r: Vec<Vec<BigRational>> =
            m.iter().map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
        assert_eq!(BigRational::from_integer(d.clone()), det_field(r));
        assert_eq!(d, BigInt::from(84));
        assert_eq!(det_bareiss(ints(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Polynomial::from_i64(&[3, -1, 0, 2]);
        let values: Vec<BigRational> = (0..4).map(|x| p.eval(&rat(x))).collect();
        assert_eq!(Polynomial::new(interpolate(&values)), p);
    }

    #[test]
    fn polynomial_determinant() {
        // det [[1-u, u], [u, 1+u]] = 1 - 2u^2
        let d = det_poly_integer(2, |u| ints(&[&[1 - u, u], &[u, 1 + u]]));
        assert_eq!(d, Polynomial::from_i64(&[1, 0, -2]));
    }
}
