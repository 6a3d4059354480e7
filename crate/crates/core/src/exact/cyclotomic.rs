//! Exact arithmetic in the cyclotomic field ℚ(ζ_q) for prime `q`.
//!
//! Elements are stored on the power basis `1, ζ, …, ζ^{q-2}`; products are
//! formed cyclically in ℤ/q and reduced with `1 + ζ + … + ζ^{q-1} = 0`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::poly::rat;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    q: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(q: u32) -> Self {
        assert!(q >= 2, "cyclotomic order must be >= 2");
        Self { q, coeffs: vec![BigRational::zero(); q as usize - 1] }
    }

    pub fn one(q: u32) -> Self {
        Self::from_rational(q, rat(1))
    }

    pub fn from_rational(q: u32, r: BigRational) -> Self {
        let mut z = Self::zero(q);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(q: u32, n: i64) -> Self {
        Self::from_rational(q, rat(n))
    }

    /// `ζ^k`.
    pub fn zeta_pow(q: u32, k: u64) -> Self {
        let mut full = vec![BigRational::zero(); q as usize];
        full[(k % q as u64) as usize] = rat(1);
        Self::reduce(q, full)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn reduce(q: u32, mut full: Vec<BigRational>) -> Self {
        let top = full.pop().expect("q >= 2");
        for c in full.iter_mut() {
            *c -= &top;
        }
        Self { q, coeffs: full }
    }

    fn full(&self) -> Vec<BigRational> {
        let mut v = self.coeffs.clone();
        v.push(BigRational::zero());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in ℚ.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            let w = crate::group::root_of_unity(i as u64, self.q as u64);
            acc += w * c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// The Galois automorphism `ζ ↦ ζ^k`, `k` coprime to `q`.
    pub fn galois(&self, k: u32) -> Self {
        assert!(k % self.q != 0, "Galois exponent must be a unit");
        let q = self.q as usize;
        let mut full = vec![BigRational::zero(); q];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[(i * k as usize) % q] += c;
        }
        Self::reduce(self.q, full)
    }

    /// Complex conjugation (`ζ ↦ ζ^{-1}`).
    pub fn conj(&self) -> Self {
        self.galois(self.q - 1)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { q: self.q, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Field norm to ℚ.
    pub fn norm(&self) -> BigRational {
        let mut acc = self.clone();
        for k in 2..self.q {
            acc = &acc * &self.galois(k);
        }
        acc.to_rational().expect("norm is rational")
    }

    /// Inverse via the product of nontrivial conjugates over the norm.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let mut others = Self::one(self.q);
        for k in 2..self.q {
            others = &others * &self.galois(k);
        }
        let n = (&others * self).to_rational().expect("norm is rational");
        others.scale(&n.recip())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.q, rhs.q);
        Cyclotomic { q: self.q, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.q, rhs.q);
        Cyclotomic { q: self.q, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic { q: self.q, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.q, rhs.q);
        let q = self.q as usize;
        let a = self.full();
        let b = rhs.full();
        let mut full = vec![BigRational::zero(); q];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    full[(i + j) % q] += x * y;
                }
            }
        }
        Cyclotomic::reduce(self.q, full)
    }
}
