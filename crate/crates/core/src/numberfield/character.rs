//! Dirichlet characters stored as exponent tables.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ZetaError};
use crate::group::root_of_unity;
use crate::primes::{gcd, is_squarefree};

/// A Dirichlet character modulo `modulus` with values in the `ambient`-th
/// roots of unity: `χ(a) = exp(2πi·e_a/ambient)` for `gcd(a, modulus) = 1`,
/// `χ(a) = 0` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    ambient: u32,
    exps: Vec<Option<u32>>,
}

/// How a character is specified in configuration files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CharacterSpec {
    Kronecker { kronecker_d: i64 },
    Generators { modulus: u64, order: u32, generator_values: Vec<(u64, u32)> },
}

impl CharacterSpec {
    pub fn build(&self) -> Result<DirichletCharacter> {
        match self {
            CharacterSpec::Kronecker { kronecker_d } => DirichletCharacter::kronecker(*kronecker_d),
            CharacterSpec::Generators { modulus, order, generator_values } => {
                DirichletCharacter::from_generators(*modulus, *order, generator_values)
            }
        }
    }
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1, "Jacobi symbol needs odd n");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Kronecker symbol `(d/n)` for `n >= 1`.
pub fn kronecker_symbol(d: i64, n: u64) -> i32 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = 1;
    while n % 2 == 0 {
        n /= 2;
        let r = d.rem_euclid(8);
        result *= match r {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    if n == 1 {
        result
    } else {
        result * jacobi(d, n)
    }
}

/// Discriminant of ℚ(√d) for square-free `d`.
pub fn fundamental_discriminant(d: i64) -> i64 {
    if d.rem_euclid(4) == 1 {
        d
    } else {
        4 * d
    }
}

impl DirichletCharacter {
    /// The quadratic character `n ↦ (D/n)` of ℚ(√d), modulo `|D|`.
    pub fn kronecker(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(d.unsigned_abs()) {
            return Err(ZetaError::InvalidInput(format!("d = {d} must be square-free and not 0 or 1")));
        }
        let disc = fundamental_discriminant(d);
        let modulus = disc.unsigned_abs();
        let exps = (0..modulus)
            .map(|a| match kronecker_symbol(disc, if a == 0 { modulus } else { a }) {
                1 => Some(0),
                -1 => Some(1),
                _ => None,
            })
            .collect();
        Ok(Self { modulus, ambient: 2, exps })
    }

    /// The character with `χ(g) = exp(2πi·k/order)` on each listed generator `(g, k)`.
    /// The generators must generate `(ℤ/modulus)^×` and the assignment must be consistent.
    pub fn from_generators(modulus: u64, order: u32, generator_values: &[(u64, u32)]) -> Result<Self> {
        if modulus < 2 || order == 0 {
            return Err(ZetaError::InvalidInput("modulus must be >= 2 and order positive".into()));
        }
        let m = modulus as usize;
        let mut exps: Vec<Option<u32>> = vec![None; m];
        exps[1 % m] = Some(0);
        let mut frontier = vec![1u64 % modulus];
        while let Some(a) = frontier.pop() {
            let ea = exps[a as usize].expect("visited");
            for &(g, k) in generator_values {
                if gcd(g % modulus, modulus) != 1 {
                    return Err(ZetaError::InvalidInput(format!("generator {g} is not a unit mod {modulus}")));
                }
                let b = (a * (g % modulus)) % modulus;
                let eb = (ea + k % order) % order;
                match exps[b as usize] {
                    None => {
                        exps[b as usize] = Some(eb);
                        frontier.push(b);
                    }
                    Some(prev) if prev != eb => {
                        return Err(ZetaError::InvalidInput(format!(
                            "generator values are inconsistent at residue {b} mod {modulus}"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        for a in 1..modulus {
            if gcd(a, modulus) == 1 && exps[a as usize].is_none() {
                return Err(ZetaError::InvalidInput(format!("generators do not reach residue {a} mod {modulus}")));
            }
        }
        Ok(Self { modulus, ambient: order, exps })
    }

    /// The principal character modulo `modulus`.
    pub fn principal(modulus: u64) -> Self {
        let exps = (0..modulus).map(|a| (gcd(a, modulus) == 1).then_some(0)).collect();
        Self { modulus, ambient: 1, exps }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exponent `e` with `χ(n) = exp(2πi·e/order())`, or `None` when `χ(n) = 0`.
    pub fn exponent(&self, n: u64) -> Option<u32> {
        let scale = self.ambient / self.order();
        self.exps[(n % self.modulus) as usize].map(|e| e / scale)
    }

    /// The exact order of the character.
    pub fn order(&self) -> u32 {
        let g = self.exps.iter().flatten().fold(self.ambient as u64, |acc, &e| gcd(acc, e as u64));
        (self.ambient as u64 / g.max(1)) as u32
    }

    pub fn value(&self, n: u64) -> Complex64 {
        match self.exponent(n) {
            Some(e) => root_of_unity(e as u64, self.order() as u64),
            None => Complex64::new(0.0, 0.0),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let amb = self.ambient;
        Self {
            modulus: self.modulus,
            ambient: amb,
            exps: self.exps.iter().map(|e| e.map(|e| ((e as u64 * k as u64) % amb as u64) as u32)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        self.pow(self.ambient - 1)
    }

    pub fn is_principal(&self) -> bool {
        self.order() == 1
    }

    /// `χ(-1) = ±1`.
    pub fn is_even(&self) -> bool {
        self.value(self.modulus - 1).re > 0.0
    }

    /// Primes dividing the modulus (where `χ(p) = 0`).
    pub fn ramified_primes(&self) -> Vec<u64> {
        crate::primes::prime_factors(self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_small_table() {
        // Quadratic residues mod 7: 1, 2, 4.
        let v: Vec<i32> = (0..7).map(|a| jacobi(a, 7)).collect();
        assert_eq!(v, vec![0, 1, 1, -1, 1, -1, -1]);
        assert_eq!(jacobi(2, 15), 1);
        assert_eq!(jacobi(7, 15), -1);
    }

    #[test]
    fn kronecker_five_matches_squares_mod_five() {
        let chi = DirichletCharacter::kronecker(5).unwrap();
        assert_eq!(chi.modulus(), 5);
        let squares: Vec<u64> = (1..5u64).map(|x| x * x % 5).collect();
        for p in [2u64, 3, 7, 11, 13, 19, 29] {
            let expect = if squares.contains(&(p % 5)) { 1.0 } else { -1.0 };
            assert_eq!(chi.value(p).re, expect, "p = {p}");
        }
        assert_eq!(chi.value(5).norm(), 0.0);
        assert_eq!(chi.ramified_primes(), vec![5]);
        assert!(chi.is_even());
    }

    #[test]
    fn kronecker_minus_one_is_mod_four() {
        let chi = DirichletCharacter::kronecker(-1).unwrap();
        assert_eq!(chi.modulus(), 4);
        for p in [3u64, 5, 7, 11, 13, 17] {
            let expect = if p % 4 == 1 { 1.0 } else { -1.0 };
            assert_eq!(chi.value(p).re, expect);
        }
        assert!(!chi.is_even());
    }

    #[test]
    fn invalid_d_rejected() {
        for d in [0, 1, 4, -8, 12] {
            assert!(DirichletCharacter::kronecker(d).is_err(), "d = {d}");
        }
    }

    #[test]
    fn cubic_character_mod_seven() {
        let chi = DirichletCharacter::from_generators(7, 3, &[(3, 1)]).unwrap();
        assert_eq!(chi.order(), 3);
        // Cubes mod 7 are {1, 6}.
        for a in 1..7u64 {
            let is_cube = (1..7u64).any(|x| x * x * x % 7 == a);
            assert_eq!(chi.exponent(a) == Some(0), is_cube, "a = {a}");
        }
        let w = chi.value(3);
        assert!((w - Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)).norm() < 1e-15);
        assert_eq!(chi.pow(3).order(), 1);
        assert_eq!(chi.pow(2), chi.conj());
    }

    #[test]
    fn characters_are_multiplicative_and_orthogonal() {
        let chars = [
            DirichletCharacter::from_generators(7, 6, &[(3, 1)]).unwrap(),
            DirichletCharacter::from_generators(7, 3, &[(3, 1)]).unwrap(),
            DirichletCharacter::kronecker(5).unwrap(),
            DirichletCharacter::kronecker(-3).unwrap(),
            DirichletCharacter::kronecker(2).unwrap(),
        ];
        for chi in &chars {
            let m = chi.modulus();
            for a in 0..m {
                for b in 0..m {
                    let lhs = chi.value(a * b);
                    let rhs = chi.value(a) * chi.value(b);
                    assert!((lhs - rhs).norm() < 1e-14);
                }
            }
            let sum: Complex64 = (0..m).map(|a| chi.value(a)).sum();
            assert!(sum.norm() < 1e-13, "orthogonality for modulus {m}");
        }
    }

    #[test]
    fn inconsistent_generators_rejected() {
        // 3 has order 6 mod 7; asking χ(3) to have exponent 1 in ℤ/4 is inconsistent.
        assert!(DirichletCharacter::from_generators(7, 4, &[(3, 1)]).is_err());
        // 2 generates only the squares mod 7.
        assert!(DirichletCharacter::from_generators(7, 3, &[(2, 1)]).is_err());
    }
}
