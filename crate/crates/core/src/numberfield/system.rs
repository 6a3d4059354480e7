//! Zeta systems of abelian extensions of ℚ cut out by a Dirichlet character.

use std::sync::Arc;

use super::character::{CharacterSpec, DirichletCharacter};
use crate::error::{Result, ZetaError};
use crate::euler::{PrimeBackend, PrimeDatum, ZetaSystem};
use crate::primes::{is_prime, sieve};
use crate::spec::SystemSpec;

/// Rosser–Schoenfeld: `π(t) < 1.25506 t / ln t` for `t > 1`.
const PI_BOUND: f64 = 1.25506;

/// Rational primes with Frobenius class the discrete log of `χ(p)`.
#[derive(Clone, Debug)]
pub struct AbelianBackend {
    character: DirichletCharacter,
    spec: CharacterSpec,
    quadratic_d: Option<i64>,
}

impl PrimeBackend for AbelianBackend {
    fn group_order(&self) -> u32 {
        self.character.order()
    }

    fn enumerate(&self, cutoff: f64) -> Result<Vec<PrimeDatum>> {
        if cutoff < 2.0 {
            return Ok(Vec::new());
        }
        let q = self.character.order();
        let mut out = Vec::new();
        for p in sieve(cutoff.floor() as u64)? {
            if let Some(e) = self.character.exponent(p) {
                out.push(PrimeDatum::new(p, p as f64, e, q)?);
            }
        }
        Ok(out)
    }

    fn tail_sum_bound(&self, cutoff: f64, sigma: f64) -> f64 {
        // Σ_{p > X} p^{-σ} <= σ ∫_X^∞ π(t) t^{-σ-1} dt with π(t) <= C t / ln X on t >= X.
        let x = cutoff.max(2.0);
        PI_BOUND * sigma * x.powf(1.0 - sigma) / ((sigma - 1.0) * x.ln())
    }

    fn tail_sum_estimate(&self, cutoff: f64, sigma: f64) -> f64 {
        let x = cutoff.max(2.0);
        x.powf(1.0 - sigma) / ((sigma - 1.0) * x.ln())
    }

    fn excluded_norms(&self) -> Vec<f64> {
        self.character.ramified_primes().into_iter().map(|p| p as f64).collect()
    }

    fn spec(&self) -> SystemSpec {
        match self.quadratic_d {
            Some(d) => SystemSpec::Quadratic { d },
            None => SystemSpec::Cyclic(self.spec.clone()),
        }
    }
}

/// A zeta system over ℚ together with its defining character.
#[derive(Clone, Debug)]
pub struct AbelianSystem {
    character: DirichletCharacter,
    system: ZetaSystem,
}

impl AbelianSystem {
    fn build(character: DirichletCharacter, spec: CharacterSpec, quadratic_d: Option<i64>) -> Result<Self> {
        if character.order() < 2 {
            return Err(ZetaError::InvalidInput("the defining character must be nontrivial".into()));
        }
        let backend = AbelianBackend { character: character.clone(), spec, quadratic_d };
        Ok(Self { character, system: ZetaSystem::new(Arc::new(backend)) })
    }

    /// A character of any order `>= 2` (used for composite group orders).
    pub fn from_character_spec(spec: &CharacterSpec) -> Result<Self> {
        let chi = spec.build()?;
        Self::build(chi, spec.clone(), None)
    }

    pub fn character(&self) -> &DirichletCharacter {
        &self.character
    }

    pub fn system(&self) -> &ZetaSystem {
        &self.system
    }

    pub fn group_order(&self) -> u32 {
        self.character.order()
    }

    /// Primes dividing the modulus, excluded from the Euler products.
    pub fn ramified(&self) -> Vec<u64> {
        self.character.ramified_primes()
    }
}

/// ℚ(√d)/ℚ: split primes in `P_1`, inert primes in `P_2`.
pub fn kronecker_system(d: i64) -> Result<AbelianSystem> {
    let chi = DirichletCharacter::kronecker(d)?;
    AbelianSystem::build(chi, CharacterSpec::Kronecker { kronecker_d: d }, Some(d))
}

/// The cyclic extension cut out by a character of prime order.
pub fn cyclic_system(spec: &CharacterSpec) -> Result<AbelianSystem> {
    let chi = spec.build()?;
    let q = chi.order();
    if !is_prime(q as u64) {
        return Err(ZetaError::InvalidInput(format!("character order {q} is not prime")));
    }
    AbelianSystem::build(chi, spec.clone(), None)
}
