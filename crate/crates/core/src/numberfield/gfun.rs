//! `g` in closed form through Dirichlet L-functions, and a tail-corrected
//! `ζ_{P_q}` for `Re w > 1`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_complex::Complex64;

use super::character::DirichletCharacter;
use super::special::{dirichlet_l, zeta};
use super::system::AbelianSystem;
use crate::continuation::{GFunction, PartialLogSource, Provenance, SingularityCatalog, PROXIMITY_RADIUS};
use crate::error::{Result, ZetaError};
use crate::euler::{euler_log, TruncationPolicy};
use crate::primes::{divisors, is_prime, mobius};

/// `g(s) = [ζ(s)·Π_{p|m}(1 - p^{-s})]^{q-1} / Π_{j=1}^{q-1} L(s, χ^j)`.
///
/// The bracket is `ζ_P`; the `L(s, χ^j)` for `j ≥ 1` need no correction
/// because `χ^j(p) = 0` at the ramified primes already.
pub struct ClosedFormG {
    q: u32,
    powers: Vec<DirichletCharacter>,
    ramified: Vec<u64>,
    catalog: Option<SingularityCatalog>,
}

impl ClosedFormG {
    pub fn new(sys: &AbelianSystem) -> Self {
        let chi = sys.character();
        let q = chi.order();
        Self { q, powers: (1..q).map(|j| chi.pow(j)).collect(), ramified: sys.ramified(), catalog: None }
    }

    /// Attaches a catalog used for proximity checks.
    pub fn with_catalog(mut self, catalog: SingularityCatalog) -> Self {
        self.catalog = Some(catalog);
        self
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The characters `χ^j`, `j = 1..q-1`.
    pub fn powers(&self) -> &[DirichletCharacter] {
        &self.powers
    }

    /// `log ζ_P(s) = log ζ(s) + Σ_{p|m} log(1 - p^{-s})`.
    pub fn log_zeta_p(&self, s: Complex64) -> Result<Complex64> {
        let mut acc = zeta(s)?.ln();
        for &p in &self.ramified {
            acc += (Complex64::new(1.0, 0.0) - (-s * (p as f64).ln()).exp()).ln();
        }
        Ok(acc)
    }

    /// Second route: `ζ_P(s)^q / Π_{j=0}^{q-1} L(s, χ^j)`, with `χ^0` the principal
    /// character modulo `m` (whose L-function is `ζ_P` again).
    pub fn eval_full_product(&self, s: Complex64) -> Result<Complex64> {
        let modulus = self.powers[0].modulus();
        let mut num = self.log_zeta_p(s)?.exp().powu(self.q);
        num /= dirichlet_l(s, &DirichletCharacter::principal(modulus))?;
        for chi in &self.powers {
            num /= dirichlet_l(s, chi)?;
        }
        Ok(num)
    }

    fn check(&self, s: Complex64) -> Result<()> {
        let d = (s - 1.0).norm();
        if d < PROXIMITY_RADIUS {
            return Err(ZetaError::SingularityProximity { s, point: Complex64::new(1.0, 0.0), distance: d });
        }
        if let Some(cat) = &self.catalog {
            if let Some((p, d)) = cat.nearest(s) {
                if d < PROXIMITY_RADIUS {
                    return Err(ZetaError::SingularityProximity { s, point: p.location(), distance: d });
                }
            }
        }
        Ok(())
    }
}

impl GFunction for ClosedFormG {
    fn log_eval(&self, s: Complex64) -> Result<Complex64> {
        self.check(s)?;
        let mut acc = self.log_zeta_p(s)? * (self.q - 1) as f64;
        for chi in &self.powers {
            acc -= dirichlet_l(s, chi)?.ln();
        }
        Ok(acc)
    }

    fn provenance(&self) -> Provenance {
        Provenance::ClosedForm
    }

    fn catalog(&self) -> Option<&SingularityCatalog> {
        self.catalog.as_ref()
    }
}

/// `log ζ_{P_q}(w)` for `Re w > 1`: the truncated product over `p <= X` plus
/// the exact contribution of `p > X`, expressed through L-values.
///
/// With `ℓ_ψ(v) = Σ_{p>X} -log(1 - ψ(p)p^{-v})` (computed as `log L(v, ψ)`
/// minus the finite product), orthogonality and Möbius inversion give
///
/// ```text
/// log ζ_{P_q,>X}(w) = (1 - 1/q) ℓ_{χ⁰}(w)
///                     - (1/q) Σ_{i=1}^{q-1} Σ_{n>=1} (1/n) Σ_{k|n} μ(k) ℓ_{χ^{ik}}(nw).
/// ```
pub struct TailCorrectedPartial {
    sys: AbelianSystem,
    cutoff: f64,
    memo: Mutex<HashMap<(u32, [u64; 2]), Complex64>>,
}

impl TailCorrectedPartial {
    pub fn new(sys: &AbelianSystem, cutoff: f64) -> Result<Self> {
        let q = sys.group_order();
        if !is_prime(q as u64) {
            return Err(ZetaError::InvalidInput(format!("#G = {q} is not prime")));
        }
        if cutoff < sys.character().modulus() as f64 {
            return Err(ZetaError::InvalidInput("cutoff must reach the modulus".into()));
        }
        Ok(Self { sys: sys.clone(), cutoff, memo: Mutex::new(HashMap::new()) })
    }

    /// `ℓ` for the character `χ^idx` (index 0: principal modulo `m`).
    fn ell(&self, idx: u32, v: Complex64) -> Result<Complex64> {
        let key = (idx, [v.re.to_bits(), v.im.to_bits()]);
        if let Some(z) = self.memo.lock().expect("memo poisoned").get(&key) {
            return Ok(*z);
        }
        let chi = self.sys.character();
        let psi = if idx == 0 { DirichletCharacter::principal(chi.modulus()) } else { chi.pow(idx) };
        let primes = self.sys.system().primes(self.cutoff)?;
        let (head, _) = euler_log(&primes, v, |p| Some(psi.value(p.id)))?;
        let l = dirichlet_l(v, &psi)?;
        let tail = (l * (-head).exp()).ln();
        self.memo.lock().expect("memo poisoned").insert(key, tail);
        Ok(tail)
    }
}

impl PartialLogSource for TailCorrectedPartial {
    fn log_partial(&self, w: Complex64) -> Result<(Complex64, f64, bool)> {
        let q = self.sys.group_order();
        let sys = self.sys.system();
        let x = self.cutoff;
        let sigma = w.re;
        if sigma <= 1.0 {
            return Err(ZetaError::Domain(format!("Re w = {sigma} must exceed 1")));
        }
        let pol = TruncationPolicy::new(x);
        let (bound, _) = pol.tail(sys, sigma);
        // The principal Log of L·exp(-head) is the tail sum only while the tail stays small.
        if bound >= std::f64::consts::FRAC_PI_2 {
            return Err(ZetaError::Domain(format!("tail correction at Re w = {sigma} needs a larger cutoff than {x}")));
        }
        let primes = sys.primes(x)?;
        let one = Complex64::new(1.0, 0.0);
        let (head, _) = euler_log(&primes, w, |p| (p.frob_order == q).then_some(one))?;

        let qf = q as f64;
        let mut tail = self.ell(0, w)? * (1.0 - 1.0 / qf);
        let n_max = ((1.0 + 17.0 * 10f64.ln() / x.ln()) / sigma).ceil().max(1.0) as u64;
        for n in 1..=n_max {
            let nw = w * n as f64;
            let mut inner = Complex64::new(0.0, 0.0);
            for i in 1..q as u64 {
                for k in divisors(n) {
                    let mu = mobius(k);
                    if mu != 0 {
                        inner += self.ell(((i * k) % q as u64) as u32, nw)? * mu as f64;
                    }
                }
            }
            tail -= inner / (qf * n as f64);
        }
        Ok((head + tail, 1e-12 * (head + tail).norm().max(1.0), false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::continuation::feq::overlap_residual;
    use crate::euler::truncated_zeta_pn;
    use crate::numberfield::character::CharacterSpec;
    use crate::numberfield::system::{cyclic_system, kronecker_system};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn dual_paths_agree() {
        for sys in [
            kronecker_system(5).unwrap(),
            cyclic_system(&CharacterSpec::Generators { modulus: 7, order: 3, generator_values: vec![(3, 1)] }).unwrap(),
        ] {
            let g = ClosedFormG::new(&sys);
            for s in [c(2.0, 0.0), c(0.6, 4.0), c(1.5, -3.0), c(0.3, 12.0)] {
                let a = g.eval(s).unwrap();
                let b = g.eval_full_product(s).unwrap();
                assert!((a - b).norm() <= 1e-9 * a.norm(), "s = {s}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn d_five_at_two_matches_formula() {
        let sys = kronecker_system(5).unwrap();
        let g = ClosedFormG::new(&sys).eval(c(2.0, 0.0)).unwrap();
        let chi = DirichletCharacter::kronecker(5).unwrap();
        let expect = zeta(c(2.0, 0.0)).unwrap() * (1.0 - 1.0 / 25.0) / dirichlet_l(c(2.0, 0.0), &chi).unwrap();
        assert!((g - expect).norm() < 1e-13);
        assert!(g.re > 0.0 && g.im.abs() < 1e-15);
    }

    #[test]
    fn overlap_with_truncated_products() {
        let sys = kronecker_system(5).unwrap();
        let g = ClosedFormG::new(&sys);
        for s in [c(1.5, 0.0), c(2.0, 3.0), c(3.0, -1.0)] {
            let (res, tail) = overlap_residual(&g, sys.system(), s, 1e4).unwrap();
            assert!(res <= tail, "s = {s}: {res} > {tail}");
        }
    }

    #[test]
    fn pole_of_order_q_minus_one_at_one() {
        let sys =
            cyclic_system(&CharacterSpec::Generators { modulus: 7, order: 3, generator_values: vec![(3, 1)] }).unwrap();
        let g = ClosedFormG::new(&sys);
        let a = g.log_eval(c(1.0 + 1e-3, 0.0)).unwrap().re;
        let b = g.log_eval(c(1.0 + 1e-4, 0.0)).unwrap().re;
        let slope = (b - a) / 10f64.ln();
        assert!((slope - 2.0).abs() < 1e-2, "slope {slope}");
        assert!(g.log_eval(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn tail_correction_matches_high_cutoff_product() {
        let sys = kronecker_system(5).unwrap();
        let corrected = TailCorrectedPartial::new(&sys, 1e3).unwrap();
        for w in [c(2.0, 0.0), c(1.3, 5.0), c(1.6, -2.0)] {
            let (lc, _, _) = corrected.log_partial(w).unwrap();
            let big = truncated_zeta_pn(sys.system(), 2, w, &TruncationPolicy::new(2e6)).unwrap();
            let diff = (lc - big.log).norm();
            assert!(diff <= big.tail, "w = {w}: diff {diff}, tail {}", big.tail);
        }
        let cubic =
            cyclic_system(&CharacterSpec::Generators { modulus: 7, order: 3, generator_values: vec![(3, 1)] }).unwrap();
        let corrected = TailCorrectedPartial::new(&cubic, 1e3).unwrap();
        let w = c(1.4, 2.0);
        let (lc, _, _) = corrected.log_partial(w).unwrap();
        let big = truncated_zeta_pn(cubic.system(), 3, w, &TruncationPolicy::new(2e6)).unwrap();
        assert!((lc - big.log).norm() <= big.tail);
    }
}
