//! Prime data, zeta systems and truncated Euler products.
//!
//! Every product is accumulated as a sum of principal logarithms of its
//! local factors, in the fixed `(norm, id)` enumeration order, and only
//! exponentiated at the end. Each local factor `1 - c·N(p)^{-s}` with
//! `|c| = 1` and `Re s > 0` stays inside the disc `|z - 1| < 1`, so the
//! principal branch never crosses its cut.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};
use std::ops::Deref;
use std::sync::{Arc, RwLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ZetaError};
use crate::primes::gcd;
use crate::spec::SystemSpec;

/// Factors with `|1 - N(p)^{-s}|` below this are treated as singular.
pub const SINGULAR_FACTOR_EPS: f64 = 1e-15;

/// One prime of a zeta system: its norm and Frobenius data.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimeDatum {
    pub id: u64,
    pub norm: f64,
    pub frob_class: u32,
    pub frob_order: u32,
}

impl PrimeDatum {
    /// Builds a datum, deriving the Frobenius order from the class in ℤ/`group_order`.
    pub fn new(id: u64, norm: f64, frob_class: u32, group_order: u32) -> Result<Self> {
        if !(norm > 1.0) || !norm.is_finite() {
            return Err(ZetaError::InvalidInput(format!("prime norm must exceed 1, got {norm}")));
        }
        if group_order == 0 {
            return Err(ZetaError::InvalidInput("group order must be positive".into()));
        }
        let class = frob_class % group_order;
        let order = group_order / gcd(class as u64, group_order as u64) as u32;
        Ok(Self { id, norm, frob_class: class, frob_order: order })
    }

    /// `N(p)^{-s}`.
    pub fn norm_pow(&self, s: Complex64) -> Complex64 {
        (-s * self.norm.ln()).exp()
    }
}

/// Source of the primes of a zeta system.
///
/// Implementations must enumerate deterministically, without duplicates,
/// sorted by `(norm, id)`, so that raising the cutoff only appends.
pub trait PrimeBackend: Send + Sync + fmt::Debug {
    /// `#G`.
    fn group_order(&self) -> u32;

    /// All primes with `norm <= cutoff`.
    fn enumerate(&self, cutoff: f64) -> Result<Vec<PrimeDatum>>;

    /// Certified upper bound on `Σ_{norm > cutoff} norm^{-sigma}` for `sigma > 1`.
    fn tail_sum_bound(&self, cutoff: f64, sigma: f64) -> f64;

    /// Heuristic size of the same sum; defaults to the bound.
    fn tail_sum_estimate(&self, cutoff: f64, sigma: f64) -> f64 {
        self.tail_sum_bound(cutoff, sigma)
    }

    /// Norms of primes excluded at construction (ramified primes).
    fn excluded_norms(&self) -> Vec<f64> {
        Vec::new()
    }

    fn spec(&self) -> SystemSpec;
}

/// A shared, cheaply clonable prefix of a backend's enumeration.
#[derive(Clone, Debug)]
pub struct PrimeSlice {
    data: Arc<Vec<PrimeDatum>>,
    len: usize,
}

impl Deref for PrimeSlice {
    type Target = [PrimeDatum];

    fn deref(&self) -> &[PrimeDatum] {
        &self.data[..self.len]
    }
}

/// The data `(P, N, φ, G)` with an enumeration cache.
pub struct ZetaSystem {
    backend: Arc<dyn PrimeBackend>,
    cache: RwLock<Option<(f64, Arc<Vec<PrimeDatum>>)>>,
}

impl fmt::Debug for ZetaSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ZetaSystem").field("backend", &self.backend).finish()
    }
}

impl Clone for ZetaSystem {
    fn clone(&self) -> Self {
        Self::new(self.backend.clone())
    }
}

impl ZetaSystem {
    pub fn new(backend: Arc<dyn PrimeBackend>) -> Self {
        Self { backend, cache: RwLock::new(None) }
    }

    pub fn group_order(&self) -> u32 {
        self.backend.group_order()
    }

    pub fn backend(&self) -> &dyn PrimeBackend {
        self.backend.as_ref()
    }

    pub fn spec(&self) -> SystemSpec {
        self.backend.spec()
    }

    /// Primes with `norm <= cutoff`, sorted by `(norm, id)`.
    pub fn primes(&self, cutoff: f64) -> Result<PrimeSlice> {
        if let Some((cached, data)) = &*self.cache.read().expect("prime cache poisoned") {
            if *cached >= cutoff {
                let len = data.partition_point(|p| p.norm <= cutoff);
                return Ok(PrimeSlice { data: data.clone(), len });
            }
        }
        let data = Arc::new(self.backend.enumerate(cutoff)?);
        *self.cache.write().expect("prime cache poisoned") = Some((cutoff, data.clone()));
        Ok(PrimeSlice { len: data.len(), data })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TailMode {
    GeometricBound,
    PntHeuristic,
}

/// Cutoff and tail treatment for a truncated Euler product.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncationPolicy {
    pub cutoff: f64,
    pub tail_mode: TailMode,
}

impl TruncationPolicy {
    pub fn new(cutoff: f64) -> Self {
        Self { cutoff, tail_mode: TailMode::GeometricBound }
    }

    pub fn heuristic(cutoff: f64) -> Self {
        Self { cutoff, tail_mode: TailMode::PntHeuristic }
    }

    /// Bound on `|log(true / truncated)|` for a product whose local factors
    /// are `(1 - c·N(p)^{-s})^{-1}` with `|c| <= 1`. Returns the bound and
    /// whether it is certified.
    pub fn tail(&self, sys: &ZetaSystem, sigma: f64) -> (f64, bool) {
        if sigma <= 1.0 {
            return (f64::INFINITY, false);
        }
        let x = self.cutoff.max(1.0);
        // |log(1 - z)| <= |z| / (1 - |z|) and |z| < x^{-sigma} beyond the cutoff.
        let geometric = 1.0 / (1.0 - x.powf(-sigma));
        match self.tail_mode {
            TailMode::GeometricBound => (geometric * sys.backend.tail_sum_bound(self.cutoff, sigma), true),
            TailMode::PntHeuristic => (geometric * sys.backend.tail_sum_estimate(self.cutoff, sigma), false),
        }
    }
}

/// A truncated product held in log form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Truncated {
    /// Sum of principal logs of the local factors.
    pub log: Complex64,
    /// Bound on `|log(true / value)|`.
    pub tail: f64,
    pub certified: bool,
    /// Number of local factors multiplied.
    pub factors: usize,
}

impl Truncated {
    pub fn value(&self) -> Complex64 {
        self.log.exp()
    }
}

/// `(1 - N(p)^{-s})^{-1}`.
pub fn local_factor(p: &PrimeDatum, s: Complex64) -> Result<Complex64> {
    let denom = Complex64::new(1.0, 0.0) - p.norm_pow(s);
    if denom.norm() < SINGULAR_FACTOR_EPS {
        return Err(ZetaError::SingularLocalFactor { norm: p.norm, s, magnitude: denom.norm() });
    }
    Ok(denom.inv())
}

/// `-Log(1 - c·x)` with a singularity guard.
pub(crate) fn neg_log_one_minus(c: Complex64, x: Complex64, norm: f64, s: Complex64) -> Result<Complex64> {
    let w = -(c * x);
    let magnitude = (Complex64::new(1.0, 0.0) + w).norm();
    if magnitude < SINGULAR_FACTOR_EPS {
        return Err(ZetaError::SingularLocalFactor { norm, s, magnitude });
    }
    Ok(-log1p(w))
}

/// `Log(1 + w)` without cancellation for small `w`; summing many tiny local
/// factors through `ln(1 + w)` would drop them wholesale.
pub(crate) fn log1p(w: Complex64) -> Complex64 {
    let re = 0.5 * (2.0 * w.re + w.norm_sqr()).ln_1p();
    Complex64::new(re, w.im.atan2(1.0 + w.re))
}

/// `Σ_p -Log(1 - c_p N(p)^{-s})` over the primes for which `coeff` returns a coefficient.
pub(crate) fn euler_log<F>(primes: &[PrimeDatum], s: Complex64, mut coeff: F) -> Result<(Complex64, usize)>
where
    F: FnMut(&PrimeDatum) -> Option<Complex64>,
{
    let mut acc = Complex64::new(0.0, 0.0);
    let mut count = 0;
    for p in primes {
        if let Some(c) = coeff(p) {
            acc += neg_log_one_minus(c, p.norm_pow(s), p.norm, s)?;
            count += 1;
        }
    }
    Ok((acc, count))
}

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Truncated `ζ_P(s)`.
pub fn truncated_zeta(sys: &ZetaSystem, s: Complex64, pol: &TruncationPolicy) -> Result<Truncated> {
    let primes = sys.primes(pol.cutoff)?;
    let (log, factors) = euler_log(&primes, s, |_| Some(ONE))?;
    let (tail, certified) = pol.tail(sys, s.re);
    Ok(Truncated { log, tail, certified, factors })
}

/// Truncated `ζ_{P_n}(s)`: the product over primes whose Frobenius has order `n`.
///
/// If `n` does not divide `#G`, `P_n` is empty and the value is 1.
pub fn truncated_zeta_pn(sys: &ZetaSystem, n: u32, s: Complex64, pol: &TruncationPolicy) -> Result<Truncated> {
    let primes = sys.primes(pol.cutoff)?;
    let (log, factors) = euler_log(&primes, s, |p| (p.frob_order == n).then_some(ONE))?;
    let (tail, certified) = pol.tail(sys, s.re);
    Ok(Truncated { log, tail, certified, factors })
}

/// Buckets the primes up to `cutoff` by Frobenius order.
pub fn partition_pn(sys: &ZetaSystem, cutoff: f64) -> Result<BTreeMap<u32, Vec<PrimeDatum>>> {
    let primes = sys.primes(cutoff)?;
    let mut out: BTreeMap<u32, Vec<PrimeDatum>> = BTreeMap::new();
    for p in primes.iter() {
        out.entry(p.frob_order).or_default().push(*p);
    }
    Ok(out)
}

/// A finite, explicitly listed prime set (the `catalog` backend).
///
/// Finite systems do not satisfy the divergence assumption on `P`; they
/// exist for synthetic checks of identities that hold prime by prime.
#[derive(Clone, Debug)]
pub struct ExplicitBackend {
    group_order: u32,
    primes: Vec<PrimeDatum>,
}

/// One entry of an explicit prime list.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExplicitPrime {
    pub norm: f64,
    pub frob_class: u32,
}

impl ExplicitBackend {
    pub fn new(group_order: u32, entries: &[ExplicitPrime]) -> Result<Self> {
        if group_order == 0 {
            return Err(ZetaError::InvalidInput("group order must be positive".into()));
        }
        let mut sorted: Vec<(usize, ExplicitPrime)> = entries.iter().copied().enumerate().collect();
        sorted.sort_by(|a, b| a.1.norm.total_cmp(&b.1.norm).then(a.0.cmp(&b.0)));
        let primes = sorted
            .into_iter()
            .map(|(i, e)| PrimeDatum::new(i as u64, e.norm, e.frob_class, group_order))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { group_order, primes })
    }

    pub fn into_system(self) -> ZetaSystem {
        ZetaSystem::new(Arc::new(self))
    }
}

impl PrimeBackend for ExplicitBackend {
    fn group_order(&self) -> u32 {
        self.group_order
    }

    fn enumerate(&self, cutoff: f64) -> Result<Vec<PrimeDatum>> {
        Ok(self.primes.iter().take_while(|p| p.norm <= cutoff).copied().collect())
    }

    fn tail_sum_bound(&self, cutoff: f64, sigma: f64) -> f64 {
        self.primes.iter().filter(|p| p.norm > cutoff).map(|p| p.norm.powf(-sigma)).sum()
    }

    fn spec(&self) -> SystemSpec {
        let mut by_id = self.primes.clone();
        by_id.sort_by_key(|p| p.id);
        SystemSpec::Catalog {
            group_order: self.group_order,
            primes: by_id.iter().map(|p| ExplicitPrime { norm: p.norm, frob_class: p.frob_class }).collect(),
        }
    }
}

/// Writes a prime dump with columns `id,norm,frob_class,frob_order`.
pub fn write_prime_csv<W: Write>(primes: &[PrimeDatum], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for p in primes {
        w.serialize(p)?;
    }
    if primes.is_empty() {
        w.write_record(["id", "norm", "frob_class", "frob_order"])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_prime_csv<R: Read>(input: R) -> Result<Vec<PrimeDatum>> {
    let mut r = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for row in r.deserialize() {
        out.push(row?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn datum(norm: f64) -> PrimeDatum {
        PrimeDatum::new(0, norm, 0, 1).unwrap()
    }

    #[test]
    fn local_factor_examples() {
        assert!((local_factor(&datum(2.0), c(1.0, 0.0)).unwrap() - c(2.0, 0.0)).norm() < 1e-15);
        assert!((local_factor(&datum(3.0), c(2.0, 0.0)).unwrap() - c(9.0 / 8.0, 0.0)).norm() < 1e-15);
        // 2^{-iπ/log 2} = e^{-iπ} = -1, so the factor is 1/2.
        let s = c(0.0, std::f64::consts::PI / 2f64.ln());
        let direct = (c(1.0, 0.0) - (-s * 2f64.ln()).exp()).inv();
        let got = local_factor(&datum(2.0), s).unwrap();
        assert!((got - c(0.5, 0.0)).norm() < 1e-14);
        assert!((got - direct).norm() < 1e-15);
    }

    #[test]
    fn local_factor_singular_at_zero() {
        let err = local_factor(&datum(2.0), c(0.0, 0.0)).unwrap_err();
        assert!(matches!(err, ZetaError::SingularLocalFactor { .. }));
        // s = 2πi/log 2 makes 2^{-s} = 1 as well.
        let s = c(0.0, 2.0 * std::f64::consts::PI / 2f64.ln());
        assert!(local_factor(&datum(2.0), s).is_err());
    }

    #[test]
    fn datum_rejects_small_norm() {
        assert!(PrimeDatum::new(0, 1.0, 0, 2).is_err());
        assert!(PrimeDatum::new(0, 0.5, 0, 2).is_err());
        let p = PrimeDatum::new(0, 7.0, 4, 6).unwrap();
        assert_eq!(p.frob_order, 3);
    }

    fn explicit() -> ZetaSystem {
        ExplicitBackend::new(
            2,
            &[
                ExplicitPrime { norm: 3.0, frob_class: 1 },
                ExplicitPrime { norm: 2.0, frob_class: 0 },
                ExplicitPrime { norm: 5.0, frob_class: 1 },
            ],
        )
        .unwrap()
        .into_system()
    }

    #[test]
    fn explicit_enumeration_sorted_and_partitioned() {
        let sys = explicit();
        let ps = sys.primes(10.0).unwrap();
        let norms: Vec<f64> = ps.iter().map(|p| p.norm).collect();
        assert_eq!(norms, vec![2.0, 3.0, 5.0]);
        let parts = partition_pn(&sys, 4.0).unwrap();
        assert_eq!(parts[&1].len(), 1);
        assert_eq!(parts[&2].len(), 1);
        // A lower cutoff after a higher one reuses the cache prefix.
        assert_eq!(sys.primes(2.5).unwrap().len(), 1);
    }

    #[test]
    fn single_prime_below_next_norm_gives_one_bucket() {
        let sys = explicit();
        let parts = partition_pn(&sys, 2.0 + 1e-9).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&1][0].norm, 2.0);
    }

    #[test]
    fn empty_bucket_is_one() {
        let sys = explicit();
        let pol = TruncationPolicy::new(10.0);
        let t = truncated_zeta_pn(&sys, 3, c(2.0, 0.0), &pol).unwrap();
        assert_eq!(t.value(), c(1.0, 0.0));
        assert_eq!(t.factors, 0);
    }

    #[test]
    fn tail_uncertified_left_of_one() {
        let sys = explicit();
        let pol = TruncationPolicy::new(10.0);
        let (tail, certified) = pol.tail(&sys, 0.8);
        assert!(tail.is_infinite() && !certified);
    }

    #[test]
    fn prime_csv_roundtrip() {
        let sys = explicit();
        let ps = sys.primes(10.0).unwrap();
        let mut buf = Vec::new();
        write_prime_csv(&ps, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("id,norm,frob_class,frob_order\n"));
        assert_eq!(read_prime_csv(&buf[..]).unwrap(), ps.to_vec());
    }
}
