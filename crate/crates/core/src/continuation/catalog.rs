//! Singularity catalogs of `g`, their `q`-power dilates and `q`-classes.

use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ZetaError};

/// Relative tolerance for `σ' = q^k σ` matching.
pub const CLASS_MATCH_TOL: f64 = 1e-9;
/// Classes with `|M_q| <=` this are dropped from `Λ_q`.
pub const WEIGHT_EPS: f64 = 1e-12;
/// Points closer than this are considered equal inside a catalog.
const DISTINCT_EPS: f64 = 1e-12;

/// A zero (`order > 0`) or pole (`order < 0`) of `g` in the upper half strip.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub re: f64,
    pub im: f64,
    pub order: i64,
}

impl SingularPoint {
    pub fn new(location: Complex64, order: i64) -> Result<Self> {
        if order == 0 {
            return Err(ZetaError::InvalidInput("singular point order must be nonzero".into()));
        }
        if !(location.re > 0.0 && location.re < 1.0 && location.im > 0.0) {
            return Err(ZetaError::InvalidInput(format!("singular point {location} lies outside 0 < Re < 1, Im > 0")));
        }
        Ok(Self { re: location.re, im: location.im, order })
    }

    pub fn location(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn is_zero(&self) -> bool {
        self.order > 0
    }
}

/// All singular points of `g` with `0 < Im σ < complete_up_to`, sorted by `(Im, Re)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularityCatalog {
    points: Vec<SingularPoint>,
    complete_up_to: f64,
}

impl SingularityCatalog {
    pub fn new(mut points: Vec<SingularPoint>, complete_up_to: f64) -> Result<Self> {
        for p in &points {
            SingularPoint::new(p.location(), p.order)?;
        }
        points.sort_by(|a, b| a.im.total_cmp(&b.im).then(a.re.total_cmp(&b.re)));
        for w in points.windows(2) {
            if (w[0].location() - w[1].location()).norm() <= DISTINCT_EPS * w[1].location().norm() {
                return Err(ZetaError::InvalidInput(format!("duplicate singular point {}", w[1].location())));
            }
        }
        Ok(Self { points, complete_up_to })
    }

    pub fn empty(complete_up_to: f64) -> Self {
        Self { points: Vec::new(), complete_up_to }
    }

    pub fn points(&self) -> &[SingularPoint] {
        &self.points
    }

    pub fn complete_up_to(&self) -> f64 {
        self.complete_up_to
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points with `Im < height`.
    pub fn below(&self, height: f64) -> impl Iterator<Item = &SingularPoint> {
        self.points.iter().take_while(move |p| p.im < height)
    }

    /// Nearest cataloged point to `s` or its conjugate (`g` is real on the real axis).
    pub fn nearest(&self, s: Complex64) -> Option<(SingularPoint, f64)> {
        let t = if s.im < 0.0 { s.conj() } else { s };
        self.points.iter().map(|p| (*p, (p.location() - t).norm())).min_by(|a, b| a.1.total_cmp(&b.1))
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["re", "im", "order"])?;
        for p in &self.points {
            w.write_record([format!("{:.15e}", p.re), format!("{:.15e}", p.im), p.order.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(input: R, complete_up_to: f64) -> Result<Self> {
        let mut r = csv::Reader::from_reader(input);
        let mut points = Vec::new();
        for row in r.deserialize() {
            let p: SingularPoint = row?;
            points.push(p);
        }
        Self::new(points, complete_up_to)
    }
}

/// `Ω` truncated: `q^{-k}σ` for cataloged `σ`, `0 <= k <= k_max`, `Im <= height`.
/// Duplicates (from `σ' = q^j σ` pairs) are merged; sorted by `(Im, Re)`.
pub fn omega_set(cat: &SingularityCatalog, q: u32, k_max: u32, height: f64) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = Vec::new();
    for p in cat.points() {
        let mut z = p.location();
        for _ in 0..=k_max {
            if z.im <= height {
                out.push(z);
            }
            z /= q as f64;
        }
    }
    sort_dedup(&mut out);
    out
}

fn sort_dedup(v: &mut Vec<Complex64>) {
    v.sort_by(|a, b| a.im.total_cmp(&b.im).then(a.re.total_cmp(&b.re)));
    v.dedup_by(|a, b| close(*a, *b));
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a.re - b.re).abs() <= CLASS_MATCH_TOL * a.re.abs().max(b.re.abs())
        && (a.im - b.im).abs() <= CLASS_MATCH_TOL * a.im.abs().max(b.im.abs())
}

/// One class `[σ]` with its weight `M_q(σ)` relative to the lowest member.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MqClass {
    pub representative: SingularPoint,
    /// `(point, k)` with `point = q^k · representative`.
    pub members: Vec<(SingularPoint, u32)>,
    pub weight: f64,
}

/// Partitions the catalog into classes `σ' = q^k σ`.
pub fn mq_classes(cat: &SingularityCatalog, q: u32) -> Vec<MqClass> {
    let qf = q as f64;
    let pts = cat.points();
    let mut assigned = vec![false; pts.len()];
    let mut classes = Vec::new();
    for i in 0..pts.len() {
        if assigned[i] {
            continue;
        }
        assigned[i] = true;
        let rep = pts[i];
        let mut members = vec![(rep, 0u32)];
        for j in i + 1..pts.len() {
            if assigned[j] {
                continue;
            }
            let ratio = pts[j].im / rep.im;
            let k = (ratio.ln() / qf.ln()).round();
            if k < 1.0 {
                continue;
            }
            let scaled = rep.location() * qf.powi(k as i32);
            if close(scaled, pts[j].location()) {
                assigned[j] = true;
                members.push((pts[j], k as u32));
            }
        }
        let weight = members.iter().map(|(p, k)| p.order as f64 * qf.powi(-(*k as i32))).sum();
        classes.push(MqClass { representative: rep, members, weight });
    }
    classes
}

/// `Λ_q`: the classes with nonzero weight.
pub fn lambda_q(cat: &SingularityCatalog, q: u32) -> Vec<MqClass> {
    mq_classes(cat, q).into_iter().filter(|c| c.weight.abs() > WEIGHT_EPS).collect()
}

/// Counters from the density argument for abelian systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// Distinct zeros of `g` on `Re σ = 1/2` with `Im σ < T`.
    pub i_t: u64,
    /// Total pole order with `Re σ < α`, `Im σ < T`.
    pub j_alpha: u64,
    /// `#{q^{-k}σ : σ ∈ Λ_q, 0 <= k <= k_max, Im < T}`.
    pub omega_q: u64,
    /// Whether the catalog reaches `q^{k_max}·T`, so that `omega_q` counts every
    /// dilate that can land below `T` at the given depth.
    pub omega_complete: bool,
}

/// `I(T)`, `J_α(T)` and the depth-capped `Ω_q(T)`.
pub fn counting_functions(cat: &SingularityCatalog, q: u32, height: f64, alpha: f64, k_max: u32) -> Result<Counts> {
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(ZetaError::InvalidInput(format!("α = {alpha} must lie in (0, 1/2)")));
    }
    let i_t = cat.below(height).filter(|p| p.is_zero() && (p.re - 0.5).abs() <= 1e-6).count() as u64;
    let j_alpha = cat.below(height).filter(|p| !p.is_zero() && p.re < alpha).map(|p| p.order.unsigned_abs()).sum();
    let qf = q as f64;
    let mut omega = Vec::new();
    for class in lambda_q(cat, q) {
        let mut z = class.representative.location();
        for _ in 0..=k_max {
            if z.im < height {
                omega.push(z);
            }
            z /= qf;
        }
    }
    sort_dedup(&mut omega);
    Ok(Counts {
        i_t,
        j_alpha,
        omega_q: omega.len() as u64,
        omega_complete: cat.complete_up_to() >= height * qf.powi(k_max as i32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(re: f64, im: f64, order: i64) -> SingularPoint {
        SingularPoint::new(Complex64::new(re, im), order).unwrap()
    }

    #[test]
    fn omega_of_first_zeta_zero() {
        let cat = SingularityCatalog::new(vec![pt(0.5, 14.1347, 1)], 15.0).unwrap();
        let om = omega_set(&cat, 2, 2, 100.0);
        let expect = [(0.125, 3.533675), (0.25, 7.06735), (0.5, 14.1347)];
        assert_eq!(om.len(), 3);
        for (z, (re, im)) in om.iter().zip(expect) {
            assert!((z.re - re).abs() < 1e-12 && (z.im - im).abs() < 1e-9);
        }
        assert!(omega_set(&SingularityCatalog::empty(10.0), 2, 3, 100.0).is_empty());
        let k0 = omega_set(&cat, 2, 0, 100.0);
        assert_eq!(k0, vec![cat.points()[0].location()]);
    }

    #[test]
    fn singleton_and_cancelling_classes() {
        let cat = SingularityCatalog::new(vec![pt(0.3, 5.0, 1)], 10.0).unwrap();
        let cl = mq_classes(&cat, 3);
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].weight, 1.0);

        let q = 3;
        let beta = Complex64::new(0.2, 4.0);
        let cat =
            SingularityCatalog::new(vec![pt(beta.re, beta.im, 1), pt(3.0 * beta.re, 3.0 * beta.im, -(q as i64))], 20.0)
                .unwrap();
        let cl = mq_classes(&cat, q);
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].members.len(), 2);
        assert!(cl[0].weight.abs() < 1e-15);
        assert!(lambda_q(&cat, q).is_empty());
    }

    #[test]
    fn counters() {
        let empty = SingularityCatalog::empty(30.0);
        let c = counting_functions(&empty, 2, 30.0, 0.3, 0).unwrap();
        assert_eq!((c.i_t, c.j_alpha, c.omega_q), (0, 0, 0));
        let cat = SingularityCatalog::new(vec![pt(0.2, 5.0, -1), pt(0.5, 7.0, 2), pt(0.5, 12.0, -1)], 20.0).unwrap();
        let c = counting_functions(&cat, 2, 10.0, 0.3, 0).unwrap();
        assert_eq!(c.j_alpha, 1);
        assert_eq!(c.i_t, 1);
        assert_eq!(c.omega_q, 2);
        let c = counting_functions(&cat, 2, 10.0, 0.3, 1).unwrap();
        assert_eq!(c.omega_q, 5);
        assert!(c.omega_complete);
        assert!(counting_functions(&cat, 2, 10.0, 0.6, 1).is_err());
    }

    #[test]
    fn csv_roundtrip() {
        let cat = SingularityCatalog::new(vec![pt(0.5, 14.134725141734693, 1), pt(0.25, 3.0, -2)], 15.0).unwrap();
        let mut buf = Vec::new();
        cat.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("re,im,order\n"));
        // Written at 15 significant digits.
        let back = SingularityCatalog::read_csv(&buf[..], 15.0).unwrap();
        assert_eq!(back.len(), cat.len());
        for (a, b) in back.points().iter().zip(cat.points()) {
            assert!((a.location() - b.location()).norm() < 1e-13 && a.order == b.order);
        }
    }

    #[test]
    fn invalid_points_rejected() {
        assert!(SingularPoint::new(Complex64::new(0.5, 1.0), 0).is_err());
        assert!(SingularPoint::new(Complex64::new(1.0, 1.0), 1).is_err());
        assert!(SingularPoint::new(Complex64::new(0.5, -1.0), 1).is_err());
        assert!(SingularityCatalog::new(vec![pt(0.5, 1.0, 1), pt(0.5, 1.0, 2)], 2.0).is_err());
    }

    proptest! {
        #[test]
        fn omega_grows_with_depth(
            raw in proptest::collection::vec((0.01f64..0.99, 0.1f64..50.0, 1i64..3), 0..8),
            q in 2u32..5,
            k in 0u32..4,
        ) {
            let pts: Vec<SingularPoint> = raw.iter().map(|&(re, im, m)| pt(re, im, m)).collect();
            if let Ok(cat) = SingularityCatalog::new(pts, 50.0) {
                let small = omega_set(&cat, q, k, 60.0);
                let big = omega_set(&cat, q, k + 1, 60.0);
                for z in &small {
                    prop_assert!(big.iter().any(|w| close(*w, *z)));
                }
            }
        }
    }
}
