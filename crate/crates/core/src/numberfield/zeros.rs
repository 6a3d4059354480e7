//! Zeros of entire functions in rectangles by the argument principle, and
//! the singularity catalog of `g` in the critical strip.
//!
//! The winding number is obtained by tracking `arg f` along each edge with
//! adaptive bisection (a step is accepted once both of its halves move the
//! argument by less than `MAX_ARG_STEP` and agree with the whole), which is
//! the log-derivative integral evaluated without differentiating `f`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gfun::ClosedFormG;
use super::special::{dirichlet_l, zeta};
use crate::continuation::{SingularPoint, SingularityCatalog};
use crate::error::{Result, ZetaError};

const MAX_ARG_STEP: f64 = 0.6;
const MAX_BISECT: u32 = 40;
const SAMPLE_STEP: f64 = 0.05;
/// Boxes below this diameter that still fail to resolve are reported.
pub const MIN_BOX: f64 = 1e-8;
/// Newton refinement target.
pub const NEWTON_TOL: f64 = 1e-10;
/// Largest winding accepted for an irreducible box.
pub const MAX_BOX_ORDER: i64 = 3;
/// The rectangle `[RE_MARGIN, 1 - RE_MARGIN] × (0, T)` is scanned.
pub const RE_MARGIN: f64 = 0.02;
const SPLIT: f64 = 0.47;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub re0: f64,
    pub re1: f64,
    pub im0: f64,
    pub im1: f64,
}

impl Rect {
    pub fn new(re0: f64, re1: f64, im0: f64, im1: f64) -> Self {
        Self { re0, re1, im0, im1 }
    }

    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re0, self.im0),
            Complex64::new(self.re1, self.im0),
            Complex64::new(self.re1, self.im1),
            Complex64::new(self.re0, self.im1),
        ]
    }

    fn diameter(&self) -> f64 {
        (self.re1 - self.re0).hypot(self.im1 - self.im0)
    }

    fn center(&self) -> Complex64 {
        Complex64::new(0.5 * (self.re0 + self.re1), 0.5 * (self.im0 + self.im1))
    }

    fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re0 && z.re <= self.re1 && z.im >= self.im0 && z.im <= self.im1
    }

    fn halves(&self) -> (Rect, Rect) {
        // Off-centre cuts keep the critical line off the subdivision edges.
        if self.re1 - self.re0 >= self.im1 - self.im0 {
            let m = self.re0 + SPLIT * (self.re1 - self.re0);
            (Rect::new(self.re0, m, self.im0, self.im1), Rect::new(m, self.re1, self.im0, self.im1))
        } else {
            let m = self.im0 + SPLIT * (self.im1 - self.im0);
            (Rect::new(self.re0, self.re1, self.im0, m), Rect::new(self.re0, self.re1, m, self.im1))
        }
    }
}

/// A refined zero and its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocatedZero {
    pub location: Complex64,
    pub multiplicity: u32,
}

fn on_contour(z: Complex64) -> ZetaError {
    ZetaError::UnresolvedBox(format!("function vanishes on the contour near {z}"))
}

fn arg_change<F>(f: &F, a: Complex64, b: Complex64, fa: Complex64, fb: Complex64, depth: u32) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let m = 0.5 * (a + b);
    let fm = f(m)?;
    if fm.norm() == 0.0 || !fm.is_finite() {
        return Err(on_contour(m));
    }
    // Accept a step only if the midpoint confirms it: a zero passing close to
    // the edge can turn the argument by a full 2π between the endpoints.
    let whole = fb / fa;
    let (r1, r2) = (fm / fa, fb / fm);
    let (d1, d2) = (r1.arg(), r2.arg());
    let tame = |r: Complex64| r.norm() < 4.0 && r.norm() > 0.25;
    if d1.abs() < MAX_ARG_STEP && d2.abs() < MAX_ARG_STEP && (d1 + d2 - whole.arg()).abs() < 0.1 && tame(r1) && tame(r2)
    {
        return Ok(d1 + d2);
    }
    if depth >= MAX_BISECT {
        return Err(on_contour(m));
    }
    Ok(arg_change(f, a, m, fa, fm, depth + 1)? + arg_change(f, m, b, fm, fb, depth + 1)?)
}

/// Net number of zeros (minus poles) of `f` inside `rect`.
pub fn winding_number<F>(f: &F, rect: &Rect) -> Result<i64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let c = rect.corners();
    let mut total = 0.0;
    for k in 0..4 {
        let (a, b) = (c[k], c[(k + 1) % 4]);
        let steps = (((b - a).norm() / SAMPLE_STEP).ceil() as usize).max(1);
        let mut za = a;
        let mut fa = f(za)?;
        if fa.norm() == 0.0 {
            return Err(on_contour(za));
        }
        for i in 1..=steps {
            let zb = a + (b - a) * (i as f64 / steps as f64);
            let fb = f(zb)?;
            if fb.norm() == 0.0 || !fb.is_finite() {
                return Err(on_contour(zb));
            }
            total += arg_change(f, za, zb, fa, fb, 0)?;
            za = zb;
            fa = fb;
        }
    }
    let w = total / (2.0 * std::f64::consts::PI);
    let rounded = w.round();
    if (w - rounded).abs() > 0.1 {
        return Err(ZetaError::UnresolvedBox(format!("non-integer winding {w} on {rect:?}")));
    }
    Ok(rounded as i64)
}

fn newton<F>(f: &F, start: Complex64, multiplicity: u32) -> Option<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let h = 1e-6;
    let mut z = start;
    for _ in 0..80 {
        let fz = f(z).ok()?;
        if fz.norm() == 0.0 {
            return Some(z);
        }
        let d = (f(z + h).ok()? - f(z - h).ok()?) / (2.0 * h);
        if d.norm() == 0.0 || !d.is_finite() {
            return None;
        }
        let step = fz / d * multiplicity as f64;
        z -= step;
        if step.norm() < 1e-14 * z.norm().max(1.0) {
            return Some(z);
        }
    }
    let fz = f(z).ok()?;
    let d = (f(z + h).ok()? - f(z - h).ok()?) / (2.0 * h);
    ((fz / d).norm() * (multiplicity as f64) < NEWTON_TOL).then_some(z)
}

fn search<F>(f: &F, rect: Rect, w: i64, out: &mut Vec<LocatedZero>) -> Result<()>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if w == 0 {
        return Ok(());
    }
    if w < 0 {
        return Err(ZetaError::UnresolvedBox(format!("negative winding {w} for an entire function on {rect:?}")));
    }
    let small = rect.diameter() < 1e-4;
    if w == 1 || small {
        let mult = if w == 1 { 1 } else { w as u32 };
        if let Some(z) = newton(f, rect.center(), mult) {
            if rect.contains(z) {
                if w > MAX_BOX_ORDER {
                    return Err(ZetaError::UnresolvedBox(format!("order {w} cluster near {z}")));
                }
                out.push(LocatedZero { location: z, multiplicity: mult });
                return Ok(());
            }
        }
    }
    if rect.diameter() < MIN_BOX {
        return Err(ZetaError::UnresolvedBox(format!("{rect:?} with winding {w}")));
    }
    let (a, b) = rect.halves();
    let wa = winding_number(f, &a)?;
    let wb = winding_number(f, &b)?;
    if wa + wb != w {
        return Err(ZetaError::UnresolvedBox(format!(
            "windings {wa} + {wb} of the halves do not add up to {w} on {rect:?}"
        )));
    }
    search(f, a, wa, out)?;
    search(f, b, wb, out)
}

/// Total winding and refined zeros of an entire `f` in `rect`, scanned in
/// horizontal slabs of height at most 1.
pub fn find_zeros_in_rect<F>(f: &F, rect: &Rect) -> Result<(i64, Vec<LocatedZero>)>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let slabs = ((rect.im1 - rect.im0).ceil() as usize).max(1);
    let step = (rect.im1 - rect.im0) / slabs as f64;
    let mut bounds: Vec<f64> = (0..=slabs).map(|k| rect.im0 + k as f64 * step).collect();
    bounds[slabs] = rect.im1;
    let mut total = 0;
    let mut zeros = Vec::new();
    let mut k = 0;
    let mut tries = 0;
    while k < slabs {
        let slab = Rect::new(rect.re0, rect.re1, bounds[k], bounds[k + 1]);
        let w = match winding_number(f, &slab) {
            Ok(w) => w,
            // A zero sitting on an inner slab boundary: nudge the boundary.
            Err(ZetaError::UnresolvedBox(_)) if tries < 3 && k + 1 < slabs => {
                tries += 1;
                bounds[k + 1] += 1e-3 * step * tries as f64;
                continue;
            }
            Err(e) => return Err(e),
        };
        tries = 0;
        total += w;
        let before = zeros.len();
        search(f, slab, w, &mut zeros)?;
        let found: i64 = zeros[before..].iter().map(|z| z.multiplicity as i64).sum();
        if found != w {
            return Err(ZetaError::UnresolvedBox(format!("refined {found} zeros but winding is {w}")));
        }
        k += 1;
    }
    zeros.sort_by(|a, b| a.location.im.total_cmp(&b.location.im).then(a.location.re.total_cmp(&b.location.re)));
    Ok((total, zeros))
}

/// Zeros of `ζ` in `[RE_MARGIN, 1 - RE_MARGIN] × (0, T)`.
pub fn zeta_zeros(height: f64) -> Result<Vec<LocatedZero>> {
    let rect = Rect::new(RE_MARGIN, 1.0 - RE_MARGIN, 0.0, height);
    Ok(find_zeros_in_rect(&zeta, &rect)?.1)
}

/// Catalog of `g` in `0 < Re s < 1`, `0 < Im s < T`, built from the zeros of
/// `ζ` (order `(q-1)·mult`) and of each `L(s, χ^j)` (order `-mult`). Factors
/// are scanned separately so that coincident zeros and poles are netted
/// exactly; points with net order 0 are dropped.
pub fn find_singularities(g: &ClosedFormG, height: f64) -> Result<SingularityCatalog> {
    if !(height > 0.0 && height <= 100.0) {
        return Err(ZetaError::InvalidInput(format!("height {height} outside (0, 100]")));
    }
    let rect = Rect::new(RE_MARGIN, 1.0 - RE_MARGIN, 0.0, height);
    let q = g.q() as i64;
    let mut raw: Vec<(Complex64, i64)> = Vec::new();
    for z in find_zeros_in_rect(&zeta, &rect)?.1 {
        raw.push((z.location, (q - 1) * z.multiplicity as i64));
    }
    for chi in g.powers() {
        let f = |s: Complex64| dirichlet_l(s, chi);
        for z in find_zeros_in_rect(&f, &rect)?.1 {
            raw.push((z.location, -(z.multiplicity as i64)));
        }
    }
    raw.sort_by(|a, b| a.0.im.total_cmp(&b.0.im).then(a.0.re.total_cmp(&b.0.re)));
    let mut merged: Vec<(Complex64, i64)> = Vec::new();
    for (z, m) in raw {
        match merged.iter_mut().find(|(w, _)| (*w - z).norm() < 1e-8 * z.norm().max(1.0)) {
            Some(entry) => entry.1 += m,
            None => merged.push((z, m)),
        }
    }
    let points = merged
        .into_iter()
        .filter(|(z, m)| *m != 0 && z.im > 0.0 && z.im < height)
        .map(|(z, m)| SingularPoint::new(z, m))
        .collect::<Result<Vec<_>>>()?;
    SingularityCatalog::new(points, height)
}

/// `Σ |m_ζ(σ) - m_L(σ)|`-style tabulation: for each cataloged point, the
/// order contributed by `ζ` and by the `L(s, χ^j)`, listed per point.
pub fn zero_difference_table(g: &ClosedFormG, height: f64) -> Result<Vec<(Complex64, i64, i64)>> {
    let rect = Rect::new(RE_MARGIN, 1.0 - RE_MARGIN, 0.0, height);
    let mut rows: Vec<(Complex64, i64, i64)> = Vec::new();
    let mut add = |z: Complex64, zeta_m: i64, l_m: i64| match rows
        .iter_mut()
        .find(|(w, _, _)| (*w - z).norm() < 1e-8 * z.norm().max(1.0))
    {
        Some(r) => {
            r.1 += zeta_m;
            r.2 += l_m;
        }
        None => rows.push((z, zeta_m, l_m)),
    };
    for z in find_zeros_in_rect(&zeta, &rect)?.1 {
        add(z.location, z.multiplicity as i64, 0);
    }
    for chi in g.powers() {
        let f = |s: Complex64| dirichlet_l(s, chi);
        for z in find_zeros_in_rect(&f, &rect)?.1 {
            add(z.location, 0, z.multiplicity as i64);
        }
    }
    rows.sort_by(|a, b| a.0.im.total_cmp(&b.0.im).then(a.0.re.total_cmp(&b.0.re)));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_zeros() {
        // (z - a)(z - b)^2 with a, b inside; c outside.
        let a = Complex64::new(0.3, 0.4);
        let b = Complex64::new(0.7, 0.6);
        let c = Complex64::new(2.0, 0.5);
        let f = |z: Complex64| Ok((z - a) * (z - b) * (z - b) * (z - c));
        let rect = Rect::new(0.0, 1.0, 0.0, 1.0);
        assert_eq!(winding_number(&f, &rect).unwrap(), 3);
        let (w, zs) = find_zeros_in_rect(&f, &rect).unwrap();
        assert_eq!(w, 3);
        assert_eq!(zs.len(), 2);
        assert!((zs[0].location - a).norm() < 1e-10 && zs[0].multiplicity == 1);
        assert!((zs[1].location - b).norm() < 1e-7 && zs[1].multiplicity == 2);
    }

    #[test]
    fn first_zeta_zero() {
        let zs = zeta_zeros(15.0).unwrap();
        assert_eq!(zs.len(), 1);
        assert!((zs[0].location - Complex64::new(0.5, 14.134725)).norm() < 1e-4);
    }
}
