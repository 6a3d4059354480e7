//! Fixed-precision formatting and argument parsing.

use num_complex::Complex64;
use serde_json::{json, Value};

/// Rounds to 15 significant digits so that JSON output is reproducible.
pub fn r15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// CSV field at 15 significant digits; exact integers are printed plainly.
pub fn f15(x: f64) -> String {
    if x.is_finite() && x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{x:.0}")
    } else {
        format!("{x:.14e}")
    }
}

pub fn cjson(z: Complex64) -> Value {
    json!({ "re": r15(z.re), "im": r15(z.im) })
}

/// `a`, `a+bi`, `a-bi`, `bi` (also `j` for the imaginary unit).
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse complex number `{text}`");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split =
        (1..bytes.len()).rev().find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |s: &str| match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => s.parse::<f64>().map_err(|_| bad()),
    };
    match split {
        Some(k) => Ok(Complex64::new(body[..k].parse().map_err(|_| bad())?, imag(&body[k..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

/// `re0:re1:n_re,im0:im1:n_im`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub re: (f64, f64, usize),
    pub im: (f64, f64, usize),
}

impl Grid {
    pub fn parse(text: &str) -> Result<Self, String> {
        let bad = || format!("grid must look like `re0:re1:n,im0:im1:n`, got `{text}`");
        let axis = |s: &str| -> Result<(f64, f64, usize), String> {
            let f: Vec<&str> = s.split(':').collect();
            if f.len() != 3 {
                return Err(bad());
            }
            let a: f64 = f[0].trim().parse().map_err(|_| bad())?;
            let b: f64 = f[1].trim().parse().map_err(|_| bad())?;
            let n: usize = f[2].trim().parse().map_err(|_| bad())?;
            if n == 0 || !a.is_finite() || !b.is_finite() || (n == 1 && a != b) || b < a {
                return Err(bad());
            }
            Ok((a, b, n))
        };
        let (re, im) = text.split_once(',').ok_or_else(bad)?;
        Ok(Self { re: axis(re)?, im: axis(im)? })
    }

    fn ticks((a, b, n): (f64, f64, usize)) -> Vec<f64> {
        if n == 1 {
            return vec![a];
        }
        (0..n).map(|k| a + (b - a) * k as f64 / (n - 1) as f64).collect()
    }

    /// Points in row-major order: imaginary part outer, real part inner.
    pub fn points(&self) -> Vec<Complex64> {
        let re = Self::ticks(self.re);
        Self::ticks(self.im).into_iter().flat_map(|y| re.iter().map(move |&x| Complex64::new(x, y))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex("0.5+14.1i").unwrap(), Complex64::new(0.5, 14.1));
        assert_eq!(parse_complex("0.5-2i").unwrap(), Complex64::new(0.5, -2.0));
        assert_eq!(parse_complex("-3i").unwrap(), Complex64::new(0.0, -3.0));
        assert_eq!(parse_complex("1e-3+2e+1i").unwrap(), Complex64::new(1e-3, 20.0));
        assert_eq!(parse_complex("2-i").unwrap(), Complex64::new(2.0, -1.0));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn grids() {
        let g = Grid::parse("0.5:1:3,0:10:2").unwrap();
        let p = g.points();
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], Complex64::new(0.5, 0.0));
        assert_eq!(p[1], Complex64::new(0.75, 0.0));
        assert_eq!(p[5], Complex64::new(1.0, 10.0));
        assert!(Grid::parse("0:1,0:1:2").is_err());
        assert!(Grid::parse("1:0:2,0:1:2").is_err());
    }

    #[test]
    fn fixed_digits() {
        assert_eq!(f15(2.0), "2");
        assert_eq!(f15(0.1), "1.00000000000000e-1");
        assert_eq!(r15(1.0 / 3.0), 0.333333333333333);
    }
}
