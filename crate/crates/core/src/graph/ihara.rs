//! Ihara zeta functions: determinant and edge-matrix forms, cycle counts.

use num_bigint::BigInt;

use super::multigraph::MultiGraph;
use crate::error::{Result, ZetaError};
use crate::exact::linalg::det_poly_integer;
use crate::exact::poly::Polynomial;
use crate::primes::{divisors, mobius};

/// `ζ_X(u)^{-1} = (1 - u²)^{m-n} det(I - Au + q_g u² I)` for a regular graph.
pub fn ihara_det(x: &MultiGraph) -> Result<Polynomial> {
    let q_g = x
        .regularity()
        .ok_or_else(|| ZetaError::InvalidInput("the determinant formula needs a regular graph".into()))?;
    let n = x.n();
    let a = x.adjacency();
    let det = det_poly_integer(2 * n, |u| {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let diag = if i == j { 1 + q_g as i64 * u * u } else { 0 };
                        BigInt::from(diag - a[i][j] * u)
                    })
                    .collect()
            })
            .collect()
    });
    let excess = x.m() as i64 - n as i64;
    let one_minus_u2 = Polynomial::from_i64(&[1, 0, -1]);
    if excess >= 0 {
        Ok(&one_minus_u2.pow(excess as usize) * &det)
    } else {
        det.div_exact(&one_minus_u2.pow((-excess) as usize))
    }
}

/// `det(I - uT)` over the oriented arcs.
pub fn ihara_edge(x: &MultiGraph) -> Polynomial {
    let t = x.edge_matrix().dense();
    let size = t.len();
    det_poly_integer(size, |u| {
        (0..size).map(|i| (0..size).map(|j| BigInt::from(if i == j { 1 } else { 0 } - u * t[i][j])).collect()).collect()
    })
}

/// `N_len = tr T^len` and the number of primitive cycle classes of length `len`,
/// `(1/len) Σ_{d | len} μ(d) N_{len/d}`.
pub fn count_cycles(x: &MultiGraph, len: usize) -> Result<(i128, i128)> {
    if len == 0 {
        return Err(ZetaError::InvalidInput("cycle length must be positive".into()));
    }
    let traces = x.edge_matrix().traces(len);
    let n_len = traces[len - 1];
    let mut acc: i128 = 0;
    for d in divisors(len as u64) {
        acc += mobius(d) as i128 * traces[len / d as usize - 1];
    }
    Ok((n_len, acc / len as i128))
}
