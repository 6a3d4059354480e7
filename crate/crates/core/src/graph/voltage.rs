//! ℤ/q_c voltage assignments, derived covering graphs and graph L-functions.

use serde::{Deserialize, Serialize};

use super::multigraph::MultiGraph;
use crate::error::{Result, ZetaError};
use crate::exact::cyclotomic::Cyclotomic;
use crate::exact::linalg::det_poly_cyclotomic;
use crate::exact::poly::Polynomial;
use crate::primes::is_prime;
use crate::spec::SystemSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VoltageGraph {
    base: MultiGraph,
    q_g: u32,
    q_c: u32,
    /// Voltage of each undirected edge in its stored orientation.
    edge_voltage: Vec<u32>,
}

/// A derived graph together with its connectivity.
#[derive(Clone, Debug)]
pub struct Cover {
    pub graph: MultiGraph,
    pub connected: bool,
}

impl VoltageGraph {
    /// `edges` holds `(u, v, α)` with `α` the voltage of the arc `u → v`.
    pub fn from_edges(n: usize, q_g: u32, q_c: u32, edges: &[(usize, usize, u32)]) -> Result<Self> {
        if !is_prime(q_c as u64) {
            return Err(ZetaError::InvalidInput(format!("cover group order {q_c} is not prime")));
        }
        let base = MultiGraph::regular(n, q_g, edges.iter().map(|&(u, v, _)| (u, v)).collect())?;
        let edge_voltage = edges.iter().map(|&(_, _, a)| a % q_c).collect();
        Ok(Self { base, q_g, q_c, edge_voltage })
    }

    pub fn base(&self) -> &MultiGraph {
        &self.base
    }

    pub fn q_g(&self) -> u32 {
        self.q_g
    }

    pub fn q_c(&self) -> u32 {
        self.q_c
    }

    /// Voltage per oriented arc; the reverse arc carries the negative.
    pub fn arc_voltages(&self) -> Vec<u32> {
        let q = self.q_c;
        self.edge_voltage.iter().flat_map(|&a| [a, (q - a) % q]).collect()
    }

    pub fn edges_with_voltage(&self) -> Vec<(usize, usize, u32)> {
        self.base.edges().iter().zip(&self.edge_voltage).map(|(&(u, v), &a)| (u, v, a)).collect()
    }

    pub fn spec(&self) -> SystemSpec {
        SystemSpec::Graph { n: self.base.n(), q_g: self.q_g, q_c: self.q_c, edges: self.edges_with_voltage() }
    }

    /// Vertices `(v, a)` are numbered `v·q_c + a`; edge `(u, v)` with voltage `α`
    /// lifts to `(u, a) – (v, a + α)` for every `a`.
    pub fn build_cover(&self) -> Result<Cover> {
        let q = self.q_c as usize;
        let mut edges = Vec::with_capacity(self.base.m() * q);
        for (&(u, v), &alpha) in self.base.edges().iter().zip(&self.edge_voltage) {
            for a in 0..q {
                edges.push((u * q + a, v * q + (a + alpha as usize) % q));
            }
        }
        let n = self.base.n() * q;
        // The vertex cap applies to inputs; covers of capped graphs may exceed it.
        let graph = if n <= super::multigraph::MAX_VERTICES {
            MultiGraph::new(n, edges)?
        } else {
            MultiGraph::new_unchecked(n, edges)
        };
        let connected = graph.is_connected();
        Ok(Cover { graph, connected })
    }

    /// `det(I - u T_χ)` for `χ_j(a) = ζ_{q_c}^{ja}`, with
    /// `T_χ[e → f] = χ_j(α(f)) T[e → f]`.
    pub fn graph_l(&self, j: u32) -> Vec<Cyclotomic> {
        let q = self.q_c;
        let t = self.base.edge_matrix();
        let volt = self.arc_voltages();
        let size = t.size();
        let weights: Vec<Cyclotomic> =
            volt.iter().map(|&a| Cyclotomic::zeta_pow(q, (j as u64 * a as u64) % q as u64)).collect();
        det_poly_cyclotomic(size, |u| {
            let mut m: Vec<Vec<Cyclotomic>> =
                (0..size).map(|i| (0..size).map(|k| Cyclotomic::from_int(q, (i == k) as i64)).collect()).collect();
            for (e, row) in m.iter_mut().enumerate() {
                for &f in t.successors(e) {
                    let w = weights[f].scale(&crate::exact::poly::rat(u));
                    row[f] = &row[f] - &w;
                }
            }
            m
        })
    }

    /// `Π_{j=1}^{q_c-1} det(I - u T_{χ_j})`, which is rational.
    pub fn nontrivial_l_product(&self) -> Result<Polynomial> {
        let mut acc = vec![Cyclotomic::one(self.q_c)];
        for j in 1..self.q_c {
            acc = cyclotomic_poly_mul(&acc, &self.graph_l(j));
        }
        to_rational_poly(&acc)
    }
}

pub(crate) fn cyclotomic_poly_mul(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let q = a[0].order();
    let mut out = vec![Cyclotomic::zero(q); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, y) in b.iter().enumerate() {
            out[i + k] = &out[i + k] + &(x * y);
        }
    }
    out
}

pub(crate) fn to_rational_poly(coeffs: &[Cyclotomic]) -> Result<Polynomial> {
    coeffs
        .iter()
        .map(|c| c.to_rational().ok_or_else(|| ZetaError::InvalidInput("cyclotomic product is not rational".into())))
        .collect::<Result<Vec<_>>>()
        .map(Polynomial::new)
}
