//! Primitive cycle classes of a voltage graph as a prime backend:
//! `N(p) = q_g^{ν(p)}`, Frobenius = voltage sum in ℤ/q_c.

use std::sync::{Arc, Mutex};

use super::cycles::{primitive_classes, DEFAULT_CLASS_BUDGET};
use super::voltage::VoltageGraph;
use crate::error::{Result, ZetaError};
use crate::euler::{PrimeBackend, PrimeDatum, ZetaSystem};
use crate::spec::SystemSpec;

/// Largest cycle length the backend will enumerate.
pub const MAX_CYCLE_LENGTH: usize = 24;

#[derive(Debug)]
pub struct GraphBackend {
    vg: VoltageGraph,
    cache: Mutex<(usize, Vec<PrimeDatum>)>,
}

impl GraphBackend {
    pub fn new(vg: VoltageGraph) -> Self {
        Self { vg, cache: Mutex::new((0, Vec::new())) }
    }

    pub fn voltage_graph(&self) -> &VoltageGraph {
        &self.vg
    }

    pub fn into_system(self) -> ZetaSystem {
        ZetaSystem::new(Arc::new(self))
    }

    /// `floor(log_{q_g} X)`, guarded against rounding at exact powers.
    fn max_length(&self, cutoff: f64) -> usize {
        if cutoff < 1.0 {
            return 0;
        }
        let qg = self.vg.q_g() as f64;
        let mut l = (cutoff.ln() / qg.ln()).floor().max(0.0) as usize;
        while qg.powi(l as i32 + 1) <= cutoff {
            l += 1;
        }
        while l > 0 && qg.powi(l as i32) > cutoff {
            l -= 1;
        }
        l
    }
}

impl PrimeBackend for GraphBackend {
    fn group_order(&self) -> u32 {
        self.vg.q_c()
    }

    fn enumerate(&self, cutoff: f64) -> Result<Vec<PrimeDatum>> {
        let len = self.max_length(cutoff);
        if len > MAX_CYCLE_LENGTH {
            return Err(ZetaError::Budget(format!(
                "cutoff {cutoff} needs cycles of length {len} > {MAX_CYCLE_LENGTH}"
            )));
        }
        let mut cache = self.cache.lock().expect("graph cache poisoned");
        if cache.0 < len {
            let qg = self.vg.q_g() as f64;
            let qc = self.vg.q_c();
            let volt = self.vg.arc_voltages();
            let data = primitive_classes(self.vg.base(), len, DEFAULT_CLASS_BUDGET)?
                .into_iter()
                .enumerate()
                .map(|(id, c)| PrimeDatum::new(id as u64, qg.powi(c.length() as i32), c.voltage_sum(&volt, qc), qc))
                .collect::<Result<Vec<_>>>()?;
            *cache = (len, data);
        }
        Ok(cache.1.iter().take_while(|p| p.norm <= cutoff).copied().collect())
    }

    /// Classes of length `ν` number at most `tr T^ν / ν <= 2m q_g^ν / ν`, so the
    /// tail beyond length `L` is at most `(2m/(L+1)) r^{L+1}/(1 - r)`, `r = q_g^{1-σ}`.
    fn tail_sum_bound(&self, cutoff: f64, sigma: f64) -> f64 {
        let l = self.max_length(cutoff) as f64;
        let r = (self.vg.q_g() as f64).powf(1.0 - sigma);
        if r >= 1.0 {
            return f64::INFINITY;
        }
        2.0 * self.vg.base().m() as f64 / (l + 1.0) * r.powf(l + 1.0) / (1.0 - r)
    }

    fn spec(&self) -> SystemSpec {
        self.vg.spec()
    }
}

/// Parses `n q_g q_c` followed by `u v [voltage]` lines; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<VoltageGraph> {
    let mut lines =
        text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).enumerate().filter(|(_, l)| !l.is_empty());
    let bad = |no: usize, msg: &str| ZetaError::InvalidInput(format!("line {}: {msg}", no + 1));
    let (hno, header) = lines.next().ok_or_else(|| ZetaError::InvalidInput("empty edge list".into()))?;
    let head: Vec<u64> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad(hno, "header must be `n q_g q_c`")))
        .collect::<Result<_>>()?;
    if head.len() != 3 {
        return Err(bad(hno, "header must be `n q_g q_c`"));
    }
    let mut edges = Vec::new();
    for (no, line) in lines {
        let f: Vec<u64> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(no, "expected `u v [voltage]`")))
            .collect::<Result<_>>()?;
        match f.as_slice() {
            [u, v] => edges.push((*u as usize, *v as usize, 0)),
            [u, v, a] => edges.push((*u as usize, *v as usize, *a as u32)),
            _ => return Err(bad(no, "expected `u v [voltage]`")),
        }
    }
    VoltageGraph::from_edges(head[0] as usize, head[1] as u32, head[2] as u32, &edges)
}
