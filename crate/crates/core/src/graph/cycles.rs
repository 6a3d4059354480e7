//! Equivalence classes of primitive closed non-backtracking tail-less cycles.
//!
//! A class is stored by its canonical representative: the lexicographically
//! least rotation of its arc sequence. A cycle and its inverse are distinct
//! classes, so the class count of length `ν` is `(1/ν) Σ_{d|ν} μ(d) tr T^{ν/d}`.

use super::multigraph::MultiGraph;
use crate::error::{Result, ZetaError};

/// Default cap on the number of classes produced by one enumeration.
pub const DEFAULT_CLASS_BUDGET: usize = 4_000_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleClass {
    /// Canonical arc sequence.
    pub arcs: Vec<usize>,
}

impl CycleClass {
    pub fn length(&self) -> usize {
        self.arcs.len()
    }

    /// Sum of the arc labels; well defined on the class because it is rotation invariant.
    pub fn voltage_sum(&self, voltage: &[u32], modulus: u32) -> u32 {
        self.arcs.iter().fold(0u64, |acc, &a| (acc + voltage[a] as u64) % modulus as u64) as u32
    }
}

/// All classes of length `1..=max_len`, sorted by `(length, arcs)`.
pub fn primitive_classes(x: &MultiGraph, max_len: usize, budget: usize) -> Result<Vec<CycleClass>> {
    let t = x.edge_matrix();
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    for start in 0..t.size() {
        path.clear();
        path.push(start);
        extend(&t, start, max_len, &mut path, &mut out, budget)?;
    }
    out.sort_by(|a, b| a.arcs.len().cmp(&b.arcs.len()).then_with(|| a.arcs.cmp(&b.arcs)));
    Ok(out)
}

fn extend(
    t: &super::multigraph::EdgeMatrix,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<CycleClass>,
    budget: usize,
) -> Result<()> {
    let last = *path.last().expect("path is never empty");
    if t.successors(last).contains(&start) && is_canonical_primitive(path) {
        if out.len() >= budget {
            return Err(ZetaError::Budget(format!("more than {budget} primitive cycle classes")));
        }
        out.push(CycleClass { arcs: path.clone() });
    }
    if path.len() == max_len {
        return Ok(());
    }
    for &f in t.successors(last) {
        if f >= start {
            path.push(f);
            extend(t, start, max_len, path, out, budget)?;
            path.pop();
        }
    }
    Ok(())
}

/// True iff every proper rotation is strictly greater, which rules out both
/// non-canonical rotations and powers of shorter cycles.
fn is_canonical_primitive(seq: &[usize]) -> bool {
    let n = seq.len();
    (1..n).all(|r| {
        if seq[r] != seq[0] {
            return true;
        }
        for i in 0..n {
            let a = seq[(r + i) % n];
            let b = seq[i];
            if a != b {
                return a > b;
            }
        }
        false
    })
}

/// Closed non-backtracking walks of length `len`, counted by brute force over
/// starting arcs. Independent of the trace computation.
pub fn count_closed_walks(x: &MultiGraph, len: usize) -> u64 {
    let t = x.edge_matrix();
    fn walk(t: &super::multigraph::EdgeMatrix, start: usize, cur: usize, left: usize) -> u64 {
        if left == 0 {
            return t.successors(cur).contains(&start) as u64;
        }
        t.successors(cur).iter().map(|&f| walk(t, start, f, left - 1)).sum()
    }
    if len == 0 {
        return 0;
    }
    (0..t.size()).map(|s| walk(&t, s, s, len - 1)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ihara::count_cycles;
    use crate::graph::multigraph::{cube, k4, petersen};

    #[test]
    fn k4_triangles() {
        let classes = primitive_classes(&k4(), 3, DEFAULT_CLASS_BUDGET).unwrap();
        assert_eq!(classes.len(), 8);
        assert!(classes.iter().all(|c| c.length() == 3));
        assert_eq!(count_closed_walks(&k4(), 3), 24);
    }

    #[test]
    fn class_counts_match_mobius_inversion() {
        for g in [k4(), cube(), petersen()] {
            let classes = primitive_classes(&g, 9, DEFAULT_CLASS_BUDGET).unwrap();
            for len in 1..=9 {
                let got = classes.iter().filter(|c| c.length() == len).count() as i128;
                assert_eq!(got, count_cycles(&g, len).unwrap().1, "len = {len}");
                assert_eq!(count_closed_walks(&g, len) as i128, count_cycles(&g, len).unwrap().0);
            }
        }
    }

    #[test]
    fn canonical_check() {
        assert!(is_canonical_primitive(&[0, 2, 4]));
        assert!(!is_canonical_primitive(&[0, 4, 0, 2]));
        assert!(!is_canonical_primitive(&[0, 2, 0, 2]));
        assert!(is_canonical_primitive(&[0, 2, 0, 3]));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(primitive_classes(&k4(), 10, 5), Err(ZetaError::Budget(_))));
    }
}
