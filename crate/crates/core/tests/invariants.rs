//! Property checks that span several modules.

use std::sync::Arc;

use num_complex::Complex64;
use partial_zeta::continuation::PartialZetaEvaluator;
use partial_zeta::euler::{truncated_zeta, truncated_zeta_pn};
use partial_zeta::graph::{ihara_det, ihara_edge, primitive_classes, GraphBackend, VoltageGraph};
use partial_zeta::group::truncated_z;
use partial_zeta::numberfield::{
    cyclic_system, dirichlet_l, find_zeros_in_rect, kronecker_system, xi, AbelianSystem, CharacterSpec, ClosedFormG,
    DirichletCharacter, Rect, TailCorrectedPartial,
};
use partial_zeta::primes::{divisors, sieve};
use partial_zeta::{TruncationPolicy, ZetaSystem};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
const CUBE_EDGES: [(usize, usize); 12] =
    [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)];

fn voltage_graph(cube: bool, q_c: u32, volts: &[u32]) -> VoltageGraph {
    let (n, edges): (usize, &[(usize, usize)]) = if cube { (8, &CUBE_EDGES) } else { (4, &K4_EDGES) };
    let e: Vec<_> = edges.iter().zip(volts.iter().cycle()).map(|(&(u, v), &a)| (u, v, a)).collect();
    VoltageGraph::from_edges(n, 2, q_c, &e).unwrap()
}

fn system(kind: usize) -> ZetaSystem {
    match kind {
        0 => kronecker_system(5).unwrap().system().clone(),
        1 => kronecker_system(-3).unwrap().system().clone(),
        2 => cyclic_system(&CharacterSpec::Generators { modulus: 7, order: 3, generator_values: vec![(3, 1)] })
            .unwrap()
            .system()
            .clone(),
        3 => AbelianSystem::from_character_spec(&CharacterSpec::Generators {
            modulus: 7,
            order: 6,
            generator_values: vec![(3, 1)],
        })
        .unwrap()
        .system()
        .clone(),
        _ => GraphBackend::new(voltage_graph(false, 3, &[0, 0, 0, 0, 1, 0])).into_system(),
    }
}

/// `(p, primitive root mod p)`.
const ROOTS: [(u64, u64); 6] = [(5, 2), (7, 3), (11, 2), (13, 2), (19, 2), (31, 3)];

fn random_character(idx: usize, pick: usize, k: u32) -> DirichletCharacter {
    let (p, g) = ROOTS[idx];
    let orders: Vec<u64> = divisors(p - 1).into_iter().filter(|&d| d > 1).collect();
    let order = orders[pick % orders.len()] as u32;
    DirichletCharacter::from_generators(p, order, &[(g, k % order)]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn partial_products_partition_the_full_product(
        kind in 0usize..5, re in 1.1f64..3.0, im in -20.0f64..20.0, cutoff in 50.0f64..3000.0
    ) {
        let sys = system(kind);
        let s = c(re, im);
        let pol = TruncationPolicy::new(cutoff);
        let full = truncated_zeta(&sys, s, &pol).unwrap();
        let mut parts = Complex64::new(0.0, 0.0);
        let mut factors = 0;
        for n in divisors(sys.group_order() as u64) {
            let t = truncated_zeta_pn(&sys, n as u32, s, &pol).unwrap();
            parts += t.log;
            factors += t.factors;
        }
        prop_assert_eq!(factors, full.factors);
        prop_assert!((parts - full.log).norm() <= 1e-12 * full.log.norm().max(1.0));
    }

    #[test]
    fn truncation_is_monotone_for_real_s(kind in 0usize..5, sigma in 1.05f64..4.0, x1 in 10.0f64..500.0, grow in 1.0f64..20.0) {
        let sys = system(kind);
        let s = c(sigma, 0.0);
        let a = truncated_zeta(&sys, s, &TruncationPolicy::new(x1)).unwrap();
        let b = truncated_zeta(&sys, s, &TruncationPolicy::new(x1 * grow)).unwrap();
        prop_assert!(b.log.re >= a.log.re);
        prop_assert!(b.tail <= a.tail);
    }

    #[test]
    fn reported_tail_covers_doubling(kind in 0usize..5, re in 1.3f64..3.0, im in -10.0f64..10.0, x in 64.0f64..1000.0) {
        let sys = system(kind);
        let s = c(re, im);
        let base = truncated_zeta(&sys, s, &TruncationPolicy::new(x)).unwrap();
        for k in 1..=4 {
            let far = truncated_zeta(&sys, s, &TruncationPolicy::new(x * 2f64.powi(k))).unwrap();
            prop_assert!((far.log - base.log).norm() <= base.tail, "k = {}", k);
        }
    }

    #[test]
    fn z_is_real_on_the_real_axis(kind in 0usize..5, sigma in 1.05f64..4.0, x in 10.0f64..3000.0) {
        let sys = system(kind);
        let z = truncated_z(&sys, c(sigma, 0.0), &TruncationPolicy::new(x)).unwrap();
        prop_assert!(z.log.im.abs() <= 1e-12 * z.log.norm().max(1.0));
    }

    #[test]
    fn orthogonality(idx in 0usize..6, pick in 0usize..8, k in 1u32..30) {
        let chi = random_character(idx, pick, k);
        prop_assume!(!chi.is_principal());
        let m = chi.modulus();
        let total: Complex64 = (0..m).map(|a| chi.value(a)).sum();
        prop_assert!(total.norm() < 1e-12);
    }

    #[test]
    fn dirichlet_series_and_euler_product_agree(idx in 0usize..6, pick in 0usize..8, k in 1u32..30, re in 2.0f64..3.0, im in -15.0f64..15.0) {
        let chi = random_character(idx, pick, k);
        prop_assume!(!chi.is_principal());
        let s = c(re, im);
        let n = 2000u64;
        let series: Complex64 = (1..=n).map(|a| chi.value(a) * (-s * (a as f64).ln()).exp()).sum();
        let series_tail = (n as f64).powf(1.0 - re) / (re - 1.0);
        let log_euler: Complex64 = sieve(n)
            .unwrap()
            .into_iter()
            .map(|p| -(Complex64::new(1.0, 0.0) - chi.value(p) * (-s * (p as f64).ln()).exp()).ln())
            .sum();
        let euler_tail = 2.0 * (n as f64).powf(1.0 - re) / (re - 1.0);
        let l = dirichlet_l(s, &chi).unwrap();
        prop_assert!((series - l).norm() <= series_tail * 1.01 + 1e-12);
        prop_assert!((log_euler.exp() / l - 1.0).norm() <= 2.0 * euler_tail);
    }

    #[test]
    fn xi_symmetry(re in 0.01f64..0.99, im in -30.0f64..30.0) {
        let s = c(re, im);
        let a = xi(s);
        let b = xi(Complex64::new(1.0, 0.0) - s);
        prop_assert!((a - b).norm() <= 1e-8 * a.norm().max(1e-300));
    }

    #[test]
    fn frobenius_is_a_class_invariant(
        cube in any::<bool>(), q_pick in 0usize..2, volts in proptest::collection::vec(0u32..7, 12), rot in 0usize..8
    ) {
        let q_c = [3, 5][q_pick];
        let vg = voltage_graph(cube, q_c, &volts);
        let arc_volt = vg.arc_voltages();
        for class in primitive_classes(vg.base(), 6, 1_000_000).unwrap() {
            let sum = class.voltage_sum(&arc_volt, q_c);
            let len = class.length();
            let rotated: Vec<usize> = (0..len).map(|i| class.arcs[(i + rot) % len]).collect();
            let rotated_sum = rotated.iter().fold(0, |acc, &a| (acc + arc_volt[a]) % q_c);
            prop_assert_eq!(rotated_sum, sum);
            let inverse_sum = class.arcs.iter().rev().fold(0, |acc, &a| (acc + arc_volt[a ^ 1]) % q_c);
            prop_assert_eq!(inverse_sum, (q_c - sum) % q_c);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn covers_satisfy_bass_and_divisibility(
        cube in any::<bool>(), q_pick in 0usize..2, volts in proptest::collection::vec(0u32..7, 12)
    ) {
        // The cube over ℤ/5 would need a 120×120 exact edge determinant.
        let q_c = if cube { 3 } else { [3, 5][q_pick] };
        let vg = voltage_graph(cube, q_c, &volts);
        let cover = vg.build_cover().unwrap();
        let y = ihara_det(&cover.graph).unwrap();
        prop_assert_eq!(&y, &ihara_edge(&cover.graph));
        let (quot, rem) = y.div_rem(&ihara_det(vg.base()).unwrap());
        prop_assert!(rem.is_zero());
        prop_assert_eq!(quot, vg.nontrivial_l_product().unwrap());
    }

    #[test]
    fn deeper_continuations_are_powers(re in 0.55f64..1.6, im in 0.5f64..25.0) {
        let sys = kronecker_system(5).unwrap();
        let g = Arc::new(ClosedFormG::new(&sys));
        let base = Arc::new(TailCorrectedPartial::new(&sys, 1e4).unwrap());
        let ev1 = PartialZetaEvaluator::new(2, 1, g, base).unwrap();
        let s = c(re, im);
        let Ok(v1) = ev1.evaluate(s) else { return Ok(()) };
        for r in 2..=3 {
            let Ok(v) = ev1.with_depth(r).unwrap().evaluate(s) else { continue };
            let ratio = (v.log - v1.log * 2f64.powi(r as i32 - 1)).exp();
            let budget = 10.0 * (v.tail + v1.tail * 2f64.powi(r as i32 - 1)) + 1e-9 * v.log.norm().max(1.0);
            prop_assert!((ratio - 1.0).norm() <= budget, "r = {}, {} vs {}", r, v.log, v1.log);
        }
    }
}

#[test]
fn pole_order_at_one_grows_like_the_prediction() {
    // Near s = 1, f^{q^r} ~ (s - 1)^{-(q-1)q^{r-1}}; the slope of log|·| against
    // log(1/ε) between two small ε cancels the analytic factor up to O(ε).
    for (d, q) in [(5i64, 2u32), (-3, 2)] {
        let sys = kronecker_system(d).unwrap();
        let g = Arc::new(ClosedFormG::new(&sys));
        let base = Arc::new(TailCorrectedPartial::new(&sys, 1e4).unwrap());
        for r in 1..=3u32 {
            let ev = PartialZetaEvaluator::new(q, r, g.clone(), base.clone()).unwrap();
            let (e1, e2) = (1e-3, 1e-4);
            let l1 = ev.evaluate(c(1.0 + e1, 0.0)).unwrap().log_abs;
            let l2 = ev.evaluate(c(1.0 + e2, 0.0)).unwrap().log_abs;
            let slope = (l2 - l1) / (e1 / e2).ln();
            let expected = ((q - 1) * q.pow(r - 1)) as f64;
            assert!((slope - expected).abs() < 0.01 * expected, "d = {d}, r = {r}: {slope}");
        }
    }
}

#[test]
fn zeros_of_conjugate_characters_mirror() {
    let chi = DirichletCharacter::from_generators(7, 3, &[(3, 1)]).unwrap();
    let bar = chi.conj();
    let upper = Rect::new(0.02, 0.98, 0.0, 20.0);
    let lower = Rect::new(0.02, 0.98, -20.0, 0.0);
    let (n_up, up) = find_zeros_in_rect(&|s: Complex64| dirichlet_l(s, &chi), &upper).unwrap();
    let (n_down, down) = find_zeros_in_rect(&|s: Complex64| dirichlet_l(s, &bar), &lower).unwrap();
    assert_eq!(n_up, n_down);
    assert!(n_up > 0);
    for z in &up {
        assert!(
            down.iter().any(|w| (w.location - z.location.conj()).norm() < 1e-8 && w.multiplicity == z.multiplicity),
            "no mirror for {}",
            z.location
        );
    }
}
