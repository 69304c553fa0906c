//! Binary solver against an independent brute-force minimizer of the primal
//! objective `1/2 (w1^2 + w2^2 + b^2) + C sum hinge`.

use std::time::Instant;

use arasent_core::svm::{primal_objective, train_binary, train_binary_traced, TrainConfig};

#[path = "oracles/svm.rs"]
mod support;
use support::{assert_monotone, oracle, random_problem};

#[test]
fn symmetric_two_point_problem() {
    // x = +1 labeled +1, x = -1 labeled -1: b = 0 by symmetry, w = min(1, 2C)
    let x = vec![vec![1.0], vec![-1.0]];
    let y = vec![1, -1];
    for c in [0.1, 0.25, 1.0, 10.0] {
        let cfg = TrainConfig { c, tolerance: 1e-6, max_epochs: 100_000, ..Default::default() };
        let (m, trace) = train_binary_traced(&x, &y, &cfg, c, c).unwrap();
        let w = (2.0 * c).min(1.0);
        assert!((m.weights[0] - w).abs() < 1e-3, "C {c}: w {}", m.weights[0]);
        assert!(m.bias.abs() < 1e-3, "C {c}: b {}", m.bias);
        let (ow, ob) = oracle(&x, &y, c);
        assert!((ow[0] - w).abs() < 1e-6 && ob.abs() < 1e-6, "oracle disagrees with the analytic solution");
        assert!(trace.converged);
        assert_monotone(&trace.objective_history);
    }
}

#[test]
fn random_problems_match_grid_oracle() {
    let start = Instant::now();
    for seed in 1..=5 {
        let (x, y) = random_problem(seed);
        let c = 1.0;
        let cfg = TrainConfig { c, tolerance: 1e-6, max_epochs: 100_000, seed, ..Default::default() };
        let (m, trace) = train_binary_traced(&x, &y, &cfg, c, c).unwrap();
        let (ow, ob) = oracle(&x, &y, c);
        let costs = vec![c; y.len()];
        let (p_solver, p_oracle) =
            (primal_objective(&m.weights, m.bias, &x, &y, &costs), primal_objective(&ow, ob, &x, &y, &costs));
        assert!(p_oracle <= p_solver + 1e-9, "seed {seed}: oracle {p_oracle} above solver {p_solver}");
        for (k, (a, b)) in m.weights.iter().zip(&ow).enumerate() {
            assert!((a - b).abs() < 1e-3, "seed {seed} w{k}: solver {a}, oracle {b}");
        }
        assert!((m.bias - ob).abs() < 1e-3, "seed {seed} b: solver {}, oracle {ob}", m.bias);
        assert!(trace.converged, "seed {seed} did not converge");
        assert_monotone(&trace.objective_history);
        for (a, u) in trace.alphas.iter().zip(&trace.upper_bounds) {
            assert!(*a >= 0.0 && a <= u, "alpha {a} outside [0, {u}]");
        }
    }
    assert!(start.elapsed().as_secs_f64() < 10.0, "took {:?}", start.elapsed());
}

#[test]
fn default_tolerance_is_close_to_oracle() {
    let (x, y) = random_problem(7);
    let m = train_binary(&x, &y, &TrainConfig::default()).unwrap();
    let (ow, ob) = oracle(&x, &y, 1.0);
    let costs = vec![1.0; y.len()];
    let gap = primal_objective(&m.weights, m.bias, &x, &y, &costs) - primal_objective(&ow, ob, &x, &y, &costs);
    assert!((-1e-9..1e-2).contains(&gap), "gap {gap}");
}
