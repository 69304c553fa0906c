//! Brute-force minimizer of the bias-augmented primal objective and the
//! random problems it is checked on.

#![allow(dead_code)]

use arasent_core::svm::primal_objective;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Golden-section refinement of a strictly unimodal function on `[lo, hi]`.
pub fn refine_1d(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - ratio * (hi - lo);
    let mut b = lo + ratio * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > tol {
        if fa <= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = f(b);
        }
    }
    0.5 * (lo + hi)
}

/// Minimizer of a strongly convex `f` over the box `[-r, r]^dim` by nested
/// one-dimensional refinement: the last coordinate is minimized out first,
/// and each partial minimum is again strongly convex in the remaining
/// coordinates, so every inner search is over a unimodal function.
pub fn nested_minimize(f: &dyn Fn(&[f64]) -> f64, dim: usize, r: f64) -> Vec<f64> {
    fn solve(f: &dyn Fn(&[f64]) -> f64, prefix: &mut Vec<f64>, dim: usize, r: f64) -> (Vec<f64>, f64) {
        if prefix.len() == dim {
            return (prefix.clone(), f(prefix));
        }
        let inner = |t: f64| {
            let mut p = prefix.clone();
            p.push(t);
            solve(f, &mut p, dim, r).1
        };
        let t = refine_1d(inner, -r, r, 1e-10);
        prefix.push(t);
        let out = solve(f, prefix, dim, r);
        prefix.pop();
        out
    }
    let (theta, _) = solve(f, &mut Vec::new(), dim, r);
    for v in &theta {
        assert!(v.abs() < r * 0.99, "oracle hit the search box");
    }
    theta
}

pub fn oracle(x: &[Vec<f64>], y: &[i8], c: f64) -> (Vec<f64>, f64) {
    let costs = vec![c; y.len()];
    let dim = x[0].len();
    let objective = |t: &[f64]| primal_objective(&t[..dim], t[dim], x, y, &costs);
    let theta = nested_minimize(&objective, dim + 1, 8.0);
    (theta[..dim].to_vec(), theta[dim])
}

pub fn random_problem(seed: u64) -> (Vec<Vec<f64>>, Vec<i8>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = Vec::new();
    let mut y = Vec::new();
    for i in 0..20 {
        let label: i8 = if i % 2 == 0 { 1 } else { -1 };
        let shift = f64::from(label) * 0.5;
        x.push(vec![shift + rng.gen_range(-1.0..1.0), 0.3 * shift + rng.gen_range(-1.0..1.0)]);
        y.push(label);
    }
    (x, y)
}

pub fn assert_monotone(history: &[f64]) {
    for (e, pair) in history.windows(2).enumerate() {
        assert!(pair[1] <= pair[0] + 1e-9, "objective rose after epoch {}: {} -> {}", e + 1, pair[0], pair[1]);
    }
}
