//! Dual coordinate descent for the L2-regularized hinge-loss SVM.
//!
//! The bias is learned by appending a constant 1 coordinate to every
//! example, so the solver minimizes
//!
//! ```text
//! 1/2 (|w|^2 + b^2) + sum_i C_i max(0, 1 - y_i (w.x_i + b))
//! ```
//!
//! through its dual `min 1/2 a'Qa - sum a` with `0 <= a_i <= C_i`, updating
//! one coordinate at a time in closed form. Instances are visited in a
//! fresh seeded permutation every epoch.
//!
//! Coordinate steps can raise the primal objective even though each one
//! improves the dual, so the returned model is a separate primal sequence
//! that follows the dual iterate `w(a) = sum a_i y_i x_i`. After every epoch
//! it jumps to `w(a)` when that does not raise the objective, and otherwise
//! moves to the objective minimizer on the segment towards `w(a)`. Its
//! objective never increases, it is never worse than `w(a)`, and it
//! converges with the dual iterate.

use super::{dot, BinaryLinearModel, SvmError, TrainConfig};
use crate::corpus::Label;
use crate::rng::SplitMix64;

/// Diagnostics of one solver run.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverTrace {
    /// Final dual variables, one per training example.
    pub alphas: Vec<f64>,
    /// Per-example upper bounds `C_i`.
    pub upper_bounds: Vec<f64>,
    /// Dual iterate `sum a_i y_i x_i` and its bias coordinate.
    pub dual_weights: Vec<f64>,
    pub dual_bias: f64,
    /// Primal objective of the returned sequence at the start and after every epoch.
    pub objective_history: Vec<f64>,
    /// Largest projected-gradient magnitude seen in the last epoch.
    pub max_violation: f64,
    pub epochs: usize,
    pub converged: bool,
}

/// Primal objective `1/2 (|w|^2 + b^2) + sum_i C_i hinge_i` of the
/// bias-augmented problem.
pub fn primal_objective(weights: &[f64], bias: f64, x: &[Vec<f64>], y: &[i8], costs: &[f64]) -> f64 {
    let reg = 0.5 * (dot(weights, weights) + bias * bias);
    let loss: f64 = x
        .iter()
        .zip(y)
        .zip(costs)
        .map(|((xi, &yi), &ci)| ci * (1.0 - f64::from(yi) * (dot(weights, xi) + bias)).max(0.0))
        .sum();
    reg + loss
}

fn validate(x: &[Vec<f64>], y: &[i8]) -> Result<usize, SvmError> {
    if x.len() != y.len() {
        return Err(SvmError::LengthMismatch(x.len(), y.len()));
    }
    if x.is_empty() {
        return Err(SvmError::EmptyInput);
    }
    let dim = x[0].len();
    for (row, xi) in x.iter().enumerate() {
        if xi.len() != dim {
            return Err(SvmError::DimensionMismatch { expected: dim, found: xi.len() });
        }
        if let Some(col) = xi.iter().position(|v| !v.is_finite()) {
            return Err(SvmError::NonFiniteFeature { row, col });
        }
    }
    if let Some(&bad) = y.iter().find(|&&t| t != 1 && t != -1) {
        return Err(SvmError::InvalidTarget(bad));
    }
    if y.iter().all(|&t| t == y[0]) {
        return Err(SvmError::SingleClassInput);
    }
    Ok(dim)
}

/// Train a binary model on targets in {+1, -1} with cost `cfg.c` for both
/// classes. The model's labels default to Positive (+1) / Negative (-1).
pub fn train_binary(x: &[Vec<f64>], y: &[i8], cfg: &TrainConfig) -> Result<BinaryLinearModel, SvmError> {
    train_binary_traced(x, y, cfg, cfg.c, cfg.c).map(|(m, _)| m)
}

/// Like [`train_binary`] with separate costs for the +1 and -1 classes,
/// also returning solver diagnostics.
pub fn train_binary_traced(
    x: &[Vec<f64>],
    y: &[i8],
    cfg: &TrainConfig,
    cost_pos: f64,
    cost_neg: f64,
) -> Result<(BinaryLinearModel, SolverTrace), SvmError> {
    cfg.validate()?;
    for c in [cost_pos, cost_neg] {
        if !(c.is_finite() && c > 0.0) {
            return Err(SvmError::InvalidConfig(format!("class cost must be positive, got {c}")));
        }
    }
    let dim = validate(x, y)?;
    let n = x.len();
    let costs: Vec<f64> = y.iter().map(|&t| if t > 0 { cost_pos } else { cost_neg }).collect();
    // diagonal of Q including the bias coordinate
    let q_diag: Vec<f64> = x.iter().map(|xi| dot(xi, xi) + 1.0).collect();

    let mut alphas = vec![0.0; n];
    let mut w = vec![0.0; dim];
    let mut b = 0.0;
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = SplitMix64::new(cfg.seed);
    let mut primal_w = w.clone();
    let mut primal_b = b;
    let mut history = vec![primal_objective(&w, b, x, y, &costs)];
    let mut max_violation = f64::INFINITY;
    let mut epochs = 0;
    let mut converged = false;

    while epochs < cfg.max_epochs {
        rng.shuffle(&mut order);
        max_violation = 0.0f64;
        for &i in &order {
            let yi = f64::from(y[i]);
            let grad = yi * (dot(&w, &x[i]) + b) - 1.0;
            let projected = if alphas[i] == 0.0 {
                grad.min(0.0)
            } else if alphas[i] == costs[i] {
                grad.max(0.0)
            } else {
                grad
            };
            max_violation = max_violation.max(projected.abs());
            if projected != 0.0 {
                let old = alphas[i];
                alphas[i] = (old - grad / q_diag[i]).clamp(0.0, costs[i]);
                let step = (alphas[i] - old) * yi;
                if step != 0.0 {
                    for (wj, xj) in w.iter_mut().zip(&x[i]) {
                        *wj += step * xj;
                    }
                    b += step;
                }
            }
        }
        epochs += 1;
        let dual_objective = primal_objective(&w, b, x, y, &costs);
        let previous = *history.last().expect("history starts non-empty");
        if dual_objective <= previous {
            primal_w.clone_from(&w);
            primal_b = b;
        } else {
            let t = segment_minimizer(&primal_w, primal_b, &w, b, x, y, &costs);
            for (pj, wj) in primal_w.iter_mut().zip(&w) {
                *pj += t * (wj - *pj);
            }
            primal_b += t * (b - primal_b);
        }
        let objective = primal_objective(&primal_w, primal_b, x, y, &costs);
        history.push(objective);
        if max_violation < cfg.tolerance {
            converged = true;
            break;
        }
    }

    let model = BinaryLinearModel {
        positive_label: Label::Positive,
        negative_label: Label::Negative,
        cost: cfg.c,
        bias: primal_b,
        weights: primal_w,
        epochs,
    };
    let trace = SolverTrace {
        alphas,
        dual_weights: w,
        dual_bias: b,
        upper_bounds: costs,
        objective_history: history,
        max_violation,
        epochs,
        converged,
    };
    Ok((model, trace))
}

/// `t` in `[0, 1]` minimizing the primal objective at
/// `(w0, b0) + t ((w1, b1) - (w0, b0))`. The objective is convex and
/// piecewise quadratic in `t`; the sweep walks its hinge breakpoints until
/// the derivative changes sign.
fn segment_minimizer(w0: &[f64], b0: f64, w1: &[f64], b1: f64, x: &[Vec<f64>], y: &[i8], costs: &[f64]) -> f64 {
    let v: Vec<f64> = w1.iter().zip(w0).map(|(a, b)| a - b).collect();
    let vb = b1 - b0;
    // derivative = slope0 + t * curvature - sum of C_i s_i over active hinges
    let slope0 = dot(w0, &v) + b0 * vb;
    let curvature = dot(&v, &v) + vb * vb;
    let mut active_sum = 0.0;
    let mut events: Vec<(f64, f64)> = Vec::new();
    for ((xi, &yi), &ci) in x.iter().zip(y).zip(costs) {
        let yi = f64::from(yi);
        let margin = 1.0 - yi * (dot(w0, xi) + b0);
        let s = yi * (dot(&v, xi) + vb);
        // hinge i is active while margin - t s > 0
        let active_at_start = margin > 0.0 || (margin == 0.0 && s < 0.0);
        if active_at_start {
            active_sum += ci * s;
        }
        if s != 0.0 {
            let t = margin / s;
            if t > 0.0 && t < 1.0 {
                // crossing toggles the hinge: leaving removes C s, entering adds it
                events.push((t, if active_at_start { -ci * s } else { ci * s }));
            }
        }
    }
    events.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut lo = 0.0;
    for (t, change) in events.into_iter().chain(std::iter::once((1.0, 0.0))) {
        let deriv_lo = slope0 + lo * curvature - active_sum;
        if deriv_lo >= 0.0 {
            return lo;
        }
        let deriv_hi = slope0 + t * curvature - active_sum;
        if deriv_hi >= 0.0 {
            return (active_sum - slope0) / curvature;
        }
        active_sum += change;
        lo = t;
    }
    1.0
}
