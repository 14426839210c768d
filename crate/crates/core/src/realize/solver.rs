//! Restarted penalty least squares for unit-edge drawings.
//!
//! Residuals: `|p_i - p_j| - 1` per edge, plus hinge terms `max(0, m - s)`
//! for every vertex pair, vertex/edge pair and edge pair that must stay
//! apart, where `s` is their separation and `m` the restart's target
//! margin. For two crossing edges the separation is negative: minus the
//! shortest distance an endpoint must travel to reach the other edge's line.
//! The objective is the sum of squared residuals, minimised by
//! Levenberg-Marquardt; the edge lengths are then polished by minimum-norm
//! Gauss-Newton steps and the result is judged only by the validator.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{validate_embedding, Embedding, SolveConfig};
use crate::geometry::{line_distance_grad, point_segment_grad, segments_cross, Point};
use crate::graph::Graph;

/// Target margins, cycled by restart index.
const MARGINS: [f64; 4] = [0.2, 0.08, 0.03, 0.01];
/// Largest edge-length error the polishing step is asked to repair.
const POLISH_ENTRY: f64 = 0.05;

#[derive(Clone, Copy)]
struct Row {
    r: f64,
    len: usize,
    vars: [usize; 4],
    grad: [Point; 4],
}

impl Row {
    fn new(r: f64, vars: &[usize], grad: &[Point]) -> Self {
        let mut row = Row {
            r,
            len: vars.len(),
            vars: [0; 4],
            grad: [Point::default(); 4],
        };
        row.vars[..vars.len()].copy_from_slice(vars);
        row.grad[..grad.len()].copy_from_slice(grad);
        row
    }
}

/// The pair lists a graph's residuals range over.
pub(crate) struct Problem {
    n: usize,
    edges: Vec<(usize, usize)>,
    vertex_pairs: Vec<(usize, usize)>,
    vertex_edge: Vec<(usize, usize)>,
    edge_pairs: Vec<(usize, usize)>,
}

impl Problem {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let edges = g.edges();
        let mut vertex_pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) {
                    vertex_pairs.push((u, v));
                }
            }
        }
        let mut vertex_edge = Vec::new();
        for (e, &(a, b)) in edges.iter().enumerate() {
            for k in (0..n).filter(|&k| k != a && k != b) {
                vertex_edge.push((k, e));
            }
        }
        let mut edge_pairs = Vec::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a != c && a != d && b != c && b != d {
                    edge_pairs.push((i, j));
                }
            }
        }
        Problem {
            n,
            edges,
            vertex_pairs,
            vertex_edge,
            edge_pairs,
        }
    }

    /// Active residual rows at `x`. Inactive hinge terms are omitted.
    fn residuals(&self, x: &[Point], margin: f64, rows: &mut Vec<Row>) {
        rows.clear();
        for &(i, j) in &self.edges {
            let d = x[i].sub(x[j]);
            let len = d.norm();
            let u = if len > 0.0 { d.scale(1.0 / len) } else { Point::default() };
            rows.push(Row::new(len - 1.0, &[i, j], &[u, u.scale(-1.0)]));
        }
        for &(i, j) in &self.vertex_pairs {
            let d = x[i].sub(x[j]);
            let len = d.norm();
            if len < margin {
                let u = if len > 0.0 { d.scale(1.0 / len) } else { Point::default() };
                rows.push(Row::new(margin - len, &[i, j], &[u.scale(-1.0), u]));
            }
        }
        for &(k, e) in &self.vertex_edge {
            let (a, b) = self.edges[e];
            let (dist, g) = point_segment_grad(x[k], x[a], x[b]);
            if dist < margin {
                rows.push(Row::new(
                    margin - dist,
                    &[k, a, b],
                    &[g[0].scale(-1.0), g[1].scale(-1.0), g[2].scale(-1.0)],
                ));
            }
        }
        for &(e, f) in &self.edge_pairs {
            let (a, b) = self.edges[e];
            let (c, d) = self.edges[f];
            if segments_cross(x[a], x[b], x[c], x[d]) {
                // Depth: nearest endpoint to the other segment's line.
                let candidates = [
                    (line_distance_grad(x[a], x[c], x[d]), [a, c, d]),
                    (line_distance_grad(x[b], x[c], x[d]), [b, c, d]),
                    (line_distance_grad(x[c], x[a], x[b]), [c, a, b]),
                    (line_distance_grad(x[d], x[a], x[b]), [d, a, b]),
                ];
                let ((depth, g), vars) = candidates
                    .into_iter()
                    .min_by(|p, q| p.0 .0.total_cmp(&q.0 .0))
                    .expect("four candidates");
                rows.push(Row::new(margin + depth, &vars, &g));
            } else {
                let candidates = [
                    (point_segment_grad(x[a], x[c], x[d]), [a, c, d]),
                    (point_segment_grad(x[b], x[c], x[d]), [b, c, d]),
                    (point_segment_grad(x[c], x[a], x[b]), [c, a, b]),
                    (point_segment_grad(x[d], x[a], x[b]), [d, a, b]),
                ];
                let ((dist, g), vars) = candidates
                    .into_iter()
                    .min_by(|p, q| p.0 .0.total_cmp(&q.0 .0))
                    .expect("four candidates");
                if dist < margin {
                    rows.push(Row::new(
                        margin - dist,
                        &vars,
                        &[g[0].scale(-1.0), g[1].scale(-1.0), g[2].scale(-1.0)],
                    ));
                }
            }
        }
    }

    fn objective(&self, x: &[Point], margin: f64, rows: &mut Vec<Row>) -> f64 {
        self.residuals(x, margin, rows);
        rows.iter().map(|r| r.r * r.r).sum()
    }

    /// Levenberg-Marquardt on the penalty objective. Returns the final value.
    fn minimize(&self, x: &mut Vec<Point>, margin: f64, max_iterations: usize) -> f64 {
        let dim = 2 * self.n;
        let mut rows = Vec::new();
        let mut trial_rows = Vec::new();
        let mut f = self.objective(x, margin, &mut rows);
        let mut lambda = 1e-3;
        let mut trial = x.clone();
        for _ in 0..max_iterations {
            if f < 1e-28 {
                break;
            }
            let mut a = DMatrix::<f64>::zeros(dim, dim);
            let mut b = DVector::<f64>::zeros(dim);
            for row in &rows {
                for p in 0..row.len {
                    let (vp, gp) = (row.vars[p], row.grad[p]);
                    b[2 * vp] += gp.x * row.r;
                    b[2 * vp + 1] += gp.y * row.r;
                    for q in 0..row.len {
                        let (vq, gq) = (row.vars[q], row.grad[q]);
                        a[(2 * vp, 2 * vq)] += gp.x * gq.x;
                        a[(2 * vp, 2 * vq + 1)] += gp.x * gq.y;
                        a[(2 * vp + 1, 2 * vq)] += gp.y * gq.x;
                        a[(2 * vp + 1, 2 * vq + 1)] += gp.y * gq.y;
                    }
                }
            }
            let mut improved = false;
            while lambda < 1e12 {
                let mut damped = a.clone();
                for i in 0..dim {
                    damped[(i, i)] += lambda * (1.0 + a[(i, i)]);
                }
                let Some(chol) = damped.cholesky() else {
                    lambda *= 4.0;
                    continue;
                };
                let step = chol.solve(&b);
                for (v, t) in trial.iter_mut().enumerate() {
                    *t = Point::new(x[v].x - step[2 * v], x[v].y - step[2 * v + 1]);
                }
                let f_trial = self.objective(&trial, margin, &mut trial_rows);
                if f_trial < f {
                    let converged = f - f_trial <= 1e-15 * f || step.amax() < 1e-14;
                    std::mem::swap(x, &mut trial);
                    std::mem::swap(&mut rows, &mut trial_rows);
                    f = f_trial;
                    lambda = (lambda / 3.0).max(1e-12);
                    improved = !converged;
                    break;
                }
                lambda *= 4.0;
            }
            if !improved {
                break;
            }
        }
        f
    }

    pub fn max_edge_error(&self, x: &[Point]) -> f64 {
        self.edges
            .iter()
            .map(|&(i, j)| (x[i].dist(x[j]) - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Minimum-norm Gauss-Newton on the edge residuals alone.
    fn polish(&self, x: &mut [Point]) {
        let m = self.edges.len();
        let dim = 2 * self.n;
        let mut best = self.max_edge_error(x);
        for _ in 0..60 {
            if best < 1e-15 {
                break;
            }
            let mut jac = DMatrix::<f64>::zeros(m, dim);
            let mut r = DVector::<f64>::zeros(m);
            for (k, &(i, j)) in self.edges.iter().enumerate() {
                let d = x[i].sub(x[j]);
                let len = d.norm();
                r[k] = len - 1.0;
                let u = d.scale(1.0 / len);
                jac[(k, 2 * i)] = u.x;
                jac[(k, 2 * i + 1)] = u.y;
                jac[(k, 2 * j)] = -u.x;
                jac[(k, 2 * j + 1)] = -u.y;
            }
            let Ok(step) = jac.svd(true, true).solve(&r, 1e-12) else {
                return;
            };
            let prev: Vec<Point> = x.to_vec();
            for (v, p) in x.iter_mut().enumerate() {
                *p = Point::new(p.x - step[2 * v], p.y - step[2 * v + 1]);
            }
            let err = self.max_edge_error(x);
            if !(err < best) {
                x.copy_from_slice(&prev);
                return;
            }
            best = err;
        }
    }
}

/// Penalty objective and its analytic gradient at `points`.
pub fn penalty_objective(g: &Graph, points: &[Point], margin: f64) -> (f64, Vec<Point>) {
    let problem = Problem::new(g);
    let mut rows = Vec::new();
    let f = problem.objective(points, margin, &mut rows);
    let mut grad = vec![Point::default(); points.len()];
    for row in &rows {
        for k in 0..row.len {
            let v = row.vars[k];
            grad[v] = grad[v].add(row.grad[k].scale(2.0 * row.r));
        }
    }
    (f, grad)
}

/// Deterministic generator for one restart.
pub(crate) fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

/// Penalty margin used by a given restart.
pub fn restart_margin(restart: usize) -> f64 {
    MARGINS[restart % MARGINS.len()]
}

/// Runs restarts in order and returns the first drawing that validates,
/// with the restart index that produced it.
pub(crate) fn search(g: &Graph, cfg: &SolveConfig) -> Option<(Embedding, usize)> {
    let problem = Problem::new(g);
    let n = g.vertex_count();
    let side = 2.0 * n as f64;
    let strict = cfg.tightened(10.0);
    for restart in 0..cfg.restarts {
        let mut rng = restart_rng(cfg.rng_seed, restart);
        let mut x: Vec<Point> = (0..n)
            .map(|_| Point::new(rng.gen_range(0.0..side), rng.gen_range(0.0..side)))
            .collect();
        problem.minimize(&mut x, restart_margin(restart), cfg.max_iterations);
        if !(problem.max_edge_error(&x) < POLISH_ENTRY) {
            continue;
        }
        problem.polish(&mut x);
        let candidate = Embedding::new(x).normalized();
        let ok = |c: &SolveConfig| {
            validate_embedding(g, &candidate, c).map_or(false, |r| r.passed())
        };
        if ok(cfg) && ok(&strict) {
            return Some((candidate, restart));
        }
    }
    None
}
