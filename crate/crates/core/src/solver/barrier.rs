//! Interior-point minimization of total edge length for a fixed tree under
//! convex coverage constraints.

use nalgebra::{DMatrix, DVector, Matrix2, Vector2};
use serde::{Deserialize, Serialize};

use crate::geometry::Point;

/// Closed disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Self {
        Ball { center, radius }
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        p.dist(self.center) <= self.radius + tol
    }
}

/// A convex constraint on the vertex positions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Constraint {
    /// Vertex `v` lies in the ball.
    Vertex { v: usize, ball: Ball },
    /// Edge `e` meets the ball.
    Edge { e: usize, ball: Ball },
}

#[derive(Debug, Clone)]
pub(crate) struct Problem {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct BarrierOptions {
    /// Target bound on the suboptimality in length, relative to the scale.
    pub gap: f64,
    pub max_newton: usize,
    /// Duality gap of the first centering, relative to the scale.
    pub start_gap: f64,
}

impl Default for BarrierOptions {
    fn default() -> Self {
        BarrierOptions { gap: 1e-11, max_newton: 5000, start_gap: 1.0 }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct BarrierResult {
    pub positions: Vec<Point>,
    pub length: f64,
    #[allow(dead_code)]
    pub iterations: usize,
    pub converged: bool,
}

type Block = [[f64; 2]; 2];

fn mat(b: &Block) -> Matrix2<f64> {
    Matrix2::new(b[0][0], b[0][1], b[1][0], b[1][1])
}

/// Solves the block system whose sparsity is a tree, eliminating vertices
/// in post-order. Returns `None` if a pivot block is not positive definite.
fn tree_solve(
    n: usize,
    edges: &[(usize, usize)],
    hd: &[Block],
    ho: &[Block],
    rhs: &[[f64; 2]],
    reg: f64,
) -> Option<Vec<[f64; 2]>> {
    let mut adj = vec![Vec::new(); n];
    for (k, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, k));
        adj[v].push((u, k));
    }
    // parent links and an order with every vertex before its parent
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &(w, k) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((v, k));
                stack.push(w);
            }
        }
    }
    if order.len() != n {
        return None;
    }
    order.reverse();
    let mut d: Vec<Matrix2<f64>> = hd.iter().map(|b| mat(b) + Matrix2::identity() * reg).collect();
    let mut b: Vec<Vector2<f64>> = rhs.iter().map(|r| Vector2::new(r[0], r[1])).collect();
    // coupling block H[v][parent] for each non-root vertex
    let couple = |v: usize| -> Option<(usize, Matrix2<f64>)> {
        parent[v].map(|(p, k)| {
            let m = mat(&ho[k]);
            (p, if edges[k].0 == v { m } else { m.transpose() })
        })
    };
    let mut inv = vec![Matrix2::zeros(); n];
    for &v in &order {
        let dv = d[v];
        if !(dv[(0, 0)] > 0.0 && dv.determinant() > 0.0) {
            return None;
        }
        inv[v] = dv.try_inverse()?;
        if let Some((p, hvp)) = couple(v) {
            let hpv = hvp.transpose();
            d[p] -= hpv * inv[v] * hvp;
            let bv = b[v];
            b[p] -= hpv * inv[v] * bv;
        }
    }
    let mut x = vec![Vector2::zeros(); n];
    for &v in order.iter().rev() {
        let mut bv = b[v];
        if let Some((p, hvp)) = couple(v) {
            bv -= hvp * x[p];
        }
        x[v] = inv[v] * bv;
    }
    Some(x.iter().map(|v| [v[0], v[1]]).collect())
}

fn dense_solve(
    n: usize,
    edges: &[(usize, usize)],
    hd: &[Block],
    ho: &[Block],
    rhs: &[[f64; 2]],
    reg: f64,
) -> Option<Vec<[f64; 2]>> {
    let mut h = DMatrix::zeros(2 * n, 2 * n);
    for v in 0..n {
        for i in 0..2 {
            for j in 0..2 {
                h[(2 * v + i, 2 * v + j)] = hd[v][i][j] + if i == j { reg } else { 0.0 };
            }
        }
    }
    for (k, &(u, v)) in edges.iter().enumerate() {
        for i in 0..2 {
            for j in 0..2 {
                h[(2 * u + i, 2 * v + j)] += ho[k][i][j];
                h[(2 * v + j, 2 * u + i)] += ho[k][i][j];
            }
        }
    }
    let b = DVector::from_iterator(2 * n, rhs.iter().flat_map(|r| [r[0], r[1]]));
    let sol = h.cholesky()?.solve(&b);
    Some((0..n).map(|v| [sol[2 * v], sol[2 * v + 1]]).collect())
}

pub(crate) fn length(edges: &[(usize, usize)], x: &[Point]) -> f64 {
    edges.iter().map(|&(u, v)| x[u].dist(x[v])).sum()
}

/// Squared distance from `c` to the segment `[a, b]` with its gradient and
/// Hessian in `(a, b)`.
fn segment_dist2(c: Point, a: Point, b: Point) -> (f64, [f64; 4], [[f64; 4]; 4]) {
    let d = b - a;
    let dd = d.norm2();
    let t = if dd > 0.0 { ((c - a).dot(d) / dd).clamp(0.0, 1.0) } else { 0.0 };
    let w = a + d * t - c;
    let grad = [2.0 * (1.0 - t) * w.x, 2.0 * (1.0 - t) * w.y, 2.0 * t * w.x, 2.0 * t * w.y];
    let j = [1.0 - t, 1.0 - t, t, t];
    let mut h = [[0.0; 4]; 4];
    for i in 0..4 {
        h[i][i] = 0.0;
        for k in 0..4 {
            // 2 J^T J with J = [(1-t) I, t I]
            if i % 2 == k % 2 {
                h[i][k] = 2.0 * j[i] * j[k];
            }
        }
    }
    if t > 0.0 && t < 1.0 {
        // eliminate the inner variable t
        let hxt = [
            2.0 * ((1.0 - t) * d.x - w.x),
            2.0 * ((1.0 - t) * d.y - w.y),
            2.0 * (t * d.x + w.x),
            2.0 * (t * d.y + w.y),
        ];
        let htt = 2.0 * dd;
        for i in 0..4 {
            for k in 0..4 {
                h[i][k] -= hxt[i] * hxt[k] / htt;
            }
        }
    }
    (w.norm2(), grad, h)
}

impl Problem {
    fn slack(&self, c: &Constraint, x: &[Point]) -> f64 {
        match *c {
            Constraint::Vertex { v, ball } => ball.radius * ball.radius - (x[v] - ball.center).norm2(),
            Constraint::Edge { e, ball } => {
                let (u, v) = self.edges[e];
                ball.radius * ball.radius - segment_dist2(ball.center, x[u], x[v]).0
            }
        }
    }

    pub fn strictly_feasible(&self, x: &[Point]) -> bool {
        self.constraints.iter().all(|c| self.slack(c, x) > 0.0)
    }

    fn value(&self, x: &[Point], t: f64, delta: f64) -> f64 {
        let mut f = 0.0;
        for &(u, v) in &self.edges {
            f += t * ((x[u] - x[v]).norm2() + delta * delta).sqrt();
        }
        for c in &self.constraints {
            let g = self.slack(c, x);
            if g <= 0.0 {
                return f64::INFINITY;
            }
            f -= g.ln();
        }
        f
    }

    /// Gradient and Hessian of the barrier function. The Hessian is stored
    /// as 2×2 blocks: one per vertex and one per edge (`H[u][v]` for edge
    /// `(u, v)`), which is its full sparsity pattern.
    fn derivatives(&self, x: &[Point], t: f64, delta: f64) -> (Vec<[f64; 2]>, Vec<Block>, Vec<Block>) {
        let n = self.vertices;
        let mut g = vec![[0.0; 2]; n];
        let mut hd = vec![[[0.0; 2]; 2]; n];
        let mut ho = vec![[[0.0; 2]; 2]; self.edges.len()];
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            let e = x[u] - x[v];
            let s = (e.norm2() + delta * delta).sqrt();
            let ev = [e.x, e.y];
            for i in 0..2 {
                g[u][i] += t * ev[i] / s;
                g[v][i] -= t * ev[i] / s;
                for j in 0..2 {
                    let m = t * ((i == j) as u8 as f64 - ev[i] * ev[j] / (s * s)) / s;
                    hd[u][i][j] += m;
                    hd[v][i][j] += m;
                    ho[k][i][j] -= m;
                }
            }
        }
        for c in &self.constraints {
            match *c {
                Constraint::Vertex { v, ball } => {
                    let w = x[v] - ball.center;
                    let gs = ball.radius * ball.radius - w.norm2();
                    let wv = [w.x, w.y];
                    for i in 0..2 {
                        g[v][i] += 2.0 * wv[i] / gs;
                        for j in 0..2 {
                            hd[v][i][j] += 2.0 * (i == j) as u8 as f64 / gs + 4.0 * wv[i] * wv[j] / (gs * gs);
                        }
                    }
                }
                Constraint::Edge { e: k, ball } => {
                    let (u, v) = self.edges[k];
                    let (d2, dg, dh) = segment_dist2(ball.center, x[u], x[v]);
                    let gs = ball.radius * ball.radius - d2;
                    let full = |i: usize, j: usize| dh[i][j] / gs + dg[i] * dg[j] / (gs * gs);
                    for i in 0..2 {
                        g[u][i] += dg[i] / gs;
                        g[v][i] += dg[2 + i] / gs;
                        for j in 0..2 {
                            hd[u][i][j] += full(i, j);
                            hd[v][i][j] += full(2 + i, 2 + j);
                            ho[k][i][j] += full(i, 2 + j);
                        }
                    }
                }
            }
        }
        (g, hd, ho)
    }

    /// Newton direction and decrement. Solved by block elimination along
    /// the tree (leaves first, no fill-in) when the edges form a tree, and by
    /// dense Cholesky otherwise.
    fn newton_step(&self, x: &[Point], t: f64, delta: f64) -> (Vec<Point>, f64) {
        let (g, hd, ho) = self.derivatives(x, t, delta);
        let rhs: Vec<[f64; 2]> = g.iter().map(|v| [-v[0], -v[1]]).collect();
        let mut reg = 0.0;
        let scale = hd.iter().map(|b| b[0][0].abs().max(b[1][1].abs())).fold(0.0, f64::max).max(1e-300);
        loop {
            let sol = if self.edges.len() + 1 == self.vertices {
                tree_solve(self.vertices, &self.edges, &hd, &ho, &rhs, reg)
            } else {
                dense_solve(self.vertices, &self.edges, &hd, &ho, &rhs, reg)
            };
            if let Some(step) = sol {
                let decrement = -(0..self.vertices).map(|v| g[v][0] * step[v][0] + g[v][1] * step[v][1]).sum::<f64>();
                return (step.iter().map(|s| Point::new(s[0], s[1])).collect(), decrement);
            }
            reg = if reg == 0.0 { 1e-12 * scale } else { reg * 10.0 };
        }
    }

    /// Minimizes total length from a strictly feasible start. `scale` sets the
    /// absolute tolerances.
    pub fn minimize(&self, init: &[Point], scale: f64, opts: BarrierOptions) -> BarrierResult {
        let m = self.constraints.len().max(1) as f64;
        let e = self.edges.len().max(1) as f64;
        let target = opts.gap * scale;
        let mut x = init.to_vec();
        let mut t = m / (opts.start_gap.max(opts.gap) * scale);
        let mut iterations = 0;
        let mut converged = true;
        loop {
            let delta = (m / t / e).max(target / e);
            // centering
            let mut inner = 0;
            loop {
                let (dir, decrement) = self.newton_step(&x, t, delta);
                let f0 = self.value(&x, t, delta);
                // below this the decrease is lost in the rounding of f
                if decrement / 2.0 <= 1e-8_f64.max(1e-12 * f0.abs()) || inner >= 200 {
                    break;
                }
                let mut s = 1.0;
                let mut moved = false;
                while s > 1e-14 {
                    let cand: Vec<Point> = x.iter().zip(&dir).map(|(p, d)| *p + *d * s).collect();
                    let f1 = self.value(&cand, t, delta);
                    if f1 <= f0 - 0.25 * s * decrement {
                        x = cand;
                        moved = true;
                        break;
                    }
                    s *= 0.5;
                }
                inner += 1;
                iterations += 1;
                if !moved {
                    break;
                }
                if iterations >= opts.max_newton {
                    converged = false;
                    break;
                }
            }
            if m / t <= target || !converged {
                break;
            }
            t *= 8.0;
        }
        let length = length(&self.edges, &x);
        BarrierResult { positions: x, length, iterations, converged }
    }
}
