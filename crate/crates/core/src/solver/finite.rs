use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::mset::SampleNet;
use crate::network::Network;

use super::barrier::{Ball, BarrierOptions, Constraint, Problem};
use super::topology::{enumerate_topologies, Topology};
use super::{finish_report, SolveOptions, SolveReport};

/// Optimum of one topology.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedTopologyResult {
    pub positions: Vec<Point>,
    pub length: f64,
    pub network: Network,
    pub iterations: usize,
    pub converged: bool,
}

/// One of several optimal topologies with its network.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoOptimal {
    pub topology: Topology,
    pub network: Network,
    pub length: f64,
}

pub(crate) fn scale_of(points: impl IntoIterator<Item = Point>) -> f64 {
    let pts: Vec<Point> = points.into_iter().collect();
    let mut s: f64 = 0.0;
    for p in &pts {
        for q in &pts {
            s = s.max(p.dist(*q));
        }
    }
    s.max(1e-300)
}

/// Contracts edges shorter than `tol`. Each merged group keeps the position
/// of its lowest-index vertex, so constrained vertices listed first keep
/// their exact positions.
pub(crate) fn collapse(positions: &[Point], edges: &[(usize, usize)], tol: f64) -> Result<Network> {
    let n = positions.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in edges {
        if positions[u].dist(positions[v]) < tol {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
        }
    }
    let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let mut index = vec![usize::MAX; n];
    let mut verts = Vec::new();
    for v in 0..n {
        if roots[v] == v {
            index[v] = verts.len();
            verts.push(positions[v]);
        }
    }
    let mut out_edges = Vec::new();
    for &(u, v) in edges {
        let (a, b) = (index[roots[u]], index[roots[v]]);
        if a != b {
            out_edges.push([a, b]);
        }
    }
    Network::new(verts, out_edges)
}

fn strict_interior(p: Point, ball: &Ball) -> Point {
    let d = p.dist(ball.center);
    if d < ball.radius * (1.0 - 1e-6) {
        p
    } else {
        ball.center + (p - ball.center) * (0.5 * ball.radius / d)
    }
}

/// Minimal total length of the tree `t` with terminal vertex `i` in
/// `balls[i]`. `init` holds one position per vertex; terminal positions are
/// pulled into their balls first.
pub fn optimize_fixed_topology(t: &Topology, balls: &[Ball], init: &[Point]) -> Result<FixedTopologyResult> {
    let groups: Vec<Vec<Ball>> = balls.iter().map(|b| vec![*b]).collect();
    optimize_grouped(t, &groups, init, BarrierOptions::default())
}

/// As [`optimize_fixed_topology`], with terminal vertex `i` constrained to
/// the intersection of the balls in `groups[i]`. Starting points of
/// multi-ball terminals must already be strictly inside.
pub(crate) fn optimize_grouped(
    t: &Topology,
    groups: &[Vec<Ball>],
    init: &[Point],
    opts: BarrierOptions,
) -> Result<FixedTopologyResult> {
    if groups.len() != t.terminals || init.len() != t.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "topology has {} terminals and {} vertices, got {} balls and {} positions",
            t.terminals,
            t.vertex_count(),
            groups.len(),
            init.len()
        )));
    }
    if groups.iter().flatten().any(|b| !(b.radius > 0.0 && b.center.is_finite())) {
        return Err(Error::InvalidInput("balls need finite centers and positive radii".into()));
    }
    let mut x = init.to_vec();
    for (i, g) in groups.iter().enumerate() {
        if g.len() == 1 {
            x[i] = strict_interior(x[i], &g[0]);
        }
    }
    let problem = Problem {
        vertices: t.vertex_count(),
        edges: t.edges.clone(),
        constraints: groups
            .iter()
            .enumerate()
            .flat_map(|(v, g)| g.iter().map(move |&ball| Constraint::Vertex { v, ball }))
            .collect(),
    };
    if !problem.strictly_feasible(&x) {
        return Err(Error::Precondition("start is not strictly inside the terminal balls".into()));
    }
    let scale = scale_of(groups.iter().flatten().map(|b| b.center)).max(groups[0][0].radius);
    let res = problem.minimize(&x, scale, opts);
    let network = collapse(&res.positions, &t.edges, 1e-9 * scale)?;
    Ok(FixedTopologyResult {
        length: res.length,
        positions: res.positions,
        network,
        iterations: res.iterations,
        converged: res.converged,
    })
}

/// Lengths within this absolute tolerance of the best one count as co-optimal.
pub const CO_OPTIMAL_TOL: f64 = 1e-9;

/// Exact solution for finitely many points: the best fixed-topology optimum
/// over all Steiner topologies on the points' balls.
pub fn solve_finite(points: &[Point], r: f64, opts: &SolveOptions) -> Result<SolveReport> {
    let groups: Vec<Vec<Ball>> = points.iter().map(|&p| vec![Ball::new(p, r)]).collect();
    let reps: Vec<Point> = points.to_vec();
    solve_grouped(&groups, &reps, points, r, opts)
}

/// Finite solve where terminal `i` must lie in every ball of `groups[i]`,
/// starting from `reps[i]`; `samples` are the points to cover.
pub(crate) fn solve_grouped(
    groups: &[Vec<Ball>],
    reps: &[Point],
    samples: &[Point],
    r: f64,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidInput(format!("r must be positive, got {r}")));
    }
    if groups.is_empty() {
        return Err(Error::InvalidInput("no points to connect".into()));
    }
    let k = groups.len();
    let topologies = enumerate_topologies(k)?;
    let centroid = reps.iter().fold(Point::ORIGIN, |a, p| a + *p) * (1.0 / k as f64);
    let scale = scale_of(reps.iter().copied()).max(r);
    let results: Vec<Result<FixedTopologyResult>> = topologies
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut init = reps.to_vec();
            for _ in 0..t.steiner {
                let jitter = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * (1e-3 * scale);
                init.push(centroid + jitter);
            }
            optimize_grouped(t, groups, &init, BarrierOptions { gap: opts.gap, ..Default::default() })
        })
        .collect();
    let mut solved = Vec::with_capacity(results.len());
    for res in results {
        solved.push(res?);
    }
    let best = (0..solved.len())
        .min_by(|&a, &b| solved[a].length.total_cmp(&solved[b].length).then(a.cmp(&b)))
        .expect("at least one topology");
    let best_len = solved[best].length;
    let mut co_optimal: Vec<CoOptimal> = Vec::new();
    for (i, res) in solved.iter().enumerate() {
        if res.length > best_len + CO_OPTIMAL_TOL * scale.max(1.0) {
            continue;
        }
        let duplicate = co_optimal
            .iter()
            .any(|c| c.network.hausdorff_distance(&res.network, 1e-3 * scale) <= 1e-6 * scale);
        if !duplicate {
            co_optimal.push(CoOptimal { topology: topologies[i].clone(), network: res.network.clone(), length: res.length });
        }
    }
    let iterations = solved.iter().map(|s| s.iterations).sum();
    let converged = solved.iter().all(|s| s.converged);
    let mut report = finish_report(
        solved[best].network.clone(),
        r,
        &SampleNet::exact(samples.to_vec()),
        None,
        iterations,
        converged,
        opts,
    );
    report.co_optimal = co_optimal;
    Ok(report)
}
