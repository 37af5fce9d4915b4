//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use maxdist::numeric::{nelder_mead, NelderMead};
use maxdist::Point;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Full Steiner topologies on `k ≥ 3` terminals as edge lists: terminals are
/// `0..k`, Steiner points `k..2k-2`. Built by attaching each new terminal
/// through a new Steiner point on every edge of every smaller topology.
pub fn full_topologies(k: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(k >= 3);
    let mut trees = vec![vec![(0, k), (1, k), (2, k)]];
    for j in 3..k {
        let s = k + j - 2;
        let mut next = Vec::new();
        for t in &trees {
            for i in 0..t.len() {
                let (a, b) = t[i];
                let mut e = t.clone();
                e[i] = (a, s);
                e.push((s, b));
                e.push((s, j));
                next.push(e);
            }
        }
        trees = next;
    }
    trees
}

/// Minimal length of a connected set meeting every ball `B_r(p)`, by Nelder–
/// Mead over the Steiner points of every full topology. A leaf edge from a
/// Steiner point `s` to terminal `c` has optimal length `max(0, |s c| − r)`.
pub fn brute_force_finite(points: &[Point], r: f64, restarts: usize, seed: u64) -> f64 {
    let k = points.len();
    if k == 1 {
        return 0.0;
    }
    if k == 2 {
        return (points[0].dist(points[1]) - 2.0 * r).max(0.0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = points.iter().fold(
        (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
        |(lo, hi), p| (Point::new(lo.x.min(p.x), lo.y.min(p.y)), Point::new(hi.x.max(p.x), hi.y.max(p.y))),
    );
    let mut best = f64::INFINITY;
    for topo in full_topologies(k) {
        let objective = |z: &[f64]| {
            let pos = |v: usize| {
                if v < k {
                    None
                } else {
                    Some(Point::new(z[2 * (v - k)], z[2 * (v - k) + 1]))
                }
            };
            topo.iter()
                .map(|&(a, b)| match (pos(a), pos(b)) {
                    (None, Some(s)) => (s.dist(points[a]) - r).max(0.0),
                    (Some(s), None) => (s.dist(points[b]) - r).max(0.0),
                    (Some(s), Some(t)) => s.dist(t),
                    (None, None) => unreachable!(),
                })
                .sum::<f64>()
        };
        for _ in 0..restarts {
            let z0: Vec<f64> = (0..k - 2)
                .flat_map(|_| [rng.gen_range(lo.x..=hi.x), rng.gen_range(lo.y..=hi.y)])
                .collect();
            let opts = NelderMead { initial_step: 0.1, f_tol: 1e-15, x_tol: 1e-12, max_evals: 40_000, restarts: 4 };
            let (_, v) = nelder_mead(objective, &z0, opts);
            best = best.min(v);
        }
    }
    best
}

/// Random configuration of `k` points in the unit square with pairwise
/// disjoint closed balls of the returned radius.
pub fn random_instance(rng: &mut ChaCha8Rng, k: usize) -> (Vec<Point>, f64) {
    loop {
        let pts: Vec<Point> = (0..k).map(|_| Point::new(rng.gen(), rng.gen())).collect();
        let mut min = f64::INFINITY;
        for i in 0..k {
            for j in i + 1..k {
                min = min.min(pts[i].dist(pts[j]));
            }
        }
        if min < 0.05 {
            continue;
        }
        let r = rng.gen_range(0.01..0.45 * min);
        return (pts, r);
    }
}
