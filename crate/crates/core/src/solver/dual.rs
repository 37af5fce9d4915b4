use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{horseshoe, rectangle_candidate, stadium_competitor, HorseshoeOptions, RectangleOptions};
use crate::energy::energy_value;
use crate::error::{Error, Result};
use crate::geometry::{dist_point_segment, fermat_point, min_enclosing_circle, unsigned_angle, Point};
use crate::mset::{CompactSetModel, Piece, SampleNet};
use crate::network::{Network, SegmentIndex};

use super::barrier::{Ball, BarrierOptions, Constraint, Problem};
use super::finite::{collapse, scale_of, solve_finite, solve_grouped};
use super::topology::TOPOLOGY_CAP;
use super::{finish_report, SolveOptions, SolveReport};

/// Upper limit on the number of vertices kept during local search.
const MAX_VERTICES: f64 = 250.0;
/// Rounds of midpoint refinement on the finest sample net.
const MAX_REFINEMENTS: usize = 10;
/// Excess over r (relative) tolerated at refinement midpoints.
const REFINE_TOL: f64 = 1e-4;
/// Sweeps of edge pushing before falling back to spurs.
const PUSH_SWEEPS: usize = 30;
/// Largest violation (relative to r) fixed by pushing.
const PUSH_LIMIT: f64 = 0.05;
/// Seed vertices closer than this (relative to r) are merged.
const SEED_MERGE: f64 = 0.02;
/// Passes of leaf retraction per search round.
const RETRACT_PASSES: usize = 5;

/// Mutable straight-edge tree used by the local search.
#[derive(Debug, Clone)]
pub(crate) struct Tree {
    pub pts: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
}

impl Tree {
    pub fn from_network(n: &Network) -> Self {
        Tree { pts: n.vertices().to_vec(), edges: n.edges().iter().map(|e| (e[0], e[1])).collect() }
    }

    pub fn network(&self) -> Result<Network> {
        Network::new(self.pts.clone(), self.edges.iter().map(|&(a, b)| [a, b]).collect())
    }

    pub fn length(&self) -> f64 {
        self.edges.iter().map(|&(a, b)| self.pts[a].dist(self.pts[b])).sum()
    }

    fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.pts.len()];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    fn remove_edge(&mut self, a: usize, b: usize) {
        self.edges.retain(|&(x, y)| !((x == a && y == b) || (x == b && y == a)));
    }

    /// Drops isolated vertices (keeping one if nothing else is left).
    fn compact(&mut self) {
        if self.edges.is_empty() {
            self.pts.truncate(1);
            return;
        }
        let d = self.degrees();
        let mut index = vec![usize::MAX; self.pts.len()];
        let mut pts = Vec::new();
        for (v, &deg) in d.iter().enumerate() {
            if deg > 0 {
                index[v] = pts.len();
                pts.push(self.pts[v]);
            }
        }
        self.pts = pts;
        for e in &mut self.edges {
            *e = (index[e.0], index[e.1]);
        }
    }

    /// Subdivides every edge longer than `h`.
    fn split_long(&mut self, h: f64) {
        let mut edges = Vec::with_capacity(self.edges.len());
        for &(a, b) in &self.edges.clone() {
            let n = (self.pts[a].dist(self.pts[b]) / h).ceil().max(1.0) as usize;
            let mut prev = a;
            for i in 1..n {
                let id = self.pts.len();
                self.pts.push(self.pts[a].lerp(self.pts[b], i as f64 / n as f64));
                edges.push((prev, id));
                prev = id;
            }
            edges.push((prev, b));
        }
        self.edges = edges;
    }
}

struct Search<'a> {
    samples: &'a SampleNet,
    r_work: f64,
    eta: f64,
    bound: f64,
    scale: f64,
    gap: f64,
    iterations: usize,
}

impl Search<'_> {
    fn energy(&self, t: &Tree) -> f64 {
        t.network().map(|n| energy_value(self.samples, &n)).unwrap_or(f64::INFINITY)
    }

    fn feasible(&self, t: &Tree) -> bool {
        self.energy(t) <= self.bound
    }

    fn rebound(&mut self, t: &Tree) {
        self.bound = self.r_work.max(self.energy(t));
    }

    fn collapse_tol(&self) -> f64 {
        (1e-10 * self.scale).max(2e-9)
    }

    /// Restores coverage: small violations are fixed by pushing the nearest
    /// edges toward the samples, the rest by spurs toward uncovered samples.
    fn repair(&self, t: &mut Tree) -> Result<()> {
        let aim = self.r_work * (1.0 - 1e-9);
        let mut last = f64::INFINITY;
        for _ in 0..PUSH_SWEEPS {
            let net = t.network()?;
            let index = SegmentIndex::new(&net, &self.samples.points);
            let mut shift = vec![Point::ORIGIN; t.pts.len()];
            let mut weight = vec![0.0; t.pts.len()];
            let mut worst: f64 = 0.0;
            for &p in &self.samples.points {
                let hit = index.nearest(p);
                if hit.dist <= self.r_work {
                    continue;
                }
                if hit.dist - aim > PUSH_LIMIT * self.r_work {
                    continue;
                }
                worst = worst.max(hit.dist - aim);
                let n = (p - hit.point) * ((hit.dist - aim) / hit.dist);
                let parts = match hit.edge {
                    None => vec![(0, 1.0)],
                    Some(e) => {
                        let (a, b) = t.edges[e];
                        vec![(a, 1.0 - hit.t), (b, hit.t)]
                    }
                };
                let w: f64 = parts.iter().map(|&(_, c)| c * c).sum();
                for (v, c) in parts {
                    shift[v] = shift[v] + n * (c / w * c);
                    weight[v] += c;
                }
            }
            if worst == 0.0 || worst > 0.9 * last {
                break;
            }
            last = worst;
            for v in 0..t.pts.len() {
                if weight[v] > 0.0 {
                    t.pts[v] = t.pts[v] + shift[v] * (1.0 / weight[v]);
                }
            }
        }
        for _ in 0..=self.samples.len() {
            let net = t.network()?;
            let index = SegmentIndex::new(&net, &self.samples.points);
            let mut open: Vec<_> = self
                .samples
                .points
                .iter()
                .map(|&p| (p, index.nearest(p)))
                .filter(|(_, hit)| hit.dist > self.r_work)
                .collect();
            if open.is_empty() {
                return Ok(());
            }
            open.sort_by(|a, b| b.1.dist.total_cmp(&a.1.dist));
            let mut spurs: Vec<(Point, Point)> = Vec::new();
            let mut split = vec![false; t.edges.len()];
            for (far, hit) in open {
                if spurs.iter().any(|&(a, b)| dist_point_segment(far, a, b) <= self.r_work) {
                    continue;
                }
                let Some(e) = hit.edge else {
                    let from = t.pts[0];
                    let tip = from + (far - from) * ((hit.dist - aim) / hit.dist);
                    spurs.push((from, tip));
                    t.pts.push(tip);
                    t.edges.push((0, t.pts.len() - 1));
                    continue;
                };
                if split[e] {
                    continue;
                }
                let (a, b) = t.edges[e];
                let len = t.pts[a].dist(t.pts[b]);
                let base = if hit.t * len <= 1e-9 * self.scale {
                    a
                } else if (1.0 - hit.t) * len <= 1e-9 * self.scale {
                    b
                } else {
                    let id = t.pts.len();
                    t.pts.push(hit.point);
                    t.edges[e] = (a, id);
                    t.edges.push((id, b));
                    split[e] = true;
                    id
                };
                let from = t.pts[base];
                let tip = from + (far - from) * ((hit.dist - aim) / hit.dist);
                spurs.push((from, tip));
                if from.dist(tip) <= self.collapse_tol() {
                    t.pts[base] = tip;
                    continue;
                }
                let id = t.pts.len();
                t.pts.push(tip);
                t.edges.push((base, id));
            }
        }
        Err(Error::Precondition("coverage repair did not terminate".into()))
    }

    /// Convex polish with every sample tied to its current nearest edge.
    fn polish(&mut self, t: &Tree) -> Option<Tree> {
        let net = t.network().ok()?;
        let index = SegmentIndex::new(&net, &self.samples.points);
        let mut constraints = Vec::with_capacity(self.samples.len());
        for &p in &self.samples.points {
            let hit = index.nearest(p);
            if hit.dist >= self.r_work + self.eta {
                return None;
            }
            let ball = Ball::new(p, self.r_work + self.eta);
            constraints.push(match hit.edge {
                Some(e) => Constraint::Edge { e, ball },
                None => Constraint::Vertex { v: 0, ball },
            });
        }
        let problem = Problem { vertices: t.pts.len(), edges: t.edges.clone(), constraints };
        let res = problem.minimize(&t.pts, self.scale, BarrierOptions { gap: self.gap, max_newton: 2000, start_gap: 1e-4 });
        self.iterations += res.iterations;
        let net = collapse(&res.positions, &t.edges, self.collapse_tol()).ok()?;
        let cand = Tree::from_network(&net);
        (cand.length() < t.length() && self.energy(&cand) < self.r_work + self.eta).then_some(cand)
    }

    /// Pulls leaves toward their neighbours as far as coverage allows,
    /// deleting them when they are not needed at all.
    fn retract_leaves(&mut self, t: &mut Tree) {
        for _ in 0..RETRACT_PASSES {
            let mut changed = false;
            let mut v = 0;
            while v < t.pts.len() {
                if t.degrees()[v] != 1 {
                    v += 1;
                    continue;
                }
                let u = t.neighbors(v)[0];
                let mut rest = t.clone();
                rest.remove_edge(u, v);
                if rest.edges.is_empty() {
                    rest = Tree { pts: vec![t.pts[u]], edges: Vec::new() };
                } else {
                    rest.compact();
                }
                let Ok(rest_net) = rest.network() else {
                    v += 1;
                    continue;
                };
                let index = SegmentIndex::new(&rest_net, &self.samples.points);
                let needy: Vec<Point> =
                    self.samples.points.iter().copied().filter(|&p| index.nearest(p).dist > self.bound).collect();
                if needy.is_empty() {
                    *t = rest;
                    changed = true;
                    continue;
                }
                let (base, target) = (t.pts[v], t.pts[u]);
                let mut ok =
                    |s: f64| needy.iter().all(|&p| dist_point_segment(p, target, base.lerp(target, s)) <= self.bound);
                let s = crate::numeric::bisect_last_true(&mut ok, 0.0, 1.0 - 1e-9, 30);
                let moved = base.dist(target) * s;
                if moved > 1e-12 * self.scale {
                    t.pts[v] = base.lerp(target, s);
                    changed |= moved > 1e-9 * self.scale;
                }
                v += 1;
            }
            if !changed {
                break;
            }
        }
    }

    /// Replaces two edges meeting at less than 2π/3 by a tripod.
    fn insert_steiner(&mut self, t: &mut Tree) {
        let mut v = 0;
        while v < t.pts.len() {
            let nb = t.neighbors(v);
            'pairs: for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    let (a, b) = (nb[i], nb[j]);
                    let angle = unsigned_angle(t.pts[a] - t.pts[v], t.pts[b] - t.pts[v]);
                    if angle >= 2.0 * PI / 3.0 - 1e-3 {
                        continue;
                    }
                    let f = fermat_point(t.pts[a], t.pts[b], t.pts[v]);
                    for lam in [1.0, 0.5, 0.25, 0.1] {
                        let s = t.pts[v].lerp(f, lam);
                        let mut cand = t.clone();
                        let id = cand.pts.len();
                        cand.pts.push(s);
                        cand.remove_edge(a, v);
                        cand.remove_edge(b, v);
                        cand.edges.extend([(a, id), (b, id), (id, v)]);
                        if cand.length() < t.length() - 1e-12 * self.scale && self.feasible(&cand) {
                            *t = cand;
                            break 'pairs;
                        }
                    }
                }
            }
            v += 1;
        }
    }

    /// Removes degree-2 vertices whose edges are (numerically) collinear or
    /// whose removal keeps coverage.
    fn simplify(&mut self, t: &mut Tree, straight_only: bool) {
        let mut v = 0;
        while v < t.pts.len() {
            let nb = t.neighbors(v);
            if nb.len() == 2 {
                let (a, b) = (nb[0], nb[1]);
                let angle = unsigned_angle(t.pts[a] - t.pts[v], t.pts[b] - t.pts[v]);
                if !straight_only || angle > PI - 1e-9 {
                    let mut cand = t.clone();
                    cand.remove_edge(a, v);
                    cand.remove_edge(b, v);
                    cand.edges.push((a, b));
                    cand.compact();
                    if self.feasible(&cand) {
                        *t = cand;
                        continue;
                    }
                }
            }
            v += 1;
        }
    }

    fn perturb(&mut self, t: &mut Tree, rng: &mut ChaCha8Rng, sigma: f64, tries: usize) {
        for _ in 0..tries {
            let v = rng.gen_range(0..t.pts.len());
            let (rad, ang): (f64, f64) = (rng.gen::<f64>().sqrt() * sigma, rng.gen_range(0.0..2.0 * PI));
            let mut cand = t.clone();
            cand.pts[v] = cand.pts[v] + Point::polar(ang) * rad;
            if cand.length() < t.length() && self.feasible(&cand) {
                *t = cand;
            }
        }
    }
}

/// Seed built from a known construction when the model matches one.
fn oracle_seed(m: &CompactSetModel, r: f64) -> Option<Network> {
    match *m {
        CompactSetModel::Circle { radius, .. } | CompactSetModel::Stadium { radius, .. } if radius >= 4.98 * r => {
            let eps_arc = (radius - r) * (1.0 / (PI / 128.0).cos() - 1.0);
            horseshoe(m, r, HorseshoeOptions { eps_arc, ..Default::default() }).ok().map(|c| c.network)
        }
        CompactSetModel::Stadium { center, radius, core_length } if radius < 1.75 * r => {
            let eps_arc = (radius - r) * (1.0 / (PI / 64.0).cos() - 1.0);
            let c = stadium_competitor(radius, r, core_length, eps_arc).ok()?;
            let shift = center - Point::new(core_length / 2.0, radius);
            let pts = c.network.vertices().iter().map(|&p| p + shift).collect();
            Network::new(pts, c.network.edges().to_vec()).ok()
        }
        CompactSetModel::Rectangle { corner, width, height } => {
            let c = rectangle_candidate(width, height, r, RectangleOptions::default()).ok()?;
            let pts = c.network.vertices().iter().map(|&p| p + corner).collect();
            Network::new(pts, c.network.edges().to_vec()).ok()
        }
        _ => None,
    }
}

fn mst(points: &[Point]) -> Tree {
    let n = points.len();
    let mut in_tree = vec![false; n];
    let mut best = vec![(f64::INFINITY, 0usize); n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    in_tree[0] = true;
    for j in 1..n {
        best[j] = (points[0].dist(points[j]), 0);
    }
    for _ in 1..n {
        let v = (0..n).filter(|&v| !in_tree[v]).min_by(|&a, &b| best[a].0.total_cmp(&best[b].0)).unwrap();
        in_tree[v] = true;
        edges.push((best[v].1, v));
        for j in 0..n {
            if !in_tree[j] && points[v].dist(points[j]) < best[j].0 {
                best[j] = (points[v].dist(points[j]), v);
            }
        }
    }
    Tree { pts: points.to_vec(), edges }
}

/// A tree lying on M: the curve itself with one gap for closed curves, or a
/// minimum spanning tree of the points.
fn spanning_seed(m: &CompactSetModel, rng: &mut ChaCha8Rng, randomize: bool) -> Result<Tree> {
    if let CompactSetModel::Points { points } = m {
        return Ok(mst(points));
    }
    let spacing = (m.curve_length() / MAX_VERTICES).max(1e-12);
    let mut pts = m.sample(spacing / 2.0)?.points;
    if m.is_closed() && pts.len() > 2 {
        let g = if randomize { rng.gen_range(0..pts.len()) } else { 0 };
        pts.rotate_left(g);
    }
    let edges = (1..pts.len()).map(|i| (i - 1, i)).collect();
    Ok(Tree { pts, edges })
}

/// Moves every vertex toward `c` by `d` (stopping at `c`), so each vertex
/// stays within `d` of its image, merges vertices that meet and drops the
/// edges that would close a cycle.
fn shrink(t: &Tree, c: Point, d: f64, tol: f64) -> Result<Tree> {
    let pts: Vec<Point> = t
        .pts
        .iter()
        .map(|&p| {
            let len = p.dist(c);
            if len <= d {
                c
            } else {
                p + (c - p) * (d / len)
            }
        })
        .collect();
    let mut out = Tree::from_network(&collapse(&pts, &t.edges, tol)?);
    let mut root: Vec<usize> = (0..out.pts.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    out.edges.retain(|&(a, b)| {
        let (ra, rb) = (find(&mut root, a), find(&mut root, b));
        root[ra] = rb;
        ra != rb
    });
    Ok(out)
}

fn project(pieces: &[Piece], p: Point) -> Point {
    pieces
        .iter()
        .map(|pc| {
            let (d, t) = pc.nearest(p);
            (d, pc.at(t))
        })
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .map_or(p, |x| x.1)
}

/// Subdivides every gap between consecutive samples whose midpoint on M is
/// farther than `limit` from the network, more finely the larger the excess.
/// Returns `None` when no point was added.
fn refine(m: &CompactSetModel, samples: &SampleNet, net: &Network, limit: f64, tol: f64) -> Option<SampleNet> {
    let pieces = m.pieces();
    let pts = &samples.points;
    if pieces.is_empty() || pts.len() < 2 {
        return None;
    }
    let pairs = if m.is_closed() { pts.len() } else { pts.len() - 1 };
    let mids: Vec<Point> = (0..pairs).map(|i| project(&pieces, pts[i].midpoint(pts[(i + 1) % pts.len()]))).collect();
    let index = SegmentIndex::new(net, &mids);
    let mut out = Vec::with_capacity(pts.len() * 2);
    let mut added = false;
    for i in 0..pts.len() {
        out.push(pts[i]);
        if i >= pairs {
            continue;
        }
        let excess = index.nearest(mids[i]).dist - limit;
        if excess > 0.0 {
            let q = (2.0 * excess / tol).ceil().clamp(2.0, 64.0) as usize;
            let next = pts[(i + 1) % pts.len()];
            out.extend((1..q).map(|j| project(&pieces, pts[i].lerp(next, j as f64 / q as f64))));
            added = true;
        }
    }
    added.then(|| SampleNet { points: out, mesh: samples.mesh })
}

fn validate_schedule(schedule: &[f64]) -> Result<()> {
    if schedule.is_empty() || schedule[0] > 1.0 || schedule.iter().any(|&e| !(e > 0.0)) {
        return Err(Error::InvalidInput("schedule needs positive spacings with the first at most r".into()));
    }
    if schedule.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidInput("schedule must be strictly decreasing".into()));
    }
    Ok(())
}

/// Minimal-length network covering M at level `r`, approximated by local
/// search over a decreasing sequence of sample nets.
pub fn solve_dual(m: &CompactSetModel, r: f64, opts: &SolveOptions) -> Result<SolveReport> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidInput(format!("r must be positive, got {r}")));
    }
    validate_schedule(&opts.schedule)?;
    if let CompactSetModel::Points { points } = m {
        if points.len() <= TOPOLOGY_CAP {
            return solve_finite(points, r, opts);
        }
        if let Some(rep) = clustered(points, r, opts)? {
            return Ok(rep);
        }
    }
    let stages = opts.schedule.iter().map(|&e| m.sample(e * r)).collect::<Result<Vec<_>>>()?;
    dual_on_stages(m, &stages, r, opts, true)
}

/// Groups points greedily around seeds within `0.9 r`; when few groups
/// remain, each group becomes one terminal bound to all its balls.
fn clustered(points: &[Point], r: f64, opts: &SolveOptions) -> Result<Option<SolveReport>> {
    let mut assigned = vec![false; points.len()];
    let mut groups = Vec::new();
    let mut reps = Vec::new();
    for i in 0..points.len() {
        if assigned[i] {
            continue;
        }
        let mut g = Vec::new();
        for j in i..points.len() {
            if !assigned[j] && points[i].dist(points[j]) <= 0.9 * r {
                assigned[j] = true;
                g.push(Ball::new(points[j], r));
            }
        }
        groups.push(g);
        reps.push(points[i]);
        if groups.len() > TOPOLOGY_CAP {
            return Ok(None);
        }
    }
    solve_grouped(&groups, &reps, points, r, opts).map(Some)
}

/// Local search over the given sample nets in order, each warm-starting the
/// next. With `refine`, the last net is refined where M is not yet covered.
pub(crate) fn dual_on_stages(
    m: &CompactSetModel,
    stages: &[SampleNet],
    r: f64,
    opts: &SolveOptions,
    refine_last: bool,
) -> Result<SolveReport> {
    let finest = stages.last().ok_or_else(|| Error::InvalidInput("no sample stages".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let scale = scale_of(min_box(&finest.points)).max(r);
    let eta = (1e-10 * r).max(4.0 * (1e-10 * scale).max(2e-9));
    let r_work = if finest.mesh > 0.0 { r * (1.0 + 1e-7) } else { r - 2.0 * eta };

    let (center, rad) = min_enclosing_circle(&finest.points)
        .ok_or_else(|| Error::InvalidInput("no samples".into()))?;
    if rad <= r_work {
        return Ok(finish_report(Network::single(center), r, finest, Some(m), 0, true, opts));
    }

    let seeded = if opts.seed == 0 { oracle_seed(m, r) } else { None };
    let mut tree = match seeded {
        Some(n) => Tree::from_network(&n),
        None => {
            let t = spanning_seed(m, &mut rng, opts.seed != 0)?;
            shrink(&t, center, 0.5 * r_work, SEED_MERGE * r)?
        }
    };
    let mut iterations = 0;
    let mut converged = true;
    let mut reported = finest.clone();
    for (k, stage) in stages.iter().enumerate() {
        let last = k + 1 == stages.len();
        let mut samples = stage.clone();
        for level in 0.. {
            let mut search =
                Search { samples: &samples, r_work, eta, bound: r_work, scale, gap: opts.gap.max(1e-10), iterations: 0 };
            tree.split_long((tree.length() / MAX_VERTICES).max(0.25 * r));
            search.repair(&mut tree)?;
            search.rebound(&tree);
            search.simplify(&mut tree, true);
            let mut stage_converged = false;
            for _ in 0..opts.max_rounds {
                let before = tree.length();
                if let Some(p) = search.polish(&tree) {
                    tree = p;
                }
                search.rebound(&tree);
                search.retract_leaves(&mut tree);
                search.insert_steiner(&mut tree);
                search.simplify(&mut tree, true);
                search.perturb(&mut tree, &mut rng, 0.1 * samples.mesh.max(1e-3 * r), opts.perturbations);
                if before - tree.length() <= 1e-9 * scale {
                    stage_converged = true;
                    break;
                }
            }
            iterations += search.iterations;
            if !last || !refine_last || level >= MAX_REFINEMENTS {
                converged &= stage_converged;
                break;
            }
            match refine(m, &samples, &tree.network()?, r_work + REFINE_TOL * r, REFINE_TOL * r) {
                Some(s) => samples = s,
                None => {
                    converged &= stage_converged;
                    break;
                }
            }
        }
        if last {
            reported = samples;
        }
    }
    let network = tree.network()?;
    Ok(finish_report(network, r, &reported, Some(m), iterations, converged, opts))
}

fn min_box(points: &[Point]) -> [Point; 2] {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    [lo, hi]
}
