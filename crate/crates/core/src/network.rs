//! Candidate sets Σ as embedded planar graphs with straight edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{closest_on_segment, Point, Ray, GEOM_TOL};

/// A connected embedded graph with straight edges.
///
/// Invariants: at least one vertex, connected, no self loops, no duplicate
/// edges, no zero-length edges.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawNetwork", into = "RawNetwork")]
pub struct Network {
    vertices: Vec<Point>,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct RawNetwork {
    vertices: Vec<Point>,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawNetwork> for Network {
    type Error = Error;
    fn try_from(raw: RawNetwork) -> Result<Self> {
        Network::new(raw.vertices, raw.edges)
    }
}

impl From<Network> for RawNetwork {
    fn from(n: Network) -> Self {
        RawNetwork { vertices: n.vertices, edges: n.edges }
    }
}

/// Result of a nearest-point query against a network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearestHit {
    pub dist: f64,
    pub point: Point,
    /// Edge index, or `None` when the network is a single vertex.
    pub edge: Option<usize>,
    /// Parameter along the edge, from its first endpoint.
    pub t: f64,
}

impl Network {
    /// Validates and builds a network.
    pub fn new(vertices: Vec<Point>, edges: Vec<[usize; 2]>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidInput("network has no vertices".into()));
        }
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite vertex {p:?}")));
        }
        let n = vertices.len();
        let mut seen = std::collections::HashSet::new();
        for &[a, b] in &edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("self loop at {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidInput(format!("duplicate edge ({a},{b})")));
            }
            if vertices[a].dist(vertices[b]) <= GEOM_TOL {
                return Err(Error::InvalidInput(format!("zero-length edge ({a},{b})")));
            }
        }
        let net = Network { vertices, edges };
        if net.component_count() != 1 {
            return Err(Error::InvalidInput("network is not connected".into()));
        }
        Ok(net)
    }

    /// A network with one vertex and no edges.
    pub fn single(p: Point) -> Self {
        Network { vertices: vec![p], edges: Vec::new() }
    }

    /// Open polyline through `points`; consecutive duplicates are merged.
    pub fn polyline(points: &[Point]) -> Result<Self> {
        let mut b = NetworkBuilder::new();
        let mut prev: Option<usize> = None;
        for &p in points {
            let i = b.add_point(p);
            if let Some(j) = prev {
                b.add_edge(j, i);
            }
            prev = Some(i);
        }
        b.build()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i]
    }

    pub fn segment(&self, e: usize) -> (Point, Point) {
        let [a, b] = self.edges[e];
        (self.vertices[a], self.vertices[b])
    }

    pub fn edge_length(&self, e: usize) -> f64 {
        let (a, b) = self.segment(e);
        a.dist(b)
    }

    /// Total length (one-dimensional Hausdorff measure).
    pub fn length(&self) -> f64 {
        (0..self.edges.len()).map(|e| self.edge_length(e)).sum()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e[0] == v || e[1] == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for &[a, b] in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Neighbours of every vertex, in edge order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &[a, b] in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = self.vertices.len();
        for &[a, b] in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps
    }

    /// True iff the (connected) network has no cycles.
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertices.len()
    }

    /// Distance from `p` to the network and one nearest point.
    ///
    /// Ties go to the lowest edge index.
    pub fn dist_point(&self, p: Point) -> (f64, Point) {
        let h = self.nearest(p);
        (h.dist, h.point)
    }

    pub fn nearest(&self, p: Point) -> NearestHit {
        if self.edges.is_empty() {
            let q = self.vertices[0];
            return NearestHit { dist: p.dist(q), point: q, edge: None, t: 0.0 };
        }
        let mut best = NearestHit { dist: f64::INFINITY, point: p, edge: None, t: 0.0 };
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            let (q, t) = closest_on_segment(p, self.vertices[a], self.vertices[b]);
            let d = p.dist(q);
            if d < best.dist {
                best = NearestHit { dist: d, point: q, edge: Some(e), t };
            }
        }
        best
    }

    /// Distance only; cheaper than [`Network::nearest`].
    pub fn distance(&self, p: Point) -> f64 {
        if self.edges.is_empty() {
            return p.dist(self.vertices[0]);
        }
        let mut best2 = f64::INFINITY;
        for &[a, b] in &self.edges {
            let (q, _) = closest_on_segment(p, self.vertices[a], self.vertices[b]);
            best2 = best2.min((p - q).norm2());
        }
        best2.sqrt()
    }

    /// One ray per incident edge, based at `v` and pointing along the edge.
    pub fn tangent_rays_at(&self, v: usize) -> Vec<Ray> {
        let base = self.vertices[v];
        self.adjacency()[v]
            .iter()
            .filter_map(|&u| Ray::through(base, self.vertices[u]))
            .collect()
    }

    /// Points along all edges at spacing at most `resolution` (vertices included).
    pub fn discretize(&self, resolution: f64) -> Vec<Point> {
        let mut pts = self.vertices.clone();
        for e in 0..self.edges.len() {
            let (a, b) = self.segment(e);
            let n = (a.dist(b) / resolution).ceil().max(1.0) as usize;
            pts.extend((1..n).map(|i| a.lerp(b, i as f64 / n as f64)));
        }
        pts
    }

    /// Hausdorff distance, with both networks discretized at `resolution`.
    /// The result underestimates the exact value by at most `resolution / 2`.
    pub fn hausdorff_distance(&self, other: &Network, resolution: f64) -> f64 {
        let one_way = |a: &Network, b: &Network| {
            a.discretize(resolution).into_iter().map(|p| b.distance(p)).fold(0.0, f64::max)
        };
        one_way(self, other).max(one_way(other, self))
    }

    /// Copy with edge `e` split at its midpoint.
    pub fn subdivide_edge(&self, e: usize) -> Network {
        let [a, b] = self.edges[e];
        let mut vertices = self.vertices.clone();
        vertices.push(self.vertices[a].midpoint(self.vertices[b]));
        let m = vertices.len() - 1;
        let mut edges = self.edges.clone();
        edges[e] = [a, m];
        edges.push([m, b]);
        Network { vertices, edges }
    }

    /// Copy with vertices renumbered so that old vertex `i` becomes `perm[i]`.
    pub fn reindexed(&self, perm: &[usize]) -> Result<Network> {
        let mut vertices = vec![Point::ORIGIN; self.vertices.len()];
        for (i, &p) in perm.iter().enumerate() {
            vertices[p] = self.vertices[i];
        }
        let edges = self.edges.iter().map(|&[a, b]| [perm[a], perm[b]]).collect();
        Network::new(vertices, edges)
    }

    /// Adds an edge between two existing vertices.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Network> {
        let mut edges = self.edges.clone();
        edges.push([a, b]);
        Network::new(self.vertices.clone(), edges)
    }

    /// Network without edge `e`, or `None` if that disconnects it.
    pub fn without_edge(&self, e: usize) -> Option<Network> {
        let mut edges = self.edges.clone();
        edges.remove(e);
        let net = Network { vertices: self.vertices.clone(), edges };
        (net.component_count() == 1).then_some(net)
    }

    /// Bounding box `(min, max)`.
    pub fn bounds(&self) -> (Point, Point) {
        bounds_of(&self.vertices)
    }
}

/// Uniform-grid index over the edges of a network for nearest-point queries.
///
/// Returns exactly the same distances as the brute-force queries on
/// [`Network`], including the lowest-edge-index tie-break.
#[derive(Debug, Clone)]
pub struct SegmentIndex<'a> {
    net: &'a Network,
    lo: Point,
    cell: f64,
    nx: usize,
    ny: usize,
    cells: Vec<Vec<u32>>,
}

impl<'a> SegmentIndex<'a> {
    /// Index covering the network and the extra points `cover` (typically the
    /// query points), so that queries inside that box terminate early.
    pub fn new(net: &'a Network, cover: &[Point]) -> Self {
        let (mut lo, mut hi) = net.bounds();
        if !cover.is_empty() {
            let (clo, chi) = bounds_of(cover);
            lo = Point::new(lo.x.min(clo.x), lo.y.min(clo.y));
            hi = Point::new(hi.x.max(chi.x), hi.y.max(chi.y));
        }
        let span = (hi - lo).x.max((hi - lo).y).max(1e-12);
        let ne = net.edges.len().max(1);
        // about one cell per edge length, at most four cells per edge
        let area = (hi.x - lo.x).max(1e-12) * (hi.y - lo.y).max(1e-12);
        let cell = (net.length() / ne as f64).max((area / (4 * ne) as f64).sqrt()).max(span / 1024.0).max(1e-12);
        let nx = (((hi.x - lo.x) / cell).floor() as usize + 1).min(4096);
        let ny = (((hi.y - lo.y) / cell).floor() as usize + 1).min(4096);
        let cell = cell.max((hi.x - lo.x) / nx as f64).max((hi.y - lo.y) / ny as f64);
        let mut cells = vec![Vec::new(); nx * ny];
        for (e, &[a, b]) in net.edges.iter().enumerate() {
            let (pa, pb) = (net.vertices[a], net.vertices[b]);
            let (i0, j0) = Self::cell_of(lo, cell, nx, ny, Point::new(pa.x.min(pb.x), pa.y.min(pb.y)));
            let (i1, j1) = Self::cell_of(lo, cell, nx, ny, Point::new(pa.x.max(pb.x), pa.y.max(pb.y)));
            for j in j0..=j1 {
                for i in i0..=i1 {
                    let c0 = lo + Point::new(i as f64 * cell, j as f64 * cell);
                    let center = c0 + Point::new(cell / 2.0, cell / 2.0);
                    // skip cells the segment misses by more than the half-diagonal
                    if crate::geometry::dist_point_segment(center, pa, pb) <= cell * 0.7072 {
                        cells[j * nx + i].push(e as u32);
                    }
                }
            }
        }
        SegmentIndex { net, lo, cell, nx, ny, cells }
    }

    fn cell_of(lo: Point, cell: f64, nx: usize, ny: usize, p: Point) -> (usize, usize) {
        let i = ((p.x - lo.x) / cell).floor().clamp(0.0, (nx - 1) as f64) as usize;
        let j = ((p.y - lo.y) / cell).floor().clamp(0.0, (ny - 1) as f64) as usize;
        (i, j)
    }

    pub fn nearest(&self, p: Point) -> NearestHit {
        if self.net.edges.is_empty() {
            return self.net.nearest(p);
        }
        let (ci, cj) = Self::cell_of(self.lo, self.cell, self.nx, self.ny, p);
        let mut best = NearestHit { dist: f64::INFINITY, point: p, edge: None, t: 0.0 };
        let visit = |e: usize, best: &mut NearestHit| {
            let [a, b] = self.net.edges[e];
            let (q, t) = closest_on_segment(p, self.net.vertices[a], self.net.vertices[b]);
            let d = p.dist(q);
            if d < best.dist || (d == best.dist && Some(e) < best.edge) {
                *best = NearestHit { dist: d, point: q, edge: Some(e), t };
            }
        };
        let max_k = self.nx.max(self.ny);
        for k in 0..=max_k {
            let (ilo, ihi) = (ci as isize - k as isize, ci as isize + k as isize);
            let (jlo, jhi) = (cj as isize - k as isize, cj as isize + k as isize);
            for j in jlo.max(0)..=jhi.min(self.ny as isize - 1) {
                let on_row = j == jlo || j == jhi;
                let mut i = ilo.max(0);
                while i <= ihi.min(self.nx as isize - 1) {
                    if on_row || i == ilo || i == ihi {
                        for &e in &self.cells[j as usize * self.nx + i as usize] {
                            visit(e as usize, &mut best);
                        }
                    }
                    i += if on_row || i == ihi { 1 } else { (ihi - i).max(1) };
                }
            }
            // distance from p to any cell outside the processed block
            let x0 = self.lo.x + ilo as f64 * self.cell;
            let x1 = self.lo.x + (ihi + 1) as f64 * self.cell;
            let y0 = self.lo.y + jlo as f64 * self.cell;
            let y1 = self.lo.y + (jhi + 1) as f64 * self.cell;
            let mut lb = f64::INFINITY;
            if ilo > 0 {
                lb = lb.min(p.x - x0);
            }
            if ihi < self.nx as isize - 1 {
                lb = lb.min(x1 - p.x);
            }
            if jlo > 0 {
                lb = lb.min(p.y - y0);
            }
            if jhi < self.ny as isize - 1 {
                lb = lb.min(y1 - p.y);
            }
            if lb == f64::INFINITY || best.dist <= lb {
                break;
            }
        }
        best
    }

    pub fn distance(&self, p: Point) -> f64 {
        self.nearest(p).dist
    }
}

pub(crate) fn bounds_of(pts: &[Point]) -> (Point, Point) {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in pts {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    (lo, hi)
}

/// Incremental builder that merges points closer than a threshold and drops
/// duplicate edges and self loops.
#[derive(Debug, Clone)]
pub struct NetworkBuilder {
    vertices: Vec<Point>,
    edges: Vec<[usize; 2]>,
    merge_tol: f64,
}

impl Default for NetworkBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl NetworkBuilder {
    pub fn new() -> Self {
        NetworkBuilder { vertices: Vec::new(), edges: Vec::new(), merge_tol: GEOM_TOL }
    }

    pub fn with_merge_tol(mut self, tol: f64) -> Self {
        self.merge_tol = tol;
        self
    }

    pub fn add_point(&mut self, p: Point) -> usize {
        if let Some(i) = self.vertices.iter().position(|q| q.dist(p) <= self.merge_tol) {
            return i;
        }
        self.vertices.push(p);
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let key = [a.min(b), a.max(b)];
        if !self.edges.iter().any(|e| [e[0].min(e[1]), e[0].max(e[1])] == key) {
            self.edges.push([a, b]);
        }
    }

    pub fn add_segment(&mut self, a: Point, b: Point) {
        let i = self.add_point(a);
        let j = self.add_point(b);
        self.add_edge(i, j);
    }

    pub fn add_polyline(&mut self, pts: &[Point]) {
        for w in pts.windows(2) {
            self.add_segment(w[0], w[1]);
        }
    }

    pub fn build(self) -> Result<Network> {
        Network::new(self.vertices, self.edges)
    }
}

/// A simple path of vertex indices inside a network.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathTrace(Vec<usize>);

impl PathTrace {
    pub fn new(net: &Network, vertices: Vec<usize>) -> Result<Self> {
        let adj = net.adjacency();
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices {
            if v >= net.vertices().len() || !seen.insert(v) {
                return Err(Error::InvalidInput(format!("path vertex {v} invalid or repeated")));
            }
        }
        for w in vertices.windows(2) {
            if !adj[w[0]].contains(&w[1]) {
                return Err(Error::InvalidInput(format!("({},{}) is not an edge", w[0], w[1])));
            }
        }
        Ok(PathTrace(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn tripod() -> Network {
        let legs: Vec<Point> = (0..3).map(|k| Point::polar(std::f64::consts::FRAC_PI_2 + k as f64 * 2.0 * std::f64::consts::PI / 3.0)).collect();
        Network::new(vec![p(0.0, 0.0), legs[0], legs[1], legs[2]], vec![[0, 1], [0, 2], [0, 3]]).unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(Network::single(p(1.0, 2.0)).length(), 0.0);
        let path = Network::polyline(&[p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0)]).unwrap();
        assert_eq!(path.length(), 2.0);
        assert!((tripod().length() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(Network::single(p(3.0, 4.0)).dist_point(p(0.0, 0.0)).0, 5.0);
        let seg = Network::polyline(&[p(-1.0, 0.0), p(1.0, 0.0)]).unwrap();
        assert_eq!(seg.dist_point(p(0.0, 1.0)), (1.0, p(0.0, 0.0)));
        assert_eq!(seg.dist_point(p(0.5, 0.0)).0, 0.0);
    }

    #[test]
    fn nearest_tie_goes_to_lowest_edge() {
        let net = Network::polyline(&[p(-1.0, 0.0), p(0.0, 0.0), p(1.0, 0.0)]).unwrap();
        let h = net.nearest(p(0.0, 1.0));
        assert_eq!(h.edge, Some(0));
        assert_eq!(h.point, p(0.0, 0.0));
    }

    #[test]
    fn tree_detection() {
        assert!(Network::polyline(&[p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)]).unwrap().is_tree());
        let tri = Network::new(vec![p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)], vec![[0, 1], [1, 2], [2, 0]]).unwrap();
        assert!(!tri.is_tree());
    }

    #[test]
    fn invalid_networks_rejected() {
        assert!(Network::new(vec![], vec![]).is_err());
        assert!(Network::new(vec![p(0.0, 0.0), p(1.0, 0.0)], vec![]).is_err());
        assert!(Network::new(vec![p(0.0, 0.0), p(1.0, 0.0)], vec![[0, 1], [1, 0]]).is_err());
        assert!(Network::new(vec![p(0.0, 0.0), p(0.0, 0.0)], vec![[0, 1]]).is_err());
        assert!(Network::new(vec![p(0.0, 0.0)], vec![[0, 0]]).is_err());
    }

    #[test]
    fn tangent_rays() {
        let seg = Network::polyline(&[p(0.0, 0.0), p(2.0, 0.0)]).unwrap();
        let rays = seg.tangent_rays_at(0);
        assert_eq!(rays.len(), 1);
        assert_eq!(rays[0].dir, p(1.0, 0.0));
        let path = Network::polyline(&[p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)]).unwrap();
        let rays = path.tangent_rays_at(1);
        assert_eq!(rays.len(), 2);
        assert!((rays[0].dir + rays[1].dir).norm() < 1e-15);
        let rays = tripod().tangent_rays_at(0);
        assert_eq!(rays.len(), 3);
        for i in 0..3 {
            for j in i + 1..3 {
                let a = crate::geometry::angle_between(&rays[i], &rays[j]);
                assert!((a - 2.0 * std::f64::consts::PI / 3.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn hausdorff_examples() {
        let a = Network::polyline(&[p(0.0, 0.0), p(1.0, 0.0)]).unwrap();
        assert_eq!(a.hausdorff_distance(&a, 1e-2), 0.0);
        let b = Network::polyline(&[p(0.0, 0.3), p(1.0, 0.3)]).unwrap();
        assert!((a.hausdorff_distance(&b, 1e-2) - 0.3).abs() < 1e-12);
        let m = Network::single(p(0.5, 0.0));
        assert!((a.hausdorff_distance(&m, 1e-3) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn json_round_trip_is_exact() {
        let net = Network::polyline(&[p(0.1, 1.0 / 3.0), p(std::f64::consts::PI, -2.0e-17)]).unwrap();
        let s = serde_json::to_string(&net).unwrap();
        assert!(s.starts_with("{\"vertices\":"));
        let back: Network = serde_json::from_str(&s).unwrap();
        assert_eq!(back, net);
        assert!(serde_json::from_str::<Network>(r#"{"vertices":[[0,0],[1,0]],"edges":[]}"#).is_err());
    }

    #[test]
    fn path_trace_validation() {
        let net = Network::polyline(&[p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)]).unwrap();
        assert!(PathTrace::new(&net, vec![0, 1, 2]).is_ok());
        assert!(PathTrace::new(&net, vec![0, 2]).is_err());
        assert!(PathTrace::new(&net, vec![0, 1, 0]).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn random_tree() -> impl Strategy<Value = Network> {
            prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64, any::<prop::sample::Index>()), 2..12).prop_filter_map(
                "degenerate",
                |spec| {
                    let mut b = NetworkBuilder::new().with_merge_tol(1e-3);
                    let mut ids = Vec::new();
                    for (k, (x, y, idx)) in spec.iter().enumerate() {
                        let i = b.add_point(Point::new(*x, *y));
                        if k > 0 {
                            let j = ids[idx.index(ids.len())];
                            b.add_edge(j, i);
                        }
                        ids.push(i);
                    }
                    b.build().ok()
                },
            )
        }

        proptest! {
            #[test]
            fn length_invariant_under_subdivision_and_reindexing(net in random_tree(), e in any::<prop::sample::Index>(), seed in any::<u64>()) {
                let l = net.length();
                if !net.edges().is_empty() {
                    let sub = net.subdivide_edge(e.index(net.edges().len()));
                    prop_assert!((sub.length() - l).abs() <= 1e-12 * l.max(1.0));
                }
                let n = net.vertices().len();
                let mut perm: Vec<usize> = (0..n).collect();
                let mut s = seed;
                for i in (1..n).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    perm.swap(i, (s >> 33) as usize % (i + 1));
                }
                let re = net.reindexed(&perm).unwrap();
                prop_assert!((re.length() - l).abs() <= 1e-12 * l.max(1.0));
            }

            #[test]
            fn distance_matches_dense_sampling(net in random_tree(), x in -6.0..6.0f64, y in -6.0..6.0f64) {
                let q = Point::new(x, y);
                let res = 1e-3;
                let oracle = net.discretize(res).into_iter().map(|s| q.dist(s)).fold(f64::INFINITY, f64::min);
                let d = net.distance(q);
                prop_assert!(d <= oracle + 1e-12);
                prop_assert!(oracle - d <= res / 2.0 + 1e-12);
                prop_assert!((net.dist_point(q).0 - d).abs() < 1e-12);
            }

            #[test]
            fn index_matches_brute_force(net in random_tree(), qs in prop::collection::vec((-9.0..9.0f64, -9.0..9.0f64), 1..40)) {
                let qs: Vec<Point> = qs.into_iter().map(|(x, y)| Point::new(x, y)).collect();
                let idx = SegmentIndex::new(&net, &qs[..qs.len() / 2]);
                for &q in &qs {
                    let a = net.nearest(q);
                    let b = idx.nearest(q);
                    prop_assert_eq!(a, b);
                }
            }

            #[test]
            fn tree_edges_are_bridges(net in random_tree()) {
                prop_assert!(net.is_tree());
                for e in 0..net.edges().len() {
                    prop_assert!(net.without_edge(e).is_none());
                }
            }

            #[test]
            fn hausdorff_metric_properties(a in random_tree(), b in random_tree(), c in random_tree()) {
                let res = 0.05;
                let ab = a.hausdorff_distance(&b, res);
                prop_assert_eq!(ab, b.hausdorff_distance(&a, res));
                let ac = a.hausdorff_distance(&c, res);
                let cb = c.hausdorff_distance(&b, res);
                prop_assert!(ab <= ac + cb + 2.0 * res);
            }
        }
    }
}
