//! Models of the compact set M and their ε-net discretizations.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{closest_on_segment, Point, GEOM_TOL};

/// Default chord error for polygonized arcs.
pub const DEFAULT_EPS_ARC: f64 = 1e-7;

/// The compact set M.
///
/// The stadium is the boundary of the `radius`-neighbourhood of a horizontal
/// segment of length `core_length` centred at `center`. The rectangle is the
/// boundary of the axis-aligned rectangle with lower-left `corner`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", try_from = "RawModel", into = "RawModel")]
pub enum CompactSetModel {
    Points { points: Vec<Point> },
    Circle { center: Point, radius: f64 },
    Rectangle { corner: Point, width: f64, height: f64 },
    Stadium { center: Point, radius: f64, core_length: f64 },
    Polyline { points: Vec<Point>, closed: bool },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum RawModel {
    Points { points: Vec<Point> },
    Circle { center: Point, radius: f64 },
    Rectangle { corner: Point, width: f64, height: f64 },
    Stadium { center: Point, radius: f64, core_length: f64 },
    Polyline { points: Vec<Point>, closed: bool },
}

impl TryFrom<RawModel> for CompactSetModel {
    type Error = Error;
    fn try_from(raw: RawModel) -> Result<Self> {
        let m = match raw {
            RawModel::Points { points } => CompactSetModel::Points { points },
            RawModel::Circle { center, radius } => CompactSetModel::Circle { center, radius },
            RawModel::Rectangle { corner, width, height } => CompactSetModel::Rectangle { corner, width, height },
            RawModel::Stadium { center, radius, core_length } => {
                CompactSetModel::Stadium { center, radius, core_length }
            }
            RawModel::Polyline { points, closed } => CompactSetModel::Polyline { points, closed },
        };
        m.validate()?;
        Ok(m)
    }
}

impl From<CompactSetModel> for RawModel {
    fn from(m: CompactSetModel) -> Self {
        match m {
            CompactSetModel::Points { points } => RawModel::Points { points },
            CompactSetModel::Circle { center, radius } => RawModel::Circle { center, radius },
            CompactSetModel::Rectangle { corner, width, height } => RawModel::Rectangle { corner, width, height },
            CompactSetModel::Stadium { center, radius, core_length } => {
                RawModel::Stadium { center, radius, core_length }
            }
            CompactSetModel::Polyline { points, closed } => RawModel::Polyline { points, closed },
        }
    }
}

/// A smooth piece of the boundary of a model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Piece {
    Segment(Point, Point),
    /// Arc from angle `start`, sweeping `sweep` radians (positive is counterclockwise).
    Arc { center: Point, radius: f64, start: f64, sweep: f64 },
}

impl Piece {
    pub fn length(&self) -> f64 {
        match *self {
            Piece::Segment(a, b) => a.dist(b),
            Piece::Arc { radius, sweep, .. } => radius * sweep.abs(),
        }
    }

    /// Point at arc-length fraction `t ∈ [0, 1]`.
    pub fn at(&self, t: f64) -> Point {
        match *self {
            Piece::Segment(a, b) => a.lerp(b, t),
            Piece::Arc { center, radius, start, sweep } => center + Point::polar(start + t * sweep) * radius,
        }
    }

    /// Unit tangent at fraction `t`, in the direction of traversal.
    pub fn tangent(&self, t: f64) -> Point {
        match *self {
            Piece::Segment(a, b) => (b - a).normalized().unwrap_or(Point::new(1.0, 0.0)),
            Piece::Arc { start, sweep, .. } => Point::polar(start + t * sweep).perp() * sweep.signum(),
        }
    }

    /// Distance from `p` to the piece and the fraction of the nearest point.
    pub fn nearest(&self, p: Point) -> (f64, f64) {
        match *self {
            Piece::Segment(a, b) => {
                let (q, t) = closest_on_segment(p, a, b);
                (p.dist(q), t)
            }
            Piece::Arc { center, radius, start, sweep } => {
                let rel = p - center;
                let mut best = (p.dist(self.at(0.0)), 0.0);
                let e = p.dist(self.at(1.0));
                if e < best.0 {
                    best = (e, 1.0);
                }
                if rel.norm() > 0.0 {
                    let mut d = (rel.angle() - start) * sweep.signum();
                    d = d.rem_euclid(2.0 * PI);
                    if d <= sweep.abs() {
                        let t = d / sweep.abs();
                        let dist = (rel.norm() - radius).abs();
                        if dist < best.0 {
                            best = (dist, t);
                        }
                    }
                }
                best
            }
        }
    }
}

/// Samples of M with the ε-net property.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleNet {
    pub points: Vec<Point>,
    pub mesh: f64,
}

impl SampleNet {
    /// Net made of the given points, exact (mesh 0).
    pub fn exact(points: Vec<Point>) -> Self {
        SampleNet { points, mesh: 0.0 }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl CompactSetModel {
    pub fn circle(center: Point, radius: f64) -> Result<Self> {
        let m = CompactSetModel::Circle { center, radius };
        m.validate()?;
        Ok(m)
    }

    pub fn rectangle(corner: Point, width: f64, height: f64) -> Result<Self> {
        let m = CompactSetModel::Rectangle { corner, width, height };
        m.validate()?;
        Ok(m)
    }

    pub fn stadium(center: Point, radius: f64, core_length: f64) -> Result<Self> {
        let m = CompactSetModel::Stadium { center, radius, core_length };
        m.validate()?;
        Ok(m)
    }

    pub fn points(points: Vec<Point>) -> Result<Self> {
        let m = CompactSetModel::Points { points };
        m.validate()?;
        Ok(m)
    }

    pub fn polyline(points: Vec<Point>, closed: bool) -> Result<Self> {
        let m = CompactSetModel::Polyline { points, closed };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64, what: &str| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!("{what} must be positive, got {v}")))
            }
        };
        let finite = |p: &Point| {
            if p.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!("non-finite point {p:?}")))
            }
        };
        match self {
            CompactSetModel::Points { points } => {
                if points.is_empty() {
                    return Err(Error::InvalidInput("empty point set".into()));
                }
                points.iter().try_for_each(finite)
            }
            CompactSetModel::Circle { center, radius } => {
                finite(center)?;
                positive(*radius, "radius")
            }
            CompactSetModel::Rectangle { corner, width, height } => {
                finite(corner)?;
                positive(*width, "width")?;
                positive(*height, "height")
            }
            CompactSetModel::Stadium { center, radius, core_length } => {
                finite(center)?;
                positive(*radius, "radius")?;
                if !(core_length.is_finite() && *core_length >= 0.0) {
                    return Err(Error::InvalidInput(format!("core length must be >= 0, got {core_length}")));
                }
                Ok(())
            }
            CompactSetModel::Polyline { points, closed } => {
                if points.len() < 2 {
                    return Err(Error::InvalidInput("polyline needs at least 2 points".into()));
                }
                points.iter().try_for_each(finite)?;
                let n = points.len();
                let pairs = if *closed { n } else { n - 1 };
                for i in 0..pairs {
                    if points[i].dist(points[(i + 1) % n]) <= GEOM_TOL {
                        return Err(Error::InvalidInput(format!("repeated consecutive point at {i}")));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            CompactSetModel::Points { .. } => false,
            CompactSetModel::Polyline { closed, .. } => *closed,
            _ => true,
        }
    }

    /// Whether the model is the boundary of a convex region.
    pub fn is_convex(&self) -> bool {
        match self {
            CompactSetModel::Points { .. } | CompactSetModel::Polyline { closed: false, .. } => false,
            CompactSetModel::Polyline { points, .. } => {
                let n = points.len();
                let turns: Vec<f64> = (0..n)
                    .map(|i| (points[(i + 1) % n] - points[i]).cross(points[(i + 2) % n] - points[(i + 1) % n]))
                    .collect();
                turns.iter().all(|&t| t >= 0.0) || turns.iter().all(|&t| t <= 0.0)
            }
            _ => true,
        }
    }

    /// Smooth pieces of the model; empty for finite point sets.
    pub fn pieces(&self) -> Vec<Piece> {
        match *self {
            CompactSetModel::Points { .. } => Vec::new(),
            CompactSetModel::Circle { center, radius } => {
                vec![Piece::Arc { center, radius, start: 0.0, sweep: 2.0 * PI }]
            }
            CompactSetModel::Rectangle { corner, width, height } => {
                let c = rectangle_corners(corner, width, height);
                (0..4).map(|i| Piece::Segment(c[i], c[(i + 1) % 4])).collect()
            }
            CompactSetModel::Stadium { center, radius, core_length } => {
                let h = core_length / 2.0;
                let right = center + Point::new(h, 0.0);
                let left = center - Point::new(h, 0.0);
                let mut out = Vec::new();
                if core_length > 0.0 {
                    out.push(Piece::Segment(left - Point::new(0.0, radius), right - Point::new(0.0, radius)));
                }
                out.push(Piece::Arc { center: right, radius, start: -PI / 2.0, sweep: PI });
                if core_length > 0.0 {
                    out.push(Piece::Segment(right + Point::new(0.0, radius), left + Point::new(0.0, radius)));
                }
                out.push(Piece::Arc { center: left, radius, start: PI / 2.0, sweep: PI });
                out
            }
            CompactSetModel::Polyline { ref points, closed } => {
                let n = points.len();
                let segs = if closed { n } else { n - 1 };
                (0..segs).map(|i| Piece::Segment(points[i], points[(i + 1) % n])).collect()
            }
        }
    }

    /// Samples with the ε-net property: each piece is cut into
    /// `⌈len / 2ε⌉` equal arcs, endpoints included.
    pub fn sample(&self, eps: f64) -> Result<SampleNet> {
        if let CompactSetModel::Points { points } = self {
            return Ok(SampleNet::exact(points.clone()));
        }
        if !(eps.is_finite() && eps > 0.0) {
            return Err(Error::InvalidInput(format!("sampling mesh must be positive, got {eps}")));
        }
        let mut pts: Vec<Point> = Vec::new();
        for piece in self.pieces() {
            let n = (piece.length() / (2.0 * eps)).ceil().max(1.0) as usize;
            for i in 0..=n {
                let q = piece.at(i as f64 / n as f64);
                if pts.last().map_or(true, |l| l.dist(q) > GEOM_TOL) {
                    pts.push(q);
                }
            }
        }
        if self.is_closed() && pts.len() > 1 && pts[0].dist(pts[pts.len() - 1]) <= GEOM_TOL {
            pts.pop();
        }
        Ok(SampleNet { points: pts, mesh: eps })
    }

    /// Total length of the model (0 for finite sets).
    pub fn curve_length(&self) -> f64 {
        self.pieces().iter().map(Piece::length).sum()
    }

    /// Point at arc length `s` along the concatenated pieces (clamped).
    pub fn point_at(&self, s: f64) -> Option<Point> {
        let pieces = self.pieces();
        let mut rest = s.max(0.0);
        for (k, p) in pieces.iter().enumerate() {
            let l = p.length();
            if rest <= l || k + 1 == pieces.len() {
                return Some(p.at((rest / l).clamp(0.0, 1.0)));
            }
            rest -= l;
        }
        None
    }

    pub fn perimeter(&self) -> Result<f64> {
        if !self.is_closed() {
            return Err(Error::NotClosed("perimeter"));
        }
        Ok(match *self {
            CompactSetModel::Circle { radius, .. } => 2.0 * PI * radius,
            CompactSetModel::Rectangle { width, height, .. } => 2.0 * (width + height),
            CompactSetModel::Stadium { radius, core_length, .. } => 2.0 * core_length + 2.0 * PI * radius,
            _ => self.curve_length(),
        })
    }

    /// Area of the filled region.
    pub fn area(&self) -> Result<f64> {
        if !self.is_closed() {
            return Err(Error::NotClosed("area"));
        }
        Ok(match *self {
            CompactSetModel::Circle { radius, .. } => PI * radius * radius,
            CompactSetModel::Rectangle { width, height, .. } => width * height,
            CompactSetModel::Stadium { radius, core_length, .. } => 2.0 * radius * core_length + PI * radius * radius,
            CompactSetModel::Polyline { ref points, .. } => shoelace(points).abs(),
            CompactSetModel::Points { .. } => unreachable!(),
        })
    }

    /// Distance from `p` to M.
    pub fn distance(&self, p: Point) -> f64 {
        match self {
            CompactSetModel::Points { points } => points.iter().map(|q| q.dist(p)).fold(f64::INFINITY, f64::min),
            _ => self.pieces().iter().map(|pc| pc.nearest(p).0).fold(f64::INFINITY, f64::min),
        }
    }

    /// Unit tangent of M at `y`, or `None` for finite sets and points where M
    /// has a corner (or `y` is farther than `tol` from M).
    pub fn tangent_at(&self, y: Point, tol: f64) -> Option<Point> {
        let pieces = self.pieces();
        let mut hits = Vec::new();
        for pc in &pieces {
            let (d, t) = pc.nearest(y);
            if d <= tol {
                hits.push(pc.tangent(t));
            }
        }
        let first = *hits.first()?;
        hits.iter().all(|h| h.dot(first) > 1.0 - 1e-9).then_some(first)
    }

    /// Closed polyline approximating the boundary, arcs polygonized as
    /// inscribed chords with error at most `eps_arc`.
    pub fn boundary_polygon(&self, eps_arc: f64) -> Result<Vec<Point>> {
        if !self.is_closed() {
            return Err(Error::NotClosed("boundary polygon"));
        }
        if let CompactSetModel::Polyline { points, .. } = self {
            return Ok(points.clone());
        }
        let mut out: Vec<Point> = Vec::new();
        for pc in self.pieces() {
            let n = match pc {
                Piece::Segment(..) => 1,
                Piece::Arc { radius, sweep, .. } => arc_segments(radius, sweep.abs(), eps_arc),
            };
            for i in 0..n {
                let q = pc.at(i as f64 / n as f64);
                if out.last().map_or(true, |l| l.dist(q) > GEOM_TOL) {
                    out.push(q);
                }
            }
        }
        Ok(out)
    }

    /// The inward parallel curve at distance `r`, as a closed polyline.
    pub fn inner_parallel_curve(&self, r: f64, eps_arc: f64) -> Result<CompactSetModel> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::InvalidInput(format!("offset must be positive, got {r}")));
        }
        match *self {
            CompactSetModel::Circle { center, radius } => {
                if r >= radius {
                    return Err(Error::DegenerateOffset { offset: r, limit: radius });
                }
                CompactSetModel::Circle { center, radius: radius - r }.as_polyline(eps_arc)
            }
            CompactSetModel::Stadium { center, radius, core_length } => {
                if r >= radius {
                    return Err(Error::DegenerateOffset { offset: r, limit: radius });
                }
                CompactSetModel::Stadium { center, radius: radius - r, core_length }.as_polyline(eps_arc)
            }
            CompactSetModel::Rectangle { corner, width, height } => {
                let limit = width.min(height) / 2.0;
                if r >= limit {
                    return Err(Error::DegenerateOffset { offset: r, limit });
                }
                CompactSetModel::Rectangle {
                    corner: corner + Point::new(r, r),
                    width: width - 2.0 * r,
                    height: height - 2.0 * r,
                }
                .as_polyline(eps_arc)
            }
            CompactSetModel::Polyline { ref points, closed: true } => offset_convex_polygon(points, r),
            _ => Err(Error::NotClosed("inner parallel curve")),
        }
    }

    /// The model as a closed polyline.
    pub fn as_polyline(&self, eps_arc: f64) -> Result<CompactSetModel> {
        CompactSetModel::polyline(self.boundary_polygon(eps_arc)?, true)
    }
}

/// Corners of an axis-aligned rectangle, counterclockwise from the lower-left.
pub fn rectangle_corners(corner: Point, width: f64, height: f64) -> [Point; 4] {
    [
        corner,
        corner + Point::new(width, 0.0),
        corner + Point::new(width, height),
        corner + Point::new(0.0, height),
    ]
}

/// Number of inscribed chords for an arc so that the sagitta is at most `eps_arc`.
pub fn arc_segments(radius: f64, sweep: f64, eps_arc: f64) -> usize {
    let chord = (8.0 * radius * eps_arc).sqrt();
    let half = (chord / (2.0 * radius)).min(1.0).asin();
    ((sweep / (2.0 * half)).ceil() as usize).max(2)
}

/// Signed area, positive for counterclockwise polygons.
pub fn shoelace(points: &[Point]) -> f64 {
    let n = points.len();
    (0..n).map(|i| points[i].cross(points[(i + 1) % n])).sum::<f64>() / 2.0
}

fn offset_convex_polygon(points: &[Point], r: f64) -> Result<CompactSetModel> {
    let n = points.len();
    if n < 3 {
        return Err(Error::Precondition("polygon needs at least 3 vertices".into()));
    }
    let orient = shoelace(points).signum();
    for i in 0..n {
        let a = points[(i + 1) % n] - points[i];
        let b = points[(i + 2) % n] - points[(i + 1) % n];
        if a.cross(b) * orient < -GEOM_TOL * a.norm() * b.norm() {
            return Err(Error::Precondition("inner parallel curve needs a convex polygon".into()));
        }
    }
    // inward normal of edge i, and the offset line through points[i] + r·n_i
    let normals: Vec<Point> = (0..n)
        .map(|i| {
            let d = (points[(i + 1) % n] - points[i]).normalized().unwrap();
            d.perp() * orient
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let prev = (i + n - 1) % n;
        let (n0, n1) = (normals[prev], normals[i]);
        // vertex i offset: intersection of the two offset lines
        let denom = 1.0 + n0.dot(n1);
        if denom <= 1e-12 {
            return Err(Error::DegenerateOffset { offset: r, limit: 0.0 });
        }
        out.push(points[i] + (n0 + n1) * (r / denom));
    }
    for i in 0..n {
        let before = points[(i + 1) % n] - points[i];
        let after = out[(i + 1) % n] - out[i];
        if before.dot(after) <= 0.0 {
            let limit = max_inner_offset(points);
            return Err(Error::DegenerateOffset { offset: r, limit });
        }
    }
    CompactSetModel::polyline(out, true)
}

/// Largest `r` for which every edge survives the inward offset.
fn max_inner_offset(points: &[Point]) -> f64 {
    let n = points.len();
    let orient = shoelace(points).signum();
    let mut limit = f64::INFINITY;
    for i in 0..n {
        let prev = points[(i + n - 1) % n];
        let (a, b) = (points[i], points[(i + 1) % n]);
        let next = points[(i + 2) % n];
        let d = (b - a).normalized().unwrap();
        let half = |u: Point, v: Point| {
            let t = crate::geometry::unsigned_angle(u, v);
            ((PI - t) / 2.0).tan()
        };
        let ta = half(a - prev, d);
        let tb = half(next - b, d);
        let _ = orient;
        let s = ta.recip() + tb.recip();
        if s > 0.0 {
            limit = limit.min(a.dist(b) / s);
        }
    }
    limit
}
