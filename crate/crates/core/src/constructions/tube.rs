use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{signed_angle, Point};
use crate::mset::{shoelace, CompactSetModel};
use crate::network::Network;

use super::ConstructionResult;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubeOptions {
    /// Curvature bound `κ`; estimated from the polyline when `None`.
    pub curvature: Option<f64>,
    /// Angular step of the inscribed polygons replacing round joins and caps.
    pub arc_step: f64,
}

impl Default for TubeOptions {
    fn default() -> Self {
        TubeOptions { curvature: None, arc_step: 1e-2 }
    }
}

/// The curve itself as the network, with `M` the boundary of its closed
/// `r`-neighbourhood: offset runs on both sides, round outer joins, mitred
/// inner joins and round end caps.
pub fn tube_curve(curve: &CompactSetModel, r: f64, opts: TubeOptions) -> Result<ConstructionResult> {
    let pts = match curve {
        CompactSetModel::Polyline { points, closed: false } => points.clone(),
        _ => return Err(Error::InvalidInput("tube needs an open polyline curve".into())),
    };
    if !(r.is_finite() && r > 0.0) || !(opts.arc_step > 0.0 && opts.arc_step < PI / 2.0) {
        return Err(Error::InvalidInput(format!("bad tube radius {r} or arc step {}", opts.arc_step)));
    }
    check_simple(&pts)?;
    let kappa = curvature_bound(&pts, opts.curvature)?;
    if kappa > 0.0 && r >= 1.0 / (2.0 * kappa) {
        return Err(Error::Precondition(format!("r = {r} must stay below 1/(2κ) = {}", 1.0 / (2.0 * kappa))));
    }

    let mut boundary = side(&pts, r, opts.arc_step);
    let n = pts.len();
    boundary.extend(cap(pts[n - 1], pts[n - 1] - pts[n - 2], r, opts.arc_step));
    let back: Vec<Point> = pts.iter().rev().copied().collect();
    boundary.extend(side(&back, r, opts.arc_step));
    boundary.extend(cap(pts[0], pts[0] - pts[1], r, opts.arc_step));
    check_simple_closed(&boundary)
        .map_err(|_| Error::Precondition(format!("the r-neighbourhood boundary self-intersects at r = {r}")))?;

    let area = shoelace(&boundary).abs();
    let network = Network::polyline(&pts)?;
    let m = CompactSetModel::polyline(boundary, true)?;
    Ok(ConstructionResult::new(network, Some(m), r)
        .with_param("curvature", kappa)
        .with_param("tube_area", area))
}

fn unit(p: Point) -> Point {
    p.normalized().expect("edges have positive length")
}

/// Offset of the polyline to its left, from the first to the last vertex.
fn side(pts: &[Point], r: f64, step: f64) -> Vec<Point> {
    let n = pts.len();
    let normal = |i: usize| unit(pts[i + 1] - pts[i]).perp();
    let mut out = vec![pts[0] + normal(0) * r];
    for i in 1..n - 1 {
        let (a, b) = (normal(i - 1), normal(i));
        let turn = signed_angle(pts[i] - pts[i - 1], pts[i + 1] - pts[i]);
        if turn > 0.0 {
            out.push(pts[i] + (a + b) * (r / (1.0 + a.dot(b))));
        } else {
            out.extend(arc(pts[i], a.angle(), turn, r, step));
        }
    }
    out.push(pts[n - 1] + normal(n - 2) * r);
    out
}

/// Inscribed arc points from `start` sweeping `sweep`, both ends included.
fn arc(c: Point, start: f64, sweep: f64, r: f64, step: f64) -> Vec<Point> {
    let k = ((sweep.abs() / step).ceil() as usize).max(1);
    (0..=k).map(|j| c + Point::polar(start + sweep * j as f64 / k as f64) * r).collect()
}

/// Half circle around the end `p` reached along `dir`, without its ends.
fn cap(p: Point, dir: Point, r: f64, step: f64) -> Vec<Point> {
    let pts = arc(p, unit(dir).perp().angle(), -PI, r, step);
    pts[1..pts.len() - 1].to_vec()
}

fn curvature_bound(pts: &[Point], configured: Option<f64>) -> Result<f64> {
    let mut est: f64 = 0.0;
    for w in pts.windows(3) {
        let turn = signed_angle(w[1] - w[0], w[2] - w[1]).abs();
        let len = w[0].dist(w[1]).min(w[1].dist(w[2]));
        let k = turn / len;
        if let Some(kappa) = configured {
            if k > kappa * (1.0 + 1e-9) {
                return Err(Error::Precondition(format!(
                    "direction change {turn} exceeds κ · {len} with κ = {kappa}"
                )));
            }
        }
        est = est.max(k);
    }
    Ok(configured.unwrap_or(est))
}

fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o = |p: Point, q: Point, s: Point| (q - p).cross(s - p);
    let (d1, d2, d3, d4) = (o(c, d, a), o(c, d, b), o(a, b, c), o(a, b, d));
    if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
        return true;
    }
    let on = |p: Point, q: Point, s: Point, v: f64| {
        v == 0.0 && s.x >= p.x.min(q.x) && s.x <= p.x.max(q.x) && s.y >= p.y.min(q.y) && s.y <= p.y.max(q.y)
    };
    on(c, d, a, d1) || on(c, d, b, d2) || on(a, b, c, d3) || on(a, b, d, d4)
}

fn check_simple(pts: &[Point]) -> Result<()> {
    if pts.len() < 2 {
        return Err(Error::InvalidInput("curve needs at least two points".into()));
    }
    for w in pts.windows(3) {
        if signed_angle(w[1] - w[0], w[2] - w[1]).abs() >= PI - 1e-12 {
            return Err(Error::Precondition("curve folds back on itself".into()));
        }
    }
    let m = pts.len() - 1;
    for i in 0..m {
        for j in i + 2..m {
            if segments_cross(pts[i], pts[i + 1], pts[j], pts[j + 1]) {
                return Err(Error::Precondition(format!("curve is not simple: edges {i} and {j} meet")));
            }
        }
    }
    Ok(())
}

fn check_simple_closed(pts: &[Point]) -> Result<()> {
    let n = pts.len();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]) {
                return Err(Error::Precondition("polygon is not simple".into()));
            }
        }
    }
    Ok(())
}
