use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{dist_point_segment, Point};
use crate::mset::CompactSetModel;
use crate::network::NetworkBuilder;
use crate::numeric::{bisect_last_true, golden_section};

use super::{circumscribed_arc, ConstructionResult};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorseshoeOptions {
    /// Outward deviation allowed for polygonized arcs.
    pub eps_arc: f64,
    /// Tolerance of the search over the gap half-angle.
    pub gap_tol: f64,
}

impl Default for HorseshoeOptions {
    fn default() -> Self {
        HorseshoeOptions { eps_arc: 1e-7, gap_tol: 1e-10 }
    }
}

/// Circular piece of M around which the gap is opened.
struct Cap {
    center: Point,
    radius: f64,
}

fn cap_of(m: &CompactSetModel) -> Result<Cap> {
    match *m {
        CompactSetModel::Circle { center, radius } => Ok(Cap { center, radius }),
        CompactSetModel::Stadium { center, radius, core_length } => {
            Ok(Cap { center: center + Point::new(core_length / 2.0, 0.0), radius })
        }
        _ => Err(Error::Precondition("horseshoe is built for circle and stadium models".into())),
    }
}

/// Arc of the inner parallel curve plus two tangent segments, with the gap
/// half-angle fitted by a 1-D search. Requires curvature radius ≥ 5r
/// (circle: R > 4.98r).
pub fn horseshoe(m: &CompactSetModel, r: f64, opts: HorseshoeOptions) -> Result<ConstructionResult> {
    let ok = match *m {
        CompactSetModel::Circle { radius, .. } => radius > 4.98 * r,
        CompactSetModel::Stadium { radius, .. } => radius >= 5.0 * r,
        _ => false,
    };
    if !ok {
        return Err(Error::Precondition(format!("horseshoe needs curvature radius >= 5r (r = {r})")));
    }
    horseshoe_unchecked(m, r, opts)
}

/// As [`horseshoe`] without the curvature precondition; only `r < R` is required.
pub fn horseshoe_unchecked(m: &CompactSetModel, r: f64, opts: HorseshoeOptions) -> Result<ConstructionResult> {
    let cap = cap_of(m)?;
    if !(r > 0.0 && r < cap.radius) {
        return Err(Error::DegenerateOffset { offset: r, limit: cap.radius });
    }
    let rho = cap.radius - r;
    let (theta, _) = golden_section(
        |t| {
            let s = tangent_length(cap.radius, r, t);
            if s.is_finite() {
                -2.0 * rho * t + 2.0 * s
            } else {
                f64::INFINITY
            }
        },
        1e-4,
        PI / 2.0 - 1e-4,
        opts.gap_tol,
    );
    horseshoe_at_gap(m, r, theta, opts)
}

/// Horseshoe with a prescribed gap half-angle `theta`, measured at the cap
/// centre from the apex; the tangent segments get the shortest length that
/// still covers the gap.
pub fn horseshoe_at_gap(m: &CompactSetModel, r: f64, theta: f64, opts: HorseshoeOptions) -> Result<ConstructionResult> {
    let cap = cap_of(m)?;
    let rho = cap.radius - r;
    if rho <= 0.0 {
        return Err(Error::DegenerateOffset { offset: r, limit: cap.radius });
    }
    let s = tangent_length(cap.radius, r, theta);
    if !s.is_finite() {
        return Err(Error::Precondition(format!("gap half-angle {theta} cannot be covered")));
    }
    let q = cap.center;
    let mut pts: Vec<Point> = Vec::new();
    let start = q + Point::polar(theta) * rho;
    pts.push(start + Point::new(theta.sin(), -theta.cos()) * s);
    let mut extend = |v: Vec<Point>| {
        for p in v {
            if pts.last().map_or(true, |l| l.dist(p) > 1e-12) {
                pts.push(p);
            }
        }
    };
    match *m {
        CompactSetModel::Circle { .. } => extend(circumscribed_arc(q, rho, theta, 2.0 * (PI - theta), opts.eps_arc)),
        CompactSetModel::Stadium { center, core_length, .. } => {
            let left = center - Point::new(core_length / 2.0, 0.0);
            extend(circumscribed_arc(q, rho, theta, PI / 2.0 - theta, opts.eps_arc));
            extend(circumscribed_arc(left, rho, PI / 2.0, PI, opts.eps_arc));
            extend(circumscribed_arc(q, rho, -PI / 2.0, PI / 2.0 - theta, opts.eps_arc));
        }
        _ => unreachable!(),
    }
    let end = q + Point::polar(-theta) * rho;
    extend(vec![end + Point::new(theta.sin(), theta.cos()) * s]);
    let mut b = NetworkBuilder::new();
    b.add_polyline(&pts);
    let network = b.build()?;
    Ok(ConstructionResult::new(network, Some(m.clone()), r)
        .with_param("gap_half_angle", theta)
        .with_param("tangent_length", s)
        .with_param("inner_radius", rho))
}

/// Shortest tangent-segment length covering the cap points between the two
/// arc ends; infinite when no length suffices.
fn tangent_length(big_r: f64, r: f64, theta: f64) -> f64 {
    let rho = big_r - r;
    let p1 = Point::polar(theta) * rho;
    let d1 = Point::new(theta.sin(), -theta.cos());
    let p2 = Point::new(p1.x, -p1.y);
    let d2 = Point::new(d1.x, -d1.y);
    let excess = |s: f64| {
        let e1 = p1 + d1 * s;
        let e2 = p2 + d2 * s;
        let gap = |phi: f64| {
            let y = Point::polar(phi) * big_r;
            dist_point_segment(y, p1, e1).min(dist_point_segment(y, p2, e2))
        };
        // by symmetry only the upper half of the gap matters
        let n = 256;
        let mut best = (0.0, 0usize);
        for i in 0..=n {
            let v = gap(theta * i as f64 / n as f64);
            if v > best.0 {
                best = (v, i);
            }
        }
        let lo = theta * best.1.saturating_sub(1) as f64 / n as f64;
        let hi = theta * (best.1 + 1).min(n) as f64 / n as f64;
        let (_, v) = golden_section(|phi| -gap(phi), lo, hi, 1e-14);
        best.0.max(-v) - r
    };
    let smax = rho * theta.tan() + big_r;
    // the arc ends sit at distance exactly r from M, so allow rounding there
    let tol = 1e-13;
    if excess(smax) > tol {
        return f64::INFINITY;
    }
    let s = bisect_last_true(|s| excess(s) > tol, 0.0, smax, 200);
    s.min(smax)
}
