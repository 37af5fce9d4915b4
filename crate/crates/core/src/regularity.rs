//! Executable necessary conditions for minimizers: angle and branching
//! conditions, turn, Ahlfors density, energetic-point angles and the
//! stationarity derivatives.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::energy::{classify_energetic, energy_value, EnergeticClassification, COVER_TOL};
use crate::error::{Error, Result};
use crate::geometry::{angle_between, circle_segment_params, signed_angle, unsigned_angle, Point};
use crate::mset::CompactSetModel;
use crate::network::{Network, PathTrace};

pub const DEFAULT_TOL_ANGLE: f64 = 1e-6;
pub const DEFAULT_TOL_RESIDUAL: f64 = 1e-6;
/// Distance tolerance (relative to r) for energetic points in the check suite.
pub const ENERGETIC_TOL: f64 = 1e-9;
const TWO_PI_3: f64 = 2.0 * PI / 3.0;

/// Where a check was evaluated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    Vertex(usize),
    Path(Vec<usize>),
    Point(Point),
    Global,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub value: f64,
    pub threshold: f64,
    pub tolerance: f64,
    pub location: Location,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
    /// Number of degree-3 vertices, when counted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branchings: Option<usize>,
    /// Places where no condition is known, e.g. witnesses at a corner of M.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unknown: Vec<Location>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
        self.unknown.extend(other.unknown);
        if other.branchings.is_some() {
            self.branchings = other.branchings;
        }
    }

    fn push(&mut self, name: &str, value: f64, threshold: f64, tolerance: f64, passed: bool, location: Location) {
        self.checks.push(Check { name: name.into(), passed, value, threshold, tolerance, location });
    }
}

fn pairwise_angles(n: &Network, v: usize) -> Vec<f64> {
    let rays = n.tangent_rays_at(v);
    let mut out = Vec::new();
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            out.push(angle_between(&rays[i], &rays[j]));
        }
    }
    out
}

/// All pairwise angles between tangent rays are at least 2π/3.
pub fn check_angles(n: &Network, tol_angle: f64) -> CheckReport {
    let mut rep = CheckReport::default();
    for v in 0..n.vertices().len() {
        let angles = pairwise_angles(n, v);
        if angles.is_empty() {
            continue;
        }
        let min = angles.iter().copied().fold(f64::INFINITY, f64::min);
        rep.push("min_angle", min, TWO_PI_3, tol_angle, min >= TWO_PI_3 - tol_angle, Location::Vertex(v));
    }
    rep
}

/// Degree-3 vertices are regular tripods and no vertex has degree above 3.
pub fn check_branching(n: &Network, tol_angle: f64) -> CheckReport {
    let mut rep = CheckReport::default();
    let degrees = n.degrees();
    let mut count = 0;
    for (v, &d) in degrees.iter().enumerate() {
        if d > 3 {
            rep.push("max_degree", d as f64, 3.0, 0.0, false, Location::Vertex(v));
        } else if d == 3 {
            count += 1;
            let dev = pairwise_angles(n, v).iter().map(|a| (a - TWO_PI_3).abs()).fold(0.0, f64::max);
            rep.push("tripod_angle_deviation", dev, 0.0, tol_angle, dev <= tol_angle, Location::Vertex(v));
        }
    }
    rep.branchings = Some(count);
    rep
}

/// The network is a tree: connected without cycles.
pub fn check_tree(n: &Network) -> CheckReport {
    let mut rep = CheckReport::default();
    let cycles = n.edges().len() as f64 + 1.0 - n.vertices().len() as f64;
    rep.push("is_tree", cycles, 0.0, 0.0, n.is_tree(), Location::Global);
    rep
}

/// Tree, angle and branching checks together.
pub fn check_structure(n: &Network, tol_angle: f64) -> CheckReport {
    let mut rep = check_tree(n);
    rep.merge(check_angles(n, tol_angle));
    rep.merge(check_branching(n, tol_angle));
    rep
}

/// Coverage of a sample net of M with mesh `mesh`, the structural checks and
/// the energetic-angle checks. The energetic checks run only when covered;
/// energetic vertices with a witness at a corner of a curve are listed as
/// unknown instead.
pub fn check_suite(n: &Network, m: &CompactSetModel, r: f64, mesh: f64, tol_angle: f64) -> Result<CheckReport> {
    let s = m.sample(mesh)?;
    let e = energy_value(&s, n);
    let mut rep = CheckReport::default();
    rep.push("covered", e, r, COVER_TOL, e <= r + COVER_TOL, Location::Global);
    rep.merge(check_structure(n, tol_angle));
    if e <= r + COVER_TOL {
        let mut cls = classify_energetic(n, &s, r, ENERGETIC_TOL * r)?;
        if !matches!(m, CompactSetModel::Points { .. }) {
            let on_tol = (s.mesh * 1e-6).max(1e-12 * r);
            cls.points.retain(|p| {
                let smooth = p.witnesses.iter().all(|&y| m.tangent_at(y, on_tol).is_some());
                if !smooth {
                    if let Some(v) = p.vertex {
                        rep.unknown.push(Location::Vertex(v));
                    }
                }
                smooth || p.vertex.is_none()
            });
        }
        rep.merge(check_energetic_angles(n, &cls, tol_angle));
    }
    Ok(rep)
}

/// Signed turn of a polygonal path: the sum of turning angles at its interior vertices.
pub fn turn(n: &Network, path: &PathTrace) -> f64 {
    let vs = path.vertices();
    vs.windows(3)
        .map(|w| {
            let (a, b, c) = (n.vertex(w[0]), n.vertex(w[1]), n.vertex(w[2]));
            signed_angle(b - a, c - b)
        })
        .sum()
}

/// Partial turns along a path, one per interior vertex.
pub fn partial_turns(n: &Network, path: &PathTrace) -> Vec<f64> {
    let vs = path.vertices();
    let mut acc = 0.0;
    vs.windows(3)
        .map(|w| {
            let (a, b, c) = (n.vertex(w[0]), n.vertex(w[1]), n.vertex(w[2]));
            acc += signed_angle(b - a, c - b);
            acc
        })
        .collect()
}

/// `H(Σ ∩ B_ε(x)) / ε`, with edges clipped exactly to the disk.
pub fn ahlfors_density(n: &Network, x: Point, eps: f64) -> f64 {
    let mut total = 0.0;
    for e in 0..n.edges().len() {
        let (a, b) = n.segment(e);
        let inside = |t: f64| (a.lerp(b, t) - x).norm() <= eps;
        let mut ts = vec![0.0];
        ts.extend(circle_segment_params(x, eps, a, b));
        ts.push(1.0);
        let len = a.dist(b);
        for w in ts.windows(2) {
            if w[1] > w[0] && inside((w[0] + w[1]) / 2.0) {
                total += (w[1] - w[0]) * len;
            }
        }
    }
    total / eps
}

/// Witness used for angle checks: the one farthest from Σ, provided all
/// witnesses agree within the isolation radius.
fn unique_witness(n: &Network, ws: &[Point], spread: f64) -> Option<Point> {
    let first = *ws.first()?;
    if ws.iter().any(|w| w.dist(first) > spread) {
        return None;
    }
    ws.iter().copied().max_by(|a, b| n.distance(*a).total_cmp(&n.distance(*b)))
}

/// Collinearity at energetic leaves and the bisector condition at energetic
/// degree-2 vertices, for every energetic vertex with a unique witness.
pub fn check_energetic_angles(n: &Network, cls: &EnergeticClassification, tol: f64) -> CheckReport {
    let mut rep = CheckReport::default();
    let adj = n.adjacency();
    let mut pts: Vec<_> = cls.points.iter().filter_map(|p| p.vertex.map(|v| (v, p))).collect();
    pts.sort_by_key(|(v, _)| *v);
    for (v, p) in pts {
        let Some(y) = unique_witness(n, &p.witnesses, cls.isolation_radius) else { continue };
        let x = n.vertex(v);
        match adj[v].as_slice() {
            [z] => {
                let res = unsigned_angle(x - y, n.vertex(*z) - x);
                let res = res.min(PI - res);
                rep.push("leaf_collinearity", res, 0.0, tol, res <= tol, Location::Vertex(v));
            }
            [z1, z2] => {
                let a1 = unsigned_angle(n.vertex(*z1) - x, y - x);
                let a2 = unsigned_angle(y - x, n.vertex(*z2) - x);
                let res = (a1 - a2).abs();
                rep.push("bisector", res, 0.0, tol, res <= tol, Location::Vertex(v));
            }
            _ => {}
        }
    }
    rep
}

/// Local geometry at an energetic point, per the four derivative cases.
///
/// Cases 1–2 measure `α` between the ray from x to its witness y and the
/// tangent of M at y. Cases 3–4 use the frame whose x-axis runs from the
/// moving witness y₁ to the other witness y₂ with x above it: `α` is the
/// base angle of the isosceles triangle x y₁ y₂, y₁ moves along
/// `(cos δ, −sin δ)`, and `β`, `γ` are the direction angles of the
/// segments from the neighbours z to x.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum StationarityCase {
    #[serde(rename = "1")]
    Leaf { alpha: f64 },
    #[serde(rename = "2")]
    Bend { alpha: f64, branch: f64 },
    #[serde(rename = "3")]
    LeafTwoWitnesses { alpha: f64, beta: f64, delta: f64 },
    #[serde(rename = "4")]
    BendTwoWitnesses { alpha: f64, beta: f64, gamma: f64, delta: f64 },
}

impl StationarityCase {
    pub fn number(&self) -> u8 {
        match self {
            StationarityCase::Leaf { .. } => 1,
            StationarityCase::Bend { .. } => 2,
            StationarityCase::LeafTwoWitnesses { .. } => 3,
            StationarityCase::BendTwoWitnesses { .. } => 4,
        }
    }
}

/// Derivative of the local length as the witness moves along M.
pub fn stationarity_residual(c: &StationarityCase) -> Result<f64> {
    let singular = |alpha: f64| (2.0 * alpha).sin().abs() < 1e-12;
    match *c {
        StationarityCase::Leaf { alpha } => Ok(alpha.cos()),
        StationarityCase::Bend { alpha, branch } => Ok(2.0 * alpha.cos() * (branch / 2.0).cos()),
        StationarityCase::LeafTwoWitnesses { alpha, beta, delta } => {
            if singular(alpha) {
                return Err(Error::SingularFormula);
            }
            Ok((alpha + delta).cos() * (alpha + beta).sin() / (2.0 * alpha).sin())
        }
        StationarityCase::BendTwoWitnesses { alpha, beta, gamma, delta } => {
            if singular(alpha) {
                return Err(Error::SingularFormula);
            }
            Ok((alpha + delta).cos() / (2.0 * alpha).sin() * ((alpha + beta).sin() + (alpha + gamma).sin()))
        }
    }
}

/// A contact of Σ with `∂B_r(y)` and its assembled case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Contact {
    pub vertex: usize,
    pub case: StationarityCase,
    pub derivative: f64,
    /// Side of the line (yY) on which the contact lies (±1).
    pub side: f64,
}

/// Options for [`check_equal_derivatives`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeOptions {
    /// Residual tolerance on `|d₁ − d₂|`.
    pub tol: f64,
    /// How far from `∂B_r(y)` a vertex may be and still count as a contact.
    pub contact_tol: f64,
}

impl Default for DerivativeOptions {
    fn default() -> Self {
        DerivativeOptions { tol: DEFAULT_TOL_RESIDUAL, contact_tol: 1e-6 }
    }
}

/// Assembles the local case at each contact vertex of `∂B_r(y)` and checks
/// that the two derivatives agree and the contacts lie on opposite sides of
/// the normal line through `y`.
///
/// The tangent used at each contact points towards that contact's side, so
/// stationarity reads `d₁ = d₂`.
pub fn check_equal_derivatives(
    n: &Network,
    cls: &EnergeticClassification,
    m: &CompactSetModel,
    y: Point,
    opts: DerivativeOptions,
) -> Result<(CheckReport, Vec<Contact>)> {
    let r = cls.r;
    let tangent = m
        .tangent_at(y, 1e-7)
        .ok_or_else(|| Error::UnknownCase(format!("M has no tangent at {y:?} (corner or off M)")))?;
    let adj = n.adjacency();
    let contacts: Vec<usize> = (0..n.vertices().len())
        .filter(|&v| {
            let x = n.vertex(v);
            let out = x - y;
            (out.norm() - r).abs() <= opts.contact_tol
                && adj[v].len() <= 2
                && adj[v].iter().all(|&z| (n.vertex(z) - x).dot(out) >= -1e-12 * out.norm())
        })
        .collect();
    if contacts.len() < 2 {
        return Err(Error::Precondition(format!("{} contact(s) on the circle around {y:?}, need 2", contacts.len())));
    }
    let normal = {
        let nrm = tangent.perp();
        let s: f64 = contacts.iter().map(|&v| nrm.dot(n.vertex(v) - y)).sum();
        if s < 0.0 {
            -nrm
        } else {
            nrm
        }
    };
    let mut out = Vec::new();
    for &v in contacts.iter().take(2) {
        let x = n.vertex(v);
        let side = if tangent.dot(x - y) >= 0.0 { 1.0 } else { -1.0 };
        let l = tangent * side;
        let other = cls
            .at_vertex(v)
            .and_then(|p| p.witnesses.iter().copied().find(|w| w.dist(y) > cls.isolation_radius + cls.tol));
        let zs: Vec<Point> = adj[v].iter().map(|&z| n.vertex(z)).collect();
        let case = match (other, zs.as_slice()) {
            (None, [_]) => StationarityCase::Leaf { alpha: unsigned_angle(y - x, l) },
            (None, [z1, z2]) => {
                StationarityCase::Bend { alpha: unsigned_angle(y - x, l), branch: unsigned_angle(*z1 - x, *z2 - x) }
            }
            (Some(y2), _) => {
                let ex = (y2 - y).normalized().ok_or(Error::SingularFormula)?;
                let up = if ex.cross(x - y) >= 0.0 { 1.0 } else { -1.0 };
                let frame = |p: Point| Point::new(p.dot(ex), ex.cross(p) * up);
                let alpha = unsigned_angle(x - y, y2 - y);
                let lf = frame(l);
                let delta = -lf.y.atan2(lf.x);
                let dirs: Vec<f64> = zs.iter().map(|&z| frame(x - z).angle()).collect();
                match dirs.as_slice() {
                    [beta] => StationarityCase::LeafTwoWitnesses { alpha, beta: *beta, delta },
                    [beta, gamma] => StationarityCase::BendTwoWitnesses { alpha, beta: *beta, gamma: *gamma, delta },
                    _ => return Err(Error::UnknownCase(format!("vertex {v} has degree {}", zs.len()))),
                }
            }
            _ => return Err(Error::UnknownCase(format!("vertex {v} has degree {}", zs.len()))),
        };
        let derivative = stationarity_residual(&case)?;
        out.push(Contact { vertex: v, case, derivative, side: normal.cross(x - y).signum() });
    }
    let mut rep = CheckReport::default();
    let res = (out[0].derivative - out[1].derivative).abs();
    rep.push("equal_derivatives", res, 0.0, opts.tol, res <= opts.tol, Location::Point(y));
    let sides = out[0].side * out[1].side;
    rep.push("opposite_sides", sides, 0.0, 0.0, sides < 0.0, Location::Point(y));
    Ok((rep, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy::classify_energetic;
    use crate::mset::SampleNet;
    use crate::numeric::golden_section;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn tripod() -> Network {
        let legs: Vec<Point> = (0..3).map(|k| Point::polar(PI / 2.0 + k as f64 * TWO_PI_3)).collect();
        Network::new(vec![p(0.0, 0.0), legs[0], legs[1], legs[2]], vec![[0, 1], [0, 2], [0, 3]]).unwrap()
    }

    #[test]
    fn angle_examples() {
        let path = Network::polyline(&[p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)]).unwrap();
        assert!(check_angles(&path, DEFAULT_TOL_ANGLE).passed());
        let corner = Network::polyline(&[p(1.0, 0.0), p(0.0, 0.0), p(0.0, 1.0)]).unwrap();
        let rep = check_angles(&corner, DEFAULT_TOL_ANGLE);
        assert!(!rep.passed());
        assert_eq!(rep.failures().next().unwrap().location, Location::Vertex(1));
        let rep = check_angles(&tripod(), DEFAULT_TOL_ANGLE);
        assert!(rep.passed());
        let center = rep.checks.iter().find(|c| c.location == Location::Vertex(0)).unwrap();
        assert!((center.value - TWO_PI_3).abs() < 1e-12);
    }

    #[test]
    fn branching_examples() {
        let rep = check_branching(&tripod(), DEFAULT_TOL_ANGLE);
        assert!(rep.passed());
        assert_eq!(rep.branchings, Some(1));
        let t = Network::new(
            vec![p(0.0, 0.0), p(1.0, 0.0), p(-1.0, 0.0), p(0.0, 1.0)],
            vec![[0, 1], [0, 2], [0, 3]],
        )
        .unwrap();
        assert!(!check_branching(&t, DEFAULT_TOL_ANGLE).passed());
        let star = Network::new(
            vec![p(0.0, 0.0), p(1.0, 0.0), p(-1.0, 0.0), p(0.0, 1.0), p(0.0, -1.0)],
            vec![[0, 1], [0, 2], [0, 3], [0, 4]],
        )
        .unwrap();
        assert!(!check_branching(&star, DEFAULT_TOL_ANGLE).passed());
        assert!(!check_angles(&star, DEFAULT_TOL_ANGLE).passed());
    }

    #[test]
    fn turn_examples() {
        let straight = Network::polyline(&[p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)]).unwrap();
        assert_eq!(turn(&straight, &PathTrace::new(&straight, vec![0, 1, 2]).unwrap()), 0.0);
        let u = Network::polyline(&[p(0.0, 1.0), p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0)]).unwrap();
        let t = turn(&u, &PathTrace::new(&u, vec![0, 1, 2, 3]).unwrap());
        assert!((t - PI).abs() < 1e-15);
        let back = turn(&u, &PathTrace::new(&u, vec![3, 2, 1, 0]).unwrap());
        assert!((back + PI).abs() < 1e-15);
    }

    #[test]
    fn density_examples() {
        let seg = Network::polyline(&[p(-1.0, 0.0), p(1.0, 0.0)]).unwrap();
        assert!((ahlfors_density(&seg, p(0.0, 0.0), 1e-3) - 2.0).abs() < 1e-12);
        assert!((ahlfors_density(&seg, p(1.0, 0.0), 1e-3) - 1.0).abs() < 1e-12);
        assert!((ahlfors_density(&tripod(), p(0.0, 0.0), 1e-3) - 3.0).abs() < 1e-12);
        assert!((ahlfors_density(&seg, p(0.0, 0.0), 10.0) - 0.2).abs() < 1e-12);
    }

    #[test]
    fn energetic_angle_examples() {
        let r = 0.5;
        let s = SampleNet::exact(vec![p(0.0, 0.0), p(3.0, 0.0)]);
        let seg = Network::polyline(&[p(r, 0.0), p(3.0 - r, 0.0)]).unwrap();
        let cls = classify_energetic(&seg, &s, r, 1e-9).unwrap();
        let rep = check_energetic_angles(&seg, &cls, 1e-9);
        assert_eq!(rep.checks.len(), 2);
        assert!(rep.passed());

        // degree-2 vertex at the origin with arms at ±60° from the -y axis, witness above
        let w = p(0.0, 0.0);
        let z1 = Point::polar(-PI / 2.0 - PI / 3.0) * 2.0;
        let z2 = Point::polar(-PI / 2.0 + PI / 3.0) * 2.0;
        let bend = Network::polyline(&[z1, w, z2]).unwrap();
        let good = SampleNet::exact(vec![p(0.0, r)]);
        let cls = classify_energetic(&bend, &good, r, 1e-9).unwrap();
        assert!(check_energetic_angles(&bend, &cls, 1e-6).passed());
        let off = SampleNet::exact(vec![Point::polar(PI / 2.0 + 0.1) * r]);
        let cls = classify_energetic(&bend, &off, r, 1e-9).unwrap();
        let rep = check_energetic_angles(&bend, &cls, 1e-6);
        assert!(!rep.passed());
        assert!((rep.checks[0].value - 0.2).abs() < 1e-12);
    }

    #[test]
    fn residual_examples() {
        assert!(stationarity_residual(&StationarityCase::Leaf { alpha: PI / 2.0 }).unwrap().abs() < 1e-15);
        let c2 = StationarityCase::Bend { alpha: PI / 2.0, branch: TWO_PI_3 };
        assert!(stationarity_residual(&c2).unwrap().abs() < 1e-15);
        for beta in [-1.0, 0.3, 1.2, 2.5] {
            let c3 = StationarityCase::LeafTwoWitnesses { alpha: 0.4, beta, delta: PI / 2.0 - 0.4 };
            assert!(stationarity_residual(&c3).unwrap().abs() < 1e-15);
        }
        let sing = StationarityCase::LeafTwoWitnesses { alpha: PI / 2.0, beta: 0.1, delta: 0.2 };
        assert_eq!(stationarity_residual(&sing), Err(Error::SingularFormula));
        let sing = StationarityCase::BendTwoWitnesses { alpha: 0.0, beta: 0.1, gamma: 0.2, delta: 0.2 };
        assert_eq!(stationarity_residual(&sing), Err(Error::SingularFormula));
    }

    #[test]
    fn symmetric_two_leaves_have_equal_derivatives() {
        // unit circle, witness at the top, two leaves symmetric about the y axis
        let m = CompactSetModel::circle(p(0.0, 0.0), 1.0).unwrap();
        let r = 0.3;
        let y = p(0.0, 1.0);
        let x1 = y + Point::polar(-PI / 2.0 - 0.7) * r;
        let x2 = y + Point::polar(-PI / 2.0 + 0.7) * r;
        let net = Network::polyline(&[x1, x1 * 0.5 + p(-0.1, -0.3), x2 * 0.5 + p(0.1, -0.3), x2]).unwrap();
        let s = SampleNet::exact(vec![y]);
        let cls = classify_energetic(&net, &s, r, 1e-9).unwrap();
        let (rep, contacts) = check_equal_derivatives(&net, &cls, &m, y, DerivativeOptions::default()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(contacts.len(), 2);
        assert!(contacts.iter().all(|c| c.case.number() == 1));

        let sq = CompactSetModel::rectangle(p(-1.0, 0.0), 2.0, 1.0).unwrap();
        let corner = p(1.0, 1.0);
        assert!(matches!(
            check_equal_derivatives(&net, &cls, &sq, corner, DerivativeOptions::default()),
            Err(Error::UnknownCase(_))
        ));
    }

    /// Oracle: local length after moving the witness by arc length `h` on a
    /// circle of radius `big_r` centred at the origin.
    fn moved(y_angle: f64, big_r: f64, h: f64) -> Point {
        Point::polar(y_angle + h / big_r) * big_r
    }

    fn leaf_length(z: Point, y: Point, r: f64) -> f64 {
        z.dist(y) - r
    }

    fn bend_length(z1: Point, z2: Point, y: Point, r: f64, guess: f64) -> f64 {
        golden_section(
            |t| {
                let x = y + Point::polar(t) * r;
                z1.dist(x) + z2.dist(x)
            },
            guess - 1.0,
            guess + 1.0,
            1e-13,
        )
        .1
    }

    /// Leaf end constrained to both disks: the lower intersection point of the circles.
    fn two_witness_leaf(y1: Point, y2: Point, r: f64, below: Point) -> Point {
        let mid = y1.midpoint(y2);
        let half = y1.dist(y2) / 2.0;
        let h = (r * r - half * half).sqrt();
        let nrm = (y2 - y1).perp().normalized().unwrap();
        let (a, b) = (mid + nrm * h, mid - nrm * h);
        if a.dist(below) < b.dist(below) {
            a
        } else {
            b
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn case1_matches_finite_difference(big_r in 1.0..4.0f64, r in 0.05..0.4f64, ya in -PI..PI, zoff in -0.6..0.6f64, zd in 0.3..0.9f64) {
                let y = Point::polar(ya) * big_r;
                let z = y + Point::polar(ya + PI + zoff) * (r + zd);
                let x = y + (z - y).normalized().unwrap() * r;
                let h = 1e-6;
                let fd = (leaf_length(z, moved(ya, big_r, h), r) - leaf_length(z, moved(ya, big_r, -h), r)) / (2.0 * h);
                let l = Point::polar(ya).perp();
                let formula = stationarity_residual(&StationarityCase::Leaf { alpha: unsigned_angle(y - x, l) }).unwrap();
                prop_assert!((fd - formula).abs() < 1e-4, "fd {fd} formula {formula}");
            }

            #[test]
            fn case2_matches_finite_difference(big_r in 1.5..4.0f64, r in 0.05..0.4f64, ya in -PI..PI, tilt in -0.5..0.5f64, half in 1.1..1.5f64, arm in 0.3..0.8f64) {
                let y = Point::polar(ya) * big_r;
                // contact direction from y, and arms symmetric about the contact normal
                let t0 = ya + PI + tilt;
                let x = y + Point::polar(t0) * r;
                let z1 = x + Point::polar(t0 + half) * arm;
                let z2 = x + Point::polar(t0 - half) * arm;
                let guess = t0;
                let h = 1e-5;
                let fd = (bend_length(z1, z2, moved(ya, big_r, h), r, guess) - bend_length(z1, z2, moved(ya, big_r, -h), r, guess)) / (2.0 * h);
                let l = Point::polar(ya).perp();
                let case = StationarityCase::Bend { alpha: unsigned_angle(y - x, l), branch: unsigned_angle(z1 - x, z2 - x) };
                let formula = stationarity_residual(&case).unwrap();
                prop_assert!((fd - formula).abs() < 1e-4, "fd {fd} formula {formula}");
            }

            #[test]
            fn cases3_and_4_match_finite_difference(alpha in 0.2..1.3f64, delta in -1.0..1.0f64, b1 in 0.2..2.9f64, b2 in 0.2..2.9f64, arm in 0.3..1.0f64) {
                let r = 1.0;
                let y1 = Point::new(-r * alpha.cos(), 0.0);
                let y2 = Point::new(r * alpha.cos(), 0.0);
                let x = Point::new(0.0, r * alpha.sin());
                // neighbours below-ish so that x - z points at angle beta
                let z1 = x - Point::polar(b1) * arm;
                let z2 = x - Point::polar(b2) * arm;
                let v = Point::new(delta.cos(), -delta.sin());
                let h = 1e-6;
                let len3 = |t: f64| two_witness_leaf(y1 + v * t, y2, r, x).dist(z1);
                let len4 = |t: f64| { let q = two_witness_leaf(y1 + v * t, y2, r, x); q.dist(z1) + q.dist(z2) };
                let fd3 = (len3(h) - len3(-h)) / (2.0 * h);
                let fd4 = (len4(h) - len4(-h)) / (2.0 * h);
                let f3 = stationarity_residual(&StationarityCase::LeafTwoWitnesses { alpha, beta: b1, delta }).unwrap();
                let f4 = stationarity_residual(&StationarityCase::BendTwoWitnesses { alpha, beta: b1, gamma: b2, delta }).unwrap();
                prop_assert!((fd3 - f3).abs() < 1e-4, "fd {fd3} formula {f3}");
                prop_assert!((fd4 - f4).abs() < 1e-4, "fd {fd4} formula {f4}");
            }

            #[test]
            fn turn_is_additive(pts in prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 4..10), cut in any::<prop::sample::Index>()) {
                let pts: Vec<Point> = pts.into_iter().map(|(x, y)| Point::new(x, y)).collect();
                let mut b = crate::network::NetworkBuilder::new().with_merge_tol(1e-3);
                let ids: Vec<usize> = pts.iter().map(|&q| b.add_point(q)).collect();
                let mut dedup = ids.clone();
                dedup.dedup();
                let mut seen = std::collections::HashSet::new();
                if !dedup.iter().all(|i| seen.insert(*i)) || dedup.len() < 4 { return Ok(()); }
                for w in dedup.windows(2) { b.add_edge(w[0], w[1]); }
                let Ok(net) = b.build() else { return Ok(()) };
                let k = 1 + cut.index(dedup.len() - 2);
                let whole = turn(&net, &PathTrace::new(&net, dedup.clone()).unwrap());
                let p1 = PathTrace::new(&net, dedup[..=k].to_vec()).unwrap();
                let p2 = PathTrace::new(&net, dedup[k..].to_vec()).unwrap();
                let (a, bb, c) = (net.vertex(dedup[k - 1]), net.vertex(dedup[k]), net.vertex(dedup[k + 1]));
                let junction = signed_angle(bb - a, c - bb);
                prop_assert!((whole - (turn(&net, &p1) + turn(&net, &p2) + junction)).abs() < 1e-12);
            }

            #[test]
            fn density_tends_to_order(pts in prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 2..8), pick in any::<prop::sample::Index>(), tpar in 0.1..0.9f64) {
                let pts: Vec<Point> = pts.into_iter().map(|(x, y)| Point::new(x, y)).collect();
                let Ok(net) = Network::polyline(&pts) else { return Ok(()) };
                let degrees = net.degrees();
                let v = pick.index(net.vertices().len());
                let local = net.adjacency()[v].iter().map(|&u| net.vertex(u).dist(net.vertex(v))).fold(f64::INFINITY, f64::min);
                // other edges must stay away from the vertex for the limit to be visible
                let clear = (0..net.edges().len()).filter(|&e| !net.edges()[e].contains(&v)).map(|e| {
                    let (a, b) = net.segment(e);
                    crate::geometry::dist_point_segment(net.vertex(v), a, b)
                }).fold(f64::INFINITY, f64::min);
                let eps = 1e-3 * local;
                if clear > eps {
                    prop_assert!((ahlfors_density(&net, net.vertex(v), eps) - degrees[v] as f64).abs() < 1e-6);
                }
                let (a, b) = net.segment(0);
                let mid = a.lerp(b, tpar);
                let eps = 1e-3 * a.dist(b);
                let clear = (1..net.edges().len()).map(|e| { let (c, d) = net.segment(e); crate::geometry::dist_point_segment(mid, c, d) }).fold(f64::INFINITY, f64::min);
                if clear > eps {
                    prop_assert!((ahlfors_density(&net, mid, eps) - 2.0).abs() < 1e-6);
                }
            }

            #[test]
            fn passing_angles_implies_degree_at_most_three(k in 1usize..7, rot in 0.0..6.3f64, jitter in prop::collection::vec(-0.3..0.3f64, 7)) {
                let mut verts = vec![Point::new(0.0, 0.0)];
                for i in 0..k {
                    verts.push(Point::polar(rot + 2.0 * PI * i as f64 / k as f64 + jitter[i]));
                }
                let edges = (1..=k).map(|i| [0, i]).collect();
                let Ok(net) = Network::new(verts, edges) else { return Ok(()) };
                if check_angles(&net, DEFAULT_TOL_ANGLE).passed() {
                    prop_assert!(net.degrees().iter().all(|&d| d <= 3));
                }
            }
        }
    }
}
