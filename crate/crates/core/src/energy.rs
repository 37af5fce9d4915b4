//! The objective F_M(Σ), coverage predicates and energetic points.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::mset::SampleNet;
use crate::network::{Network, SegmentIndex};

pub const DEFAULT_TOL_ARGMAX: f64 = 1e-7;

/// Absolute slack for rounding in coverage decisions.
pub const COVER_TOL: f64 = 1e-12;

/// F_M(Σ) over a sample net, with the samples attaining it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub value: f64,
    /// Indices of samples whose distance is within the argmax tolerance of `value`.
    pub argmax: Vec<usize>,
    /// Nearest point on Σ for each argmax sample.
    pub nearest: Vec<Point>,
    /// Mesh of the sample net; the true energy is at most `value + mesh`.
    pub mesh: f64,
}

/// Distances from every sample to the network, in sample order.
pub fn sample_distances(s: &SampleNet, n: &Network) -> Vec<f64> {
    let idx = SegmentIndex::new(n, &s.points);
    s.points.par_iter().map(|&y| idx.distance(y)).collect()
}

pub fn energy(s: &SampleNet, n: &Network) -> EnergyReport {
    energy_with_tol(s, n, DEFAULT_TOL_ARGMAX)
}

pub fn energy_with_tol(s: &SampleNet, n: &Network, tol_argmax: f64) -> EnergyReport {
    let idx = SegmentIndex::new(n, &s.points);
    let d: Vec<f64> = s.points.par_iter().map(|&y| idx.distance(y)).collect();
    let value = d.iter().copied().fold(0.0, f64::max);
    let argmax: Vec<usize> = (0..d.len()).filter(|&i| d[i] >= value - tol_argmax).collect();
    let nearest = argmax.iter().map(|&i| idx.nearest(s.points[i]).point).collect();
    EnergyReport { value, argmax, nearest, mesh: s.mesh }
}

/// Max distance only.
pub fn energy_value(s: &SampleNet, n: &Network) -> f64 {
    let idx = SegmentIndex::new(n, &s.points);
    s.points.par_iter().map(|&y| idx.distance(y)).reduce(|| 0.0, f64::max)
}

/// `M ⊂ B̄_r(Σ)` up to the sampling mesh (and `COVER_TOL` of rounding).
pub fn covered(s: &SampleNet, n: &Network, r: f64) -> bool {
    energy_value(s, n) <= r + s.mesh + COVER_TOL
}

/// An energetic point of Σ with its witnesses in M.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergeticPoint {
    pub point: Point,
    /// Network vertex at this point, if any.
    pub vertex: Option<usize>,
    /// Edge containing the point when it is not a vertex.
    pub edge: Option<usize>,
    /// Points y of M with |xy| ≈ r and B_r(y) ∩ Σ ≈ ∅.
    pub witnesses: Vec<Point>,
    pub isolated: bool,
}

/// Splitting of Σ into isolated energetic, non-isolated energetic and Steiner parts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergeticClassification {
    pub points: Vec<EnergeticPoint>,
    /// Per vertex: true when the vertex is not energetic.
    pub steiner_vertices: Vec<bool>,
    /// Per edge: true when no energetic point lies in the open edge.
    pub steiner_edges: Vec<bool>,
    pub r: f64,
    pub tol: f64,
    pub mesh: f64,
    pub isolation_radius: f64,
}

impl EnergeticClassification {
    /// Non-isolated energetic points (E).
    pub fn e(&self) -> Vec<Point> {
        self.points.iter().filter(|p| !p.isolated).map(|p| p.point).collect()
    }

    /// Isolated energetic points (X).
    pub fn x(&self) -> Vec<Point> {
        self.points.iter().filter(|p| p.isolated).map(|p| p.point).collect()
    }

    pub fn at_vertex(&self, v: usize) -> Option<&EnergeticPoint> {
        self.points.iter().find(|p| p.vertex == Some(v))
    }

    /// Energetic points having `y` (within `tol`) as a witness.
    pub fn with_witness(&self, y: Point, tol: f64) -> Vec<&EnergeticPoint> {
        self.points.iter().filter(|p| p.witnesses.iter().any(|w| w.dist(y) <= tol)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    /// Radius under which two energetic points are not isolated from each other.
    /// `None` means `10·tol + 2·mesh`.
    pub isolation_radius: Option<f64>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { isolation_radius: None }
    }
}

pub fn classify_energetic(n: &Network, s: &SampleNet, r: f64, tol: f64) -> Result<EnergeticClassification> {
    classify_energetic_with(n, s, r, tol, ClassifyOptions::default())
}

pub fn classify_energetic_with(
    n: &Network,
    s: &SampleNet,
    r: f64,
    tol: f64,
    opts: ClassifyOptions,
) -> Result<EnergeticClassification> {
    let idx = SegmentIndex::new(n, &s.points);
    let hits: Vec<_> = s.points.par_iter().map(|&y| (y, idx.nearest(y))).collect();
    let value = hits.iter().map(|h| h.1.dist).fold(0.0, f64::max);
    if value > r + s.mesh + COVER_TOL {
        return Err(Error::NotCovered { energy: value, radius: r });
    }
    let isolation_radius = opts.isolation_radius.unwrap_or(10.0 * tol + 2.0 * s.mesh);

    let mut points: Vec<EnergeticPoint> = Vec::new();
    for (y, h) in hits {
        if h.dist < r - tol {
            continue;
        }
        if let Some(p) = points.iter_mut().find(|p| p.point.dist(h.point) <= tol) {
            p.witnesses.push(y);
            continue;
        }
        let vertex = n.vertices().iter().position(|v| v.dist(h.point) <= tol);
        let point = vertex.map_or(h.point, |v| n.vertex(v));
        let edge = if vertex.is_some() { None } else { h.edge };
        points.push(EnergeticPoint { point, vertex, edge, witnesses: vec![y], isolated: true });
    }
    for i in 0..points.len() {
        let pi = points[i].point;
        points[i].isolated =
            !points.iter().enumerate().any(|(j, q)| j != i && q.point.dist(pi) <= isolation_radius);
    }
    let mut steiner_vertices = vec![true; n.vertices().len()];
    let mut steiner_edges = vec![true; n.edges().len()];
    for p in &points {
        if let Some(v) = p.vertex {
            steiner_vertices[v] = false;
        }
        if let Some(e) = p.edge {
            steiner_edges[e] = false;
        }
    }
    Ok(EnergeticClassification { points, steiner_vertices, steiner_edges, r, tol, mesh: s.mesh, isolation_radius })
}
