//! Closed-form candidate minimizers used as oracles, initializers and benchmarks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::energy::covered;
use crate::error::Result;
use crate::geometry::Point;
use crate::mset::CompactSetModel;
use crate::network::Network;

mod basic;
mod corner;
mod horseshoe;
mod rectangle;
mod stadium;
mod tube;

pub use basic::{segment_two_balls, tripod};
pub use corner::{corner_example, CornerExample};
pub use horseshoe::{horseshoe, horseshoe_at_gap, horseshoe_unchecked, HorseshoeOptions};
pub use rectangle::{rectangle_candidate, RectangleOptions};
pub use stadium::{stadium_block, stadium_competitor, StadiumBlock};
pub use tube::{tube_curve, TubeOptions};

/// Relative mesh (in units of r) at which constructions are audited.
pub const AUDIT_MESH: f64 = 1e-3;

/// A constructed candidate Σ, with M when the construction defines it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionResult {
    pub network: Network,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<CompactSetModel>,
    pub params: BTreeMap<String, f64>,
    /// Energy level the construction claims to achieve.
    pub r: f64,
}

impl ConstructionResult {
    pub fn new(network: Network, m: Option<CompactSetModel>, r: f64) -> Self {
        ConstructionResult { network, m, params: BTreeMap::new(), r }
    }

    pub fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.into(), value);
        self
    }

    pub fn length(&self) -> f64 {
        self.network.length()
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.get(name).copied()
    }

    /// Coverage audit of `m` (or the construction's own M) at mesh `AUDIT_MESH·r`.
    pub fn audit(&self, m: Option<&CompactSetModel>) -> Result<bool> {
        let m = m.or(self.m.as_ref()).ok_or_else(|| {
            crate::error::Error::Precondition("no model to audit the construction against".into())
        })?;
        let net = m.sample(AUDIT_MESH * self.r)?;
        Ok(covered(&net, &self.network, self.r))
    }
}

/// Polygon circumscribed about an arc of radius `radius`: the end points lie
/// on the arc and every edge is tangent to it, so the polygon stays within
/// `eps_arc` outside the arc.
pub fn circumscribed_arc(center: Point, radius: f64, start: f64, sweep: f64, eps_arc: f64) -> Vec<Point> {
    let hmax = (radius / (radius + eps_arc)).acos().max(1e-6);
    let n = ((sweep.abs() / (2.0 * hmax)).ceil() as usize).max(1);
    let h = sweep / (2.0 * n as f64);
    let mut out = Vec::with_capacity(n + 2);
    out.push(center + Point::polar(start) * radius);
    for i in 0..n {
        out.push(center + Point::polar(start + (2 * i + 1) as f64 * h) * (radius / h.cos()));
    }
    out.push(center + Point::polar(start + sweep) * radius);
    out
}
