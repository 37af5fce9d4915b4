use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::mset::CompactSetModel;
use crate::network::NetworkBuilder;
use crate::numeric::golden_section;

use super::{circumscribed_arc, ConstructionResult};

/// One period of the competitor: a spine near the bottom side with a bump
/// at a tripod, a vertical stem, and a second tripod whose two arms reach
/// up to the top side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StadiumBlock {
    pub period: f64,
    /// Height of the spine above the bottom side.
    pub spine_height: f64,
    /// Half-width of the spine bump.
    pub bump: f64,
    /// Heights of the lower and upper tripod centres.
    pub lower_y: f64,
    pub upper_y: f64,
    /// Height of the arm tips.
    pub tip_y: f64,
    pub arm: f64,
    pub length: f64,
    /// Length per unit of core length.
    pub alpha: f64,
}

/// Block geometry for period `p` on a stadium of radius `big_r`, or `None`
/// when the two tripods would cross.
pub fn stadium_block(big_r: f64, r: f64, p: f64) -> Option<StadiumBlock> {
    if !(p > 0.0 && p < 4.0 * r) {
        return None;
    }
    // spine height minimizing the bump cost: hs/d = tan 75°
    let hs = r * (5.0 * PI / 12.0).sin();
    let d = (r * r - hs * hs).sqrt();
    let lower_y = hs + d / 3f64.sqrt();
    let tip_y = 2.0 * big_r - (r * r - p * p / 16.0).sqrt();
    let arm = p / (2.0 * 3f64.sqrt());
    let upper_y = tip_y - arm / 2.0;
    if upper_y < lower_y {
        return None;
    }
    let length = p - 2.0 * d + 2.0 * d / (PI / 6.0).cos() + (upper_y - lower_y) + 2.0 * arm;
    Some(StadiumBlock { period: p, spine_height: hs, bump: d, lower_y, upper_y, tip_y, arm, length, alpha: length / p })
}

/// Block period minimizing the per-unit coefficient.
fn best_period(big_r: f64, r: f64) -> Option<StadiumBlock> {
    let (p, _) = golden_section(
        |p| stadium_block(big_r, r, p).map_or(f64::INFINITY, |b| b.alpha),
        1e-6 * r,
        4.0 * r * (1.0 - 1e-9),
        1e-12 * r,
    );
    stadium_block(big_r, r, p)
}

/// Periodic competitor to the horseshoe on a stadium with `R < 1.75r`.
///
/// The stadium has its core from `(0, R)` to `(L, R)` in the local frame
/// used here, i.e. the model is centred at `(L/2, R)`.
pub fn stadium_competitor(big_r: f64, r: f64, core: f64, eps_arc: f64) -> Result<ConstructionResult> {
    if !(r > 0.0 && big_r > r) {
        return Err(Error::Precondition(format!("need R > r > 0, got R = {big_r}, r = {r}")));
    }
    if big_r >= 1.75 * r {
        return Err(Error::Precondition(format!("competitor needs R < 1.75r, got R/r = {}", big_r / r)));
    }
    let best = best_period(big_r, r).ok_or_else(|| Error::Precondition("no admissible block period".into()))?;
    let lo = (core / best.period).floor() as usize;
    let (n, blk) = [lo, lo + 1]
        .into_iter()
        .filter(|&n| n >= 2)
        .filter_map(|n| stadium_block(big_r, r, core / n as f64).map(|b| (n, b)))
        .min_by(|a, b| a.1.alpha.total_cmp(&b.1.alpha))
        .ok_or_else(|| Error::Precondition(format!("core length {core} fits fewer than 2 blocks")))?;
    let p = core / n as f64;
    let m = CompactSetModel::stadium(Point::new(core / 2.0, big_r), big_r, core)?;

    let mut b = NetworkBuilder::new();
    let left_bottom = Point::new(0.0, r);
    let right_bottom = Point::new(core, r);
    b.add_polyline(&circumscribed_arc(Point::new(0.0, big_r), big_r - r, -PI / 2.0, -PI, eps_arc));
    b.add_polyline(&circumscribed_arc(Point::new(core, big_r), big_r - r, -PI / 2.0, PI, eps_arc));
    let mut prev = left_bottom;
    for i in 0..n {
        let mid = (i as f64 + 0.5) * p;
        let bl = Point::new(mid - blk.bump, blk.spine_height);
        let br = Point::new(mid + blk.bump, blk.spine_height);
        let s = Point::new(mid, blk.lower_y);
        let t = Point::new(mid, blk.upper_y);
        b.add_segment(prev, bl);
        b.add_segment(bl, s);
        b.add_segment(br, s);
        b.add_segment(s, t);
        b.add_segment(t, Point::new(mid - p / 4.0, blk.tip_y));
        b.add_segment(t, Point::new(mid + p / 4.0, blk.tip_y));
        prev = br;
    }
    b.add_segment(prev, right_bottom);
    let network = b.build()?;
    let total = network.length();
    Ok(ConstructionResult::new(network, Some(m), r)
        .with_param("alpha", blk.alpha)
        .with_param("alpha_total", total / core)
        .with_param("block_length", blk.length)
        .with_param("period", p)
        .with_param("optimal_period", best.period)
        .with_param("optimal_alpha", best.alpha)
        .with_param("blocks", n as f64))
}
