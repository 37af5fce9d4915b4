//! Primal problem: smallest energy reachable with a length budget.

use crate::error::{Error, Result};
use crate::geometry::min_enclosing_circle;
use crate::mset::{CompactSetModel, SampleNet};
use crate::network::Network;

use super::dual::solve_dual;
use super::{finish_report, SolveOptions, SolveReport};

/// Relative tolerance on r for the primal search.
pub const PRIMAL_TOL: f64 = 1e-6;
/// Sample mesh of the single-point solution, relative to the diameter.
const CENTER_MESH: f64 = 1e-4;
const MAX_STEPS: usize = 100;

/// Diameter of M, measured on a fine sample.
pub fn diameter(m: &CompactSetModel) -> Result<f64> {
    let pts = match m {
        CompactSetModel::Points { points } => points.clone(),
        _ => m.sample((m.curve_length() / 2000.0).max(f64::MIN_POSITIVE))?.points,
    };
    let mut d: f64 = 0.0;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            d = d.max(p.dist(*q));
        }
    }
    Ok(d)
}

/// Best single point: the centre of the smallest disk holding a fine
/// sample of M, with its radius.
pub fn one_center(m: &CompactSetModel) -> Result<(SampleNet, Network, f64)> {
    let diam = diameter(m)?;
    let samples = if diam > 0.0 { m.sample(CENTER_MESH * diam)? } else { m.sample(1.0)? };
    let (c, rad) = min_enclosing_circle(&samples.points)
        .ok_or_else(|| Error::InvalidInput("M has no points".into()))?;
    Ok((samples, Network::single(c), rad))
}

/// Network of length at most `l` with (approximately) minimal energy,
/// found as the smallest r whose dual solution fits the budget.
pub fn solve_primal(m: &CompactSetModel, l: f64, opts: &SolveOptions) -> Result<SolveReport> {
    if !(l >= 0.0 && l.is_finite()) {
        return Err(Error::InvalidInput(format!("length budget must be non-negative, got {l}")));
    }
    m.validate()?;
    let (samples, single, rad) = one_center(m)?;
    let single = finish_report(single, rad, &samples, Some(m), 0, true, opts);
    if l == 0.0 || rad == 0.0 {
        return Ok(single);
    }
    let tol = PRIMAL_TOL * diameter(m)?;

    // feasible upper end and infeasible lower end
    let mut hi = (rad, -l, single);
    let mut lo = None;
    let mut r = rad / 2.0;
    while r > tol {
        let rep = solve_dual(m, r, opts)?;
        if rep.length <= l {
            hi = (r, rep.length - l, rep);
            r /= 2.0;
        } else {
            lo = Some((r, rep.length - l));
            break;
        }
    }
    let Some(mut lo) = lo else {
        return Ok(hi.2);
    };

    // Illinois false position, falling back to bisection
    let mut side = 0i8;
    let mut steps = 0;
    while hi.0 - lo.0 > tol && steps < MAX_STEPS {
        steps += 1;
        let w = hi.0 - lo.0;
        let mut r = (lo.0 * hi.1 - hi.0 * lo.1) / (hi.1 - lo.1);
        if !(r > lo.0 + 0.05 * w && r < hi.0 - 0.05 * w) {
            r = lo.0 + 0.5 * w;
        }
        let rep = solve_dual(m, r, opts)?;
        let g = rep.length - l;
        if g <= 0.0 {
            hi = (r, g, rep);
            if side == 1 {
                lo.1 /= 2.0;
            }
            side = 1;
        } else {
            lo = (r, g);
            if side == -1 {
                hi.1 /= 2.0;
            }
            side = -1;
        }
    }
    let mut rep = hi.2;
    rep.converged &= hi.0 - lo.0 <= tol;
    Ok(rep)
}
