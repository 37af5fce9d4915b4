//! Penalized problem: energy plus λ times (excess) length.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::energy::energy_value;
use crate::error::{Error, Result};
use crate::mset::{CompactSetModel, SampleNet};
use crate::network::Network;

use super::dual::dual_on_stages;
use super::finite::solve_finite;
use super::primal::one_center;
use super::topology::TOPOLOGY_CAP;
use super::{finish_report, SolveOptions, SolveReport};

/// Radii tried on the initial geometric scan.
const SCAN: usize = 12;
/// Bracket width (relative to the largest radius) ending the golden search.
const GOLDEN_TOL: f64 = 1e-7;
const GOLDEN_STEPS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PenaltyMode {
    /// `F + λ·length`.
    Plain,
    /// `F + λ·max(0, length − l)`.
    Hinge { l: f64 },
}

pub fn penalized_objective(n: &Network, s: &SampleNet, lambda: f64, mode: PenaltyMode) -> f64 {
    let f = energy_value(s, n);
    let len = n.length();
    match mode {
        PenaltyMode::Plain => f + lambda * len,
        PenaltyMode::Hinge { l } => f + lambda * (len - l).max(0.0),
    }
}

/// Minimizes the penalized objective on the sample net of mesh `eps`.
///
/// The best network with energy r is the dual solution at r, so the search
/// runs over r: a geometric scan between the mesh and the one-center radius,
/// then golden-section refinement around the best scanned radius. The report
/// carries `r = F_M(T)`.
pub fn solve_penalized(
    m: &CompactSetModel,
    lambda: f64,
    mode: PenaltyMode,
    eps: f64,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidInput(format!("λ must be positive, got {lambda}")));
    }
    if let PenaltyMode::Hinge { l } = mode {
        if !(l >= 0.0 && l.is_finite()) {
            return Err(Error::InvalidInput(format!("hinge length must be non-negative, got {l}")));
        }
    }
    m.validate()?;
    let samples = m.sample(eps)?;
    let (_, center, r_max) = one_center(m)?;
    let single = finish_report(center, r_max, &samples, Some(m), 0, true, opts);
    if r_max == 0.0 {
        return Ok(single);
    }
    let r_min = if samples.mesh > 0.0 { samples.mesh.min(r_max) } else { 1e-3 * r_max };
    let solve = |r: f64| -> Result<(f64, SolveReport)> {
        let rep = if r >= r_max {
            single.clone()
        } else {
            match m {
                CompactSetModel::Points { points } if points.len() <= TOPOLOGY_CAP => solve_finite(points, r, opts)?,
                _ => dual_on_stages(m, std::slice::from_ref(&samples), r, opts, false)?,
            }
        };
        Ok((penalized_objective(&rep.network, &samples, lambda, mode), rep))
    };

    let grid: Vec<f64> =
        (0..SCAN).map(|i| r_min * (r_max / r_min).powf(i as f64 / (SCAN - 1) as f64)).collect();
    let scanned = grid.par_iter().map(|&r| solve(r)).collect::<Result<Vec<_>>>()?;
    let mut best = 0;
    for (i, s) in scanned.iter().enumerate() {
        if s.0 < scanned[best].0 {
            best = i;
        }
    }
    let mut converged = scanned.iter().all(|s| s.1.converged);
    let (mut obj, mut rep) = scanned[best].clone();

    let (mut a, mut b) = (grid[best.saturating_sub(1)], grid[(best + 1).min(SCAN - 1)]);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - g * (b - a);
    let mut x2 = a + g * (b - a);
    let (mut f1, mut r1) = solve(x1)?;
    let (mut f2, mut r2) = solve(x2)?;
    for _ in 0..GOLDEN_STEPS {
        if b - a <= GOLDEN_TOL * r_max {
            break;
        }
        for (f, r) in [(f1, &r1), (f2, &r2)] {
            if f < obj {
                (obj, rep) = (f, r.clone());
            }
        }
        if f1 <= f2 {
            b = x2;
            (x2, f2, r2) = (x1, f1, r1);
            x1 = b - g * (b - a);
            (f1, r1) = solve(x1)?;
        } else {
            a = x1;
            (x1, f1, r1) = (x2, f2, r2);
            x2 = a + g * (b - a);
            (f2, r2) = solve(x2)?;
        }
        converged &= r1.converged && r2.converged;
    }
    for (f, r) in [(f1, r1), (f2, r2)] {
        if f < obj {
            (obj, rep) = (f, r);
        }
    }
    let f = energy_value(&samples, &rep.network);
    let mut out = finish_report(rep.network, f, &samples, Some(m), rep.iterations, converged && rep.converged, opts);
    out.co_optimal = rep.co_optimal;
    Ok(out)
}
