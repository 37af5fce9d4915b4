//! Problem files: the model, one problem mode, solver settings and outputs.

use std::path::PathBuf;

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};

use maxdist::solver::{solve_dual, solve_penalized, solve_primal, PenaltyMode, SolveOptions, SolveReport};
use maxdist::CompactSetModel;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Mode {
    /// Shortest network covering M at radius `r`.
    Dual { r: f64 },
    /// Smallest energy for length at most `l`.
    Primal { l: f64 },
    /// Energy plus `lambda` times (excess) length, on a net of mesh `eps`.
    Penalized { lambda: f64, penalty: PenaltyMode, eps: f64 },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Outputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub m: CompactSetModel,
    pub mode: Mode,
    #[serde(default)]
    pub solver: SolveOptions,
    #[serde(default)]
    pub output: Outputs,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let p: ProblemFile = serde_json::from_str(text)?;
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| -> Result<()> {
            if !(v > 0.0 && v.is_finite()) {
                bail!("{name} must be positive and finite, got {v}");
            }
            Ok(())
        };
        match self.mode {
            Mode::Dual { r } => positive("r", r)?,
            Mode::Primal { l } => {
                if !(l >= 0.0 && l.is_finite()) {
                    bail!("l must be non-negative and finite, got {l}");
                }
            }
            Mode::Penalized { lambda, penalty, eps } => {
                positive("lambda", lambda)?;
                positive("eps", eps)?;
                if let PenaltyMode::Hinge { l } = penalty {
                    if !(l >= 0.0 && l.is_finite()) {
                        bail!("hinge length must be non-negative and finite, got {l}");
                    }
                }
            }
        }
        let s = &self.solver.schedule;
        if s.is_empty() || s[0] > 1.0 || s.iter().any(|e| !(*e > 0.0)) || s.windows(2).any(|w| w[1] >= w[0]) {
            bail!("schedule must be non-empty, strictly decreasing, positive and start at most 1: {s:?}");
        }
        if !(self.solver.gap > 0.0) || !(self.solver.tol_angle > 0.0) {
            bail!("solver gap and tol_angle must be positive");
        }
        Ok(())
    }

    pub fn solve(&self) -> Result<SolveReport> {
        let o = &self.solver;
        let rep = match self.mode {
            Mode::Dual { r } => solve_dual(&self.m, r, o)?,
            Mode::Primal { l } => solve_primal(&self.m, l, o)?,
            Mode::Penalized { lambda, penalty, eps } => solve_penalized(&self.m, lambda, penalty, eps, o)?,
        };
        Ok(rep)
    }
}
