//! Numerical solution of the dual, primal and penalized problems over
//! straight-edge networks.

use serde::{Deserialize, Serialize};

use crate::bounds::model_bounds;
use crate::energy::{energy, EnergyReport};
use crate::mset::{CompactSetModel, SampleNet};
use crate::network::Network;
use crate::regularity::{check_structure, CheckReport, DEFAULT_TOL_ANGLE};

mod barrier;
mod dual;
mod finite;
mod penalized;
mod primal;
mod topology;

pub use barrier::Ball;
pub use dual::solve_dual;
pub use finite::{optimize_fixed_topology, solve_finite, CoOptimal, FixedTopologyResult, CO_OPTIMAL_TOL};
pub use penalized::{penalized_objective, solve_penalized, PenaltyMode};
pub use primal::{diameter, one_center, solve_primal, PRIMAL_TOL};
pub use topology::{enumerate_topologies, enumerate_topologies_capped, Topology, TOPOLOGY_CAP};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SolveOptions {
    /// Sample spacings as fractions of r, strictly decreasing, first ≤ 1.
    pub schedule: Vec<f64>,
    pub seed: u64,
    /// Local search rounds per schedule stage.
    pub max_rounds: usize,
    /// Random vertex perturbations tried per round.
    pub perturbations: usize,
    /// Suboptimality target of the convex polish, relative to the scale.
    pub gap: f64,
    pub tol_angle: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            schedule: vec![0.1, 0.03, 0.01],
            seed: 0,
            max_rounds: 20,
            perturbations: 50,
            gap: 1e-11,
            tol_angle: DEFAULT_TOL_ANGLE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub network: Network,
    pub length: f64,
    /// Radius the network is required to cover M at.
    pub r: f64,
    pub energy: EnergyReport,
    pub iterations: usize,
    pub converged: bool,
    /// Length minus the largest applicable lower bound.
    pub lower_bound_gap: Option<f64>,
    pub checks: CheckReport,
    pub seed: u64,
    /// Distinct optimal networks, filled by the finite solver.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub co_optimal: Vec<CoOptimal>,
}

pub(crate) fn finish_report(
    network: Network,
    r: f64,
    samples: &SampleNet,
    model: Option<&CompactSetModel>,
    iterations: usize,
    converged: bool,
    opts: &SolveOptions,
) -> SolveReport {
    let length = network.length();
    let lower_bound_gap = model
        .and_then(|m| model_bounds(m, r).ok())
        .and_then(|b| b.iter().map(|x| x.value).reduce(f64::max))
        .map(|b| length - b);
    SolveReport {
        energy: energy(samples, &network),
        checks: check_structure(&network, opts.tol_angle),
        length,
        r,
        network,
        iterations,
        converged,
        lower_bound_gap,
        seed: opts.seed,
        co_optimal: Vec::new(),
    }
}
