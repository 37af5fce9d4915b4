//! Command implementations behind the `maxdist` binary.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;

use maxdist::bounds::{model_bounds, BoundReport};
use maxdist::constructions::{
    corner_example, horseshoe, rectangle_candidate, segment_two_balls, stadium_competitor, tripod, tube_curve,
    ConstructionResult, HorseshoeOptions, RectangleOptions, TubeOptions,
};
use maxdist::regularity::{check_suite, CheckReport, DEFAULT_TOL_ANGLE};
use maxdist::solver::SolveReport;
use maxdist::{CompactSetModel, Network, Point};

pub mod problem;
pub mod render;

pub use problem::{Mode, Outputs, ProblemFile};
pub use render::{render_svg, Layers, RenderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_CONVERGED: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

/// Construction names accepted by `construct`.
pub const CONSTRUCTIONS: [&str; 7] =
    ["segment", "tripod", "horseshoe", "stadium-competitor", "rectangle", "corner-example", "tube"];

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Reads a network from a bare network file or from any file with a
/// `network` field (solve reports, constructions).
pub fn read_network(path: &Path) -> Result<Network> {
    let v: serde_json::Value = read_json(path)?;
    let v = v.get("network").cloned().unwrap_or(v);
    serde_json::from_value(v).with_context(|| format!("no network in {}", path.display()))
}

/// Reads M from a bare model file or from any file with an `m` field.
pub fn read_model(path: &Path) -> Result<CompactSetModel> {
    let v: serde_json::Value = read_json(path)?;
    let v = v.get("m").cloned().unwrap_or(v);
    serde_json::from_value(v).with_context(|| format!("no model in {}", path.display()))
}

/// Solves a problem file and writes its outputs; the report is returned for
/// the exit code.
pub fn run_solve(p: &ProblemFile) -> Result<SolveReport> {
    p.validate()?;
    let rep = p.solve()?;
    match &p.output.report {
        Some(path) => write_json(path, &rep)?,
        None => println!("{}", serde_json::to_string_pretty(&rep)?),
    }
    if let Some(path) = &p.output.svg {
        write_text(path, &render_svg(&rep.network, Some(&p.m), Some(rep.r), &RenderSpec::default())?)?;
    }
    Ok(rep)
}

/// Named parameters with defaults; unknown names are rejected.
pub struct Params {
    values: BTreeMap<String, f64>,
}

impl Params {
    pub fn parse(pairs: &[String]) -> Result<Self> {
        let mut values = BTreeMap::new();
        for pair in pairs {
            let (k, v) = pair.split_once('=').ok_or_else(|| anyhow!("parameter {pair:?} is not name=value"))?;
            let v: f64 = v.trim().parse().with_context(|| format!("parameter {k}"))?;
            if values.insert(k.trim().to_string(), v).is_some() {
                bail!("parameter {k} given twice");
            }
        }
        Ok(Params { values })
    }

    fn take(&mut self, name: &str, default: f64) -> f64 {
        self.values.remove(name).unwrap_or(default)
    }

    fn count(&mut self, name: &str, default: usize) -> Result<usize> {
        let v = self.take(name, default as f64);
        if !(v >= 0.0 && v.fract() == 0.0 && v <= 1e9) {
            bail!("{name} must be a non-negative integer, got {v}");
        }
        Ok(v as usize)
    }

    fn finish(self) -> Result<()> {
        if let Some(k) = self.values.keys().next() {
            bail!("unknown parameter {k}");
        }
        Ok(())
    }
}

/// Circular arc of radius `radius` and length `length`, as an open polyline.
fn arc_curve(radius: f64, length: f64, pieces: usize) -> Result<CompactSetModel> {
    if !(radius > 0.0 && length > 0.0) || pieces == 0 {
        bail!("arc needs positive radius, length and piece count");
    }
    let sweep = length / radius;
    let pts = (0..=pieces).map(|i| Point::polar(sweep * i as f64 / pieces as f64) * radius).collect();
    Ok(CompactSetModel::polyline(pts, false)?)
}

/// Runs a named construction.
pub fn run_construct(name: &str, params: &[String], curve: Option<&CompactSetModel>) -> Result<ConstructionResult> {
    let mut p = Params::parse(params)?;
    let res = match name {
        "segment" => {
            let a = Point::new(p.take("px", 0.0), p.take("py", 0.0));
            let b = Point::new(p.take("qx", 1.0), p.take("qy", 0.0));
            let r = p.take("r", 0.1);
            p.finish()?;
            segment_two_balls(a, b, r)?
        }
        "tripod" => {
            let a = Point::new(p.take("ax", 0.0), p.take("ay", 0.0));
            let b = Point::new(p.take("bx", 1.0), p.take("by", 0.0));
            let c = Point::new(p.take("cx", 0.5), p.take("cy", 3f64.sqrt() / 2.0));
            let r = p.take("r", 0.05);
            p.finish()?;
            tripod(a, b, c, r)?
        }
        "horseshoe" => {
            let (big_r, r, core) = (p.take("R", 1.0), p.take("r", 0.2), p.take("core", 0.0));
            let opts = HorseshoeOptions { eps_arc: p.take("eps_arc", HorseshoeOptions::default().eps_arc), ..Default::default() };
            p.finish()?;
            let m = if core > 0.0 {
                CompactSetModel::stadium(Point::ORIGIN, big_r, core)?
            } else {
                CompactSetModel::circle(Point::ORIGIN, big_r)?
            };
            horseshoe(&m, r, opts)?
        }
        "stadium-competitor" => {
            let (r, eps_arc) = (p.take("r", 1.0), p.take("eps_arc", 1e-7));
            let (big_r, core) = (p.take("R", 1.5 * r), p.take("core", 20.0 * r));
            p.finish()?;
            stadium_competitor(big_r, r, core, eps_arc)?
        }
        "rectangle" => {
            let (a, b, r) = (p.take("a", 2.0), p.take("b", 1.0), p.take("r", 0.01));
            p.finish()?;
            rectangle_candidate(a, b, r, RectangleOptions::default())?
        }
        "corner-example" => {
            let (big_r, r) = (p.take("R", 1.0), p.take("r", 0.1));
            let (n, k) = (p.count("N", 100)?, p.count("k", 12)?);
            p.finish()?;
            corner_example(big_r, r, n, k)?.result
        }
        "tube" => {
            let r = p.take("r", 0.1);
            let arc_step = p.take("arc_step", TubeOptions::default().arc_step);
            let m = match curve {
                Some(c) => c.clone(),
                None => arc_curve(p.take("R", 1.0), p.take("length", 3.0), p.count("pieces", 300)?)?,
            };
            p.finish()?;
            tube_curve(&m, r, TubeOptions { arc_step, ..Default::default() })?
        }
        _ => bail!("unknown construction {name:?}; expected one of {}", CONSTRUCTIONS.join(", ")),
    };
    Ok(res)
}

/// Coverage, structural and energetic-angle checks of `n` against M at `r`.
pub fn run_check(n: &Network, m: &CompactSetModel, r: f64, mesh: Option<f64>, tol_angle: Option<f64>) -> Result<CheckReport> {
    if !(r > 0.0 && r.is_finite()) {
        bail!("r must be positive, got {r}");
    }
    let mesh = mesh.unwrap_or(1e-3 * r);
    if !(mesh > 0.0) {
        bail!("mesh must be positive, got {mesh}");
    }
    Ok(check_suite(n, m, r, mesh, tol_angle.unwrap_or(DEFAULT_TOL_ANGLE))?)
}

pub fn run_bounds(m: &CompactSetModel, r: f64) -> Result<Vec<BoundReport>> {
    if !(r > 0.0 && r.is_finite()) {
        bail!("r must be positive, got {r}");
    }
    Ok(model_bounds(m, r)?)
}
