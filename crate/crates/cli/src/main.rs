use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use maxdist_cli::{
    read_json, read_model, read_network, render_svg, run_bounds, run_check, run_construct, run_solve, write_json,
    ProblemFile, RenderSpec, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_NOT_CONVERGED, EXIT_OK,
};

#[derive(Parser)]
#[command(name = "maxdist", version, about = "Maximal distance minimizers in the plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem file (dual, primal or penalized).
    Solve {
        problem: PathBuf,
        /// Report path, overriding the problem file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// SVG path, overriding the problem file.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Comma-separated sample spacings relative to r.
        #[arg(long, value_delimiter = ',')]
        schedule: Option<Vec<f64>>,
    },
    /// Build a named candidate network.
    Construct {
        /// segment, tripod, horseshoe, stadium-competitor, rectangle, corner-example or tube.
        name: String,
        /// Parameters as name=value.
        #[arg(short, long = "param")]
        params: Vec<String>,
        /// Curve file for the tube construction.
        #[arg(long)]
        curve: Option<PathBuf>,
        /// Construction output (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Bare network output.
        #[arg(long)]
        network: Option<PathBuf>,
        /// Bare model output.
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the checker suite; exits 0 only when every check passes.
    Check {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        r: f64,
        /// Sample mesh of M (default 1e-3 r).
        #[arg(long)]
        mesh: Option<f64>,
        #[arg(long)]
        tol_angle: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lower bounds on the length of a minimizer.
    Bounds {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        r: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a network, optionally with M and its energetic points.
    Render {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long)]
        r: Option<f64>,
        /// Render spec file.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn emit<T: serde::Serialize>(out: Option<&PathBuf>, value: &T) -> Result<()> {
    match out {
        Some(p) => write_json(p, value),
        None => {
            println!("{}", serde_json::to_string_pretty(value)?);
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Solve { problem, report, svg, seed, schedule } => {
            let text = std::fs::read_to_string(&problem)?;
            let mut p = ProblemFile::from_json(&text)?;
            if report.is_some() {
                p.output.report = report;
            }
            if svg.is_some() {
                p.output.svg = svg;
            }
            if let Some(s) = seed {
                p.solver.seed = s;
            }
            if let Some(s) = schedule {
                p.solver.schedule = s;
            }
            let rep = run_solve(&p)?;
            if !rep.converged {
                eprintln!("solver did not converge");
                return Ok(EXIT_NOT_CONVERGED);
            }
            Ok(EXIT_OK)
        }
        Command::Construct { name, params, curve, out, network, model, svg } => {
            let curve = curve.map(|c| read_model(&c)).transpose()?;
            let res = run_construct(&name, &params, curve.as_ref())?;
            emit(out.as_ref(), &res)?;
            if let Some(p) = network {
                write_json(&p, &res.network)?;
            }
            if let (Some(p), Some(m)) = (model, &res.m) {
                write_json(&p, m)?;
            }
            if let Some(p) = svg {
                std::fs::write(p, render_svg(&res.network, res.m.as_ref(), Some(res.r), &RenderSpec::default())?)?;
            }
            Ok(EXIT_OK)
        }
        Command::Check { network, model, r, mesh, tol_angle, out } => {
            let rep = run_check(&read_network(&network)?, &read_model(&model)?, r, mesh, tol_angle)?;
            emit(out.as_ref(), &rep)?;
            for f in rep.failures() {
                eprintln!("failed {} at {:?}: {} (threshold {}, tolerance {})", f.name, f.location, f.value, f.threshold, f.tolerance);
            }
            Ok(if rep.passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Bounds { model, r, out } => {
            emit(out.as_ref(), &run_bounds(&read_model(&model)?, r)?)?;
            Ok(EXIT_OK)
        }
        Command::Render { network, model, r, spec, out } => {
            let n = read_network(&network)?;
            let m = model.map(|p| read_model(&p)).transpose()?;
            let spec: RenderSpec = spec.map(|p| read_json(&p)).transpose()?.unwrap_or_default();
            std::fs::write(out, render_svg(&n, m.as_ref(), r, &spec)?)?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { EXIT_OK as u8 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
