use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use maxdist::bounds::BoundReport;
use maxdist::constructions::{horseshoe, ConstructionResult, HorseshoeOptions};
use maxdist::regularity::CheckReport;
use maxdist::solver::SolveReport;
use maxdist::{CompactSetModel, Network, Point};
use maxdist_cli::{EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK};
use tempfile::TempDir;

fn maxdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxdist")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Parses a JSON file and checks that re-emitting it reproduces the text.
fn round_trip<T>(p: &Path) -> T
where
    T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug,
{
    let text = fs::read_to_string(p).unwrap();
    let v: T = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again, text);
    assert_eq!(serde_json::from_str::<T>(&again).unwrap(), v);
    v
}

#[test]
fn solve_dual_on_the_circle() {
    let dir = TempDir::new().unwrap();
    let (problem, report, svg) = (path(&dir, "p.json"), path(&dir, "r.json"), path(&dir, "s.svg"));
    let text = format!(
        r#"{{"m": {{"type": "circle", "center": [0.0, 0.0], "radius": 1.0}},
            "mode": {{"kind": "dual", "r": 0.2}},
            "solver": {{"schedule": [0.1, 0.02]}},
            "output": {{"report": {:?}, "svg": {:?}}}}}"#,
        s(&report),
        s(&svg)
    );
    fs::write(&problem, text).unwrap();
    let o = maxdist(&["solve", s(&problem)]);
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    let rep: SolveReport = round_trip(&report);
    let circle = CompactSetModel::circle(Point::ORIGIN, 1.0).unwrap();
    let h = horseshoe(&circle, 0.2, HorseshoeOptions::default()).unwrap();
    assert!((rep.length - h.length()).abs() < 1e-2, "{} vs {}", rep.length, h.length());
    let pic = fs::read_to_string(&svg).unwrap();
    assert_eq!(pic.matches("<path").count(), rep.network.edges().len());
}

#[test]
fn solve_primal_two_points() {
    let dir = TempDir::new().unwrap();
    let (problem, report) = (path(&dir, "p.json"), path(&dir, "r.json"));
    let text = r#"{"m": {"type": "points", "points": [[0.0, 0.0], [4.0, 0.0]]}, "mode": {"kind": "primal", "l": 2.0}}"#;
    fs::write(&problem, text).unwrap();
    let o = maxdist(&["solve", s(&problem), "--report", s(&report)]);
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    let rep: SolveReport = round_trip(&report);
    assert!((rep.r - 1.0).abs() < 1e-5, "{}", rep.r);
    assert!(rep.length <= 2.0);
}

#[test]
fn input_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let bad = path(&dir, "bad.json");
    fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&maxdist(&["solve", s(&bad)])), EXIT_INPUT);
    assert_eq!(code(&maxdist(&["solve", s(&path(&dir, "missing.json"))])), EXIT_INPUT);
    let two_modes = path(&dir, "two.json");
    fs::write(
        &two_modes,
        r#"{"m": {"type": "circle", "center": [0.0, 0.0], "radius": 1.0}, "mode": {"kind": "dual", "r": 0.2, "l": 1.0}}"#,
    )
    .unwrap();
    assert_eq!(code(&maxdist(&["solve", s(&two_modes)])), EXIT_INPUT);
    assert_eq!(code(&maxdist(&["construct", "nonsense"])), EXIT_INPUT);
    assert_eq!(code(&maxdist(&["construct", "rectangle", "-p", "r=-1"])), EXIT_INPUT);
    assert_eq!(code(&maxdist(&["construct", "rectangle", "-p", "q=1"])), EXIT_INPUT);
    assert_eq!(code(&maxdist(&["frobnicate"])), EXIT_INPUT);
}

#[test]
fn construct_rectangle_and_check_it() {
    let dir = TempDir::new().unwrap();
    let (out, rep) = (path(&dir, "rect.json"), path(&dir, "check.json"));
    let o = maxdist(&["construct", "rectangle", "-p", "a=2", "-p", "b=1", "-p", "r=0.01", "--out", s(&out)]);
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    let c: ConstructionResult = round_trip(&out);
    assert_eq!(c.network.edges().len(), 21);
    let o = maxdist(&["check", "--network", s(&out), "--model", s(&out), "--r", "0.01", "--out", s(&rep)]);
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(round_trip::<CheckReport>(&rep).passed());
}

#[test]
fn construct_corner_example_files() {
    let dir = TempDir::new().unwrap();
    let (net, model) = (path(&dir, "sigma.json"), path(&dir, "m.json"));
    let o = maxdist(&["construct", "corner-example", "-p", "N=100", "-p", "k=12", "--network", s(&net), "--model", s(&model)]);
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    let n: Network = round_trip(&net);
    let m: CompactSetModel = round_trip(&model);
    let CompactSetModel::Points { points } = &m else { panic!("{m:?}") };
    assert_eq!(points.len(), 13);
    assert_eq!(n.vertices().len(), 12);
    assert!(n.is_tree());
    let printed: ConstructionResult = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(printed.network, n);
}

#[test]
fn construct_horseshoe_with_svg() {
    let dir = TempDir::new().unwrap();
    let (out, svg) = (path(&dir, "h.json"), path(&dir, "h.svg"));
    let o = maxdist(&["construct", "horseshoe", "-p", "R=1", "-p", "r=0.2", "--out", s(&out), "--svg", s(&svg)]);
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    let c: ConstructionResult = round_trip(&out);
    let pic = fs::read_to_string(&svg).unwrap();
    assert_eq!(pic.matches("<path").count(), c.network.edges().len());
    for id in ["model", "network", "energetic"] {
        assert!(pic.contains(&format!(r#"<g id="{id}""#)), "{id}");
    }
}

#[test]
fn every_construction_runs() {
    for name in maxdist_cli::CONSTRUCTIONS {
        let o = maxdist(&["construct", name]);
        assert_eq!(code(&o), EXIT_OK, "{name}: {}", String::from_utf8_lossy(&o.stderr));
        let c: ConstructionResult = serde_json::from_slice(&o.stdout).unwrap();
        assert!(c.length() > 0.0, "{name}");
    }
}

fn write<T: serde::Serialize>(dir: &TempDir, name: &str, v: &T) -> PathBuf {
    let p = path(dir, name);
    fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p
}

#[test]
fn check_rejects_loops_and_right_angles() {
    let dir = TempDir::new().unwrap();
    let p = Point::new;
    let tri = Network::new(vec![p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.8)], vec![[0, 1], [1, 2], [2, 0]]).unwrap();
    let m = CompactSetModel::points(vec![p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.8)]).unwrap();
    let (n, mf) = (write(&dir, "tri.json", &tri), write(&dir, "m.json", &m));
    assert_eq!(code(&maxdist(&["check", "--network", s(&n), "--model", s(&mf), "--r", "0.1"])), EXIT_CHECK_FAILED);

    let r = 0.1;
    let corner = Network::polyline(&[p(1.0, 0.0), p(0.0, 0.0), p(0.0, 1.0)]).unwrap();
    let d = r / 2f64.sqrt();
    let m = CompactSetModel::points(vec![p(1.0 + r, 0.0), p(-d, -d), p(0.0, 1.0 + r)]).unwrap();
    let (n, mf) = (write(&dir, "corner.json", &corner), write(&dir, "m2.json", &m));
    let out = path(&dir, "rep.json");
    let o = maxdist(&["check", "--network", s(&n), "--model", s(&mf), "--r", "0.1", "--out", s(&out)]);
    assert_eq!(code(&o), EXIT_CHECK_FAILED);
    let rep: CheckReport = round_trip(&out);
    assert!(rep.checks.iter().find(|c| c.name == "covered").unwrap().passed);
    assert!(rep.failures().any(|c| c.name == "min_angle"));
}

#[test]
fn bounds_on_the_circle() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.json", &CompactSetModel::circle(Point::ORIGIN, 1.0).unwrap());
    let out = path(&dir, "b.json");
    assert_eq!(code(&maxdist(&["bounds", "--model", s(&m), "--r", "0.2", "--out", s(&out)])), EXIT_OK);
    let b: Vec<BoundReport> = round_trip(&out);
    assert!(b.iter().any(|b| (b.value - 0.8 * std::f64::consts::PI).abs() < 1e-12));
}

#[test]
fn render_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let out = path(&dir, "h.json");
    assert_eq!(code(&maxdist(&["construct", "horseshoe", "--out", s(&out)])), EXIT_OK);
    let (a, b) = (path(&dir, "a.svg"), path(&dir, "b.svg"));
    for svg in [&a, &b] {
        let o = maxdist(&["render", "--network", s(&out), "--model", s(&out), "--r", "0.2", "--out", s(svg)]);
        assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let spec = path(&dir, "spec.json");
    fs::write(&spec, r#"{"width": -1.0}"#).unwrap();
    let o = maxdist(&["render", "--network", s(&out), "--spec", s(&spec), "--out", s(&a)]);
    assert_eq!(code(&o), EXIT_INPUT);
}
