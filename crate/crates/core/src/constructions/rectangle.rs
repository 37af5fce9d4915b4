use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{fermat_point, Point};
use crate::mset::CompactSetModel;
use crate::network::{Network, NetworkBuilder};
use crate::numeric::{golden_max, nelder_mead, NelderMead};

use super::ConstructionResult;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectangleOptions {
    /// Nelder–Mead settings for the joint fit of the corner assemblies.
    pub search: NelderMead,
    /// Largest supported `r / min(a, b)`.
    pub max_ratio: f64,
}

impl Default for RectangleOptions {
    fn default() -> Self {
        RectangleOptions {
            search: NelderMead { initial_step: 1e-2, f_tol: 1e-17, x_tol: 1e-13, max_evals: 20000, restarts: 6 },
            max_ratio: 1.0 / 20.0,
        }
    }
}

/// Corner assembly in the frame of a corner at the origin with sides along
/// the positive axes, scaled to r = 1.
///
/// Parameters: `[ψ, q2x, q2y, φ, φ']`. The leaf `Q1 = (cos ψ, sin ψ)` covers
/// the corner, `[Q1 Q2]` covers both sides up to heights `w` and `w'`, and
/// the run ends `K`, `K'` sit at distance 1 from the first uncovered side
/// points. `V` is the Fermat point of `Q2, K, K'`.
#[derive(Debug, Clone, Copy)]
struct Corner {
    q1: Point,
    q2: Point,
    v: Point,
    k: Point,
    k2: Point,
    length: f64,
}

fn reach(p: Point, q: Point, f: impl Fn(Point) -> f64) -> f64 {
    golden_max(|t| f(p.lerp(q, t)), 0.0, 1.0, 1e-15).1.max(f(p)).max(f(q))
}

fn corner(par: &[f64]) -> Corner {
    let (psi, q2, phi, phi2) = (par[0], Point::new(par[1], par[2]), par[3], par[4]);
    let q1 = Point::polar(psi);
    let w = reach(q1, q2, |p| p.y + (1.0 - p.x * p.x).max(0.0).sqrt());
    let w2 = reach(q1, q2, |p| p.x + (1.0 - p.y * p.y).max(0.0).sqrt());
    let k = Point::new(0.0, w) + Point::polar(phi);
    let k2 = Point::new(w2, 0.0) + Point::new(phi2.sin(), phi2.cos());
    let v = fermat_point(q2, k, k2);
    let length = q1.dist(q2) + q2.dist(v) + v.dist(k) + v.dist(k2);
    Corner { q1, q2, v, k, k2, length }
}

/// Length gained by an isolated corner against runs along both sides.
fn corner_excess(par: &[f64]) -> f64 {
    let c = corner(par);
    c.length - c.k.y - c.k2.x
}

struct Layout {
    a: f64,
    b: f64,
}

impl Layout {
    /// Corner assemblies for A1 (gap side) and A2 (plain), in units of r.
    fn total(&self, p: &[f64]) -> f64 {
        let (g, q) = (corner(&p[..5]), corner(&p[5..]));
        let left = g.k.dist(Point::new(q.k.x, self.b - q.k.y));
        let top = self.a - 2.0 * q.k2.x;
        let gap = Point::new(self.a / 2.0, 0.0);
        let bottom = 2.0 * (g.k2.dist(gap) - 1.0);
        if bottom < 0.0 || top < 0.0 {
            return f64::INFINITY;
        }
        2.0 * g.length + 2.0 * q.length + 2.0 * left + top + bottom
    }
}

/// The 21-segment candidate for the rectangle `a × b` at level `r`: three
/// straight runs along the sides, one tripod assembly per corner, and a gap
/// in the middle of side A1A4 closed by two slanted runs.
pub fn rectangle_candidate(a: f64, b: f64, r: f64, opts: RectangleOptions) -> Result<ConstructionResult> {
    if !(a > 0.0 && b > 0.0 && r > 0.0) || r >= opts.max_ratio * a.min(b) {
        return Err(Error::Precondition(format!(
            "rectangle candidate supports 0 < r < {} min(a, b), got r = {r}",
            opts.max_ratio
        )));
    }
    let sym = [PI / 4.0, 0.7072, 0.7072, PI / 24.0, PI / 24.0];
    let (inf, _) = nelder_mead(corner_excess, &sym, opts.search);
    let layout = Layout { a: a / r, b: b / r };
    let mut x0 = inf.clone();
    x0.extend_from_slice(&inf);
    let (x, _) = nelder_mead(|p| layout.total(p), &x0, opts.search);

    let (g, q) = (corner(&x[..5]), corner(&x[5..]));
    let map: [(Corner, fn(Point, f64, f64) -> Point); 4] = [
        (g, |p, _, _| p),
        (q, |p, _, bb| Point::new(p.x, bb - p.y)),
        (q, |p, aa, bb| Point::new(aa - p.x, bb - p.y)),
        (g, |p, aa, _| Point::new(aa - p.x, p.y)),
    ];
    let (aa, bb) = (layout.a, layout.b);
    let scale = |p: Point| p * r;
    let mut builder = NetworkBuilder::new();
    let mut ks = Vec::new();
    for (c, f) in map {
        let t = |p: Point| scale(f(p, aa, bb));
        let ids = [c.q1, c.q2, c.v, c.k, c.k2].map(|p| builder.add_point(t(p)));
        builder.add_edge(ids[0], ids[1]);
        builder.add_edge(ids[1], ids[2]);
        builder.add_edge(ids[2], ids[3]);
        builder.add_edge(ids[2], ids[4]);
        ks.push((t(c.k), t(c.k2)));
    }
    builder.add_segment(ks[0].0, ks[1].0);
    builder.add_segment(ks[3].0, ks[2].0);
    builder.add_segment(ks[1].1, ks[2].1);
    let gap = Point::new(a / 2.0, 0.0);
    for k2 in [ks[0].1, ks[3].1] {
        let end = gap + (k2 - gap).normalized().unwrap() * r;
        builder.add_segment(k2, end);
    }
    let network: Network = builder.build()?;
    let m = CompactSetModel::rectangle(Point::ORIGIN, a, b)?;
    let mut res = ConstructionResult::new(network, Some(m), r)
        .with_param("corner_excess", corner_excess(&inf))
        .with_param("coefficient", (2.0 * (a + b) - layout.total(&x) * r) / r);
    for (i, name) in ["psi", "q2x", "q2y", "phi", "phi2"].iter().enumerate() {
        res = res.with_param(&format!("gap_corner_{name}"), x[i]);
        res = res.with_param(&format!("plain_corner_{name}"), x[5 + i]);
    }
    Ok(res)
}
