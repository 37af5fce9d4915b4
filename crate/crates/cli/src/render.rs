//! SVG figures of M, Σ, the balls around witnesses and the energetic points.

use std::fmt::Write;

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};

use maxdist::energy::classify_energetic;
use maxdist::{CompactSetModel, Network, Point};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Layers {
    pub model: bool,
    pub network: bool,
    /// Balls `B_r(y)` around the witnesses of energetic points.
    pub balls: bool,
    pub energetic: bool,
    /// Segments from energetic points to their witnesses.
    pub correspondences: bool,
}

impl Default for Layers {
    fn default() -> Self {
        Layers { model: true, network: true, balls: true, energetic: true, correspondences: true }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RenderSpec {
    pub width: f64,
    pub height: f64,
    /// Blank border in pixels.
    pub margin: f64,
    pub stroke_network: f64,
    pub stroke_model: f64,
    pub stroke_aux: f64,
    /// Radius of point markers in pixels.
    pub marker: f64,
    /// Sample mesh for energetic classification, relative to r.
    pub mesh: f64,
    pub layers: Layers,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 800.0,
            height: 800.0,
            margin: 20.0,
            stroke_network: 2.0,
            stroke_model: 1.0,
            stroke_aux: 0.5,
            marker: 3.0,
            mesh: 1e-3,
            layers: Layers::default(),
        }
    }
}

impl RenderSpec {
    pub fn validate(&self) -> Result<()> {
        let dims = [self.width, self.height, self.stroke_network, self.stroke_model, self.stroke_aux, self.marker, self.mesh];
        if dims.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
            bail!("render dimensions, strokes, marker and mesh must be positive");
        }
        if !(self.margin >= 0.0) || 2.0 * self.margin >= self.width.min(self.height) {
            bail!("margin {} does not fit the canvas", self.margin);
        }
        Ok(())
    }
}

/// Polylines tracing M, one per smooth piece; isolated points for finite sets.
fn model_polylines(m: &CompactSetModel) -> Vec<Vec<Point>> {
    if let CompactSetModel::Points { points } = m {
        return points.iter().map(|p| vec![*p]).collect();
    }
    m.pieces()
        .iter()
        .map(|pc| {
            let k = match pc {
                maxdist::mset::Piece::Segment(..) => 1,
                maxdist::mset::Piece::Arc { sweep, .. } => ((sweep.abs() / 0.01).ceil() as usize).max(2),
            };
            (0..=k).map(|i| pc.at(i as f64 / k as f64)).collect()
        })
        .collect()
}

struct Frame {
    lo: Point,
    scale: f64,
    height: f64,
    margin: f64,
}

impl Frame {
    fn x(&self, p: Point) -> f64 {
        self.margin + (p.x - self.lo.x) * self.scale
    }

    fn y(&self, p: Point) -> f64 {
        self.height - self.margin - (p.y - self.lo.y) * self.scale
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// SVG 1.1 document with one `path` element per network edge, grouped by layer.
pub fn render_svg(n: &Network, m: Option<&CompactSetModel>, r: Option<f64>, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    let curves = m.map(model_polylines).unwrap_or_default();
    let cls = match (m, r) {
        (Some(m), Some(r)) if spec.layers.balls || spec.layers.energetic || spec.layers.correspondences => {
            let s = m.sample(spec.mesh * r)?;
            Some(classify_energetic(n, &s, r, 1e-9 * r)?)
        }
        _ => None,
    };

    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut grow = |p: Point, pad: f64| {
        lo = Point::new(lo.x.min(p.x - pad), lo.y.min(p.y - pad));
        hi = Point::new(hi.x.max(p.x + pad), hi.y.max(p.y + pad));
    };
    n.vertices().iter().for_each(|p| grow(*p, 0.0));
    curves.iter().flatten().for_each(|p| grow(*p, 0.0));
    if let (Some(c), Some(r)) = (&cls, r) {
        if spec.layers.balls {
            c.points.iter().flat_map(|p| &p.witnesses).for_each(|y| grow(*y, r));
        }
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y);
    let span = if span > 0.0 { span } else { 1.0 };
    let scale = ((spec.width - 2.0 * spec.margin) / span).min((spec.height - 2.0 * spec.margin) / span);
    let f = Frame { lo, scale, height: spec.height, margin: spec.margin };

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(spec.width),
        h = num(spec.height)
    )?;
    if spec.layers.model && !curves.is_empty() {
        writeln!(out, r#"<g id="model" fill="none" stroke="black" stroke-width="{}">"#, num(spec.stroke_model))?;
        for c in &curves {
            if let [p] = c.as_slice() {
                writeln!(out, r#"<circle cx="{}" cy="{}" r="{}" fill="black"/>"#, num(f.x(*p)), num(f.y(*p)), num(spec.marker))?;
            } else {
                let pts: Vec<String> = c.iter().map(|p| format!("{},{}", num(f.x(*p)), num(f.y(*p)))).collect();
                writeln!(out, r#"<polyline points="{}"/>"#, pts.join(" "))?;
            }
        }
        writeln!(out, "</g>")?;
    }
    if let (Some(c), Some(r)) = (&cls, r) {
        if spec.layers.balls {
            writeln!(out, r#"<g id="balls" fill="none" stroke="gray" stroke-width="{}">"#, num(spec.stroke_aux))?;
            for y in c.points.iter().flat_map(|p| &p.witnesses) {
                writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, num(f.x(*y)), num(f.y(*y)), num(r * scale))?;
            }
            writeln!(out, "</g>")?;
        }
        if spec.layers.correspondences {
            writeln!(out, r#"<g id="correspondences" stroke="gray" stroke-width="{}" stroke-dasharray="4 2">"#, num(spec.stroke_aux))?;
            for p in &c.points {
                for y in &p.witnesses {
                    let (a, b) = (p.point, *y);
                    writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, num(f.x(a)), num(f.y(a)), num(f.x(b)), num(f.y(b)))?;
                }
            }
            writeln!(out, "</g>")?;
        }
    }
    if spec.layers.network {
        writeln!(out, r#"<g id="network" fill="none" stroke="blue" stroke-width="{}" stroke-linecap="round">"#, num(spec.stroke_network))?;
        for e in 0..n.edges().len() {
            let (a, b) = n.segment(e);
            writeln!(out, r#"<path d="M {} {} L {} {}"/>"#, num(f.x(a)), num(f.y(a)), num(f.x(b)), num(f.y(b)))?;
        }
        if n.edges().is_empty() {
            let p = n.vertex(0);
            writeln!(out, r#"<circle cx="{}" cy="{}" r="{}" fill="blue"/>"#, num(f.x(p)), num(f.y(p)), num(spec.marker))?;
        }
        writeln!(out, "</g>")?;
    }
    if let Some(c) = &cls {
        if spec.layers.energetic {
            writeln!(out, r#"<g id="energetic" fill="red">"#)?;
            for p in &c.points {
                writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, num(f.x(p.point)), num(f.y(p.point)), num(spec.marker))?;
            }
            writeln!(out, "</g>")?;
        }
    }
    writeln!(out, "</svg>")?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tripod() -> Network {
        let c = Point::new(0.0, 0.0);
        let arms: Vec<Point> = (0..3).map(|i| Point::polar(2.0 * std::f64::consts::PI * i as f64 / 3.0)).collect();
        Network::new(vec![c, arms[0], arms[1], arms[2]], vec![[0, 1], [0, 2], [0, 3]]).unwrap()
    }

    #[test]
    fn one_path_per_edge() {
        let svg = render_svg(&tripod(), None, None, &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("<path").count(), 3);
        assert!(svg.contains(r#"<g id="network""#));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn layers_with_model() {
        let m = CompactSetModel::points(vec![Point::polar(0.0) * 1.5, Point::polar(2.0) * 1.5]).unwrap();
        let n = Network::polyline(&[Point::polar(0.0), Point::polar(2.0)]).unwrap();
        let svg = render_svg(&n, Some(&m), Some(0.5), &RenderSpec::default()).unwrap();
        for id in ["model", "balls", "correspondences", "network", "energetic"] {
            assert!(svg.contains(&format!(r#"<g id="{id}""#)), "{id}");
        }
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg, render_svg(&n, Some(&m), Some(0.5), &RenderSpec::default()).unwrap());
    }

    #[test]
    fn rejects_bad_spec() {
        let spec = RenderSpec { width: 0.0, ..RenderSpec::default() };
        assert!(render_svg(&tripod(), None, None, &spec).is_err());
        let spec = RenderSpec { margin: 500.0, ..RenderSpec::default() };
        assert!(render_svg(&tripod(), None, None, &spec).is_err());
    }
}
