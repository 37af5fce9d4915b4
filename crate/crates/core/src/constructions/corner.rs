use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{unsigned_angle, Point};
use crate::mset::CompactSetModel;
use crate::network::Network;

use super::ConstructionResult;

/// Polyline with infinitely many corner points, truncated at depth `k`.
#[derive(Debug, Clone)]
pub struct CornerExample {
    /// Vertices `A_1 … A_k` on the circle, in order.
    pub vertices: Vec<Point>,
    /// Witnesses `V_0 … V_k`; `V_i` is the witness of `A_i` for `i ≥ 1`.
    pub witnesses: Vec<Point>,
    pub result: ConstructionResult,
}

/// Points `A_1 … A_k` on a circle of radius `big_r` with `|A_1 A_2| = r / n`
/// and every following chord half the previous one, turning clockwise. The
/// circle is placed so that the limit point `A_∞` is the origin, which keeps
/// the coordinates of the short chords accurate. The witnesses are:
/// `V_0` on the extension of `A_2 A_1` beyond `A_1`, `V_1` on the outward
/// normal at `A_1`, `V_i` on the external bisector at `A_i`, and `V_k` on the
/// extension of `A_{k-1} A_k` beyond `A_k`; all at distance `r`.
pub fn corner_example(big_r: f64, r: f64, n: usize, k: usize) -> Result<CornerExample> {
    if !(big_r > 0.0 && r > 0.0) || n == 0 || k < 3 {
        return Err(Error::InvalidInput(format!(
            "corner example needs R, r > 0, N ≥ 1, k ≥ 3; got R = {big_r}, r = {r}, N = {n}, k = {k}"
        )));
    }
    let first = r / n as f64;
    if first >= 2.0 * big_r {
        return Err(Error::Precondition(format!("first chord {first} exceeds the diameter {}", 2.0 * big_r)));
    }
    // central angles halve approximately, so the whole sequence spans at most
    // twice the first one
    let step = |c: f64| 2.0 * (c / (2.0 * big_r)).asin();
    let span = 2.0 * step(first);
    if span >= PI / 2.0 {
        return Err(Error::Precondition(format!(
            "halving sequence spans {span} rad of the circle, admissible arc is below π/2"
        )));
    }
    // angular distance of A_i to the limit point, summed from the tail
    let steps: Vec<f64> = (0..k + 60).map(|i| step(first / 2f64.powi(i as i32))).collect();
    let mut rest = vec![0.0; steps.len() + 1];
    for i in (0..steps.len()).rev() {
        rest[i] = rest[i + 1] + steps[i];
    }
    let limit = PI / 2.0 - rest[0];
    let center = -Point::polar(limit) * big_r;
    let vertices: Vec<Point> = rest[..k]
        .iter()
        .map(|&d| Point::polar(limit + d / 2.0 + PI / 2.0) * (2.0 * big_r * (d / 2.0).sin()))
        .collect();
    for w in vertices.windows(3) {
        if unsigned_angle(w[0] - w[1], w[2] - w[1]) <= PI / 2.0 {
            return Err(Error::Precondition("halving sequence produced a non-obtuse corner".into()));
        }
    }

    let unit = |p: Point| p.normalized().expect("distinct vertices");
    let mut witnesses = Vec::with_capacity(k + 1);
    witnesses.push(vertices[0] + unit(vertices[0] - vertices[1]) * r);
    witnesses.push(vertices[0] + unit(vertices[0] - center) * r);
    for w in vertices.windows(3) {
        let bisector = unit(w[1] - w[0]) + unit(w[1] - w[2]);
        witnesses.push(w[1] + unit(bisector) * r);
    }
    witnesses.push(vertices[k - 1] + unit(vertices[k - 1] - vertices[k - 2]) * r);

    let network = Network::polyline(&vertices)?;
    let m = CompactSetModel::points(witnesses.clone())?;
    let result = ConstructionResult::new(network, Some(m), r)
        .with_param("first_chord", first)
        .with_param("center_x", center.x)
        .with_param("center_y", center.y);
    Ok(CornerExample { vertices, witnesses, result })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regularity::check_angles;

    #[test]
    fn chords_halve_and_witnesses_sit_at_r() {
        let ex = corner_example(1.0, 0.1, 100, 12).unwrap();
        assert_eq!(ex.witnesses.len(), 13);
        let center = Point::new(ex.result.param("center_x").unwrap(), ex.result.param("center_y").unwrap());
        for a in &ex.vertices {
            assert!((a.dist(center) - 1.0).abs() < 1e-14);
        }
        let chords: Vec<f64> = ex.vertices.windows(2).map(|w| w[0].dist(w[1])).collect();
        assert!((chords[0] - 1e-3).abs() < 1e-15);
        for c in chords.windows(2) {
            assert!((c[1] / c[0] - 0.5).abs() < 1e-12);
        }
        for v in &ex.witnesses {
            assert!((ex.result.network.distance(*v) - 0.1).abs() < 1e-9);
        }
        for (a, v) in ex.vertices.iter().zip(&ex.witnesses[1..]) {
            assert!((a.dist(*v) - 0.1).abs() < 1e-12);
        }
        assert!(check_angles(&ex.result.network, 1e-6).passed());
        assert!(ex.result.audit(None).unwrap());
    }

    #[test]
    fn rejects_wide_sequences() {
        assert!(corner_example(1.0, 0.1, 100, 2).is_err());
        assert!(corner_example(0.01, 1.0, 1, 5).is_err());
        assert!(corner_example(1.0, 1.9, 1, 5).is_err());
    }
}
