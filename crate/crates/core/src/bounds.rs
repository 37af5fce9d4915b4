//! Closed-form bounds on the length of minimizers.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mset::CompactSetModel;

/// A bound together with the formula that produced it and its inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub value: f64,
    pub formula: String,
    pub inputs: Vec<(String, f64)>,
}

/// Volume of the unit ball in dimension `d`, for `d` in 1..=3.
fn omega(d: u32) -> Result<f64> {
    match d {
        1 => Ok(2.0),
        2 => Ok(PI),
        3 => Ok(4.0 * PI / 3.0),
        _ => Err(Error::UnsupportedDimension(d)),
    }
}

fn check_dim(d: u32) -> Result<()> {
    if d == 2 || d == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(d))
    }
}

/// Upper bound on the volume of the closed `t`-neighbourhood of a curve of
/// the given length: `length · ω_{d-1} t^{d-1} + ω_d t^d`.
pub fn minkowski_volume_upper(length: f64, t: f64, d: u32) -> Result<f64> {
    check_dim(d)?;
    if !(length >= 0.0 && t > 0.0) {
        return Err(Error::InvalidInput(format!("need length ≥ 0 and t > 0, got {length}, {t}")));
    }
    Ok(length * omega(d - 1)? * t.powi(d as i32 - 1) + omega(d)? * t.powi(d as i32))
}

/// Lower bound on the length of a minimizer at level `r` for a set whose
/// `r`-neighbourhood must be covered by a volume `v`:
/// `max(0, (v − ω_d r^d) / (ω_{d-1} r^{d-1}))`.
pub fn lower_bound_volume(v: f64, r: f64, d: u32) -> Result<f64> {
    check_dim(d)?;
    if !(v >= 0.0 && r > 0.0) {
        return Err(Error::InvalidInput(format!("need V ≥ 0 and r > 0, got {v}, {r}")));
    }
    Ok(((v - omega(d)? * r.powi(d as i32)) / (omega(d - 1)? * r.powi(d as i32 - 1))).max(0.0))
}

/// Lower bound `max(0, (P − 2πr) / 2)` for a convex set with perimeter `P`.
pub fn lower_bound_perimeter(p: f64, r: f64) -> f64 {
    ((p - 2.0 * PI * r) / 2.0).max(0.0)
}

/// Both planar lower bounds that apply to the model. Every model is a curve
/// or a finite set, so its area is zero and the volume bound is trivial; the
/// perimeter bound needs a closed convex curve.
pub fn model_bounds(m: &CompactSetModel, r: f64) -> Result<Vec<BoundReport>> {
    let mut out = vec![BoundReport {
        value: lower_bound_volume(0.0, r, 2)?,
        formula: "volume: max(0, (V - pi r^2) / (2 r))".into(),
        inputs: vec![("V".into(), 0.0), ("r".into(), r)],
    }];
    if m.is_closed() && m.is_convex() {
        let p = m.perimeter()?;
        out.push(BoundReport {
            value: lower_bound_perimeter(p, r),
            formula: "perimeter: max(0, (P - 2 pi r) / 2)".into(),
            inputs: vec![("P".into(), p), ("r".into(), r)],
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use proptest::prelude::*;

    #[test]
    fn formula_examples() {
        assert!((minkowski_volume_upper(0.0, 1.0, 2).unwrap() - PI).abs() < 1e-15);
        let stadium = CompactSetModel::stadium(Point::ORIGIN, 0.5, 3.0).unwrap();
        assert!((minkowski_volume_upper(3.0, 0.5, 2).unwrap() - stadium.area().unwrap()).abs() < 1e-12);
        assert!((minkowski_volume_upper(1.0, 1.0, 3).unwrap() - (PI + 4.0 * PI / 3.0)).abs() < 1e-12);
        assert!(minkowski_volume_upper(1.0, 1.0, 4).is_err());
        assert_eq!(lower_bound_volume(PI * 0.01, 0.1, 2).unwrap(), 0.0);
        assert!((lower_bound_volume(4.0, 0.1, 2).unwrap() - (4.0 - 0.01 * PI) / 0.2).abs() < 1e-12);
        assert!((lower_bound_perimeter(2.0 * PI, 0.2) - 0.8 * PI).abs() < 1e-12);
        assert_eq!(lower_bound_perimeter(2.0 * PI * 0.3, 0.3), 0.0);
        assert!((lower_bound_perimeter(6.0, 0.01) - (6.0 - 0.02 * PI) / 2.0).abs() < 1e-15);
        assert!(lower_bound_perimeter(6.0, 0.01) < 6.0 - 0.08473981);
    }

    #[test]
    fn model_bounds_for_convex_and_open_models() {
        let c = CompactSetModel::circle(Point::ORIGIN, 1.0).unwrap();
        let b = model_bounds(&c, 0.2).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].value, 0.0);
        assert!((b[1].value - 0.8 * PI).abs() < 1e-12);
        let open = CompactSetModel::polyline(vec![Point::ORIGIN, Point::new(1.0, 0.0)], false).unwrap();
        assert_eq!(model_bounds(&open, 0.2).unwrap().len(), 1);
    }

    proptest! {
        #[test]
        fn segment_tube_is_equality_case(len in 0.0..10.0f64, r in 0.01..2.0f64) {
            let area = minkowski_volume_upper(len, r, 2).unwrap();
            prop_assert!((lower_bound_volume(area, r, 2).unwrap() - len).abs() < 1e-9 * (1.0 + len));
        }

        #[test]
        fn bounds_non_increasing_in_r(v in 0.0..10.0f64, p in 0.0..20.0f64, r in 0.01..2.0f64, dr in 0.0..1.0f64) {
            prop_assert!(lower_bound_volume(v, r + dr, 2).unwrap() <= lower_bound_volume(v, r, 2).unwrap() + 1e-12);
            prop_assert!(lower_bound_perimeter(p, r + dr) <= lower_bound_perimeter(p, r));
        }
    }
}
