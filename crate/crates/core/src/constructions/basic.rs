use crate::error::{Error, Result};
use crate::geometry::{fermat_point, unsigned_angle, Point};
use crate::mset::CompactSetModel;
use crate::network::{Network, NetworkBuilder};
use crate::numeric::golden_section;

use super::ConstructionResult;

/// Shortest segment touching both closed balls; a single midpoint when they overlap.
pub fn segment_two_balls(p: Point, q: Point, r: f64) -> Result<ConstructionResult> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::InvalidInput(format!("radius must be >= 0, got {r}")));
    }
    let m = CompactSetModel::points(vec![p, q])?;
    let d = p.dist(q);
    let network = if d <= 2.0 * r {
        Network::single(p.midpoint(q))
    } else {
        let u = (q - p) * (1.0 / d);
        Network::polyline(&[p + u * r, q - u * r])?
    };
    Ok(ConstructionResult::new(network, Some(m), r).with_param("distance", d))
}

/// Shortest tree touching three closed balls of radius `r`.
///
/// With all angles of the triangle below 2π/3 and the Fermat point outside
/// the balls this is the Fermat point joined to the three ball boundaries;
/// otherwise one ball absorbs the branch point and the result is a path.
pub fn tripod(a: Point, b: Point, c: Point, r: f64) -> Result<ConstructionResult> {
    let pts = [a, b, c];
    for i in 0..3 {
        for j in i + 1..3 {
            if pts[i].dist(pts[j]) <= 2.0 * r {
                return Err(Error::Precondition("tripod needs pairwise disjoint balls".into()));
            }
        }
    }
    let m = CompactSetModel::points(pts.to_vec())?;
    let cost = |s: Point| pts.iter().map(|p| (s.dist(*p) - r).max(0.0)).sum::<f64>();
    let f = fermat_point(a, b, c);
    let fermat_ok = pts.iter().all(|p| f.dist(*p) > r);
    let mut best: Option<(f64, Point, Option<usize>)> = None;
    if fermat_ok && (0..3).all(|i| unsigned_angle(pts[(i + 1) % 3] - pts[i], pts[(i + 2) % 3] - pts[i]) < 2.0 * std::f64::consts::PI / 3.0) {
        best = Some((cost(f), f, None));
    }
    for i in 0..3 {
        let (u, v) = (pts[(i + 1) % 3], pts[(i + 2) % 3]);
        let s = best_point_in_disk(pts[i], r, u, v);
        let c = cost(s);
        if best.map_or(true, |b| c < b.0 - 1e-15) {
            best = Some((c, s, Some(i)));
        }
    }
    let (len, s, absorbed) = best.unwrap();
    let mut builder = NetworkBuilder::new();
    let hub = builder.add_point(s);
    for (i, p) in pts.iter().enumerate() {
        if Some(i) == absorbed {
            continue;
        }
        let d = s.dist(*p);
        let tip = s + (*p - s) * ((d - r) / d);
        let t = builder.add_point(tip);
        builder.add_edge(hub, t);
    }
    let network = builder.build()?;
    let mut res = ConstructionResult::new(network, Some(m), r).with_param("steiner_length", len);
    if let Some(i) = absorbed {
        res = res.with_param("absorbed_terminal", i as f64);
    }
    Ok(res)
}

/// Minimizer of `|s − u| + |s − v|` over the closed disk `B̄_r(c)`.
fn best_point_in_disk(c: Point, r: f64, u: Point, v: Point) -> Point {
    let (q, _) = crate::geometry::closest_on_segment(c, u, v);
    if q.dist(c) <= r {
        return q;
    }
    let dir = (q - c).angle();
    let (t, _) = golden_section(
        |t| {
            let s = c + Point::polar(t) * r;
            s.dist(u) + s.dist(v)
        },
        dir - std::f64::consts::FRAC_PI_2,
        dir + std::f64::consts::FRAC_PI_2,
        1e-14,
    );
    c + Point::polar(t) * r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{nelder_mead, NelderMead};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn equilateral(s: f64) -> [Point; 3] {
        [p(0.0, 0.0), p(s, 0.0), p(s / 2.0, s * 3f64.sqrt() / 2.0)]
    }

    /// Grid-refined brute force over the branch point.
    fn brute_tripod(pts: [Point; 3], r: f64) -> f64 {
        let cost = |s: Point| pts.iter().map(|q| (s.dist(*q) - r).max(0.0)).sum::<f64>();
        let (mut lo, mut hi) = crate::network::bounds_of(&pts);
        let mut best = p(0.0, 0.0);
        for _ in 0..40 {
            let mut bv = f64::INFINITY;
            for i in 0..=40 {
                for j in 0..=40 {
                    let s = p(lo.x + (hi.x - lo.x) * i as f64 / 40.0, lo.y + (hi.y - lo.y) * j as f64 / 40.0);
                    let c = cost(s);
                    if c < bv {
                        bv = c;
                        best = s;
                    }
                }
            }
            let half = (hi - lo) * (0.1);
            lo = best - half;
            hi = best + half;
        }
        cost(best)
    }

    #[test]
    fn segment_examples() {
        let s = segment_two_balls(p(0.0, 0.0), p(4.0, 0.0), 1.0).unwrap();
        assert_eq!(s.network.vertices(), &[p(1.0, 0.0), p(3.0, 0.0)]);
        assert_eq!(s.length(), 2.0);
        let d = segment_two_balls(p(0.0, 0.0), p(2.0, 0.0), 1.0).unwrap();
        assert_eq!(d.network.vertices(), &[p(1.0, 0.0)]);
        assert_eq!(d.length(), 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let a = p(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let b = p(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let r = rng.gen_range(0.0..0.4) * a.dist(b);
            let s = segment_two_balls(a, b, r).unwrap();
            assert!((s.length() + 2.0 * r - a.dist(b)).abs() < 1e-12);
            assert!(s.audit(None).unwrap());
        }
    }

    #[test]
    fn tripod_examples() {
        let t = tripod(equilateral(1.0)[0], equilateral(1.0)[1], equilateral(1.0)[2], 0.05).unwrap();
        assert!((t.length() - (3f64.sqrt() - 0.15)).abs() < 1e-12);
        assert!((brute_tripod(equilateral(1.0), 0.05) - (3f64.sqrt() - 0.15)).abs() < 1e-9);
        for s in [0.5, 1.0, 3.0] {
            let e = equilateral(s);
            let t = tripod(e[0], e[1], e[2], 0.0).unwrap();
            assert!((t.length() - s * 3f64.sqrt()).abs() < 1e-12);
            assert!((brute_tripod(e, 0.0) - s * 3f64.sqrt()).abs() < 1e-9);
        }
        let (d, r) = (1.0, 0.05);
        let t = tripod(p(0.0, 0.0), p(d, 0.0), p(2.0 * d, 0.0), r).unwrap();
        assert!((t.length() - (2.0 * d - 2.0 * r)).abs() < 1e-12);
        assert!(t.audit(None).unwrap());
    }

    #[test]
    fn tripod_matches_brute_force_on_random_triangles() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let pts = [0; 3].map(|_| p(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)));
            let dmin = (0..3).map(|i| pts[i].dist(pts[(i + 1) % 3])).fold(f64::INFINITY, f64::min);
            let r = rng.gen_range(0.0..0.45) * dmin;
            let t = tripod(pts[0], pts[1], pts[2], r).unwrap();
            let cost = |x: &[f64]| pts.iter().map(|q| (p(x[0], x[1]).dist(*q) - r).max(0.0)).sum::<f64>();
            let c = (pts[0] + pts[1] + pts[2]) * (1.0 / 3.0);
            let (_, nm) = nelder_mead(cost, &[c.x, c.y], NelderMead { restarts: 8, ..Default::default() });
            assert!((t.length() - nm).abs() < 1e-8, "{} vs {}", t.length(), nm);
            assert!(t.audit(None).unwrap());
        }
    }
}
