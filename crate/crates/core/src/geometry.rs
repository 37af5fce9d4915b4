//! Planar points, rays and angle arithmetic.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Default absolute tolerance for geometric comparisons, in length units.
pub const GEOM_TOL: f64 = 1e-9;

/// A point (or displacement) of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Point {
    fn from(v: [f64; 2]) -> Self {
        Point { x: v[0], y: v[1] }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at angle `theta` (radians, counterclockwise from +x).
    pub fn polar(theta: f64) -> Self {
        Point::new(theta.cos(), theta.sin())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product.
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Unit vector in the same direction; `None` for (near) zero vectors.
    pub fn normalized(self) -> Option<Point> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }

    /// Counterclockwise rotation by 90 degrees.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn rotate(self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        self + (o - self) * t
    }

    pub fn midpoint(self, o: Point) -> Point {
        self.lerp(o, 0.5)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// A half-line with a base point and a unit direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ray {
    pub base: Point,
    pub dir: Point,
}

impl Ray {
    /// Builds a ray, normalizing `dir`. Returns `None` for a zero direction.
    pub fn new(base: Point, dir: Point) -> Option<Ray> {
        dir.normalized().map(|dir| Ray { base, dir })
    }

    /// Ray from `base` through `through`.
    pub fn through(base: Point, through: Point) -> Option<Ray> {
        Ray::new(base, through - base)
    }
}

/// Distance from `p` to the closed segment `[a, b]`.
pub fn dist_point_segment(p: Point, a: Point, b: Point) -> f64 {
    p.dist(closest_on_segment(p, a, b).0)
}

/// Closest point of `[a, b]` to `p` together with its parameter `t` in `[0, 1]`.
pub fn closest_on_segment(p: Point, a: Point, b: Point) -> (Point, f64) {
    let ab = b - a;
    let len2 = ab.norm2();
    if len2 == 0.0 {
        return (a, 0.0);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    (a + ab * t, t)
}

/// Unsigned angle in `[0, π]` between the directions of two rays.
pub fn angle_between(r1: &Ray, r2: &Ray) -> f64 {
    unsigned_angle(r1.dir, r2.dir)
}

/// Unsigned angle in `[0, π]` between two nonzero vectors.
pub fn unsigned_angle(u: Point, v: Point) -> f64 {
    u.cross(v).abs().atan2(u.dot(v))
}

/// Signed angle from `r1` to `r2` in `(-π, π]`, counterclockwise positive.
pub fn signed_turn(r1: &Ray, r2: &Ray) -> f64 {
    signed_angle(r1.dir, r2.dir)
}

/// Signed angle from `u` to `v` in `(-π, π]`.
pub fn signed_angle(u: Point, v: Point) -> f64 {
    let a = u.cross(v).atan2(u.dot(v));
    if a <= -PI {
        PI
    } else if a == -0.0 {
        0.0
    } else {
        a
    }
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_angle(a: f64) -> f64 {
    let mut w = a.rem_euclid(2.0 * PI);
    if w > PI {
        w -= 2.0 * PI;
    }
    w
}

/// Intersection of the circle `|x - c| = r` with the segment `[a, b]`,
/// returned as parameters in `[0, 1]` sorted ascending.
pub fn circle_segment_params(c: Point, r: f64, a: Point, b: Point) -> Vec<f64> {
    let d = b - a;
    let f = a - c;
    let qa = d.norm2();
    if qa == 0.0 {
        return Vec::new();
    }
    // foot of the perpendicular and half-chord, avoiding the cancellation of
    // the textbook quadratic formula
    let t0 = -f.dot(d) / qa;
    let h2 = (f + d * t0).norm2();
    if h2 > r * r {
        return Vec::new();
    }
    let half = (r * r - h2).sqrt() / qa.sqrt();
    let mut out: Vec<f64> = [t0 - half, t0 + half]
        .into_iter()
        .filter(|t| (0.0..=1.0).contains(t))
        .collect();
    out.dedup();
    out
}

/// Fermat (Torricelli) point of a triangle: the point minimizing the sum of
/// distances to the three vertices. Falls back to the obtuse vertex when an
/// angle is at least 2π/3.
pub fn fermat_point(p: Point, q: Point, r: Point) -> Point {
    let a = q.dist(r);
    let b = p.dist(r);
    let c = p.dist(q);
    let ang = |u: Point, v: Point| unsigned_angle(u, v);
    let (ap, aq, ar) = if a == 0.0 || b == 0.0 || c == 0.0 {
        (0.0, 0.0, 0.0)
    } else {
        (ang(q - p, r - p), ang(p - q, r - q), ang(p - r, q - r))
    };
    let lim = 2.0 * PI / 3.0;
    if a == 0.0 || b == 0.0 {
        return r;
    }
    if c == 0.0 {
        return p;
    }
    if ap >= lim {
        return p;
    }
    if aq >= lim {
        return q;
    }
    if ar >= lim {
        return r;
    }
    let third = PI / 3.0;
    let wp = a / (ap + third).sin();
    let wq = b / (aq + third).sin();
    let wr = c / (ar + third).sin();
    (p * wp + q * wq + r * wr) * (1.0 / (wp + wq + wr))
}

/// Smallest closed disk containing all points, as `(center, radius)`.
/// Welzl's move-to-front algorithm on the points in the given order; shuffle
/// first for the expected linear running time.
pub fn min_enclosing_circle(points: &[Point]) -> Option<(Point, f64)> {
    let first = *points.first()?;
    let inside = |c: Point, r: f64, p: Point| p.dist(c) <= r * (1.0 + 1e-12) + 1e-300;
    let mut c = first;
    let mut r = 0.0;
    for i in 1..points.len() {
        if inside(c, r, points[i]) {
            continue;
        }
        c = points[i];
        r = 0.0;
        for j in 0..i {
            if inside(c, r, points[j]) {
                continue;
            }
            c = points[i].midpoint(points[j]);
            r = points[i].dist(points[j]) / 2.0;
            for k in 0..j {
                if inside(c, r, points[k]) {
                    continue;
                }
                (c, r) = circumcircle(points[i], points[j], points[k]).unwrap_or_else(|| {
                    // collinear: the widest pair
                    let pairs = [(points[i], points[j]), (points[i], points[k]), (points[j], points[k])];
                    let (a, b) = pairs.into_iter().max_by(|x, y| x.0.dist(x.1).total_cmp(&y.0.dist(y.1))).unwrap();
                    (a.midpoint(b), a.dist(b) / 2.0)
                });
            }
        }
    }
    Some((c, r))
}

/// Circle through three points, `None` when they are collinear.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Option<(Point, f64)> {
    let (ba, ca) = (b - a, c - a);
    let d = 2.0 * ba.cross(ca);
    if d.abs() <= 1e-300 {
        return None;
    }
    let center = a + Point::new(ca.y * ba.norm2() - ba.y * ca.norm2(), ba.x * ca.norm2() - ca.x * ba.norm2()) * (1.0 / d);
    Some((center, center.dist(a)))
}
