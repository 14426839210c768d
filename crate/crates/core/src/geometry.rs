//! Planar point and segment primitives, with gradients where the solver
//! needs them.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Point {
    fn from(a: [f64; 2]) -> Self {
        Point { x: a[0], y: a[1] }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    #[inline]
    pub fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }

    #[inline]
    pub fn scale(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        self.sub(o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Unit vector at angle `theta`.
    pub fn polar(theta: f64) -> Point {
        Point::new(theta.cos(), theta.sin())
    }

    /// Rotation by `theta` about the origin.
    pub fn rotated(self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

/// Twice the signed area of `a, b, c`.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    b.sub(a).cross(c.sub(a))
}

/// Distance from `p` to segment `ab` and the parameter of the closest point.
pub fn point_segment(p: Point, a: Point, b: Point) -> (f64, f64) {
    let ab = b.sub(a);
    let len2 = ab.dot(ab);
    let t = if len2 > 0.0 {
        (p.sub(a).dot(ab) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = a.add(ab.scale(t));
    (p.dist(q), t)
}

/// Distance from `p` to segment `ab` with its gradient with respect to
/// `p`, `a` and `b`. The clamped closest-point parameter drops out of the
/// derivative because it minimises the distance.
pub fn point_segment_grad(p: Point, a: Point, b: Point) -> (f64, [Point; 3]) {
    let (d, t) = point_segment(p, a, b);
    if d == 0.0 {
        return (0.0, [Point::default(); 3]);
    }
    let q = a.add(b.sub(a).scale(t));
    let u = p.sub(q).scale(1.0 / d);
    (d, [u, u.scale(-(1.0 - t)), u.scale(-t)])
}

/// Distance from `p` to the infinite line through `c` and `d`, with gradient
/// with respect to `p`, `c`, `d`.
pub fn line_distance_grad(p: Point, c: Point, d: Point) -> (f64, [Point; 3]) {
    let dc = d.sub(c);
    let pc = p.sub(c);
    let len = dc.norm();
    let area = dc.cross(pc);
    let h = area.abs() / len;
    let s = area.signum();
    // d(area)/dp, d(area)/dd; d(area)/dc is minus their sum.
    let da_dp = Point::new(-dc.y, dc.x);
    let da_dd = Point::new(pc.y, -pc.x);
    let da_dc = da_dp.add(da_dd).scale(-1.0);
    let dl_dd = dc.scale(1.0 / len);
    let dl_dc = dl_dd.scale(-1.0);
    let g = |da: Point, dl: Point| da.scale(s / len).sub(dl.scale(area.abs() / (len * len)));
    (h, [g(da_dp, Point::default()), g(da_dc, dl_dc), g(da_dd, dl_dd)])
}

/// Whether the open segments `ab` and `cd` cross at a single interior point.
pub fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 * o2 < 0.0 && o3 * o4 < 0.0
}

/// Euclidean distance between closed segments `ab` and `cd`.
pub fn segment_distance(a: Point, b: Point, c: Point, d: Point) -> f64 {
    if segments_cross(a, b, c, d) {
        return 0.0;
    }
    point_segment(a, c, d)
        .0
        .min(point_segment(b, c, d).0)
        .min(point_segment(c, a, b).0)
        .min(point_segment(d, a, b).0)
}

/// Angle in `[0, pi]` between vectors `u` and `v`.
pub fn angle_between(u: Point, v: Point) -> f64 {
    u.cross(v).abs().atan2(u.dot(v))
}
