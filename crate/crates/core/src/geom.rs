//! Planar primitives shared by every solver: points, disks, instances,
//! circular arcs and the handful of closed-form constructions built on them.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Relative tolerance for user-facing predicates (containment, tangency,
/// witness validation). Multiplied by the instance diameter.
pub const TAU_REL: f64 = 1e-9;

/// Relative tolerance for low-level numerics (vertex clustering, tangency
/// classification inside arrangements and regions).
pub const EPS_REL: f64 = 1e-12;

/// Angles closer than this are treated as equal; arcs shorter are dropped.
pub const ANGLE_EPS: f64 = 1e-13;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("coordinate or radius is not finite")]
    NonFinite,
    #[error("negative radius {0}")]
    NegativeRadius(f64),
    #[error("instance has no disks")]
    EmptyInstance,
    #[error("circles coincide")]
    Coincident,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at angle `theta`.
    pub fn polar(theta: f64) -> Self {
        Point::new(theta.cos(), theta.sin())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Counterclockwise rotation by a quarter turn.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn angle(self) -> f64 {
        normalize_angle(self.y.atan2(self.x))
    }

    pub fn midpoint(self, o: Point) -> Point {
        Point::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    /// Unit vector in the same direction, or `None` for a (near) zero vector.
    pub fn normalized(self) -> Option<Point> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self * (1.0 / n))
        } else {
            None
        }
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

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    /// Validating constructor.
    pub fn new(center: Point, radius: f64) -> Result<Self, GeomError> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if radius < 0.0 {
            return Err(GeomError::NegativeRadius(radius));
        }
        Ok(Disk { center, radius })
    }

    /// Unchecked constructor for values already known to be valid.
    pub const fn at(x: f64, y: f64, radius: f64) -> Self {
        Disk {
            center: Point::new(x, y),
            radius,
        }
    }

    pub fn point_at(&self, theta: f64) -> Point {
        self.center + Point::polar(theta) * self.radius
    }

    pub fn contains_point(&self, p: Point, tol: f64) -> bool {
        self.center.dist(p) <= self.radius + tol
    }

    /// True when `other` lies inside `self` up to `tol`.
    pub fn contains_disk(&self, other: &Disk, tol: f64) -> bool {
        self.center.dist(other.center) + other.radius <= self.radius + tol
    }

    pub fn intersects(&self, other: &Disk, tol: f64) -> bool {
        self.center.dist(other.center) <= self.radius + other.radius + tol
    }

    pub fn same_as(&self, other: &Disk, tol: f64) -> bool {
        self.center.dist(other.center) <= tol && (self.radius - other.radius).abs() <= tol
    }

    pub fn with_radius(&self, radius: f64) -> Disk {
        Disk {
            center: self.center,
            radius,
        }
    }
}

/// How an instance is pruned before solving.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizationMode {
    /// Drop disks that contain another disk.
    Piercing,
    /// Drop disks contained in another disk.
    Covering,
    Raw,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    disks: Vec<Disk>,
    mode: NormalizationMode,
}

impl Instance {
    pub fn new(disks: Vec<Disk>) -> Result<Self, GeomError> {
        if disks.is_empty() {
            return Err(GeomError::EmptyInstance);
        }
        for d in &disks {
            Disk::new(d.center, d.radius)?;
        }
        Ok(Instance {
            disks,
            mode: NormalizationMode::Raw,
        })
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn mode(&self) -> NormalizationMode {
        self.mode
    }

    pub fn max_radius(&self) -> f64 {
        self.disks.iter().map(|d| d.radius).fold(0.0, f64::max)
    }

    /// Diagonal of the bounding box of the union of disks.
    pub fn diameter(&self) -> f64 {
        let (lo, hi) = bounding_box(&self.disks);
        lo.dist(hi)
    }

    /// Length scale used to turn relative tolerances into absolute ones.
    pub fn scale(&self) -> f64 {
        scale_of(&self.disks)
    }

    /// Absolute predicate tolerance for this instance.
    pub fn tau(&self) -> f64 {
        TAU_REL * self.scale()
    }

    /// Applies the pruning rule of `mode`. Duplicates are always collapsed
    /// to their first occurrence, except in raw mode.
    pub fn normalized(&self, mode: NormalizationMode) -> Instance {
        if mode == NormalizationMode::Raw {
            return Instance {
                disks: self.disks.clone(),
                mode,
            };
        }
        let eps = EPS_REL * self.scale();
        let mut unique: Vec<Disk> = Vec::with_capacity(self.disks.len());
        for d in &self.disks {
            if !unique.iter().any(|u| u.same_as(d, eps)) {
                unique.push(*d);
            }
        }
        let keep: Vec<Disk> = unique
            .iter()
            .enumerate()
            .filter(|&(i, d)| {
                !unique.iter().enumerate().any(|(j, e)| {
                    i != j
                        && match mode {
                            NormalizationMode::Piercing => d.contains_disk(e, eps),
                            NormalizationMode::Covering => e.contains_disk(d, eps),
                            NormalizationMode::Raw => false,
                        }
                })
            })
            .map(|(_, d)| *d)
            .collect();
        Instance { disks: keep, mode }
    }
}

/// Bounding box `(lower-left, upper-right)` of a nonempty set of disks.
pub fn bounding_box(disks: &[Disk]) -> (Point, Point) {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for d in disks {
        lo.x = lo.x.min(d.center.x - d.radius);
        lo.y = lo.y.min(d.center.y - d.radius);
        hi.x = hi.x.max(d.center.x + d.radius);
        hi.y = hi.y.max(d.center.y + d.radius);
    }
    (lo, hi)
}

/// Positive length scale of a disk family (bounding-box diagonal, or 1 for
/// a degenerate family).
pub fn scale_of(disks: &[Disk]) -> f64 {
    if disks.is_empty() {
        return 1.0;
    }
    let (lo, hi) = bounding_box(disks);
    let d = lo.dist(hi);
    if d > 0.0 && d.is_finite() {
        d
    } else {
        1.0
    }
}

/// Maps an angle to `[0, 2π)`, snapping values within [`ANGLE_EPS`] of 2π to 0.
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta % TAU;
    if t < 0.0 {
        t += TAU;
    }
    if t >= TAU - ANGLE_EPS {
        0.0
    } else {
        t
    }
}

/// Counterclockwise angular distance from `from` to `to`, in `[0, 2π)`.
pub fn ccw_delta(from: f64, to: f64) -> f64 {
    let mut d = (to - from) % TAU;
    if d < 0.0 {
        d += TAU;
    }
    d
}

/// A counterclockwise piece of a circle bounding a region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcSegment {
    pub supporting: Disk,
    pub start_angle: f64,
    /// Counterclockwise angular length in `(0, 2π]`.
    pub sweep: f64,
    /// The bounded region lies inside the supporting circle.
    pub inside: bool,
}

impl ArcSegment {
    pub fn new(supporting: Disk, start_angle: f64, sweep: f64, inside: bool) -> Self {
        ArcSegment {
            supporting,
            start_angle: normalize_angle(start_angle),
            sweep: sweep.clamp(0.0, TAU),
            inside,
        }
    }

    pub fn end_angle(&self) -> f64 {
        normalize_angle(self.start_angle + self.sweep)
    }

    pub fn is_full_circle(&self) -> bool {
        self.sweep >= TAU - ANGLE_EPS
    }

    pub fn start(&self) -> Point {
        self.supporting.point_at(self.start_angle)
    }

    pub fn end(&self) -> Point {
        self.supporting.point_at(self.start_angle + self.sweep)
    }

    pub fn midpoint(&self) -> Point {
        self.supporting.point_at(self.start_angle + 0.5 * self.sweep)
    }

    pub fn contains_angle(&self, theta: f64) -> bool {
        self.is_full_circle() || ccw_delta(self.start_angle, theta) <= self.sweep + ANGLE_EPS
    }

    /// Farthest point of the arc from `p` and its distance.
    pub fn farthest_from(&self, p: Point) -> (Point, f64) {
        farthest_on_arc(&self.supporting, self.start_angle, self.sweep, p)
    }
}

/// Farthest point from `p` on the arc of `circle` starting at `start` with
/// counterclockwise length `sweep`.
pub fn farthest_on_arc(circle: &Disk, start: f64, sweep: f64, p: Point) -> (Point, f64) {
    let away = circle.center - p;
    let target = if away.norm() > 0.0 { away.angle() } else { start };
    if sweep >= TAU - ANGLE_EPS || ccw_delta(start, target) <= sweep {
        let q = circle.point_at(target);
        return (q, p.dist(q));
    }
    let a = circle.point_at(start);
    let b = circle.point_at(start + sweep);
    let (da, db) = (p.dist(a), p.dist(b));
    if da >= db {
        (a, da)
    } else {
        (b, db)
    }
}

/// Intersection points of the boundary circles of `a` and `b`, ordered by
/// angle around `a.center`. Uses a tolerance relative to the pair's size.
pub fn circle_circle_intersection(a: &Disk, b: &Disk) -> Result<Vec<Point>, GeomError> {
    let scale = a.radius + b.radius + a.center.dist(b.center);
    let tol = EPS_REL * if scale > 0.0 { scale } else { 1.0 };
    circle_circle_intersection_tol(a, b, tol)
}

/// As [`circle_circle_intersection`] with an explicit absolute tolerance.
/// Circles whose gap or overlap is within `tol` are reported tangent.
pub fn circle_circle_intersection_tol(
    a: &Disk,
    b: &Disk,
    tol: f64,
) -> Result<Vec<Point>, GeomError> {
    let v = b.center - a.center;
    let d = v.norm();
    if d <= tol {
        if (a.radius - b.radius).abs() <= tol {
            return Err(GeomError::Coincident);
        }
        return Ok(Vec::new());
    }
    let (ra, rb) = (a.radius, b.radius);
    if d > ra + rb + tol || d < (ra - rb).abs() - tol {
        return Ok(Vec::new());
    }
    let u = v * (1.0 / d);
    if (d - (ra + rb)).abs() <= tol {
        // External tangency: the point splits the center gap in ratio ra : rb.
        let t = if ra + rb > 0.0 { ra / (ra + rb) } else { 0.5 };
        return Ok(vec![a.center + v * t]);
    }
    if (d - (ra - rb).abs()).abs() <= tol {
        let p = if ra >= rb {
            a.center + u * ra
        } else {
            a.center - u * ra
        };
        return Ok(vec![p]);
    }
    // Distance from a.center to the radical line along u.
    let along = (d * d + ra * ra - rb * rb) / (2.0 * d);
    let h2 = ra * ra - along * along;
    let h = if h2 > 0.0 { h2.sqrt() } else { 0.0 };
    let base = a.center + u * along;
    let mut pts = vec![base + u.perp() * h, base - u.perp() * h];
    pts.sort_by(|p, q| {
        (*p - a.center)
            .angle()
            .partial_cmp(&(*q - a.center).angle())
            .unwrap()
    });
    Ok(pts)
}

/// Solves `|p - c_i| = w_i + t` for `i = 0, 1, 2`, returning every real
/// solution `(p, t)` with all `w_i + t >= 0`.
///
/// With `w_i = r_i` this is the additively weighted circumcenter of three
/// disks; with `w_i = -r_i` it is the center and radius of a disk internally
/// tangent to all three.
pub fn weighted_circumcenters(centers: [Point; 3], weights: [f64; 3]) -> Vec<(Point, f64)> {
    let origin = centers[0];
    let axis = match (centers[1] - origin).normalized() {
        Some(a) => a,
        None => return Vec::new(),
    };
    // Local frame: c0 at origin, c1 on the positive x axis.
    let to_local = |p: Point| {
        let q = p - origin;
        Point::new(q.dot(axis), q.cross(axis) * -1.0)
    };
    let from_local = |q: Point| origin + axis * q.x + axis.perp() * q.y;
    let c1 = to_local(centers[1]);
    let c2 = to_local(centers[2]);
    let [w0, w1, w2] = weights;
    let a = c1.x;
    // |p|^2 = (w0 + t)^2 minus |p - c_k|^2 = (w_k + t)^2 gives linear equations:
    // 2 c_k . p = |c_k|^2 - w_k^2 + w0^2 - 2 t (w_k - w0)
    let x0 = (a * a - w1 * w1 + w0 * w0) / (2.0 * a);
    let x1 = -(w1 - w0) / a;
    let rhs0 = c2.x * c2.x + c2.y * c2.y - w2 * w2 + w0 * w0;
    let rhs1 = -2.0 * (w2 - w0);
    let scale = a.abs().max(c2.norm());
    let mut out = Vec::new();
    let accept = |t: f64, p: Point, out: &mut Vec<(Point, f64)>| {
        let slack = 1e-12 * scale.max(1.0);
        if weights.iter().all(|w| w + t >= -slack) {
            out.push((from_local(p), t));
        }
    };
    if c2.y.abs() > 1e-12 * scale {
        let y0 = (rhs0 - 2.0 * c2.x * x0) / (2.0 * c2.y);
        let y1 = (rhs1 - 2.0 * c2.x * x1) / (2.0 * c2.y);
        // (x0 + x1 t)^2 + (y0 + y1 t)^2 = (w0 + t)^2
        let qa = x1 * x1 + y1 * y1 - 1.0;
        let qb = 2.0 * (x0 * x1 + y0 * y1 - w0);
        let qc = x0 * x0 + y0 * y0 - w0 * w0;
        for t in solve_quadratic(qa, qb, qc, scale) {
            accept(t, Point::new(x0 + x1 * t, y0 + y1 * t), &mut out);
        }
    } else {
        // Collinear centers: x is pinned by both equations, y by the circle.
        let coef = 2.0 * c2.x * x1 - rhs1;
        if coef.abs() <= 1e-12 * scale.max(1.0) {
            return Vec::new();
        }
        let t = (rhs0 - 2.0 * c2.x * x0) / coef;
        let x = x0 + x1 * t;
        let y2 = (w0 + t) * (w0 + t) - x * x;
        if y2 < -1e-12 * scale * scale {
            return Vec::new();
        }
        let y = y2.max(0.0).sqrt();
        accept(t, Point::new(x, y), &mut out);
        if y > 0.0 {
            accept(t, Point::new(x, -y), &mut out);
        }
    }
    out
}

/// Real roots of `a t^2 + b t + c = 0`, treating tiny `a` as linear and a
/// tiny negative discriminant as a double root.
fn solve_quadratic(a: f64, b: f64, c: f64, scale: f64) -> Vec<f64> {
    let lin_eps = 1e-14;
    if a.abs() <= lin_eps * (b.abs() + lin_eps) {
        if b.abs() > 0.0 {
            return vec![-c / b];
        }
        return Vec::new();
    }
    let disc = b * b - 4.0 * a * c;
    let disc_eps = 1e-13 * (b * b + (4.0 * a * c).abs()).max(1e-300 * scale);
    if disc < -disc_eps {
        return Vec::new();
    }
    if disc <= disc_eps {
        return vec![-b / (2.0 * a)];
    }
    let s = disc.sqrt();
    // Numerically stable pair.
    let q = -0.5 * (b + b.signum() * s);
    let mut roots = if q != 0.0 {
        vec![q / a, c / q]
    } else {
        vec![(-b + s) / (2.0 * a), (-b - s) / (2.0 * a)]
    };
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

/// Points `p` and values `δ >= 0` with `|p - c(d_i)| = r(d_i) + δ` for all three disks.
pub fn aw_circumcenter(d1: &Disk, d2: &Disk, d3: &Disk) -> Vec<(Point, f64)> {
    let sols = weighted_circumcenters(
        [d1.center, d2.center, d3.center],
        [d1.radius, d2.radius, d3.radius],
    );
    let slack = EPS_REL * (d1.radius + d2.radius + d3.radius + d1.center.dist(d2.center)).max(1.0);
    sols.into_iter()
        .filter(|&(_, t)| t >= -slack)
        .map(|(p, t)| (p, t.max(0.0)))
        .collect()
}

/// `max_{x in d} min(|x - c1|, |x - c2|)` with a maximizer.
pub fn farthest_point_in_disk_min2(d: &Disk, c1: Point, c2: Point) -> (Point, f64) {
    let value = |x: Point| x.dist(c1).min(x.dist(c2));
    let antipode = |c: Point| {
        let dir = (d.center - c)
            .normalized()
            .unwrap_or(Point::new(1.0, 0.0));
        d.center + dir * d.radius
    };
    if c1.dist(c2) == 0.0 {
        let q = antipode(c1);
        return (q, q.dist(c1));
    }
    let mut candidates = vec![antipode(c1), antipode(c2)];
    // Where the bisector of c1 c2 crosses the boundary of d.
    let u = (c2 - c1) * (1.0 / c1.dist(c2));
    let m = c1.midpoint(c2);
    let s = (d.center - m).dot(u);
    if s.abs() <= d.radius {
        let h = (d.radius * d.radius - s * s).max(0.0).sqrt();
        let foot = d.center - u * s;
        candidates.push(foot + u.perp() * h);
        candidates.push(foot - u.perp() * h);
    }
    candidates
        .into_iter()
        .map(|q| (q, value(q)))
        .fold((d.center, f64::NEG_INFINITY), |best, cur| {
            if cur.1 > best.1 {
                cur
            } else {
                best
            }
        })
}

/// Circle through two points as diameter.
pub fn circle_from_diameter(a: Point, b: Point) -> Disk {
    Disk {
        center: a.midpoint(b),
        radius: 0.5 * a.dist(b),
    }
}

/// Circumscribed circle of three points, `None` when collinear.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Option<Disk> {
    let (b, c) = (b - a, c - a);
    let den = 2.0 * b.cross(c);
    let scale = b.norm().max(c.norm());
    if den.abs() <= 1e-14 * scale * scale {
        return None;
    }
    let bb = b.dot(b);
    let cc = c.dot(c);
    let ux = (c.y * bb - b.y * cc) / den;
    let uy = (b.x * cc - c.x * bb) / den;
    let center = Point::new(ux, uy);
    Some(Disk {
        center: a + center,
        radius: center.norm(),
    })
}

/// Angle of the tangent direction of a circle, traversed counterclockwise,
/// at the point with polar angle `theta`.
pub fn ccw_tangent_angle(theta: f64) -> f64 {
    normalize_angle(theta + 0.5 * PI)
}

/// Minimizes a unimodal function on `[lo, hi]` by golden-section search,
/// stopping once the bracket is shorter than `tol`. Returns the best
/// abscissa evaluated and its value.
pub fn golden_section_min<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let tol = tol.max(f64::EPSILON * (a.abs() + b.abs()));
    while b - a > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Minimizes a convex function of the plane over an axis-aligned box by
/// nested golden-section search (outer on x, inner on y).
pub fn nested_golden_min<F: Fn(Point) -> f64>(f: F, lo: Point, hi: Point, tol: f64) -> (Point, f64) {
    let inner = |x: f64| golden_section_min(|y| f(Point::new(x, y)), lo.y, hi.y, tol);
    let (x, _) = golden_section_min(|x| inner(x).1, lo.x, hi.x, tol);
    let (y, v) = inner(x);
    (Point::new(x, y), v)
}
