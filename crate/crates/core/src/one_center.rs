//! Single-center subroutines: LP-type solvers for the weighted one-center,
//! convex regions bounded by circular arcs, crescent covering, and the exact
//! two-center of points.

use std::cmp::Ordering;
use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geom::{
    bounding_box, ccw_delta, farthest_on_arc, nested_golden_min, normalize_angle, scale_of,
    weighted_circumcenters, ArcSegment, Disk, Point, ANGLE_EPS, EPS_REL,
};
use crate::solution::{CoverTag, TwoCenterSolution};

/// Seed used when callers do not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_0f_d15c;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OneCenterError {
    #[error("no constraints to cover")]
    EmptyConstraints,
}

// ---------------------------------------------------------------------------
// LP-type weighted one-center
// ---------------------------------------------------------------------------

/// Minimizes `max_i |p - c_i| + w_i` over the plane. With `w_i = r_i` this is
/// the smallest enclosing disk of disks; with `w_i = -r_i` it is the
/// additively weighted one-center used for intersecting disks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedCenter {
    pub center: Point,
    pub value: f64,
    /// Indices of the constraints tight at the optimum (at most three).
    pub basis: [Option<usize>; 3],
}

impl WeightedCenter {
    pub fn basis_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.basis.iter().flatten().copied()
    }
}

struct LpType<'a> {
    sites: &'a [(Point, f64)],
    tol: f64,
}

impl LpType<'_> {
    fn objective(&self, i: usize, p: Point) -> f64 {
        let (c, w) = self.sites[i];
        p.dist(c) + w
    }

    fn violates(&self, i: usize, b: &WeightedCenter) -> bool {
        self.objective(i, b.center) > b.value + self.tol
    }

    /// Optimum of a set of at most four constraints by exhaustive basis search.
    fn solve_small(&self, set: &[usize]) -> WeightedCenter {
        let mut best: Option<WeightedCenter> = None;
        let consider = |cand: WeightedCenter, best: &mut Option<WeightedCenter>| {
            if set.iter().all(|&k| self.objective(k, cand.center) <= cand.value + self.tol)
                && best.map_or(true, |b| cand.value < b.value)
            {
                *best = Some(cand);
            }
        };
        for (a, &i) in set.iter().enumerate() {
            let (ci, wi) = self.sites[i];
            consider(
                WeightedCenter {
                    center: ci,
                    value: wi,
                    basis: [Some(i), None, None],
                },
                &mut best,
            );
            for (b, &j) in set.iter().enumerate().skip(a + 1) {
                let (cj, wj) = self.sites[j];
                let d = ci.dist(cj);
                if d > 0.0 {
                    let value = 0.5 * (d + wi + wj);
                    if value - wi >= 0.0 && value - wj >= 0.0 {
                        let center = ci + (cj - ci) * ((value - wi) / d);
                        consider(
                            WeightedCenter {
                                center,
                                value,
                                basis: [Some(i), Some(j), None],
                            },
                            &mut best,
                        );
                    }
                }
                for &k in set.iter().skip(b + 1) {
                    let (ck, wk) = self.sites[k];
                    for (center, t) in weighted_circumcenters([ci, cj, ck], [-wi, -wj, -wk]) {
                        consider(
                            WeightedCenter {
                                center,
                                value: t,
                                basis: [Some(i), Some(j), Some(k)],
                            },
                            &mut best,
                        );
                    }
                }
            }
        }
        best.unwrap_or_else(|| {
            // Only reachable through round-off; fall back to the worst single site.
            let i = *set
                .iter()
                .max_by(|&&a, &&b| self.sites[a].1.partial_cmp(&self.sites[b].1).unwrap())
                .unwrap();
            let far = set
                .iter()
                .map(|&k| self.objective(k, self.sites[i].0))
                .fold(f64::NEG_INFINITY, f64::max);
            WeightedCenter {
                center: self.sites[i].0,
                value: far,
                basis: [Some(i), None, None],
            }
        })
    }

    /// Randomized incremental solve with a set of constraints forced to be
    /// tight: a constraint violated by the optimum of its prefix joins the
    /// forced set and the prefix is re-solved.
    fn solve(&self, order: &[usize], forced: &mut Vec<usize>) -> Option<WeightedCenter> {
        let mut b = if forced.is_empty() {
            None
        } else {
            Some(self.solve_small(forced))
        };
        if forced.len() == 3 {
            return b;
        }
        for (pos, &h) in order.iter().enumerate() {
            if b.as_ref().map_or(true, |b| self.violates(h, b)) {
                forced.push(h);
                b = self.solve(&order[..pos], forced);
                forced.pop();
            }
        }
        b
    }
}

/// Weighted one-center of `sites`, each given as `(center, weight)`.
pub fn weighted_one_center(sites: &[(Point, f64)], seed: u64) -> WeightedCenter {
    assert!(!sites.is_empty(), "weighted one-center of an empty set");
    let scale = {
        let (mut lo, mut hi) = (sites[0].0, sites[0].0);
        let mut wmax: f64 = 0.0;
        for &(c, w) in sites {
            lo = Point::new(lo.x.min(c.x), lo.y.min(c.y));
            hi = Point::new(hi.x.max(c.x), hi.y.max(c.y));
            wmax = wmax.max(w.abs());
        }
        (lo.dist(hi) + 2.0 * wmax).max(f64::MIN_POSITIVE)
    };
    let lp = LpType {
        sites,
        tol: EPS_REL * scale,
    };
    let mut order: Vec<usize> = (0..sites.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    lp.solve(&order, &mut Vec::with_capacity(3))
        .expect("nonempty constraint set")
}

pub fn smallest_enclosing_disk_of_disks(disks: &[Disk]) -> Disk {
    smallest_enclosing_disk_of_disks_seeded(disks, DEFAULT_SEED)
}

pub fn smallest_enclosing_disk_of_disks_seeded(disks: &[Disk], seed: u64) -> Disk {
    let sites: Vec<(Point, f64)> = disks.iter().map(|d| (d.center, d.radius)).collect();
    let wc = weighted_one_center(&sites, seed);
    Disk {
        center: wc.center,
        radius: wc.value.max(0.0),
    }
}

/// Point minimizing `max(0, max_i |p - c_i| - r_i)` and that minimum.
pub fn smallest_intersecting_disk(disks: &[Disk]) -> (Point, f64) {
    smallest_intersecting_disk_seeded(disks, DEFAULT_SEED)
}

pub fn smallest_intersecting_disk_seeded(disks: &[Disk], seed: u64) -> (Point, f64) {
    let sites: Vec<(Point, f64)> = disks.iter().map(|d| (d.center, -d.radius)).collect();
    let wc = weighted_one_center(&sites, seed);
    (wc.center, wc.value.max(0.0))
}

pub fn smallest_enclosing_disk_of_points(points: &[Point]) -> Disk {
    let sites: Vec<(Point, f64)> = points.iter().map(|&p| (p, 0.0)).collect();
    let wc = weighted_one_center(&sites, DEFAULT_SEED);
    Disk {
        center: wc.center,
        radius: wc.value.max(0.0),
    }
}

// ---------------------------------------------------------------------------
// Convex regions bounded by circular arcs
// ---------------------------------------------------------------------------

/// Intersection of a family of disks.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexArcRegion {
    Empty,
    /// Intersection of no disks.
    WholePlane,
    /// Degenerate intersection at a single tangency point.
    Point(Point),
    /// Boundary arcs in counterclockwise order.
    Arcs(Vec<ArcSegment>),
}

impl ConvexArcRegion {
    pub fn is_empty(&self) -> bool {
        matches!(self, ConvexArcRegion::Empty)
    }

    pub fn arcs(&self) -> &[ArcSegment] {
        match self {
            ConvexArcRegion::Arcs(a) => a,
            _ => &[],
        }
    }

    /// Distinct disks supporting the boundary arcs.
    pub fn supporting_disks(&self) -> Vec<Disk> {
        let mut out: Vec<Disk> = Vec::new();
        for a in self.arcs() {
            if !out.contains(&a.supporting) {
                out.push(a.supporting);
            }
        }
        out
    }

    /// Some point of the region, if it is nonempty.
    pub fn witness(&self) -> Option<Point> {
        match self {
            ConvexArcRegion::Empty => None,
            ConvexArcRegion::WholePlane => Some(Point::ORIGIN),
            ConvexArcRegion::Point(p) => Some(*p),
            ConvexArcRegion::Arcs(arcs) => {
                if arcs.len() == 1 {
                    return Some(arcs[0].supporting.center);
                }
                // Mean of boundary points: inside by convexity.
                let mut sum = Point::ORIGIN;
                for a in arcs {
                    sum = sum + a.midpoint() + a.start();
                }
                Some(sum * (1.0 / (2 * arcs.len()) as f64))
            }
        }
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        match self {
            ConvexArcRegion::Empty => false,
            ConvexArcRegion::WholePlane => true,
            ConvexArcRegion::Point(q) => q.dist(p) <= tol,
            ConvexArcRegion::Arcs(arcs) => arcs.iter().all(|a| a.supporting.contains_point(p, tol)),
        }
    }
}

/// Angular interval `(start, sweep)` on a circle.
type Interval = (f64, f64);

fn intersect_interval(a: Interval, b: Interval) -> Vec<Interval> {
    let (s1, l1) = a;
    let (s2, l2) = b;
    if l1 >= TAU - ANGLE_EPS {
        return vec![b];
    }
    if l2 >= TAU - ANGLE_EPS {
        return vec![a];
    }
    let off = ccw_delta(s1, s2);
    let mut out = Vec::new();
    // b as [off, off + l2] in a's frame, possibly wrapping past 2π.
    let lo = off;
    let hi = (off + l2).min(l1);
    if lo <= l1 && hi >= lo {
        out.push((normalize_angle(s1 + lo), hi - lo));
    }
    if off + l2 > TAU {
        let hi = (off + l2 - TAU).min(l1);
        if hi >= 0.0 {
            out.push((s1, hi));
        }
    }
    out
}

/// The common intersection of `disks` as a boundary of circular arcs.
pub fn common_intersection(disks: &[Disk]) -> ConvexArcRegion {
    if disks.is_empty() {
        return ConvexArcRegion::WholePlane;
    }
    let tol = EPS_REL * scale_of(disks);
    let mut uniq: Vec<Disk> = Vec::with_capacity(disks.len());
    for d in disks {
        if !uniq.iter().any(|u| u.same_as(d, tol)) {
            uniq.push(*d);
        }
    }
    let disks = uniq;
    if let Some(tiny) = disks.iter().find(|d| d.radius <= tol) {
        let p = tiny.center;
        return if disks.iter().all(|d| d.contains_point(p, 2.0 * tol)) {
            ConvexArcRegion::Point(p)
        } else {
            ConvexArcRegion::Empty
        };
    }
    for (i, a) in disks.iter().enumerate() {
        for b in &disks[i + 1..] {
            if a.center.dist(b.center) > a.radius + b.radius + tol {
                return ConvexArcRegion::Empty;
            }
        }
    }
    let mut arcs = Vec::new();
    let mut touch_points = Vec::new();
    for (i, di) in disks.iter().enumerate() {
        let mut allowed: Vec<Interval> = vec![(0.0, TAU)];
        for (j, dj) in disks.iter().enumerate() {
            if i == j || allowed.is_empty() {
                continue;
            }
            let v = dj.center - di.center;
            let d = v.norm();
            let (ri, rj) = (di.radius, dj.radius);
            if d + ri <= rj + tol {
                continue;
            }
            let restrict: Interval = if (d + rj - ri).abs() <= tol || (d - ri - rj).abs() <= tol {
                (v.angle(), 0.0)
            } else if d + rj < ri {
                allowed.clear();
                continue;
            } else {
                let along = (d * d + ri * ri - rj * rj) / (2.0 * d);
                let h = ((ri - along) * (ri + along)).max(0.0).sqrt();
                let half = h.atan2(along);
                (normalize_angle(v.angle() - half), 2.0 * half)
            };
            allowed = allowed
                .iter()
                .flat_map(|&iv| intersect_interval(iv, restrict))
                .collect();
        }
        for (s, l) in allowed {
            if l > ANGLE_EPS {
                arcs.push(ArcSegment::new(*di, s, l, true));
            } else {
                touch_points.push(di.point_at(s));
            }
        }
    }
    if arcs.is_empty() {
        for p in touch_points {
            if disks.iter().all(|d| d.contains_point(p, 4.0 * tol)) {
                return ConvexArcRegion::Point(p);
            }
        }
        return ConvexArcRegion::Empty;
    }
    let inner = {
        let mut s = Point::ORIGIN;
        for a in &arcs {
            s = s + a.midpoint();
        }
        s * (1.0 / arcs.len() as f64)
    };
    arcs.sort_by(|a, b| {
        (a.midpoint() - inner)
            .angle()
            .partial_cmp(&(b.midpoint() - inner).angle())
            .unwrap_or(Ordering::Equal)
    });
    ConvexArcRegion::Arcs(arcs)
}

fn intersect_regions(a: &ConvexArcRegion, b: &ConvexArcRegion) -> ConvexArcRegion {
    use ConvexArcRegion::*;
    match (a, b) {
        (Empty, _) | (_, Empty) => Empty,
        (WholePlane, r) | (r, WholePlane) => r.clone(),
        (Point(p), r) | (r, Point(p)) => {
            let tol = EPS_REL * scale_of(&r.supporting_disks()).max(p.norm());
            if r.contains(*p, 4.0 * tol) {
                Point(*p)
            } else {
                Empty
            }
        }
        (Arcs(_), Arcs(_)) => {
            let mut disks = a.supporting_disks();
            for d in b.supporting_disks() {
                if !disks.contains(&d) {
                    disks.push(d);
                }
            }
            common_intersection(&disks)
        }
    }
}

/// A point common to all regions, or `None` when their intersection is empty.
pub fn regions_nonempty(regions: &[&ConvexArcRegion]) -> Option<Point> {
    let mut acc = ConvexArcRegion::WholePlane;
    for r in regions {
        acc = intersect_regions(&acc, r);
        if acc.is_empty() {
            return None;
        }
    }
    acc.witness()
}

// ---------------------------------------------------------------------------
// Crescent covering
// ---------------------------------------------------------------------------

/// The part of `disk` outside the open disk `clip`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crescent {
    pub disk: Disk,
    pub clip: Disk,
}

/// A piece of input material that a covering disk must contain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Material {
    Whole(Disk),
    /// Arc of the input disk outside the clip, and arc of the clip inside
    /// the input disk, each as `(start, sweep)`.
    Crescent {
        disk: Disk,
        clip: Disk,
        outer: (f64, f64),
        inner: (f64, f64),
    },
}

impl Material {
    /// Classifies `disk \ clip`; `None` when the clip covers the disk.
    pub fn from_crescent(c: &Crescent, tol: f64) -> Option<Material> {
        let (disk, clip) = (c.disk, c.clip);
        let v = clip.center - disk.center;
        let d = v.norm();
        if clip.contains_disk(&disk, tol) {
            return None;
        }
        if d >= disk.radius + clip.radius - tol || disk.contains_disk(&clip, 0.0) {
            return Some(Material::Whole(disk));
        }
        let (rd, rc) = (disk.radius, clip.radius);
        // Half-angle, seen from the disk center, of its boundary inside the clip.
        let along_d = (d * d + rd * rd - rc * rc) / (2.0 * d);
        let beta = ((rd - along_d) * (rd + along_d)).max(0.0).sqrt().atan2(along_d);
        let along_c = (d * d + rc * rc - rd * rd) / (2.0 * d);
        let alpha = ((rc - along_c) * (rc + along_c)).max(0.0).sqrt().atan2(along_c);
        let toward_clip = v.angle();
        let toward_disk = (-v).angle();
        Some(Material::Crescent {
            disk,
            clip,
            outer: (normalize_angle(toward_clip + beta), TAU - 2.0 * beta),
            inner: (normalize_angle(toward_disk - alpha), 2.0 * alpha),
        })
    }

    pub fn disk(&self) -> Disk {
        match *self {
            Material::Whole(d) => d,
            Material::Crescent { disk, .. } => disk,
        }
    }

    /// Farthest distance from `p` to any point of the material.
    pub fn farthest_from(&self, p: Point) -> f64 {
        match *self {
            Material::Whole(d) => p.dist(d.center) + d.radius,
            Material::Crescent {
                disk,
                clip,
                outer,
                inner,
            } => {
                let a = farthest_on_arc(&disk, outer.0, outer.1, p).1;
                let b = farthest_on_arc(&clip, inner.0, inner.1, p).1;
                a.max(b)
            }
        }
    }

    /// Boundary sample points; their enclosing disk bounds the covering
    /// radius from below.
    pub fn sample_points(&self, per_arc: usize) -> Vec<Point> {
        let per_arc = per_arc.max(2);
        let sample = |circle: &Disk, (s, l): (f64, f64)| {
            (0..per_arc)
                .map(|k| circle.point_at(s + l * k as f64 / (per_arc - 1) as f64))
                .collect::<Vec<_>>()
        };
        match *self {
            Material::Whole(d) => sample(&d, (0.0, TAU * (1.0 - 1.0 / per_arc as f64))),
            Material::Crescent { disk, outer, .. } => sample(&disk, outer),
        }
    }
}

/// Objective of the crescent-covering problem at `p`.
pub fn material_radius(material: &[Material], p: Point) -> f64 {
    material
        .iter()
        .map(|m| m.farthest_from(p))
        .fold(0.0, f64::max)
}

/// Smallest disk containing a set of material pieces, by nested
/// golden-section search on the convex farthest-distance objective.
pub fn smallest_disk_covering_material(material: &[Material]) -> Result<Disk, OneCenterError> {
    if material.is_empty() {
        return Err(OneCenterError::EmptyConstraints);
    }
    if material.iter().all(|m| matches!(m, Material::Whole(_))) {
        let disks: Vec<Disk> = material.iter().map(Material::disk).collect();
        return Ok(smallest_enclosing_disk_of_disks(&disks));
    }
    let disks: Vec<Disk> = material.iter().map(Material::disk).collect();
    let (lo, hi) = bounding_box(&disks);
    let tol = 1e-9 * lo.dist(hi).max(f64::MIN_POSITIVE);
    let (center, _) = nested_golden_min(|p| material_radius(material, p), lo, hi, tol);
    Ok(Disk {
        center,
        radius: material_radius(material, center),
    })
}

/// Smallest disk containing every whole disk and every crescent `D \ C`.
pub fn smallest_disk_covering_crescents(
    crescents: &[Crescent],
    whole_disks: &[Disk],
) -> Result<Disk, OneCenterError> {
    let all: Vec<Disk> = crescents
        .iter()
        .map(|c| c.disk)
        .chain(whole_disks.iter().copied())
        .collect();
    let tol = EPS_REL * scale_of(&all);
    let material: Vec<Material> = crescents
        .iter()
        .filter_map(|c| Material::from_crescent(c, tol))
        .chain(whole_disks.iter().map(|&d| Material::Whole(d)))
        .collect();
    smallest_disk_covering_material(&material)
}

// ---------------------------------------------------------------------------
// Two-center of points
// ---------------------------------------------------------------------------

/// Calls `visit` with a side mask for every bipartition of `points` that a
/// line can realize (including the trivial all-on-one-side split). Masks
/// may repeat.
pub fn for_each_line_bipartition<F: FnMut(&[bool])>(points: &[Point], mut visit: F) {
    let m = points.len();
    let mut mask = vec![true; m];
    visit(&mask);
    if m < 2 {
        return;
    }
    let (lo, hi) = {
        let mut lo = points[0];
        let mut hi = points[0];
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    };
    let eps = EPS_REL * lo.dist(hi).max(f64::MIN_POSITIVE);
    let mut online: Vec<(f64, usize)> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let v = points[j] - points[i];
            let len = v.norm();
            if len <= eps {
                continue;
            }
            online.clear();
            for (k, p) in points.iter().enumerate() {
                let w = *p - points[i];
                let side = v.cross(w) / len;
                if side.abs() <= eps {
                    online.push((w.dot(v), k));
                    mask[k] = false;
                } else {
                    mask[k] = side > 0.0;
                }
            }
            online.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
            visit(&mask);
            for &(_, k) in online.iter() {
                mask[k] = true;
                visit(&mask);
            }
        }
    }
}

/// Half the largest coordinate or diagonal extent of a point set; a lower
/// bound on its enclosing radius.
fn half_extent(points: &[Point]) -> f64 {
    if points.is_empty() {
        return 0.0;
    }
    let mut lo = [f64::INFINITY; 4];
    let mut hi = [f64::NEG_INFINITY; 4];
    for p in points {
        let proj = [p.x, p.y, (p.x + p.y) * FRAC_1_SQRT_2, (p.x - p.y) * FRAC_1_SQRT_2];
        for k in 0..4 {
            lo[k] = lo[k].min(proj[k]);
            hi[k] = hi[k].max(proj[k]);
        }
    }
    (0..4).map(|k| hi[k] - lo[k]).fold(0.0, f64::max) * 0.5
}

/// Exact two-center of a point set by enumerating line bipartitions.
pub fn two_center_points(points: &[Point]) -> TwoCenterSolution {
    assert!(!points.is_empty(), "two-center of an empty point set");
    let mut best_r = f64::INFINITY;
    let mut best: Option<(Disk, Disk, Vec<bool>)> = None;
    let mut side_a = Vec::with_capacity(points.len());
    let mut side_b = Vec::with_capacity(points.len());
    for_each_line_bipartition(points, |mask| {
        side_a.clear();
        side_b.clear();
        for (p, &m) in points.iter().zip(mask) {
            if m {
                side_a.push(*p);
            } else {
                side_b.push(*p);
            }
        }
        if half_extent(&side_a).max(half_extent(&side_b)) >= best_r {
            return;
        }
        // Solve the larger side first; it usually decides the pruning.
        let (first, second) = if side_a.len() >= side_b.len() {
            (&side_a, &side_b)
        } else {
            (&side_b, &side_a)
        };
        let d1 = smallest_enclosing_disk_of_points(first);
        if d1.radius >= best_r {
            return;
        }
        let d2 = if second.is_empty() {
            d1
        } else {
            smallest_enclosing_disk_of_points(second)
        };
        let r = d1.radius.max(d2.radius);
        if r < best_r {
            best_r = r;
            let (da, db) = if side_a.len() >= side_b.len() {
                (d1, d2)
            } else {
                (d2, d1)
            };
            best = Some((da, db, mask.to_vec()));
        }
    });
    let (d1, d2, mask) = best.expect("at least one bipartition");
    TwoCenterSolution {
        c1: d1.center,
        c2: d2.center,
        r: best_r,
        certificate: mask
            .iter()
            .map(|&m| if m { CoverTag::InC1 } else { CoverTag::InC2 })
            .collect(),
    }
}
