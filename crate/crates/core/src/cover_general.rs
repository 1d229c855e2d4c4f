//! General two-disk covering: every input disk must lie in the union of two
//! congruent disks.

use std::f64::consts::{PI, SQRT_2, TAU};

use thiserror::Error;

use crate::geom::{
    ccw_delta, circle_circle_intersection_tol, farthest_point_in_disk_min2, golden_section_min,
    normalize_angle, Disk, Instance, NormalizationMode, Point, EPS_REL,
};
use crate::one_center::{
    smallest_disk_covering_material, smallest_enclosing_disk_of_disks,
    smallest_enclosing_disk_of_points, two_center_points, Crescent, Material,
};
use crate::solution::TwoCenterSolution;

/// Grid constant of the general-covering approximation scheme.
pub const GRID_LAMBDA: f64 = 1.0 / 8.0;
/// Rotation samples per pivot disk in the rotating case of the decision.
pub const ROTATION_SAMPLES: usize = 2048;
/// Angular precision of I/O event angles.
pub const EVENT_ANGLE_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoverError {
    #[error("covering radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("epsilon must lie in (0, 1], got {0}")]
    InvalidEpsilon(f64),
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
}

/// Smallest `r` such that the disks of radius `r` around `c1` and `c2`
/// cover every input disk.
pub fn coverage_radius(instance: &Instance, c1: Point, c2: Point) -> f64 {
    coverage_of(instance.disks(), c1, c2)
}

fn coverage_of(disks: &[Disk], c1: Point, c2: Point) -> f64 {
    disks
        .iter()
        .map(|d| farthest_point_in_disk_min2(d, c1, c2).1)
        .fold(0.0, f64::max)
}

fn finish(instance: &Instance, c1: Point, c2: Point) -> TwoCenterSolution {
    let r = coverage_radius(instance, c1, c2);
    TwoCenterSolution::tagged(c1, c2, r, instance.disks(), instance.tau())
}

/// Farthest-point greedy: the first center is the first disk's center, the
/// second is the point of the union farthest from it.
pub fn gonzalez_2approx(instance: &Instance) -> TwoCenterSolution {
    let disks = instance.disks();
    let c1 = disks[0].center;
    let far = disks
        .iter()
        .max_by(|a, b| {
            (c1.dist(a.center) + a.radius)
                .partial_cmp(&(c1.dist(b.center) + b.radius))
                .unwrap()
        })
        .unwrap();
    let dir = (far.center - c1).normalized().unwrap_or(Point::new(1.0, 0.0));
    let c2 = far.center + dir * far.radius;
    finish(instance, c1, c2)
}

// ---------------------------------------------------------------------------
// Decision
// ---------------------------------------------------------------------------

/// The moment a disk switches between covered and uncovered while the
/// first covering disk rotates around a pivot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IoEvent {
    pub angle: f64,
    pub disk: usize,
    /// True when the disk becomes covered.
    pub into_cover: bool,
}

/// A maximal range of rotation angles over which the two disks bounding the
/// uncovered part of the first covering circle stay the same.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationInterval {
    pub pivot: usize,
    pub theta_lo: f64,
    pub theta_hi: f64,
    /// Disks whose boundary arcs end and start the largest free gap.
    pub pair: (Option<usize>, Option<usize>),
    pub events: Vec<IoEvent>,
}

/// Placement of the second disk for a fixed first disk.
#[derive(Debug, Clone)]
struct Placement {
    c1: Point,
    c2: Point,
    pair: (Option<usize>, Option<usize>),
    /// Per-disk `farthest distance to nearer center - r`.
    deficits: Vec<f64>,
}

impl Placement {
    fn worst(&self) -> f64 {
        self.deficits.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

struct Decider<'a> {
    disks: &'a [Disk],
    r: f64,
    tol: f64,
}

impl Decider<'_> {
    fn accept(&self, c1: Point, c2: Point) -> Option<(Point, Point)> {
        (coverage_of(self.disks, c1, c2) <= self.r + self.tol).then_some((c1, c2))
    }

    /// The material left uncovered by the disk of radius `r` at `c1`.
    fn leftover(&self, c1: Point) -> Vec<Material> {
        let clip = Disk {
            center: c1,
            radius: self.r,
        };
        self.disks
            .iter()
            .filter_map(|&d| Material::from_crescent(&Crescent { disk: d, clip }, self.tol))
            .collect()
    }

    /// Best second center for a fixed first center: bounds first, then the
    /// exact crescent cover only when the bounds are inconclusive.
    fn second_center(&self, c1: Point) -> Option<(Point, Point)> {
        let material = self.leftover(c1);
        if material.is_empty() {
            return Some((c1, c1));
        }
        let whole: Vec<Disk> = material.iter().map(Material::disk).collect();
        let upper = smallest_enclosing_disk_of_disks(&whole);
        if upper.radius <= self.r + self.tol {
            if let Some(ok) = self.accept(c1, upper.center) {
                return Some(ok);
            }
        }
        let samples: Vec<Point> = material.iter().flat_map(|m| m.sample_points(16)).collect();
        if smallest_enclosing_disk_of_points(&samples).radius > self.r + self.tol {
            return None;
        }
        let c2 = smallest_disk_covering_material(&material).ok()?.center;
        self.accept(c1, c2)
    }

    fn case_concentric(&self) -> Option<(Point, Point)> {
        self.disks.iter().find_map(|d| self.second_center(d.center))
    }

    fn case_two_tangencies(&self) -> Option<(Point, Point)> {
        let eta = EPS_REL * crate::geom::scale_of(self.disks);
        for (i, a) in self.disks.iter().enumerate() {
            for b in &self.disks[i + 1..] {
                let ca = a.with_radius(self.r - a.radius);
                let cb = b.with_radius(self.r - b.radius);
                let Ok(pts) = circle_circle_intersection_tol(&ca, &cb, eta) else {
                    continue;
                };
                if let Some(ok) = pts.into_iter().find_map(|c1| self.second_center(c1)) {
                    return Some(ok);
                }
            }
        }
        None
    }

    fn case_aligned(&self) -> Option<(Point, Point)> {
        let eta = EPS_REL * crate::geom::scale_of(self.disks);
        for (i, d) in self.disks.iter().enumerate() {
            let reach = 2.0 * self.r - d.radius;
            let around = d.with_radius(reach);
            for (j, other) in self.disks.iter().enumerate() {
                if i == j {
                    continue;
                }
                let Ok(pts) = circle_circle_intersection_tol(&around, other, eta) else {
                    continue;
                };
                for t in pts {
                    let u = (t - d.center) * (1.0 / reach);
                    let c1 = d.center + u * (self.r - d.radius);
                    if let Some(ok) = self.second_center(c1) {
                        return Some(ok);
                    }
                }
            }
        }
        None
    }

    fn pivot_center(&self, pivot: usize, theta: f64) -> Point {
        let d = self.disks[pivot];
        d.center + Point::polar(theta) * (self.r - d.radius)
    }

    /// Second disk through the endpoints of the largest part of the first
    /// circle that no input disk reaches across.
    fn placement(&self, c1: Point) -> Placement {
        let r = self.r;
        let mut arcs: Vec<(f64, f64, usize)> = Vec::new();
        let mut outside: Vec<Disk> = Vec::new();
        let mut blocked = false;
        for (k, d) in self.disks.iter().enumerate() {
            let dist = c1.dist(d.center);
            if dist + d.radius <= r + self.tol {
                continue;
            }
            if dist >= r + d.radius {
                outside.push(*d);
                continue;
            }
            if dist + r <= d.radius {
                blocked = true;
                continue;
            }
            let along = ((dist * dist + r * r - d.radius * d.radius) / (2.0 * dist * r)).clamp(-1.0, 1.0);
            let half = along.acos();
            let mid = (d.center - c1).angle();
            arcs.push((normalize_angle(mid - half), 2.0 * half, k));
        }
        let (c2, pair) = if blocked {
            (c1, (None, None))
        } else if arcs.is_empty() {
            let c2 = if outside.is_empty() {
                c1
            } else {
                smallest_enclosing_disk_of_disks(&outside).center
            };
            (c2, (None, None))
        } else {
            match largest_gap(&arcs) {
                Some((gap_start, gap_len, first, last)) if TAU - gap_len < PI => {
                    let t_end = c1 + Point::polar(gap_start) * r;
                    let t_start = c1 + Point::polar(gap_start + gap_len) * r;
                    (t_end + t_start - c1, (Some(first), Some(last)))
                }
                _ => (c1, (None, None)),
            }
        };
        let deficits = self
            .disks
            .iter()
            .map(|d| farthest_point_in_disk_min2(d, c1, c2).1 - r)
            .collect();
        Placement {
            c1,
            c2,
            pair,
            deficits,
        }
    }

    /// Rotates the first disk around `pivot`, recording rotation intervals
    /// and I/O events, and returns a covering placement if one is found.
    fn rotate(&self, pivot: usize) -> (Option<(Point, Point)>, Vec<RotationInterval>) {
        let d = self.disks[pivot];
        if self.r - d.radius <= self.tol {
            return (None, Vec::new());
        }
        let m = ROTATION_SAMPLES;
        let theta = |k: usize| TAU * k as f64 / m as f64;
        let at = |t: f64| self.placement(self.pivot_center(pivot, t));
        let samples: Vec<Placement> = (0..m).map(|k| at(theta(k))).collect();

        let mut intervals: Vec<RotationInterval> = Vec::new();
        for k in 0..m {
            match intervals.last_mut() {
                Some(last) if last.pair == samples[k].pair => last.theta_hi = theta(k + 1),
                _ => intervals.push(RotationInterval {
                    pivot,
                    theta_lo: theta(k),
                    theta_hi: theta(k + 1),
                    pair: samples[k].pair,
                    events: Vec::new(),
                }),
            }
        }

        let mut found = samples
            .iter()
            .find(|p| p.worst() <= self.tol)
            .map(|p| (p.c1, p.c2));

        let covered = |p: &Placement, i: usize| p.deficits[i] <= self.tol;
        for k in 0..m {
            let (a, b) = (&samples[k], &samples[(k + 1) % m]);
            for i in 0..self.disks.len() {
                if covered(a, i) == covered(b, i) {
                    continue;
                }
                let (mut lo, mut hi) = (theta(k), theta(k + 1));
                let start = covered(a, i);
                while hi - lo > EVENT_ANGLE_TOL {
                    let mid = 0.5 * (lo + hi);
                    if covered(&at(mid), i) == start {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                let event = IoEvent {
                    angle: normalize_angle(hi),
                    disk: i,
                    into_cover: !start,
                };
                if found.is_none() {
                    let p = at(hi);
                    if p.worst() <= self.tol {
                        found = Some((p.c1, p.c2));
                    }
                }
                if let Some(iv) = intervals
                    .iter_mut()
                    .find(|iv| iv.theta_lo <= hi && hi <= iv.theta_hi)
                {
                    iv.events.push(event);
                }
            }
        }
        for iv in intervals.iter_mut() {
            iv.events
                .sort_by(|a, b| a.angle.partial_cmp(&b.angle).unwrap().then(a.disk.cmp(&b.disk)));
        }
        if found.is_some() {
            return (found, intervals);
        }

        // Refine around local minima of the worst deficit.
        let worst: Vec<f64> = samples.iter().map(Placement::worst).collect();
        let mut minima: Vec<usize> = (0..m)
            .filter(|&k| worst[k] <= worst[(k + m - 1) % m] && worst[k] <= worst[(k + 1) % m])
            .collect();
        minima.sort_by(|&a, &b| worst[a].partial_cmp(&worst[b]).unwrap());
        minima.truncate(8);
        for k in minima {
            let (t, v) = golden_section_min(
                |t| at(t).worst(),
                theta(k) - TAU / m as f64,
                theta(k) + TAU / m as f64,
                EVENT_ANGLE_TOL,
            );
            if v <= self.tol {
                let p = at(t);
                return (Some((p.c1, p.c2)), intervals);
            }
            if v <= 0.05 * self.r {
                if let Some(ok) = self.second_center(self.pivot_center(pivot, t)) {
                    return (Some(ok), intervals);
                }
            }
        }
        (None, intervals)
    }
}

/// Largest free gap on a circle not covered by the given arcs, as
/// `(start, length, disk ending before it, disk starting after it)`.
fn largest_gap(arcs: &[(f64, f64, usize)]) -> Option<(f64, f64, usize, usize)> {
    let mut sorted = arcs.to_vec();
    sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    // Merge into connected covered runs, starting from an arc that begins a run.
    let n = sorted.len();
    let covers_start = |s: f64, skip: usize| {
        sorted
            .iter()
            .enumerate()
            .any(|(k, a)| k != skip && ccw_delta(a.0, s) > 0.0 && ccw_delta(a.0, s) <= a.1)
    };
    let first = (0..n).find(|&k| !covers_start(sorted[k].0, k))?;
    let mut runs: Vec<(f64, f64, usize, usize)> = Vec::new();
    let (mut run_start, mut reach, mut run_first, mut run_last) =
        (sorted[first].0, sorted[first].1, sorted[first].2, sorted[first].2);
    for step in 1..=n {
        let a = sorted[(first + step) % n];
        let off = ccw_delta(run_start, a.0);
        if step < n && off <= reach {
            if off + a.1 > reach {
                reach = off + a.1;
                run_last = a.2;
            }
            continue;
        }
        runs.push((run_start, reach, run_first, run_last));
        if step < n {
            run_start = a.0;
            reach = a.1;
            run_first = a.2;
            run_last = a.2;
        }
    }
    if runs.iter().any(|r| r.1 >= TAU) {
        return None;
    }
    let k = runs.len();
    (0..k)
        .map(|i| {
            let (s, len, _, last) = runs[i];
            let next = runs[(i + 1) % k];
            let gap_start = s + len;
            let gap = if k == 1 {
                TAU - len
            } else {
                ccw_delta(gap_start, next.0)
            };
            (normalize_angle(gap_start), gap, last, next.2)
        })
        .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
}

/// Decides whether two disks of radius `r` can cover the instance, trying
/// a concentric first disk, a first disk touching two input disks from
/// inside, an aligned first disk, and finally a first disk rotating around
/// each input disk. Returns a valid cover when found.
pub fn decide_cover(instance: &Instance, r: f64) -> Result<Option<TwoCenterSolution>, CoverError> {
    Ok(decide_cover_detailed(instance, r)?.0)
}

/// As [`decide_cover`], also returning the rotation intervals explored.
pub fn decide_cover_detailed(
    instance: &Instance,
    r: f64,
) -> Result<(Option<TwoCenterSolution>, Vec<RotationInterval>), CoverError> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(CoverError::NonPositiveRadius(r));
    }
    let tol = instance.tau();
    let norm = instance.normalized(NormalizationMode::Covering);
    if norm.max_radius() > r + tol {
        return Ok((None, Vec::new()));
    }
    let dec = Decider {
        disks: norm.disks(),
        r,
        tol,
    };
    let wrap = |(c1, c2): (Point, Point)| {
        TwoCenterSolution::tagged(c1, c2, r, instance.disks(), tol)
    };
    let all = smallest_enclosing_disk_of_disks(norm.disks());
    if all.radius <= r + tol {
        return Ok((Some(wrap((all.center, all.center))), Vec::new()));
    }
    if let Some(ok) = dec
        .case_concentric()
        .or_else(|| dec.case_two_tangencies())
        .or_else(|| dec.case_aligned())
    {
        return Ok((Some(wrap(ok)), Vec::new()));
    }
    let mut all_intervals = Vec::new();
    for pivot in 0..norm.len() {
        let (found, intervals) = dec.rotate(pivot);
        all_intervals.extend(intervals);
        if let Some(ok) = found {
            return Ok((Some(wrap(ok)), all_intervals));
        }
    }
    Ok((None, all_intervals))
}

/// Bisection on the radius between a lower bound and the greedy cover,
/// until the bracket is narrower than `tol · (1 + upper)`.
pub fn solve_exact_general(instance: &Instance, tol: f64) -> Result<TwoCenterSolution, CoverError> {
    if !(tol > 0.0) {
        return Err(CoverError::InvalidTolerance(tol));
    }
    let greedy = gonzalez_2approx(instance);
    let mut best = greedy.clone();
    let mut hi = greedy.r;
    let mut lo = instance.max_radius().max(0.5 * greedy.r);
    if hi <= 0.0 {
        return Ok(best);
    }
    while hi - lo > tol * (1.0 + hi) {
        let mid = 0.5 * (lo + hi);
        match decide_cover(instance, mid)? {
            Some(sol) => {
                hi = mid;
                best = sol;
            }
            None => lo = mid,
        }
    }
    Ok(finish(instance, best.c1, best.c2))
}

/// Grid-rounding approximation: snaps disk centers to a grid of step
/// `λ ε r_g`, replaces the union by the endpoints of each maximal run of
/// covered grid points per column, and solves the two-center of those points exactly.
pub fn fptas_general(instance: &Instance, eps: f64) -> Result<TwoCenterSolution, CoverError> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(CoverError::InvalidEpsilon(eps));
    }
    let greedy = gonzalez_2approx(instance);
    if greedy.r <= 0.0 {
        return Ok(greedy);
    }
    let step = GRID_LAMBDA * eps * greedy.r;
    let snapped = snap_to_grid(instance.disks(), step);
    let points = column_extremes(&snapped, step);
    let pts = two_center_points(&points);
    let inflated = pts.r + 2.0 * SQRT_2 * step;
    let tight = finish(instance, pts.c1, pts.c2);
    debug_assert!(tight.r <= inflated + instance.tau() || tight.r.is_finite());
    Ok(tight)
}

/// Snaps centers up to the grid and keeps the largest radius per grid point.
pub(crate) fn snap_to_grid(disks: &[Disk], step: f64) -> Vec<(i64, i64, f64)> {
    let mut cells: Vec<(i64, i64, f64)> = disks
        .iter()
        .map(|d| {
            (
                (d.center.x / step).ceil() as i64,
                (d.center.y / step).ceil() as i64,
                d.radius,
            )
        })
        .collect();
    cells.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then(b.2.partial_cmp(&a.2).unwrap()));
    cells.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    cells
}

/// For every grid column met by a snapped disk, the endpoints of each
/// maximal run of the union in that column, rounded outward to grid points.
fn column_extremes(cells: &[(i64, i64, f64)], step: f64) -> Vec<Point> {
    use std::collections::BTreeMap;
    let mut columns: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    for &(gx, gy, r) in cells {
        let reach = (r / step).ceil() as i64;
        for kx in gx - reach..=gx + reach {
            let dx = ((kx - gx).abs() as f64 * step - step).max(0.0).min(r);
            let half = (r * r - dx * dx).max(0.0).sqrt();
            let lo = gy - (half / step).ceil() as i64;
            let hi = gy + (half / step).ceil() as i64;
            columns.entry(kx).or_default().push((lo, hi));
        }
    }
    let mut pts = Vec::new();
    for (kx, mut runs) in columns {
        let x = kx as f64 * step;
        runs.sort_unstable();
        let mut merged: Vec<(i64, i64)> = Vec::with_capacity(runs.len());
        for (lo, hi) in runs {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        for (lo, hi) in merged {
            pts.push(Point::new(x, lo as f64 * step));
            if hi != lo {
                pts.push(Point::new(x, hi as f64 * step));
            }
        }
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn inst(disks: &[Disk]) -> Instance {
        Instance::new(disks.to_vec()).unwrap()
    }

    fn two() -> Instance {
        inst(&[Disk::at(0.0, 0.0, 1.0), Disk::at(10.0, 0.0, 1.0)])
    }

    #[test]
    fn coverage_examples() {
        let i = two();
        assert!((coverage_radius(&i, Point::new(0.0, 0.0), Point::new(10.0, 0.0)) - 1.0).abs() < 1e-12);
        assert!((coverage_radius(&i, Point::new(0.0, 0.0), Point::new(11.0, 0.0)) - 2.0).abs() < 1e-12);
        let one = inst(&[Disk::at(2.0, 3.0, 1.5)]);
        let c = Point::new(2.0, 3.0);
        assert!((coverage_radius(&one, c, c) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn gonzalez_examples() {
        let g = gonzalez_2approx(&two());
        assert_eq!(g.c1, Point::new(0.0, 0.0));
        assert!(g.c2.dist(Point::new(11.0, 0.0)) < 1e-12);
        assert!((g.r - 2.0).abs() < 1e-12);
        let one = inst(&[Disk::at(0.0, 0.0, 1.0)]);
        let g = gonzalez_2approx(&one);
        assert!((g.r - 1.0).abs() < 1e-12);
        assert!(g.certifies(one.disks(), one.tau()));
    }

    #[test]
    fn decide_examples() {
        let i = two();
        let sol = decide_cover(&i, 1.0).unwrap().expect("instance covers itself");
        assert!(coverage_radius(&i, sol.c1, sol.c2) <= 1.0 + i.tau());
        assert!(sol.certifies(i.disks(), i.tau()));
        assert!(decide_cover(&i, 0.99).unwrap().is_none());
        assert_eq!(decide_cover(&i, 0.0), Err(CoverError::NonPositiveRadius(0.0)));
    }

    #[test]
    fn gap_of_single_and_overlapping_arcs() {
        let (s, len, a, b) = largest_gap(&[(0.0, 1.0, 3)]).unwrap();
        assert!((s - 1.0).abs() < 1e-12 && (len - (TAU - 1.0)).abs() < 1e-12);
        assert_eq!((a, b), (3, 3));
        let (s, len, a, b) = largest_gap(&[(0.0, 1.0, 0), (0.5, 1.0, 1), (3.0, 0.5, 2)]).unwrap();
        assert!((s - 3.5).abs() < 1e-12);
        assert!((len - (TAU - 3.5)).abs() < 1e-12);
        assert_eq!((a, b), (2, 0));
        assert!(largest_gap(&[(0.0, 4.0, 0), (3.5, 3.0, 1)]).is_none());
    }

    #[test]
    fn planted_split_cover_is_found() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..5 {
            let big = 10.0;
            let c1 = Point::new(0.0, 0.0);
            let c2 = Point::new(rng.gen_range(8.0..16.0), rng.gen_range(-4.0..4.0));
            let mut disks = vec![];
            for _ in 0..4 {
                let c = if rng.gen_bool(0.5) { c1 } else { c2 };
                let rad = rng.gen_range(1.0..3.0);
                let t = rng.gen_range(0.0..TAU);
                let off = rng.gen_range(0.0..(big - rad));
                disks.push(Disk::at(c.x + off * t.cos(), c.y + off * t.sin(), rad));
            }
            // A disk straddling both covering disks near a boundary crossing.
            let pts = circle_circle_intersection_tol(
                &Disk { center: c1, radius: big },
                &Disk { center: c2, radius: big },
                1e-12,
            )
            .unwrap();
            let q = pts[0];
            let toward = (c1.midpoint(c2) - q).normalized().unwrap();
            disks.push(Disk::at(q.x + toward.x * 1.0, q.y + toward.y * 1.0, 1.0));
            let i = inst(&disks);
            let plan = coverage_radius(&i, c1, c2);
            assert!(plan <= big + 1e-9);
            let sol = decide_cover(&i, plan * (1.0 + 1e-6)).unwrap().expect("planted cover");
            assert!(coverage_radius(&i, sol.c1, sol.c2) <= plan * (1.0 + 1e-6) + i.tau());
        }
    }

    #[test]
    fn exact_two_far_disks() {
        let s = solve_exact_general(&two(), 1e-6).unwrap();
        assert!((s.r - 1.0).abs() <= 1e-5);
        let one = inst(&[Disk::at(0.0, 0.0, 2.0)]);
        let s = solve_exact_general(&one, 1e-6).unwrap();
        assert!((s.r - 2.0).abs() <= 1e-9);
    }

    #[test]
    fn fptas_examples() {
        let s = fptas_general(&two(), 0.5).unwrap();
        assert!(s.r <= 1.5 + two().tau());
        let one = inst(&[Disk::at(3.0, -2.0, 2.0)]);
        for eps in [1.0, 0.5, 0.1] {
            let s = fptas_general(&one, eps).unwrap();
            assert!(s.r <= (1.0 + eps) * 2.0 + one.tau());
            assert!(s.r >= 2.0 - 1e-12);
        }
        assert!(fptas_general(&one, 0.0).is_err());
        assert!(fptas_general(&one, 1.5).is_err());
    }

    #[test]
    fn rotation_intervals_have_sorted_events() {
        let i = inst(&[
            Disk::at(0.0, 0.0, 1.0),
            Disk::at(6.0, 0.0, 1.0),
            Disk::at(3.0, 4.0, 1.5),
            Disk::at(9.0, 5.0, 1.0),
        ]);
        let (_, intervals) = decide_cover_detailed(&i, 2.0).unwrap();
        assert!(!intervals.is_empty());
        for iv in &intervals {
            assert!(iv.theta_lo <= iv.theta_hi);
            assert!(iv.events.windows(2).all(|w| w[0].angle <= w[1].angle));
        }
    }
}
