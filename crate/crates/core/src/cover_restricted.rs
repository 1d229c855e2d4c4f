//! Restricted two-disk covering: every input disk must lie entirely inside
//! one of two congruent disks.

use std::f64::consts::{PI, SQRT_2, TAU};

use thiserror::Error;

use crate::cover_general::{gonzalez_2approx, snap_to_grid};
use crate::geom::{Disk, Instance, NormalizationMode, Point};
use crate::one_center::smallest_enclosing_disk_of_disks;
use crate::piercing::{best_line_bipartition, solve_exact};
use crate::solution::{CoverTag, TwoCenterSolution};

/// Grid constant of the fast restricted approximation scheme.
pub const GRID_LAMBDA_FAST: f64 = 1.0 / 16.0;
/// Factor between the requested ε of the fast scheme and the ε passed to
/// the orientation-sampling scheme it runs on the rounded disks.
pub const FAST_INNER_EPS_FACTOR: f64 = 1.0 / 8.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RestrictedError {
    #[error("base radius {base} is below the largest disk radius {r_max}")]
    BaseBelowMaxRadius { base: f64, r_max: f64 },
    #[error("epsilon must lie in (0, 1], got {0}")]
    InvalidEpsilon(f64),
}

fn check_eps(eps: f64) -> Result<(), RestrictedError> {
    if eps > 0.0 && eps <= 1.0 {
        Ok(())
    } else {
        Err(RestrictedError::InvalidEpsilon(eps))
    }
}

/// Every disk replaced by the concentric disk of radius `base - r(D)`.
pub fn shrink(instance: &Instance, base: f64) -> Result<Vec<Disk>, RestrictedError> {
    let r_max = instance.max_radius();
    if !(base >= r_max) {
        return Err(RestrictedError::BaseBelowMaxRadius { base, r_max });
    }
    Ok(instance
        .disks()
        .iter()
        .map(|d| d.with_radius(base - d.radius))
        .collect())
}

fn assign(instance: &Instance, c1: Point, c2: Point, r: f64, tol: f64) -> TwoCenterSolution {
    let certificate = instance
        .disks()
        .iter()
        .map(|d| {
            let d1 = c1.dist(d.center) + d.radius;
            let d2 = c2.dist(d.center) + d.radius;
            if d1 <= d2 && d1 <= r + tol {
                CoverTag::InC1
            } else if d2 <= r + tol {
                CoverTag::InC2
            } else {
                CoverTag::Split
            }
        })
        .collect();
    TwoCenterSolution {
        c1,
        c2,
        r,
        certificate,
    }
}

/// Radius needed when each disk goes to the center that covers it with the
/// smaller radius.
pub fn assignment_radius(instance: &Instance, c1: Point, c2: Point) -> f64 {
    instance
        .disks()
        .iter()
        .map(|d| (c1.dist(d.center) + d.radius).min(c2.dist(d.center) + d.radius))
        .fold(0.0, f64::max)
}

/// Exact optimum through two-piercing of the disks shrunk from `r_max`:
/// the covering radius is the optimal piercing value plus `r_max`.
pub fn solve_exact_restricted(instance: &Instance) -> TwoCenterSolution {
    let norm = instance.normalized(NormalizationMode::Covering);
    let r_max = norm.max_radius();
    let shrunk = Instance::new(shrink(&norm, r_max).expect("base equals r_max"))
        .expect("shrinking preserves validity");
    let pierce = solve_exact(&shrunk);
    let r = pierce.delta + r_max;
    let tol = instance.tau().max(shrunk.tau());
    assign(instance, pierce.p1, pierce.p2, r, tol)
}

/// Exact optimum by enumerating line bipartitions of the disk centers with
/// the smallest enclosing disk of each side.
pub fn solve_bipartition_restricted(instance: &Instance) -> TwoCenterSolution {
    let norm = instance.normalized(NormalizationMode::Covering);
    let (r, c1, c2, _) = best_line_bipartition(norm.disks(), |side| {
        let d = smallest_enclosing_disk_of_disks(side);
        (d.center, d.radius)
    });
    assign(instance, c1, c2, r, instance.tau())
}

/// Greedy centers with each disk assigned to the center that needs the
/// smaller radius; at most three times the greedy general radius.
pub fn sixapprox_restricted(instance: &Instance) -> TwoCenterSolution {
    let g = gonzalez_2approx(instance);
    let r = assignment_radius(instance, g.c1, g.c2);
    debug_assert!(r <= 3.0 * g.r + instance.tau());
    assign(instance, g.c1, g.c2, r, instance.tau())
}

/// Result of the fixed-orientation solver at one direction.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientationSample {
    pub angle: f64,
    /// Number of disks on the first side of the split.
    pub split: usize,
    pub solution: TwoCenterSolution,
}

/// Best split of the disks into a prefix and a suffix in the order of the
/// projections of their centers on direction `theta`. Disks with equal
/// projections (within the instance tolerance) stay on the same side.
pub fn fixed_orientation(instance: &Instance, theta: f64) -> TwoCenterSolution {
    fixed_orientation_sample(instance, theta).solution
}

pub fn fixed_orientation_sample(instance: &Instance, theta: f64) -> OrientationSample {
    let disks = instance.disks();
    let n = disks.len();
    let dir = Point::polar(theta);
    let proj: Vec<f64> = disks.iter().map(|d| d.center.dot(dir)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| proj[a].partial_cmp(&proj[b]).unwrap().then(a.cmp(&b)));
    let tie = instance.tau();
    let splits: Vec<usize> = (0..=n)
        .filter(|&k| k == 0 || k == n || proj[order[k]] - proj[order[k - 1]] > tie)
        .collect();
    let sorted: Vec<Disk> = order.iter().map(|&i| disks[i]).collect();
    let side = |lo: usize, hi: usize| -> Option<Disk> {
        (hi > lo).then(|| smallest_enclosing_disk_of_disks(&sorted[lo..hi]))
    };
    let mut cache: Vec<Option<(Option<Disk>, Option<Disk>)>> = vec![None; splits.len()];
    let eval = |s: usize, cache: &mut Vec<Option<(Option<Disk>, Option<Disk>)>>| {
        if cache[s].is_none() {
            let k = splits[s];
            cache[s] = Some((side(0, k), side(k, n)));
        }
        cache[s].unwrap()
    };
    let radius = |d: Option<Disk>| d.map_or(0.0, |d| d.radius);
    let tol = instance.tau();

    // First split whose left radius reaches the right radius.
    let (mut lo, mut hi) = (0usize, splits.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        let (l, r) = eval(mid, &mut cache);
        if radius(l) >= radius(r) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut evaluated: Vec<(usize, f64, f64)> = cache
        .iter()
        .enumerate()
        .filter_map(|(s, c)| c.map(|(l, r)| (s, radius(l), radius(r))))
        .collect();
    evaluated.sort_by_key(|e| e.0);
    let monotone = evaluated
        .windows(2)
        .all(|w| w[1].1 >= w[0].1 - tol && w[1].2 <= w[0].2 + tol);
    let candidates: Vec<usize> = if monotone {
        vec![lo.saturating_sub(1), lo]
    } else {
        (0..splits.len()).collect()
    };
    let mut best: Option<(f64, usize)> = None;
    for s in candidates {
        let (l, r) = eval(s, &mut cache);
        let value = radius(l).max(radius(r));
        if best.map_or(true, |b| value < b.0) {
            best = Some((value, s));
        }
    }
    let (value, s) = best.expect("at least one split");
    let (l, r) = eval(s, &mut cache);
    let (c1, c2) = match (l, r) {
        (Some(a), Some(b)) => (a.center, b.center),
        (Some(a), None) => (a.center, a.center),
        (None, Some(b)) => (b.center, b.center),
        (None, None) => unreachable!("nonempty instance"),
    };
    let k = splits[s];
    let mut certificate = vec![CoverTag::InC1; n];
    for &i in &order[k..] {
        certificate[i] = CoverTag::InC2;
    }
    OrientationSample {
        angle: theta,
        split: k,
        solution: TwoCenterSolution {
            c1,
            c2,
            r: value,
            certificate,
        },
    }
}

/// Fixed-orientation solutions at `⌈2π/ε⌉` regularly spaced directions,
/// reduced modulo π.
pub fn orientation_samples(instance: &Instance, eps: f64) -> Result<Vec<OrientationSample>, RestrictedError> {
    check_eps(eps)?;
    let m = (TAU / eps).ceil() as usize;
    let mut angles: Vec<f64> = (0..m).map(|k| (TAU * k as f64 / m as f64) % PI).collect();
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    angles.dedup_by(|a, b| (*a - *b).abs() <= 1e-15);
    Ok(angles
        .into_iter()
        .map(|t| fixed_orientation_sample(instance, t))
        .collect())
}

/// Best of the orientation samples; radius within `1 + 4 sin ε` of optimal.
pub fn fptas_restricted(instance: &Instance, eps: f64) -> Result<TwoCenterSolution, RestrictedError> {
    let samples = orientation_samples(instance, eps)?;
    Ok(samples
        .into_iter()
        .min_by(|a, b| {
            a.solution
                .r
                .partial_cmp(&b.solution.r)
                .unwrap()
                .then(a.angle.partial_cmp(&b.angle).unwrap())
        })
        .expect("at least one orientation")
        .solution)
}

/// [`fptas_restricted`] with ε rescaled so the radius is within `1 + ε` of
/// optimal.
pub fn fptas_restricted_within(instance: &Instance, eps: f64) -> Result<TwoCenterSolution, RestrictedError> {
    check_eps(eps)?;
    fptas_restricted(instance, 0.25 * eps)
}

/// Snaps centers to a grid of step `λ' ε r'` (with `r'` from the
/// 6-approximation), keeps the largest disk per grid point, and runs the
/// orientation-sampling scheme on the rounded disks. The returned radius is
/// the assignment radius of the resulting centers on the input disks.
pub fn fptas_restricted_fast(instance: &Instance, eps: f64) -> Result<TwoCenterSolution, RestrictedError> {
    check_eps(eps)?;
    let approx = sixapprox_restricted(instance);
    if approx.r <= 0.0 {
        return Ok(approx);
    }
    let step = GRID_LAMBDA_FAST * eps * approx.r;
    let rounded: Vec<Disk> = snap_to_grid(instance.disks(), step)
        .into_iter()
        .map(|(gx, gy, r)| Disk::at(gx as f64 * step, gy as f64 * step, r))
        .collect();
    let rounded = Instance::new(rounded).expect("rounded disks are valid");
    let sol = fptas_restricted(&rounded, FAST_INNER_EPS_FACTOR * eps)?;
    let r = assignment_radius(instance, sol.c1, sol.c2);
    debug_assert!(r <= sol.r + SQRT_2 * step + instance.tau());
    Ok(assign(instance, sol.c1, sol.c2, r, instance.tau()))
}
