//! Brute-force reference solvers. They rely on the planar primitives only,
//! never on the solvers they are used to validate.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::geom::{
    bounding_box, circle_from_diameter, circumcircle, farthest_point_in_disk_min2,
    nested_golden_min, Disk, Instance, Point,
};
use crate::solution::{CoverTag, PiercingSolution, TwoCenterSolution};

pub const MAX_PIERCE_ORACLE_DISKS: usize = 16;
pub const MAX_POINT_ORACLE_POINTS: usize = 12;
/// Cap on the number of boxes the covering oracle refines.
pub const MAX_REFINE_BOXES: usize = 4_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("oracle supports at most {max} items, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("oracle needs at least one item")]
    Empty,
    #[error("tolerance {0} is below the supported minimum 1e-4")]
    ToleranceTooSmall(f64),
}

fn intersect_objective(disks: &[Disk], p: Point) -> f64 {
    disks
        .iter()
        .map(|d| p.dist(d.center) - d.radius)
        .fold(0.0, f64::max)
}

/// Smallest radius of a disk meeting every disk of `group`, by nested
/// golden-section search over the bounding box of the centers.
fn group_pierce_value(group: &[Disk]) -> (Point, f64) {
    if group.len() == 1 {
        return (group[0].center, 0.0);
    }
    let centers: Vec<Disk> = group.iter().map(|d| d.with_radius(0.0)).collect();
    let (lo, hi) = bounding_box(&centers);
    let tol = 1e-12 * lo.dist(hi).max(1.0);
    nested_golden_min(|p| intersect_objective(group, p), lo, hi, tol)
}

fn pair_lower_bound(disks: &[Disk], mask: u32) -> f64 {
    let mut lb: f64 = 0.0;
    for i in 0..disks.len() {
        if mask >> i & 1 == 0 {
            continue;
        }
        for j in i + 1..disks.len() {
            if mask >> j & 1 == 1 {
                let (a, b) = (disks[i], disks[j]);
                lb = lb.max(0.5 * (a.center.dist(b.center) - a.radius - b.radius));
            }
        }
    }
    lb
}

/// Optimal two-piercing value by trying every split of the disks into two
/// groups.
pub fn brute_pierce_delta(instance: &Instance) -> Result<PiercingSolution, OracleError> {
    let disks = instance.disks();
    let n = disks.len();
    if n > MAX_PIERCE_ORACLE_DISKS {
        return Err(OracleError::TooLarge {
            n,
            max: MAX_PIERCE_ORACLE_DISKS,
        });
    }
    let full: u32 = (1u32 << n) - 1;
    let mut memo: Vec<Option<(Point, f64)>> = vec![None; 1 << n];
    let value = |mask: u32, memo: &mut Vec<Option<(Point, f64)>>| {
        if let Some(v) = memo[mask as usize] {
            return v;
        }
        let group: Vec<Disk> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| disks[i]).collect();
        let v = group_pierce_value(&group);
        memo[mask as usize] = Some(v);
        v
    };
    let (p_all, v_all) = value(full, &mut memo);
    let mut best = PiercingSolution {
        delta: v_all,
        p1: p_all,
        p2: p_all,
    };
    // The last disk is always in the first group.
    let top = 1u32 << (n - 1);
    for rest in 0..top {
        let a = rest | top;
        let b = full & !a;
        if b == 0 {
            continue;
        }
        if pair_lower_bound(disks, a).max(pair_lower_bound(disks, b)) >= best.delta {
            continue;
        }
        let (pa, va) = value(a, &mut memo);
        if va >= best.delta {
            continue;
        }
        let (pb, vb) = value(b, &mut memo);
        if va.max(vb) < best.delta {
            best = PiercingSolution {
                delta: va.max(vb),
                p1: pa,
                p2: pb,
            };
        }
    }
    Ok(best)
}

/// Result of the covering oracle: a certified bracket on the optimal
/// general covering radius and the best centers found.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverBracket {
    pub r_upper: f64,
    pub r_lower: f64,
    pub c1: Point,
    pub c2: Point,
}

#[derive(Debug, Clone, Copy)]
struct CenterBox {
    lo: [f64; 4],
    hi: [f64; 4],
    lower: f64,
    /// Center whose box limits the bound at the farthest witness, if any.
    focus: Option<usize>,
}

impl PartialEq for CenterBox {
    fn eq(&self, o: &Self) -> bool {
        self.lower == o.lower
    }
}
impl Eq for CenterBox {}
impl PartialOrd for CenterBox {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for CenterBox {
    fn cmp(&self, o: &Self) -> Ordering {
        // Smallest lower bound first.
        o.lower.partial_cmp(&self.lower).unwrap_or(Ordering::Equal)
    }
}

fn box_distance(q: Point, lo: Point, hi: Point) -> f64 {
    let dx = (lo.x - q.x).max(q.x - hi.x).max(0.0);
    let dy = (lo.y - q.y).max(q.y - hi.y).max(0.0);
    dx.hypot(dy)
}

/// Branch and bound over pairs of centers in the bounding box of the union.
/// Two lower bounds hold on a box: the covering radius is 1-Lipschitz in
/// each center, so the midpoint value minus the larger half-diagonal; and
/// every witness point `q` of the midpoint evaluation lies in the union, so
/// `min(dist(q, B1), dist(q, B2))`. Refinement stops once the bracket is
/// narrower than `tol` times the best radius found, which is never wider
/// than `tol` times the instance diameter.
pub fn grid_refine_cover_general(instance: &Instance, tol: f64) -> Result<CoverBracket, OracleError> {
    if tol < 1e-4 {
        return Err(OracleError::ToleranceTooSmall(tol));
    }
    let disks = instance.disks();
    let (lo, hi) = bounding_box(disks);
    let floor_gap = tol * 1e-6 * lo.dist(hi).max(f64::MIN_POSITIVE);
    let gap_of = |upper: f64| (tol * upper).max(floor_gap);
    let eval = |b: &CenterBox| {
        let (lo1, hi1) = (Point::new(b.lo[0], b.lo[1]), Point::new(b.hi[0], b.hi[1]));
        let (lo2, hi2) = (Point::new(b.lo[2], b.lo[3]), Point::new(b.hi[2], b.hi[3]));
        let c1 = lo1.midpoint(hi1);
        let c2 = lo2.midpoint(hi2);
        let h1 = 0.5 * lo1.dist(hi1);
        let h2 = 0.5 * lo2.dist(hi2);
        let mut v = 0.0f64;
        let mut witness_bound = 0.0f64;
        let mut focus = None;
        for d in disks {
            let (q, dv) = farthest_point_in_disk_min2(d, c1, c2);
            let (d1, d2) = (box_distance(q, lo1, hi1), box_distance(q, lo2, hi2));
            if dv > v {
                focus = match d1.partial_cmp(&d2) {
                    Some(Ordering::Less) => Some(0),
                    Some(Ordering::Greater) => Some(1),
                    _ => None,
                };
            }
            v = v.max(dv);
            witness_bound = witness_bound.max(d1.min(d2));
        }
        (c1, c2, v, (v - h1.max(h2)).max(witness_bound), focus)
    };
    let mut root = CenterBox {
        lo: [lo.x, lo.y, lo.x, lo.y],
        hi: [hi.x, hi.y, hi.x, hi.y],
        lower: 0.0,
        focus: None,
    };
    let (mut c1, mut c2, mut upper, root_lower, root_focus) = eval(&root);
    root.lower = root_lower;
    root.focus = root_focus;
    let mut heap = BinaryHeap::new();
    heap.push(root);
    let mut processed = 0usize;
    let mut pruned = f64::INFINITY;
    let mut lower = f64::INFINITY;
    while let Some(b) = heap.pop() {
        if b.lower >= upper - gap_of(upper) || processed >= MAX_REFINE_BOXES {
            lower = b.lower;
            break;
        }
        processed += 1;
        let dims = match b.focus {
            Some(c) => 2 * c..2 * c + 2,
            None => 0..4,
        };
        let k = dims
            .max_by(|&i, &j| {
                (b.hi[i] - b.lo[i])
                    .partial_cmp(&(b.hi[j] - b.lo[j]))
                    .unwrap_or(Ordering::Equal)
            })
            .unwrap();
        let mid = 0.5 * (b.lo[k] + b.hi[k]);
        for half in 0..2 {
            let mut child = b;
            if half == 0 {
                child.hi[k] = mid;
            } else {
                child.lo[k] = mid;
            }
            // Centers are interchangeable: keep c1 to the left of c2.
            if child.lo[0] > child.hi[2] {
                continue;
            }
            let (p1, p2, v, lb, focus) = eval(&child);
            child.focus = focus;
            if v < upper {
                upper = v;
                c1 = p1;
                c2 = p2;
            }
            child.lower = lb.max(b.lower);
            if child.lower < upper - gap_of(upper) {
                heap.push(child);
            } else {
                pruned = pruned.min(child.lower);
            }
        }
    }
    Ok(CoverBracket {
        r_upper: upper,
        r_lower: lower.min(pruned).max(instance.max_radius()).min(upper),
        c1,
        c2,
    })
}

fn brute_enclosing_disk(points: &[Point]) -> Disk {
    let tol = 1e-12
        * points
            .iter()
            .map(|p| p.x.abs().max(p.y.abs()))
            .fold(1.0, f64::max);
    let covers = |d: &Disk| points.iter().all(|p| d.contains_point(*p, tol));
    let mut best = Disk {
        center: points[0],
        radius: if points.len() == 1 { 0.0 } else { f64::INFINITY },
    };
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = circle_from_diameter(points[i], points[j]);
            if d.radius < best.radius && covers(&d) {
                best = d;
            }
            for k in j + 1..points.len() {
                if let Some(d) = circumcircle(points[i], points[j], points[k]) {
                    if d.radius < best.radius && covers(&d) {
                        best = d;
                    }
                }
            }
        }
    }
    best
}

/// Optimal two-center of at most twelve points by exhaustive bipartition.
pub fn brute_two_center_points(points: &[Point]) -> Result<TwoCenterSolution, OracleError> {
    let m = points.len();
    if m == 0 {
        return Err(OracleError::Empty);
    }
    if m > MAX_POINT_ORACLE_POINTS {
        return Err(OracleError::TooLarge {
            n: m,
            max: MAX_POINT_ORACLE_POINTS,
        });
    }
    let mut best: Option<TwoCenterSolution> = None;
    let top = 1u32 << (m - 1);
    for rest in 0..top {
        let mask = rest | top;
        let (a, b): (Vec<usize>, Vec<usize>) = (0..m).partition(|&i| mask >> i & 1 == 1);
        let pa: Vec<Point> = a.iter().map(|&i| points[i]).collect();
        let da = brute_enclosing_disk(&pa);
        let db = if b.is_empty() {
            da
        } else {
            let pb: Vec<Point> = b.iter().map(|&i| points[i]).collect();
            brute_enclosing_disk(&pb)
        };
        let r = da.radius.max(db.radius);
        if best.as_ref().map_or(true, |s| r < s.r) {
            best = Some(TwoCenterSolution {
                c1: da.center,
                c2: db.center,
                r,
                certificate: (0..m)
                    .map(|i| if mask >> i & 1 == 1 { CoverTag::InC1 } else { CoverTag::InC2 })
                    .collect(),
            });
        }
    }
    Ok(best.expect("at least one bipartition"))
}
