#![allow(dead_code)]

pub mod golden;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twocenter::geom::nested_golden_min;
use twocenter::io_cli::generate;
use twocenter::{Disk, Instance, Point};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random instance whose density varies with the seed: sparse boxes give
/// disjoint disks, tight boxes give heavy overlap.
pub fn rand_instance(seed: u64, n: usize) -> Instance {
    let boxes = [100.0, 30.0, 12.0];
    generate(n, seed, boxes[(seed % 3) as usize], 10.0)
}

pub fn rand_disks(rng: &mut ChaCha8Rng, n: usize, span: f64, r_max: f64) -> Vec<Disk> {
    (0..n)
        .map(|_| {
            Disk::at(
                rng.gen_range(-span..span),
                rng.gen_range(-span..span),
                rng.gen_range(0.05 * r_max..r_max),
            )
        })
        .collect()
}

/// Disks inside the union of two congruent radius-`big_r` disks, including
/// the split disk centered between them whose boundary passes through the
/// two boundary intersection points. Returns the instance and `big_r`.
pub fn planted_cover_instance(seed: u64) -> (Instance, f64) {
    let mut g = rng(seed);
    let big_r = g.gen_range(2.0..10.0);
    let s = big_r * g.gen_range(0.2..0.9);
    let rot = Point::polar(g.gen_range(0.0..std::f64::consts::TAU));
    let shift = Point::new(g.gen_range(-50.0..50.0), g.gen_range(-50.0..50.0));
    let place = |p: Point| Point::new(p.x * rot.x - p.y * rot.y, p.x * rot.y + p.y * rot.x) + shift;
    let centers = [Point::new(-s, 0.0), Point::new(s, 0.0)];
    let half_chord = (big_r * big_r - s * s).sqrt();
    let mut disks = vec![Disk {
        center: place(Point::ORIGIN),
        radius: half_chord,
    }];
    let extra = g.gen_range(2..7);
    for _ in 0..extra {
        let c = centers[g.gen_range(0..2)];
        let t = big_r * g.gen::<f64>().sqrt() * 0.95;
        let p = c + Point::polar(g.gen_range(0.0..std::f64::consts::TAU)) * t;
        let rho = (big_r - t) * g.gen_range(0.1..1.0);
        disks.push(Disk {
            center: place(p),
            radius: rho,
        });
    }
    (Instance::new(disks).unwrap(), big_r)
}

/// Bounding square of the disk centers, padded by `pad`.
pub fn search_box(disks: &[Disk], pad: f64) -> (Point, Point) {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for d in disks {
        lo.x = lo.x.min(d.center.x);
        lo.y = lo.y.min(d.center.y);
        hi.x = hi.x.max(d.center.x);
        hi.y = hi.y.max(d.center.y);
    }
    (lo - Point::new(pad, pad), hi + Point::new(pad, pad))
}

/// Minimum of the convex `max_i (|p - c_i| - r_i)` by nested ternary search.
pub fn ternary_intersecting(disks: &[Disk]) -> (Point, f64) {
    let (lo, hi) = search_box(disks, 1.0);
    nested_golden_min(
        |p| {
            disks
                .iter()
                .map(|d| p.dist(d.center) - d.radius)
                .fold(f64::NEG_INFINITY, f64::max)
        },
        lo,
        hi,
        1e-11,
    )
}

/// Minimum of the convex `max_i (|p - c_i| + r_i)` by nested ternary search.
pub fn ternary_enclosing(disks: &[Disk]) -> (Point, f64) {
    let (lo, hi) = search_box(disks, 1.0);
    nested_golden_min(
        |p| {
            disks
                .iter()
                .map(|d| p.dist(d.center) + d.radius)
                .fold(f64::NEG_INFINITY, f64::max)
        },
        lo,
        hi,
        1e-11,
    )
}

/// Pattern search from many random starts; the best local minimum found.
pub fn local_search_min<F: Fn(Point) -> f64>(f: F, lo: Point, hi: Point, restarts: usize, seed: u64) -> (Point, f64) {
    let mut g = rng(seed);
    let mut best = (lo, f64::INFINITY);
    for _ in 0..restarts {
        let mut p = Point::new(g.gen_range(lo.x..=hi.x), g.gen_range(lo.y..=hi.y));
        let mut v = f(p);
        let mut step = 0.25 * lo.dist(hi);
        while step > 1e-12 {
            let mut moved = false;
            for k in 0..8 {
                let q = p + Point::polar(k as f64 * std::f64::consts::FRAC_PI_4) * step;
                let w = f(q);
                if w < v {
                    p = q;
                    v = w;
                    moved = true;
                    break;
                }
            }
            if !moved {
                step *= 0.5;
            }
        }
        if v < best.1 {
            best = (p, v);
        }
    }
    best
}

/// `max_{q in d} min(|q - c1|, |q - c2|)` by dense sampling of the boundary
/// and interior (about `samples` points).
pub fn sampled_farthest_min2(d: &Disk, c1: Point, c2: Point, samples: usize) -> f64 {
    let rings = (samples as f64).sqrt() as usize;
    let per_ring = samples / rings.max(1);
    let mut best = f64::NEG_INFINITY;
    for i in 0..=rings {
        let rad = d.radius * i as f64 / rings as f64;
        for k in 0..per_ring {
            let q = d.center + Point::polar(std::f64::consts::TAU * k as f64 / per_ring as f64) * rad;
            best = best.max(q.dist(c1).min(q.dist(c2)));
        }
    }
    best
}

/// Smallest enclosing circle of points via nested ternary search on the
/// convex maximum distance.
pub fn ternary_enclosing_points(points: &[Point]) -> (Point, f64) {
    let disks: Vec<Disk> = points.iter().map(|&p| Disk { center: p, radius: 0.0 }).collect();
    ternary_enclosing(&disks)
}

/// Exhaustive bipartition value of the two-piercing problem via nested
/// ternary search per side; independent of the library solvers.
pub fn ternary_pierce_bipartition(disks: &[Disk]) -> f64 {
    let n = disks.len();
    let side_value = |side: &[Disk]| {
        if side.is_empty() {
            0.0
        } else {
            ternary_intersecting(side).1.max(0.0)
        }
    };
    let mut best = f64::INFINITY;
    for mask in 0u32..(1 << (n - 1)) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (i, d) in disks.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(*d);
            } else {
                b.push(*d);
            }
        }
        best = best.min(side_value(&a).max(side_value(&b)));
    }
    best
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + a.abs().max(b.abs()))
}

/// Prints and records one acceptance line.
pub struct Report {
    pub lines: Vec<(String, bool)>,
}

impl Report {
    pub fn new() -> Self {
        Report { lines: Vec::new() }
    }

    pub fn record(&mut self, id: usize, name: &str, pass: bool, detail: String) {
        let line = format!(
            "criterion {id} {}: {name} ({detail})",
            if pass { "PASS" } else { "FAIL" }
        );
        println!("{line}");
        self.lines.push((line, pass));
    }
}
