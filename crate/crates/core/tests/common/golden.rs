use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, TAU};

use rand::Rng;
use twocenter::cover_general::{
    coverage_radius, decide_cover, fptas_general, gonzalez_2approx, solve_exact_general,
};
use twocenter::cover_restricted::{
    fixed_orientation, shrink, sixapprox_restricted, solve_bipartition_restricted,
    solve_exact_restricted,
};
use twocenter::geom::{aw_circumcenter, circle_circle_intersection, farthest_point_in_disk_min2};
use twocenter::one_center::{
    common_intersection, regions_nonempty, smallest_disk_covering_crescents,
    smallest_enclosing_disk_of_disks, smallest_intersecting_disk, two_center_points, Crescent,
};
use twocenter::oracles::{brute_pierce_delta, brute_two_center_points, grid_refine_cover_general};
use twocenter::piercing::{
    build_arrangement, candidate_deltas, decide_fast, decide_naive, solve_bipartition, solve_exact,
    CandidateKind,
};
use twocenter::{Disk, Instance, Point};

use super::{
    local_search_min, rng, sampled_farthest_min2, search_box, ternary_enclosing,
    ternary_enclosing_points, ternary_intersecting, ternary_pierce_bipartition,
};

pub const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/golden.txt");

fn inst(disks: &[(f64, f64, f64)]) -> Instance {
    Instance::new(disks.iter().map(|&(x, y, r)| Disk::at(x, y, r)).collect()).unwrap()
}

fn three_unit() -> Instance {
    inst(&[(0.0, 0.0, 1.0), (4.0, 0.0, 1.0), (2.0, 5.0, 1.0)])
}

fn square_unit() -> Instance {
    inst(&[(0.0, 0.0, 1.0), (4.0, 0.0, 1.0), (2.0, 4.0, 1.0)])
}

fn far_pair() -> Instance {
    inst(&[(0.0, 0.0, 1.0), (10.0, 0.0, 1.0)])
}

pub fn random_points(seed: u64, m: usize) -> Vec<Point> {
    let mut g = rng(seed);
    (0..m).map(|_| Point::new(g.gen::<f64>(), g.gen::<f64>())).collect()
}

pub fn random_small(seed: u64, n: usize) -> Instance {
    let mut g = rng(seed);
    Instance::new(super::rand_disks(&mut g, n, 10.0, 3.0)).unwrap()
}

/// Circumcenter of three points by solving the perpendicular-bisector
/// equations with Cramer's rule.
fn cramer_circumcenter(a: Point, b: Point, c: Point) -> Point {
    let (a1, b1) = (2.0 * (b.x - a.x), 2.0 * (b.y - a.y));
    let c1 = b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y;
    let (a2, b2) = (2.0 * (c.x - a.x), 2.0 * (c.y - a.y));
    let c2 = c.x * c.x + c.y * c.y - a.x * a.x - a.y * a.y;
    let det = a1 * b2 - a2 * b1;
    Point::new((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)
}

/// Boundary samples of `disk \ clip`: the arc of `disk` outside `clip`, the
/// arc of `clip` inside `disk`, and the two corner points where they meet.
fn crescent_boundary(disk: &Disk, clip: &Disk, samples: usize) -> Vec<Point> {
    let mut pts = Vec::new();
    let d = disk.center.dist(clip.center);
    if d < disk.radius + clip.radius && d > (disk.radius - clip.radius).abs() {
        let a = (d * d + disk.radius * disk.radius - clip.radius * clip.radius) / (2.0 * d);
        let h = (disk.radius * disk.radius - a * a).sqrt();
        let u = (clip.center - disk.center) * (1.0 / d);
        let foot = disk.center + u * a;
        pts.push(foot + u.perp() * h);
        pts.push(foot - u.perp() * h);
    }
    for k in 0..samples {
        let t = TAU * k as f64 / samples as f64;
        let p = disk.center + Point::polar(t) * disk.radius;
        if p.dist(clip.center) >= clip.radius {
            pts.push(p);
        }
        let q = clip.center + Point::polar(t) * clip.radius;
        if q.dist(disk.center) <= disk.radius {
            pts.push(q);
        }
    }
    pts
}

/// Restricted covering by exhaustive bipartition, each side enclosed by
/// nested ternary search.
fn ternary_restricted_bipartition(disks: &[Disk]) -> f64 {
    let n = disks.len();
    let mut best = f64::INFINITY;
    for mask in 0u32..(1 << (n - 1)) {
        let mut side = [Vec::new(), Vec::new()];
        for (i, d) in disks.iter().enumerate() {
            side[(mask >> i & 1) as usize].push(*d);
        }
        let v = side
            .iter()
            .filter(|s| !s.is_empty())
            .map(|s| ternary_enclosing(s).1)
            .fold(0.0, f64::max);
        best = best.min(v);
    }
    best
}

fn crescent_cases() -> Vec<Vec<Crescent>> {
    let unit = |x: f64| Disk::at(x, 0.0, 1.0);
    let spec_clip = Disk::at(2.0, 5.0, 3.0);
    let cut_clip = Disk::at(-1.0, 0.3, 1.2);
    vec![
        vec![
            Crescent { disk: unit(0.0), clip: spec_clip },
            Crescent { disk: unit(4.0), clip: spec_clip },
        ],
        vec![
            Crescent { disk: unit(0.0), clip: cut_clip },
            Crescent { disk: unit(4.0), clip: cut_clip },
        ],
    ]
}

/// Every golden value recomputed by its independent oracle.
pub fn oracle_values() -> Vec<(&'static str, f64)> {
    let mut v: Vec<(&'static str, f64)> = Vec::new();
    v.push(("circle_pair_lens_y", (1.0f64 - 0.25).sqrt()));

    let cc = cramer_circumcenter(Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(2.0, 4.0));
    v.push(("aw_square_x", cc.x));
    v.push(("aw_square_y", cc.y));
    v.push(("aw_square_delta", cc.dist(Point::ORIGIN) - 1.0));
    let ce = cramer_circumcenter(
        Point::new(0.0, 0.0),
        Point::new(2.0, 0.0),
        Point::new(1.0, 3.0f64.sqrt()),
    );
    v.push(("aw_equilateral_x", ce.x));
    v.push(("aw_equilateral_y", ce.y));
    v.push(("aw_equilateral_delta", ce.dist(Point::ORIGIN) - 1.0));

    let unit = Disk::at(0.0, 0.0, 1.0);
    v.push((
        "farthest_min2_split",
        sampled_farthest_min2(&unit, Point::new(-5.0, 0.0), Point::new(5.0, 0.0), 1_000_000),
    ));
    v.push((
        "farthest_min2_same",
        sampled_farthest_min2(&unit, Point::new(3.0, 0.0), Point::new(3.0, 0.0), 1_000_000),
    ));
    v.push((
        "farthest_min2_far",
        sampled_farthest_min2(
            &Disk::at(10.0, 0.0, 1.0),
            Point::new(0.0, 0.0),
            Point::new(11.0, 0.0),
            1_000_000,
        ),
    ));

    let sq = square_unit();
    let (lo, hi) = search_box(sq.disks(), 2.0);
    let enclose = |p: Point| {
        sq.disks()
            .iter()
            .map(|d| p.dist(d.center) + d.radius)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let (p, r) = local_search_min(enclose, lo, hi, 10_000, 11);
    v.push(("enclosing_square_x", p.x));
    v.push(("enclosing_square_y", p.y));
    v.push(("enclosing_square_r", r));

    let (_, r) = ternary_intersecting(three_unit().disks());
    v.push(("intersecting_three_r", r));

    for (k, crescents) in crescent_cases().into_iter().enumerate() {
        let pts: Vec<Point> = crescents
            .iter()
            .flat_map(|c| crescent_boundary(&c.disk, &c.clip, 10_000))
            .collect();
        let (_, r) = ternary_enclosing_points(&pts);
        v.push((["crescent_spec_r", "crescent_cut_r"][k], r));
    }

    let pts = random_points(8, 8);
    v.push(("points_random8_r", brute_two_center_points(&pts).unwrap().r));

    v.push(("pierce_three_delta", ternary_pierce_bipartition(three_unit().disks())));

    // Tangency equation |c_i - c_j| = r_i + r_j + 2δ solved by bisection.
    let (mut a, mut b) = (0.0f64, 10.0f64);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if 4.0 - 2.0 - 2.0 * m > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    v.push(("candidate_pair_delta", 0.5 * (a + b)));

    let r8 = random_small(8, 8);
    v.push(("pierce_random8_delta", brute_pierce_delta(&r8).unwrap().delta));

    v.push((
        "coverage_far_shifted",
        sampled_farthest_min2(
            &Disk::at(10.0, 0.0, 1.0),
            Point::new(0.0, 0.0),
            Point::new(11.0, 0.0),
            1_000_000,
        )
        .max(sampled_farthest_min2(&unit, Point::new(0.0, 0.0), Point::new(11.0, 0.0), 1_000_000)),
    ));

    let b = grid_refine_cover_general(&far_pair(), 1e-4).unwrap();
    v.push(("general_far_upper", b.r_upper));
    v.push(("general_far_lower", b.r_lower));

    let r6 = random_small(6, 6);
    let b = grid_refine_cover_general(&r6, 1e-3).unwrap();
    v.push(("general_random6_upper", b.r_upper));
    v.push(("general_random6_lower", b.r_lower));

    let r10 = random_small(10, 10);
    let b = grid_refine_cover_general(&r10, 1e-3).unwrap();
    v.push(("general_random10_upper", b.r_upper));
    v.push(("general_random10_lower", b.r_lower));

    v.push(("restricted_three_r", ternary_restricted_bipartition(three_unit().disks())));
    v.push(("restricted_random10_r", ternary_restricted_bipartition(r10.disks())));
    v.push(("orientation_vertical_r", ternary_enclosing(far_pair().disks()).1));

    let collinear = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(30.0, 0.0)];
    v.push(("points_collinear_r", brute_two_center_points(&collinear).unwrap().r));
    v
}

pub fn write_fixture() {
    let mut out = String::from("# name value\n");
    for (name, value) in oracle_values() {
        out.push_str(&format!("{name} {value:.17e}\n"));
    }
    std::fs::write(FIXTURE, out).unwrap();
}

pub fn load_fixture() -> BTreeMap<String, f64> {
    std::fs::read_to_string(FIXTURE)
        .expect("golden fixture present")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            let k = it.next().unwrap().to_string();
            let v = it.next().unwrap().parse().unwrap();
            (k, v)
        })
        .collect()
}

/// Solver outputs against the fixture and the trivially known values.
/// Each entry is `(name, pass, detail)`.
pub fn solver_checks() -> Vec<(String, bool, String)> {
    let g = load_fixture();
    let at = |k: &str| *g.get(k).unwrap_or_else(|| panic!("fixture entry {k}"));
    let mut out: Vec<(String, bool, String)> = Vec::new();
    let mut check = |name: &str, got: f64, want: f64, tol: f64| {
        out.push((
            name.to_string(),
            (got - want).abs() <= tol,
            format!("got {got:.12}, want {want:.12}"),
        ));
    };

    let tangent = circle_circle_intersection(&Disk::at(0.0, 0.0, 1.0), &Disk::at(2.0, 0.0, 1.0)).unwrap();
    check("tangent circles meet once", tangent.len() as f64, 1.0, 0.0);
    check("tangent point", tangent[0].dist(Point::new(1.0, 0.0)), 0.0, 1e-9);
    let lens = circle_circle_intersection(&Disk::at(0.0, 0.0, 1.0), &Disk::at(1.0, 0.0, 1.0)).unwrap();
    let ys: Vec<f64> = lens.iter().map(|p| p.y.abs()).collect();
    check("lens points x", lens.iter().map(|p| (p.x - 0.5).abs()).fold(0.0, f64::max), 0.0, 1e-12);
    check("lens points y", ys.iter().copied().fold(0.0, f64::max), at("circle_pair_lens_y"), 1e-12);
    check(
        "separated circles do not meet",
        circle_circle_intersection(&Disk::at(0.0, 0.0, 1.0), &Disk::at(5.0, 0.0, 1.0)).unwrap().len() as f64,
        0.0,
        0.0,
    );

    let sq = square_unit();
    let d = sq.disks();
    let aw = aw_circumcenter(&d[0], &d[1], &d[2]);
    let best = aw.iter().min_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap()).copied();
    let (p, delta) = best.unwrap_or((Point::new(f64::NAN, f64::NAN), f64::NAN));
    check("aw square x", p.x, at("aw_square_x"), 1e-9);
    check("aw square y", p.y, at("aw_square_y"), 1e-9);
    check("aw square delta", delta, at("aw_square_delta"), 1e-9);
    let eq = [
        Disk::at(0.0, 0.0, 1.0),
        Disk::at(2.0, 0.0, 1.0),
        Disk::at(1.0, 3.0f64.sqrt(), 1.0),
    ];
    let aw = aw_circumcenter(&eq[0], &eq[1], &eq[2]);
    let (p, delta) = aw
        .iter()
        .copied()
        .min_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
        .unwrap_or((Point::new(f64::NAN, f64::NAN), f64::NAN));
    check("aw equilateral x", p.x, at("aw_equilateral_x"), 1e-9);
    check("aw equilateral y", p.y, at("aw_equilateral_y"), 1e-9);
    check("aw equilateral delta", delta, at("aw_equilateral_delta"), 1e-9);
    let far = [Disk::at(0.0, 0.0, 1.0), Disk::at(10.0, 0.0, 1.0), Disk::at(5.0, 50.0, 1.0)];
    let aw = aw_circumcenter(&far[0], &far[1], &far[2]);
    let residual = aw
        .iter()
        .filter(|s| s.1 > 0.0)
        .map(|(p, dl)| far.iter().map(|d| (p.dist(d.center) - d.radius - dl).abs()).fold(0.0, f64::max))
        .fold(f64::INFINITY, f64::min);
    check("aw far triple positive residual", residual, 0.0, 1e-9);

    let unit = Disk::at(0.0, 0.0, 1.0);
    let (q, val) = farthest_point_in_disk_min2(&unit, Point::new(-5.0, 0.0), Point::new(5.0, 0.0));
    check("farthest min2 split value", val, at("farthest_min2_split"), 1e-4);
    check("farthest min2 split value exact", val, 26.0f64.sqrt(), 1e-12);
    check("farthest min2 split point", q.x.abs() + (q.y.abs() - 1.0).abs(), 0.0, 1e-9);
    let (q, val) = farthest_point_in_disk_min2(&unit, Point::new(3.0, 0.0), Point::new(3.0, 0.0));
    check("farthest min2 same value", val, at("farthest_min2_same"), 1e-4);
    check("farthest min2 same exact", val, 4.0, 1e-12);
    check("farthest min2 same point", q.dist(Point::new(-1.0, 0.0)), 0.0, 1e-12);
    let (q, val) = farthest_point_in_disk_min2(&Disk::at(10.0, 0.0, 1.0), Point::ORIGIN, Point::new(11.0, 0.0));
    check("farthest min2 far value", val, at("farthest_min2_far"), 1e-4);
    check("farthest min2 far point", q.dist(Point::new(9.0, 0.0)), 0.0, 1e-12);

    let e = smallest_enclosing_disk_of_disks(&[Disk::at(0.0, 0.0, 2.0)]);
    check("enclosing single", e.center.norm() + (e.radius - 2.0).abs(), 0.0, 1e-12);
    let e = smallest_enclosing_disk_of_disks(&[Disk::at(-3.0, 0.0, 1.0), Disk::at(3.0, 0.0, 1.0)]);
    check("enclosing symmetric", e.center.norm() + (e.radius - 4.0).abs(), 0.0, 1e-12);
    let e = smallest_enclosing_disk_of_disks(sq.disks());
    check("enclosing square x", e.center.x, at("enclosing_square_x"), 1e-7);
    check("enclosing square y", e.center.y, at("enclosing_square_y"), 1e-7);
    check("enclosing square r", e.radius, at("enclosing_square_r"), 1e-9);
    check("enclosing square r exact", e.radius, 3.5, 1e-12);

    let (p, r) = smallest_intersecting_disk(&[Disk::at(-3.0, 0.0, 1.0), Disk::at(3.0, 0.0, 1.0)]);
    check("intersecting symmetric", p.norm() + (r - 2.0).abs(), 0.0, 1e-12);
    let (_, r) = smallest_intersecting_disk(&[Disk::at(0.0, 0.0, 5.0), Disk::at(1.0, 0.0, 5.0)]);
    check("intersecting overlapping", r, 0.0, 0.0);
    let (_, r) = smallest_intersecting_disk(three_unit().disks());
    check("intersecting three", r, at("intersecting_three_r"), 1e-7);

    let region = common_intersection(&[Disk::at(0.0, 0.0, 1.0), Disk::at(1.0, 0.0, 1.0)]);
    let ends: Vec<Point> = region.arcs().iter().map(|a| a.start()).collect();
    check("lens arcs", ends.len() as f64, 2.0, 0.0);
    check(
        "lens arc endpoints",
        ends.iter().map(|p| (p.x - 0.5).abs() + (p.y.abs() - at("circle_pair_lens_y")).abs()).fold(0.0, f64::max),
        0.0,
        1e-9,
    );
    let a = common_intersection(&[Disk::at(0.0, 0.0, 1.0)]);
    let b = common_intersection(&[Disk::at(1.9, 0.0, 1.0)]);
    let w = regions_nonempty(&[&a, &b]);
    check(
        "lens witness near middle",
        w.map_or(f64::INFINITY, |w| w.dist(Point::new(0.95, 0.0))),
        0.0,
        0.05 + 1e-9,
    );
    let c = common_intersection(&[Disk::at(3.0, 0.0, 1.0)]);
    check("disjoint regions", regions_nonempty(&[&a, &c]).is_some() as u8 as f64, 0.0, 0.0);

    for (k, crescents) in crescent_cases().into_iter().enumerate() {
        let key = ["crescent_spec_r", "crescent_cut_r"][k];
        let d = smallest_disk_covering_crescents(&crescents, &[]).unwrap();
        check(&format!("crescent cover {key}"), d.radius, at(key), 1e-5);
    }

    let pts = random_points(8, 8);
    check("points random8", two_center_points(&pts).r, at("points_random8_r"), 1e-9);
    let pts = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(10.0, 0.0), Point::new(11.0, 0.0)];
    let s = two_center_points(&pts);
    check("points symmetric", s.r, 0.5, 1e-12);
    let collinear = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(30.0, 0.0)];
    check("points collinear", two_center_points(&collinear).r, at("points_collinear_r"), 1e-12);

    let three = three_unit();
    let yes = decide_naive(&three, 1.0);
    check("naive yes at 1", yes.is_some() as u8 as f64, 1.0, 0.0);
    check("naive no at 0.9", decide_naive(&three, 0.9).is_some() as u8 as f64, 0.0, 0.0);
    check("fast yes at 1", decide_fast(&three, 1.0).is_some() as u8 as f64, 1.0, 0.0);
    check("fast no at 0.9", decide_fast(&three, 0.9).is_some() as u8 as f64, 0.0, 0.0);
    let clusters = inst(&[
        (0.0, 0.0, 1.0),
        (1.0, 0.0, 1.0),
        (0.5, 1.0, 1.0),
        (50.0, 0.0, 1.0),
        (51.0, 0.5, 1.0),
    ]);
    check("fast two clusters at 0", decide_fast(&clusters, 0.0).is_some() as u8 as f64, 1.0, 0.0);
    check("exact three", solve_exact(&three).delta, at("pierce_three_delta"), 1e-9);
    check("bipartition three", solve_bipartition(&three).delta, at("pierce_three_delta"), 1e-9);
    let r8 = random_small(8, 8);
    check("exact random8", solve_exact(&r8).delta, at("pierce_random8_delta"), 1e-9 * (1.0 + at("pierce_random8_delta")));

    let arr = build_arrangement(&[Disk::at(0.0, 0.0, 1.0), Disk::at(1.0, 0.0, 1.0)]);
    check("arrangement vertices", arr.num_vertices() as f64, 2.0, 0.0);
    check("arrangement edges", arr.num_edges() as f64, 4.0, 0.0);
    check("arrangement faces", arr.num_faces() as f64, 4.0, 0.0);
    let arr = build_arrangement(&[Disk::at(0.0, 0.0, 1.0)]);
    check("single circle faces", arr.num_faces() as f64, 2.0, 0.0);

    let pair = inst(&[(0.0, 0.0, 1.0), (4.0, 0.0, 1.0)]);
    let has_pair = candidate_deltas(&pair).iter().any(|c| {
        matches!(c.kind, CandidateKind::PairTangency(..)) && (c.value - at("candidate_pair_delta")).abs() <= 1e-12
    });
    check("pair candidate", has_pair as u8 as f64, 1.0, 0.0);
    let has_triple = candidate_deltas(&sq).iter().any(|c| {
        matches!(c.kind, CandidateKind::TripleBoundary(..))
            && (c.value - at("aw_square_delta")).abs() <= 1e-9
            && c.witness.dist(Point::new(at("aw_square_x"), at("aw_square_y"))) <= 1e-9
    });
    check("triple candidate", has_triple as u8 as f64, 1.0, 0.0);

    let fp = far_pair();
    check("coverage exact centers", coverage_radius(&fp, Point::ORIGIN, Point::new(10.0, 0.0)), 1.0, 1e-12);
    check(
        "coverage shifted center",
        coverage_radius(&fp, Point::ORIGIN, Point::new(11.0, 0.0)),
        at("coverage_far_shifted"),
        1e-4,
    );
    let gz = gonzalez_2approx(&fp);
    check("gonzalez far c1", gz.c1.dist(Point::ORIGIN), 0.0, 1e-12);
    check("gonzalez far c2", gz.c2.dist(Point::new(11.0, 0.0)), 0.0, 1e-12);
    check("gonzalez far r", gz.r, 2.0, 1e-12);
    let single = inst(&[(3.0, -1.0, 2.5)]);
    check("gonzalez single", gonzalez_2approx(&single).r, 2.5, 1e-12);
    let r10 = random_small(10, 10);
    check(
        "gonzalez random10 within twice lower",
        (gonzalez_2approx(&r10).r - 2.0 * at("general_random10_lower")).max(0.0),
        0.0,
        1e-6,
    );
    check("decide far at 1", decide_cover(&fp, 1.0).unwrap().is_some() as u8 as f64, 1.0, 0.0);
    check("decide far at 0.99", decide_cover(&fp, 0.99).unwrap().is_some() as u8 as f64, 0.0, 0.0);
    let ge = solve_exact_general(&fp, 1e-6).unwrap().r;
    check("general exact far", ge, 1.0, 1e-5);
    check("oracle far upper", at("general_far_upper"), 1.0, 1e-4 * fp.diameter());
    check(
        "oracle far lower",
        (1.0 - 1e-4 * fp.diameter() - at("general_far_lower")).max(0.0),
        0.0,
        0.0,
    );
    let r6 = random_small(6, 6);
    let ge = solve_exact_general(&r6, 1e-4).unwrap().r;
    let slack = 1e-3 * r6.diameter();
    check(
        "general exact random6 in bracket",
        (at("general_random6_lower") - slack - ge).max(0.0) + (ge - at("general_random6_upper") - slack).max(0.0),
        0.0,
        0.0,
    );
    check("general exact single", solve_exact_general(&single, 1e-6).unwrap().r, 2.5, 1e-5);
    check("fptas far", (fptas_general(&fp, 0.5).unwrap().r - 1.5).max(0.0), 0.0, fp.tau());
    check("fptas single", (fptas_general(&single, 0.3).unwrap().r - 1.3 * 2.5).max(0.0), 0.0, single.tau());
    for eps in [0.5, 0.2] {
        check(
            &format!("fptas random10 eps {eps}"),
            (fptas_general(&r10, eps).unwrap().r - (1.0 + eps) * at("general_random10_upper")).max(0.0),
            0.0,
            1e-9,
        );
    }

    let s = shrink(&inst(&[(0.0, 0.0, 1.0), (5.0, 0.0, 1.0)]), 1.0).unwrap();
    check("shrink equal radii", s[0].radius + s[1].radius, 0.0, 0.0);
    let s = shrink(&inst(&[(0.0, 0.0, 1.0), (5.0, 0.0, 3.0)]), 3.0).unwrap();
    check("shrink mixed radii", (s[0].radius - 2.0).abs() + s[1].radius, 0.0, 1e-12);
    check("shrink below max", shrink(&inst(&[(0.0, 0.0, 1.0)]), 0.9).is_err() as u8 as f64, 1.0, 0.0);
    let re = solve_exact_restricted(&fp);
    check("restricted far r", re.r, 1.0, 1e-12);
    check(
        "restricted far centers",
        re.c1.dist(Point::ORIGIN).min(re.c2.dist(Point::ORIGIN))
            + re.c1.dist(Point::new(10.0, 0.0)).min(re.c2.dist(Point::new(10.0, 0.0))),
        0.0,
        1e-9,
    );
    check("restricted three", solve_exact_restricted(&three).r, at("restricted_three_r"), 1e-9);
    check("restricted three bipartition", solve_bipartition_restricted(&three).r, at("restricted_three_r"), 1e-9);
    check("restricted random10", solve_exact_restricted(&r10).r, at("restricted_random10_r"), 1e-8);
    check("restricted single", solve_exact_restricted(&single).r, 2.5, 1e-12);
    check("sixapprox far", (sixapprox_restricted(&fp).r - 6.0).max(0.0), 0.0, fp.tau());
    check("sixapprox single", (sixapprox_restricted(&single).r - 6.0 * 2.5).max(0.0), 0.0, single.tau());
    check(
        "sixapprox random10",
        (sixapprox_restricted(&r10).r - 6.0 * at("restricted_random10_r")).max(0.0),
        0.0,
        r10.tau(),
    );
    check("orientation horizontal split", fixed_orientation(&fp, 0.0).r, 1.0, 1e-12);
    check("orientation vertical", fixed_orientation(&fp, FRAC_PI_2).r, at("orientation_vertical_r"), 1e-9);

    let b = grid_refine_cover_general(&single, 1e-4).unwrap();
    check("oracle single upper", b.r_upper, 2.5, 1e-4 * single.diameter());
    let pts = [Point::new(3.0, 3.0)];
    check("points oracle single", brute_two_center_points(&pts).unwrap().r, 0.0, 0.0);
    out
}
