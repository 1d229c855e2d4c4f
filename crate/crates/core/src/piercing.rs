//! Two-piercing of disks: δ-inflation, the arrangement-based decision
//! procedure, candidate optimal values, and the exact optimizer.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use thiserror::Error;

use crate::geom::{
    aw_circumcenter, ccw_delta, circle_circle_intersection_tol, normalize_angle, scale_of, Disk,
    Instance, NormalizationMode, Point, EPS_REL,
};
use crate::one_center::{
    common_intersection, for_each_line_bipartition, smallest_intersecting_disk, ConvexArcRegion,
};
use crate::solution::PiercingSolution;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PiercingError {
    #[error("inflation amount must be a finite nonnegative number, got {0}")]
    InvalidDelta(f64),
}

/// A query value δ ≥ 0 for the decision problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InflationQuery {
    delta: f64,
}

impl InflationQuery {
    pub fn new(delta: f64) -> Result<Self, PiercingError> {
        if delta.is_finite() && delta >= 0.0 {
            Ok(InflationQuery { delta })
        } else {
            Err(PiercingError::InvalidDelta(delta))
        }
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }
}

/// Every disk with its radius increased by `delta`.
pub fn inflate(instance: &Instance, delta: f64) -> Result<Vec<Disk>, PiercingError> {
    let q = InflationQuery::new(delta)?;
    Ok(inflate_disks(instance.disks(), q.delta()))
}

fn inflate_disks(disks: &[Disk], delta: f64) -> Vec<Disk> {
    disks
        .iter()
        .map(|d| d.with_radius((d.radius + delta).max(0.0)))
        .collect()
}

/// Disks as seen by the decision procedures: inflated by `delta` plus half
/// the instance tolerance, so that configurations that are feasible only in
/// a degenerate limit are still reported.
fn decision_disks(instance: &Instance, delta: f64) -> Vec<Disk> {
    inflate_disks(instance.disks(), delta.max(0.0) + 0.5 * instance.tau())
}

// ---------------------------------------------------------------------------
// Naive decision
// ---------------------------------------------------------------------------

/// Reference decision: tries every arrangement vertex and every center as
/// the first point and tests whether the remaining disks share a point.
pub fn decide_naive(instance: &Instance, delta: f64) -> Option<(Point, Point)> {
    let disks = decision_disks(instance, delta);
    let eta = EPS_REL * scale_of(&disks);
    let mut candidates: Vec<Point> = disks.iter().map(|d| d.center).collect();
    for (i, a) in disks.iter().enumerate() {
        for b in &disks[i + 1..] {
            if let Ok(pts) = circle_circle_intersection_tol(a, b, eta) {
                candidates.extend(pts);
            }
        }
    }
    let mut residual = Vec::with_capacity(disks.len());
    for p1 in candidates {
        residual.clear();
        residual.extend(disks.iter().filter(|d| !d.contains_point(p1, eta)).copied());
        if residual.is_empty() {
            return Some((p1, p1));
        }
        let (p2, rad) = smallest_intersecting_disk(&residual);
        if rad <= eta {
            return Some((p1, p2));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Arrangement of circles
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub struct ArrVertex {
    pub point: Point,
    /// Circles passing through the vertex.
    pub circles: Vec<usize>,
}

/// A piece of circle `circle` from vertex `from` counterclockwise to `to`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrEdge {
    pub circle: usize,
    pub from: usize,
    pub to: usize,
    pub start_angle: f64,
    pub sweep: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArrFace {
    /// Half-edges whose left side is this face (outer boundary and holes).
    pub boundary: Vec<usize>,
    /// `members[i]` is true when the face lies inside circle `i`.
    pub members: Vec<bool>,
    pub bounded: bool,
}

/// Planar subdivision induced by a family of circles.
///
/// Half-edge `2e` traverses edge `e` counterclockwise (the disk interior is on
/// its left); half-edge `2e + 1` traverses it clockwise.
#[derive(Debug, Clone)]
pub struct CircleArrangement {
    pub circles: Vec<Disk>,
    /// Representative circle of each input circle; coincident circles share one.
    pub alias: Vec<usize>,
    /// Pairs `(duplicate, representative)` merged during construction.
    pub merged: Vec<(usize, usize)>,
    pub vertices: Vec<ArrVertex>,
    pub edges: Vec<ArrEdge>,
    /// Face on the left of each half-edge.
    pub half_edge_face: Vec<usize>,
    pub next: Vec<usize>,
    /// Face 0 is the unbounded face.
    pub faces: Vec<ArrFace>,
    pub components: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn arc_signed_area(c: &Disk, start: f64, signed_sweep: f64) -> f64 {
    let end = start + signed_sweep;
    let r = c.radius;
    0.5 * (r * r * signed_sweep
        + r * (c.center.x * (end.sin() - start.sin()) - c.center.y * (end.cos() - start.cos())))
}

/// Crossings of the ray from `q` in direction +x with an arc.
fn ray_crossings(q: Point, c: &Disk, start: f64, sweep: f64) -> usize {
    let v = (q.y - c.center.y) / c.radius;
    if !(-1.0..1.0).contains(&v) || c.radius == 0.0 {
        return 0;
    }
    let a = v.asin();
    [a, PI - a]
        .iter()
        .filter(|&&theta| {
            let x = c.center.x + c.radius * theta.cos();
            x > q.x && ccw_delta(start, theta) < sweep
        })
        .count()
}

impl CircleArrangement {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// `V - E + F == 1 + C` for the subdivision.
    pub fn euler_holds(&self) -> bool {
        self.num_vertices() + self.num_faces() == self.num_edges() + 1 + self.components
    }

    pub fn half_edge_circle(&self, h: usize) -> usize {
        self.edges[h / 2].circle
    }

    pub fn origin(&self, h: usize) -> usize {
        let e = &self.edges[h / 2];
        if h % 2 == 0 {
            e.from
        } else {
            e.to
        }
    }

    fn half_edge_midpoint(&self, h: usize) -> Point {
        let e = &self.edges[h / 2];
        self.circles[e.circle].point_at(e.start_angle + 0.5 * e.sweep)
    }

    /// Distance from the midpoint of `h` to the nearest other circle.
    fn half_edge_margin(&self, h: usize) -> f64 {
        let c = self.half_edge_circle(h);
        let m = self.half_edge_midpoint(h);
        self.circles
            .iter()
            .enumerate()
            .filter(|&(j, _)| self.alias[j] == j && j != c)
            .map(|(_, d)| (m.dist(d.center) - d.radius).abs())
            .fold(f64::INFINITY, f64::min)
    }

    fn best_half_edge(&self, hs: &[usize]) -> usize {
        *hs.iter()
            .max_by(|&&a, &&b| {
                self.half_edge_margin(a)
                    .partial_cmp(&self.half_edge_margin(b))
                    .unwrap_or(Ordering::Equal)
            })
            .expect("face with a boundary")
    }

    /// A point strictly inside face `f`.
    pub fn face_sample_point(&self, f: usize) -> Point {
        if !self.faces[f].bounded {
            let (lo, _) = crate::geom::bounding_box(&self.circles);
            return lo - Point::new(1.0, 1.0);
        }
        let h = self.best_half_edge(&self.faces[f].boundary);
        let c = self.circles[self.half_edge_circle(h)];
        let m = self.half_edge_midpoint(h);
        let step = 0.5 * self.half_edge_margin(h).min(c.radius);
        let inward = (c.center - m) * (1.0 / c.radius);
        if h % 2 == 0 {
            m + inward * step
        } else {
            m - inward * step
        }
    }

    /// Pairs of faces sharing an edge, with the circle of that edge.
    pub fn adjacent_face_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = (0..self.edges.len())
            .map(|e| {
                (
                    self.half_edge_face[2 * e],
                    self.half_edge_face[2 * e + 1],
                    self.edges[e].circle,
                )
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Builds the arrangement of the boundary circles of `circles`.
pub fn build_arrangement(circles: &[Disk]) -> CircleArrangement {
    let n = circles.len();
    assert!(n > 0, "arrangement of no circles");
    let eta = EPS_REL * scale_of(circles);

    let mut alias: Vec<usize> = (0..n).collect();
    let mut merged = Vec::new();
    for i in 0..n {
        if let Some(j) = (0..i).find(|&j| alias[j] == j && circles[j].same_as(&circles[i], eta)) {
            alias[i] = j;
            merged.push((i, j));
        }
    }
    let reps: Vec<usize> = (0..n).filter(|&i| alias[i] == i).collect();

    // Raw intersection points, clustered into vertices.
    let mut raw: Vec<(Point, usize, usize)> = Vec::new();
    for (a, &i) in reps.iter().enumerate() {
        for &j in &reps[a + 1..] {
            if let Ok(pts) = circle_circle_intersection_tol(&circles[i], &circles[j], eta) {
                raw.extend(pts.into_iter().map(|p| (p, i, j)));
            }
        }
    }
    let mut uf = UnionFind::new(raw.len());
    for a in 0..raw.len() {
        for b in a + 1..raw.len() {
            if raw[a].0.dist(raw[b].0) <= eta {
                uf.union(a, b);
            }
        }
    }
    let mut vertex_of_root = vec![usize::MAX; raw.len()];
    let mut vertices: Vec<ArrVertex> = Vec::new();
    // Per circle: (angle, vertex).
    let mut on_circle: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
    for a in 0..raw.len() {
        let root = uf.find(a);
        if vertex_of_root[root] == usize::MAX {
            vertex_of_root[root] = vertices.len();
            vertices.push(ArrVertex {
                point: raw[root].0,
                circles: Vec::new(),
            });
        }
        let v = vertex_of_root[root];
        let (p, i, j) = raw[a];
        for c in [i, j] {
            if !vertices[v].circles.contains(&c) {
                vertices[v].circles.push(c);
                on_circle[c].push(((p - circles[c].center).angle(), v));
            }
        }
    }
    for &c in &reps {
        if on_circle[c].is_empty() {
            let v = vertices.len();
            vertices.push(ArrVertex {
                point: circles[c].point_at(0.0),
                circles: vec![c],
            });
            on_circle[c].push((0.0, v));
        }
    }

    let mut edges = Vec::new();
    for &c in &reps {
        let list = &mut on_circle[c];
        list.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));
        let k = list.len();
        for idx in 0..k {
            let (a0, v0) = list[idx];
            let (a1, v1) = list[(idx + 1) % k];
            let sweep = if k == 1 { TAU } else { ccw_delta(a0, a1) };
            edges.push(ArrEdge {
                circle: c,
                from: v0,
                to: v1,
                start_angle: normalize_angle(a0),
                sweep,
            });
        }
    }

    // Rotation system: outgoing half-edges at each vertex in ccw order of
    // the chord direction at a common small arc length.
    let nh = 2 * edges.len();
    let origin = |h: usize| {
        let e: &ArrEdge = &edges[h / 2];
        if h % 2 == 0 {
            e.from
        } else {
            e.to
        }
    };
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for h in 0..nh {
        outgoing[origin(h)].push(h);
    }
    let mut rank_at_vertex = vec![0usize; nh];
    for out in outgoing.iter_mut() {
        let arc_len = out
            .iter()
            .map(|&h| {
                let e = &edges[h / 2];
                (e.sweep * circles[e.circle].radius).min(0.25 * TAU * circles[e.circle].radius)
            })
            .fold(f64::INFINITY, f64::min)
            / 3.0;
        let key = |h: usize| {
            let e = &edges[h / 2];
            let c = &circles[e.circle];
            let (theta, dir) = if h % 2 == 0 {
                (e.start_angle, 1.0)
            } else {
                (e.start_angle + e.sweep, -1.0)
            };
            let tangent = theta + dir * 0.5 * PI;
            normalize_angle(tangent + dir * 0.5 * arc_len / c.radius.max(f64::MIN_POSITIVE))
        };
        out.sort_by(|&a, &b| key(a).partial_cmp(&key(b)).unwrap_or(Ordering::Equal));
        for (r, &h) in out.iter().enumerate() {
            rank_at_vertex[h] = r;
        }
    }
    let mut next = vec![0usize; nh];
    for h in 0..nh {
        let twin = h ^ 1;
        let v = origin(twin);
        let out = &outgoing[v];
        let r = rank_at_vertex[twin];
        next[h] = out[(r + out.len() - 1) % out.len()];
    }

    // Connected components of the vertex graph.
    let mut comp_uf = UnionFind::new(vertices.len());
    for e in &edges {
        comp_uf.union(e.from, e.to);
    }
    let mut comp_id = vec![usize::MAX; vertices.len()];
    let mut components = 0;
    for v in 0..vertices.len() {
        let r = comp_uf.find(v);
        if comp_id[r] == usize::MAX {
            comp_id[r] = components;
            components += 1;
        }
        comp_id[v] = comp_id[r];
    }

    // Boundary cycles and their signed areas.
    let mut cycle_of = vec![usize::MAX; nh];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for h0 in 0..nh {
        if cycle_of[h0] != usize::MAX {
            continue;
        }
        let id = cycles.len();
        let mut cyc = Vec::new();
        let mut h = h0;
        while cycle_of[h] == usize::MAX {
            cycle_of[h] = id;
            cyc.push(h);
            h = next[h];
        }
        cycles.push(cyc);
    }
    let half_arc = |h: usize| {
        let e = &edges[h / 2];
        if h % 2 == 0 {
            (e.start_angle, e.sweep)
        } else {
            (e.start_angle + e.sweep, -e.sweep)
        }
    };
    let areas: Vec<f64> = cycles
        .iter()
        .map(|cyc| {
            cyc.iter()
                .map(|&h| {
                    let (s, w) = half_arc(h);
                    arc_signed_area(&circles[edges[h / 2].circle], s, w)
                })
                .sum()
        })
        .collect();

    let mut faces = vec![ArrFace {
        boundary: Vec::new(),
        members: vec![false; n],
        bounded: false,
    }];
    let mut face_of_cycle = vec![usize::MAX; cycles.len()];
    for (k, cyc) in cycles.iter().enumerate() {
        if areas[k] > 0.0 {
            face_of_cycle[k] = faces.len();
            faces.push(ArrFace {
                boundary: cyc.clone(),
                members: vec![false; n],
                bounded: true,
            });
        }
    }
    let inside_cycle = |q: Point, cyc: &[usize]| {
        cyc.iter()
            .map(|&h| {
                let e = &edges[h / 2];
                ray_crossings(q, &circles[e.circle], e.start_angle, e.sweep)
            })
            .sum::<usize>()
            % 2
            == 1
    };
    for (k, cyc) in cycles.iter().enumerate() {
        if areas[k] > 0.0 {
            continue;
        }
        let comp = comp_id[origin(cyc[0])];
        let e = &edges[cyc[0] / 2];
        let q = circles[e.circle].point_at(e.start_angle + 0.5 * e.sweep);
        let host = cycles
            .iter()
            .enumerate()
            .filter(|&(m, other)| {
                areas[m] > 0.0 && comp_id[origin(other[0])] != comp && inside_cycle(q, other)
            })
            .min_by(|a, b| areas[a.0].partial_cmp(&areas[b.0]).unwrap_or(Ordering::Equal))
            .map(|(m, _)| face_of_cycle[m])
            .unwrap_or(0);
        face_of_cycle[k] = host;
        faces[host].boundary.extend_from_slice(cyc);
    }
    let mut half_edge_face = vec![0usize; nh];
    for h in 0..nh {
        half_edge_face[h] = face_of_cycle[cycle_of[h]];
    }

    let mut arr = CircleArrangement {
        circles: circles.to_vec(),
        alias,
        merged,
        vertices,
        edges,
        half_edge_face,
        next,
        faces,
        components,
    };

    // Membership from the most clearly separated boundary half-edge.
    for f in 1..arr.faces.len() {
        let h = arr.best_half_edge(&arr.faces[f].boundary);
        let own = arr.half_edge_circle(h);
        let m = arr.half_edge_midpoint(h);
        let members: Vec<bool> = (0..n)
            .map(|i| {
                let r = arr.alias[i];
                if r == own {
                    h % 2 == 0
                } else {
                    m.dist(circles[r].center) < circles[r].radius
                }
            })
            .collect();
        arr.faces[f].members = members;
    }
    arr
}

// ---------------------------------------------------------------------------
// Face tour
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingEvent {
    pub disk: usize,
    /// True when the walk moves into the disk.
    pub enter: bool,
}

/// Euler tour of a depth-first spanning tree of the face adjacency graph,
/// starting and ending at the unbounded face.
#[derive(Debug, Clone, PartialEq)]
pub struct FaceTour {
    pub visits: Vec<usize>,
    /// `events[k]` is the crossing between `visits[k]` and `visits[k + 1]`.
    pub events: Vec<CrossingEvent>,
}

pub fn face_tour(arr: &CircleArrangement) -> FaceTour {
    let nf = arr.num_faces();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nf];
    for (f, g, c) in arr.adjacent_face_pairs() {
        if f != g {
            adj[f].push((g, c));
            adj[g].push((f, c));
        }
    }
    let mut seen = vec![false; nf];
    let mut visits = vec![0usize];
    let mut events = Vec::new();
    seen[0] = true;
    // Stack of (face, next neighbor index, circle used to enter).
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, 0, usize::MAX)];
    while let Some(top) = stack.last_mut() {
        let (f, idx) = (top.0, top.1);
        if idx < adj[f].len() {
            top.1 += 1;
            let (g, c) = adj[f][idx];
            if !seen[g] {
                seen[g] = true;
                events.push(CrossingEvent {
                    disk: c,
                    enter: arr.faces[g].members[c],
                });
                visits.push(g);
                stack.push((g, 0, c));
            }
        } else {
            let (_, _, c) = stack.pop().unwrap();
            if let Some(parent) = stack.last() {
                events.push(CrossingEvent {
                    disk: c,
                    enter: arr.faces[parent.0].members[c],
                });
                visits.push(parent.0);
            }
        }
    }
    FaceTour { visits, events }
}

// ---------------------------------------------------------------------------
// Segment tree over tour positions
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SegmentNode {
    pub disks: Vec<usize>,
    pub region: ConvexArcRegion,
}

/// Segment tree over the positions of a face tour. Disk `i` is stored at the
/// canonical nodes of every maximal run of positions whose face lies outside
/// disk `i`.
#[derive(Debug, Clone)]
pub struct TourSegmentTree {
    pub len: usize,
    pub nodes: Vec<SegmentNode>,
}

impl TourSegmentTree {
    pub fn build(arr: &CircleArrangement, tour: &FaceTour, disks: &[Disk]) -> Self {
        let len = tour.visits.len();
        let mut nodes = vec![
            SegmentNode {
                disks: Vec::new(),
                region: ConvexArcRegion::WholePlane,
            };
            4 * len.max(1)
        ];
        for i in 0..disks.len() {
            let mut k = 0;
            while k < len {
                if arr.faces[tour.visits[k]].members[i] {
                    k += 1;
                    continue;
                }
                let start = k;
                while k < len && !arr.faces[tour.visits[k]].members[i] {
                    k += 1;
                }
                insert(&mut nodes, 1, 0, len, start, k, i);
            }
        }
        for node in nodes.iter_mut() {
            if !node.disks.is_empty() {
                let ds: Vec<Disk> = node.disks.iter().map(|&i| disks[i]).collect();
                node.region = common_intersection(&ds);
            }
        }
        TourSegmentTree { len, nodes }
    }

    /// Disks stored on the root-to-leaf path of position `pos`.
    pub fn path_disks(&self, pos: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let (mut node, mut lo, mut hi) = (1, 0, self.len);
        loop {
            out.extend_from_slice(&self.nodes[node].disks);
            if hi - lo == 1 {
                break;
            }
            let mid = (lo + hi) / 2;
            if pos < mid {
                node *= 2;
                hi = mid;
            } else {
                node = 2 * node + 1;
                lo = mid;
            }
        }
        out.sort_unstable();
        out
    }

    /// Visits leaves in order, passing the intersection of the regions on
    /// the root-to-leaf path; subtrees whose path intersection is empty are
    /// skipped. Stops at the first `Some` returned by `visit`.
    pub fn search<R>(
        &self,
        mut visit: impl FnMut(usize, &ConvexArcRegion) -> Option<R>,
    ) -> Option<R> {
        if self.len == 0 {
            return None;
        }
        self.search_node(1, 0, self.len, &ConvexArcRegion::WholePlane, &mut visit)
    }

    fn search_node<R>(
        &self,
        node: usize,
        lo: usize,
        hi: usize,
        acc: &ConvexArcRegion,
        visit: &mut impl FnMut(usize, &ConvexArcRegion) -> Option<R>,
    ) -> Option<R> {
        let here = intersect_region_pair(acc, &self.nodes[node].region);
        if here.is_empty() {
            return None;
        }
        if hi - lo == 1 {
            return visit(lo, &here);
        }
        let mid = (lo + hi) / 2;
        self.search_node(2 * node, lo, mid, &here, visit)
            .or_else(|| self.search_node(2 * node + 1, mid, hi, &here, visit))
    }
}

fn insert(nodes: &mut [SegmentNode], node: usize, lo: usize, hi: usize, a: usize, b: usize, i: usize) {
    if b <= lo || hi <= a {
        return;
    }
    if a <= lo && hi <= b {
        nodes[node].disks.push(i);
        return;
    }
    let mid = (lo + hi) / 2;
    insert(nodes, 2 * node, lo, mid, a, b, i);
    insert(nodes, 2 * node + 1, mid, hi, a, b, i);
}

fn intersect_region_pair(a: &ConvexArcRegion, b: &ConvexArcRegion) -> ConvexArcRegion {
    match (a, b) {
        (ConvexArcRegion::WholePlane, r) | (r, ConvexArcRegion::WholePlane) => r.clone(),
        _ => match crate::one_center::regions_nonempty(&[a, b]) {
            None => ConvexArcRegion::Empty,
            Some(_) => {
                let mut ds = a.supporting_disks();
                for d in b.supporting_disks() {
                    if !ds.contains(&d) {
                        ds.push(d);
                    }
                }
                match (a, b) {
                    (ConvexArcRegion::Point(p), _) | (_, ConvexArcRegion::Point(p)) => {
                        ConvexArcRegion::Point(*p)
                    }
                    _ => common_intersection(&ds),
                }
            }
        },
    }
}

/// Arrangement-based decision: walks the faces of the arrangement of the
/// inflated disks, and for each face tests whether the disks not containing
/// it have a common point.
pub fn decide_fast(instance: &Instance, delta: f64) -> Option<(Point, Point)> {
    let disks = decision_disks(instance, delta);
    let arr = build_arrangement(&disks);
    let tour = face_tour(&arr);
    let tree = TourSegmentTree::build(&arr, &tour, &disks);
    tree.search(|pos, region| {
        let face = &arr.faces[tour.visits[pos]];
        let inside: Vec<Disk> = disks
            .iter()
            .zip(&face.members)
            .filter(|(_, &m)| m)
            .map(|(d, _)| *d)
            .collect();
        let p1 = if inside.is_empty() {
            arr.face_sample_point(tour.visits[pos])
        } else {
            common_intersection(&inside).witness()?
        };
        match region {
            ConvexArcRegion::WholePlane => Some((p1, p1)),
            r => r.witness().map(|p2| (p1, p2)),
        }
    })
}

// ---------------------------------------------------------------------------
// Candidate values and optimization
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CandidateKind {
    Zero,
    PairTangency(usize, usize),
    TripleBoundary(usize, usize, usize),
}

impl CandidateKind {
    fn rank(&self) -> u8 {
        match self {
            CandidateKind::Zero => 0,
            CandidateKind::PairTangency(..) => 1,
            CandidateKind::TripleBoundary(..) => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidateDelta {
    pub value: f64,
    pub kind: CandidateKind,
    pub witness: Point,
}

/// Every value at which the optimum can be attained: zero, tangencies of
/// two inflated disks, and common boundary points of three, restricted to
/// `[0, δ_max]`, sorted and with near-duplicates merged.
pub fn candidate_deltas(instance: &Instance) -> Vec<CandidateDelta> {
    let disks = instance.disks();
    let (center, delta_max) = smallest_intersecting_disk(disks);
    let merge_tol = EPS_REL * instance.scale();
    let mut out = vec![CandidateDelta {
        value: 0.0,
        kind: CandidateKind::Zero,
        witness: center,
    }];
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            let (a, b) = (disks[i], disks[j]);
            let d = a.center.dist(b.center);
            let value = (0.5 * (d - a.radius - b.radius)).max(0.0);
            let dir = (b.center - a.center).normalized().unwrap_or(Point::new(1.0, 0.0));
            out.push(CandidateDelta {
                value,
                kind: CandidateKind::PairTangency(i, j),
                witness: a.center + dir * (a.radius + value).min(d),
            });
            for k in j + 1..disks.len() {
                for (p, value) in aw_circumcenter(&a, &b, &disks[k]) {
                    if value <= delta_max + merge_tol {
                        out.push(CandidateDelta {
                            value,
                            kind: CandidateKind::TripleBoundary(i, j, k),
                            witness: p,
                        });
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| {
        a.value
            .partial_cmp(&b.value)
            .unwrap_or(Ordering::Equal)
            .then(a.kind.rank().cmp(&b.kind.rank()))
            .then(a.kind.cmp(&b.kind))
    });
    let mut merged: Vec<CandidateDelta> = Vec::with_capacity(out.len());
    for c in out {
        if merged.last().map_or(true, |l| c.value - l.value > merge_tol) {
            merged.push(c);
        }
    }
    merged
}

/// Smallest δ for which the inflated disks can be pierced by two points,
/// found by binary search over the candidate values.
pub fn solve_exact(instance: &Instance) -> PiercingSolution {
    let norm = instance.normalized(NormalizationMode::Piercing);
    let candidates = candidate_deltas(&norm);
    let decide = |delta: f64| decide_fast(&norm, delta);
    let (mut lo, mut hi) = (0usize, candidates.len());
    let mut found: Option<(f64, Point, Point)> = None;
    // Invariant: every candidate below `lo` is infeasible.
    while lo < hi {
        let mid = (lo + hi) / 2;
        match decide(candidates[mid].value) {
            Some((p1, p2)) => {
                found = Some((candidates[mid].value, p1, p2));
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    let (delta, p1, p2) = found.unwrap_or_else(|| {
        let (p, delta_max) = smallest_intersecting_disk(norm.disks());
        (delta_max, p, p)
    });
    PiercingSolution { delta, p1, p2 }
}

/// Exact optimum by enumerating the bipartitions of disk centers that a
/// line can realize, with the additively weighted one-center on each side.
pub fn solve_bipartition(instance: &Instance) -> PiercingSolution {
    let norm = instance.normalized(NormalizationMode::Piercing);
    let (delta, p1, p2, _) = best_line_bipartition(norm.disks(), |side| {
        let (p, r) = smallest_intersecting_disk(side);
        (p, r)
    });
    PiercingSolution { delta, p1, p2 }
}

/// Minimizes `max(cost(A), cost(B))` over line bipartitions `A | B` of the
/// disk centers. Returns the value, both centers and the side mask.
pub(crate) fn best_line_bipartition(
    disks: &[Disk],
    cost: impl Fn(&[Disk]) -> (Point, f64),
) -> (f64, Point, Point, Vec<bool>) {
    let centers: Vec<Point> = disks.iter().map(|d| d.center).collect();
    let mut best = (f64::INFINITY, Point::ORIGIN, Point::ORIGIN, Vec::new());
    let mut a = Vec::with_capacity(disks.len());
    let mut b = Vec::with_capacity(disks.len());
    for_each_line_bipartition(&centers, |mask| {
        a.clear();
        b.clear();
        for (d, &m) in disks.iter().zip(mask) {
            if m {
                a.push(*d);
            } else {
                b.push(*d);
            }
        }
        let (big, small, big_first) = if a.len() >= b.len() {
            (&a, &b, true)
        } else {
            (&b, &a, false)
        };
        let (pb, rb) = cost(big);
        if rb >= best.0 {
            return;
        }
        let (ps, rs) = if small.is_empty() { (pb, 0.0) } else { cost(small) };
        let r = rb.max(rs);
        if r < best.0 {
            let (p1, p2) = if big_first { (pb, ps) } else { (ps, pb) };
            best = (r, p1, p2, mask.to_vec());
        }
    });
    best
}
