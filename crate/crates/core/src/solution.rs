use crate::geom::{farthest_point_in_disk_min2, Disk, Point};

/// How one input disk is covered by a two-disk solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverTag {
    InC1,
    InC2,
    /// Covered only by the union of both disks.
    Split,
}

/// Two congruent disks `(c1, r)` and `(c2, r)` with a per-disk certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoCenterSolution {
    pub c1: Point,
    pub c2: Point,
    pub r: f64,
    pub certificate: Vec<CoverTag>,
}

impl TwoCenterSolution {
    pub fn disks(&self) -> (Disk, Disk) {
        (
            Disk {
                center: self.c1,
                radius: self.r,
            },
            Disk {
                center: self.c2,
                radius: self.r,
            },
        )
    }

    /// Builds a solution with certificate tags derived from geometry: a disk
    /// is tagged with a single center when that center's disk contains it,
    /// and `Split` otherwise.
    pub fn tagged(c1: Point, c2: Point, r: f64, disks: &[Disk], tol: f64) -> Self {
        let certificate = disks
            .iter()
            .map(|d| {
                let d1 = c1.dist(d.center) + d.radius;
                let d2 = c2.dist(d.center) + d.radius;
                if d1 <= r + tol && d1 <= d2 {
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

    /// True when every disk is covered as its tag claims, up to `tol`.
    pub fn certifies(&self, disks: &[Disk], tol: f64) -> bool {
        disks.len() == self.certificate.len()
            && disks
                .iter()
                .zip(&self.certificate)
                .all(|(d, tag)| match tag {
                    CoverTag::InC1 => self.c1.dist(d.center) + d.radius <= self.r + tol,
                    CoverTag::InC2 => self.c2.dist(d.center) + d.radius <= self.r + tol,
                    CoverTag::Split => {
                        farthest_point_in_disk_min2(d, self.c1, self.c2).1 <= self.r + tol
                    }
                })
    }
}

/// Result of the two-piercing optimization: every input disk inflated by
/// `delta` contains `p1` or `p2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiercingSolution {
    pub delta: f64,
    pub p1: Point,
    pub p2: Point,
}

impl PiercingSolution {
    /// Largest violation of `min(|p1 - c|, |p2 - c|) <= r + delta` over `disks`.
    pub fn max_violation(&self, disks: &[Disk]) -> f64 {
        disks
            .iter()
            .map(|d| {
                self.p1.dist(d.center).min(self.p2.dist(d.center)) - d.radius - self.delta
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }
}
