//! Ply-disks and the ply-number of a drawing.
//!
//! The ply-disk of a vertex is the open disk centered at it whose radius is
//! half its longest incident edge. The ply-number is the largest number of
//! ply-disks sharing a point.
//!
//! Comparisons use a relative tolerance `tol`: two disks overlap only if
//! their centers are closer than `r_i + r_j - tol·(r_i + r_j + |c_i| + |c_j|)`
//! (`|·|` the largest absolute coordinate), and a point `q` lies in a disk
//! only if `|c - q| < r - tol·(r + |c| + |q|)`. Tangent disks, which the
//! layouts produce on purpose, thus never overlap after rounding.

mod census;
mod index;
mod oracle;
mod sweep;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::drawing::Drawing;
use crate::geometry::Point;
use crate::tree::VertexId;

pub use census::{annulus_census, edge_length_ratio, radius_class, AnnulusCensus};
pub use oracle::{candidate_ply, sample_ply};
pub use sweep::exact_ply;

pub(crate) use index::DiskIndex;

/// Default relative tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum PlyError {
    #[error("no disks")]
    Empty,
    #[error("edge {0}-{1} has zero length")]
    ZeroLengthEdge(VertexId, VertexId),
    #[error("vertex {0} has no incident edge")]
    Isolated(VertexId),
    #[error("drawing has no edges")]
    NoEdges,
    #[error("drawing is not a star")]
    NotAStar,
    #[error("tolerance must be a finite non-negative number, got {0}")]
    Tolerance(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlyDisk {
    pub id: VertexId,
    pub center: Point,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PlyDiskSet {
    pub disks: Vec<PlyDisk>,
}

impl PlyDiskSet {
    pub fn new(disks: Vec<PlyDisk>) -> PlyDiskSet {
        PlyDiskSet { disks }
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    /// Bounding box `(min, max)` of the disks; `None` when empty.
    pub fn bounds(&self) -> Option<(Point, Point)> {
        let mut it = self.disks.iter();
        let d = it.next()?;
        let init = (
            Point::new(d.center.x - d.radius, d.center.y - d.radius),
            Point::new(d.center.x + d.radius, d.center.y + d.radius),
        );
        Some(it.fold(init, |(lo, hi), d| {
            (
                Point::new(lo.x.min(d.center.x - d.radius), lo.y.min(d.center.y - d.radius)),
                Point::new(hi.x.max(d.center.x + d.radius), hi.y.max(d.center.y + d.radius)),
            )
        }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PlyMethod {
    #[serde(rename = "exact-sweep")]
    ExactSweep,
    #[serde(rename = "candidate-oracle")]
    CandidateOracle,
    #[serde(rename = "sampling")]
    Sampling,
}

impl PlyMethod {
    pub fn name(self) -> &'static str {
        match self {
            PlyMethod::ExactSweep => "exact-sweep",
            PlyMethod::CandidateOracle => "candidate-oracle",
            PlyMethod::Sampling => "sampling",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlyReport {
    pub ply: usize,
    pub witness: Point,
    pub method: PlyMethod,
    pub tolerance: f64,
}

impl PlyReport {
    pub fn to_json(&self) -> String {
        json!({
            "ply": self.ply,
            "witness": [self.witness.x, self.witness.y],
            "method": self.method,
            "tolerance": self.tolerance,
        })
        .to_string()
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Tolerance(pub f64);

impl Tolerance {
    pub(crate) fn check(tol: f64) -> Result<Tolerance, PlyError> {
        if tol.is_finite() && tol >= 0.0 {
            Ok(Tolerance(tol))
        } else {
            Err(PlyError::Tolerance(tol))
        }
    }

    pub(crate) fn band(self, a: &PlyDisk, b: &PlyDisk) -> f64 {
        self.0 * (a.radius + b.radius + a.center.magnitude() + b.center.magnitude())
    }

    pub(crate) fn point_inside(self, d: &PlyDisk, q: Point) -> bool {
        d.center.dist(q) < d.radius - self.0 * (d.radius + d.center.magnitude() + q.magnitude())
    }

    /// Loose test used to prune pairs; never rejects an overlapping pair.
    pub(crate) fn may_overlap(self, a: &PlyDisk, b: &PlyDisk) -> bool {
        a.center.dist(b.center) < a.radius + b.radius + self.band(a, b)
    }
}

/// One disk per vertex; a single-vertex drawing yields no disks.
pub fn ply_disks(drawing: &Drawing) -> Result<PlyDiskSet, PlyError> {
    if drawing.len() == 1 {
        return Ok(PlyDiskSet::default());
    }
    for &(u, v) in drawing.edges() {
        if drawing.edge_length((u, v)) == 0.0 {
            return Err(PlyError::ZeroLengthEdge(drawing.id(u), drawing.id(v)));
        }
    }
    let longest = drawing.longest_incident();
    let mut disks = Vec::with_capacity(drawing.len());
    for (i, &l) in longest.iter().enumerate() {
        if l == 0.0 {
            return Err(PlyError::Isolated(drawing.id(i)));
        }
        disks.push(PlyDisk {
            id: drawing.id(i),
            center: drawing.position(i),
            radius: l / 2.0,
        });
    }
    Ok(PlyDiskSet { disks })
}

/// Number of disks strictly containing `q` under the tolerance model.
pub fn depth_at_point(disks: &PlyDiskSet, q: Point, tol: f64) -> usize {
    let tol = Tolerance(tol.max(0.0));
    disks.disks.iter().filter(|d| tol.point_inside(d, q)).count()
}
