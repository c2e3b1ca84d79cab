//! Exact ply by angular sweeps along every circle.
//!
//! The deepest open cell of the arrangement is bounded by an arc of some
//! circle `i`; points just inside that arc lie in disk `i` and in every disk
//! that covers the arc. So the ply is the maximum over `i` of one plus the
//! number of disks containing circle `i` entirely plus the largest number of
//! open arcs of circle `i` sharing a point.

use std::f64::consts::TAU;

use super::{DiskIndex, PlyDisk, PlyDiskSet, PlyError, PlyMethod, PlyReport, Tolerance};
use crate::geometry::{normalize_angle, Point};

/// Part of circle `i` lying strictly inside disk `j`.
pub(crate) enum Cover {
    None,
    Full,
    /// Open arc `(center - half, center + half)`.
    Arc { center: f64, half: f64 },
}

pub(crate) fn cover(a: &PlyDisk, b: &PlyDisk, tol: Tolerance) -> Cover {
    let d = a.center.dist(b.center);
    let band = tol.band(a, b);
    if d >= a.radius + b.radius - band {
        return Cover::None;
    }
    if d + a.radius <= b.radius + band {
        return Cover::Full;
    }
    if d + b.radius <= a.radius + band {
        return Cover::None;
    }
    // (r_a² + d² - r_b²) / (2 r_a d), arranged so huge radii do not overflow.
    let cos = (a.radius + (d - b.radius) / a.radius * (d + b.radius)) / (2.0 * d);
    Cover::Arc {
        center: (b.center - a.center).angle(),
        half: cos.clamp(-1.0, 1.0).acos(),
    }
}

/// Largest number of open arcs sharing a point, and an open angular range
/// `(lo, hi)` (possibly with `hi > 2π`) where it is attained.
pub(crate) fn max_stab(arcs: &[(f64, f64)]) -> (usize, f64, f64) {
    if arcs.is_empty() {
        return (0, 0.0, TAU);
    }
    // (angle, +1 start / -1 end); arcs through angle 0 start out open.
    let mut events = Vec::with_capacity(2 * arcs.len());
    let mut count = 0usize;
    for &(center, half) in arcs {
        let start = normalize_angle(center - half);
        let end = start + 2.0 * half;
        if end > TAU {
            count += 1;
            events.push((end - TAU, -1i32));
            events.push((start, 1));
        } else {
            events.push((start, 1));
            events.push((end, -1));
        }
    }
    events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let first = events[0].0;
    let last = events[events.len() - 1].0;
    let mut best = (count, last - TAU, first);
    for (k, &(angle, kind)) in events.iter().enumerate() {
        count = (count as i64 + kind as i64) as usize;
        if kind > 0 && count > best.0 {
            let next = events.get(k + 1).map_or(first + TAU, |e| e.0);
            best = (count, angle, next);
        }
    }
    best
}

/// Exact ply-number with a witness point.
pub fn exact_ply(disks: &PlyDiskSet, tol: f64) -> Result<PlyReport, PlyError> {
    let t = Tolerance::check(tol)?;
    let ds = &disks.disks;
    if ds.is_empty() {
        return Err(PlyError::Empty);
    }
    let index = DiskIndex::new(ds);
    let adj = index.neighbours(t);

    let mut best = (1, 0usize, 0.0, 0.0);
    let mut arcs = Vec::new();
    for (i, a) in ds.iter().enumerate() {
        arcs.clear();
        let mut full = 0;
        for &j in &adj[i] {
            match cover(a, &ds[j], t) {
                Cover::None => {}
                Cover::Full => full += 1,
                Cover::Arc { center, half } => arcs.push((center, half)),
            }
        }
        if 1 + full + arcs.len() <= best.0 {
            continue;
        }
        let (stab, lo, hi) = max_stab(&arcs);
        if 1 + full + stab > best.0 {
            best = (1 + full + stab, i, lo, hi);
        }
    }

    let (ply, i, lo, hi) = best;
    let witness = if ply == 1 {
        ds[0].center
    } else {
        find_witness(&index, &ds[i], lo, hi, ply, t)
    };
    Ok(PlyReport {
        ply,
        witness,
        method: PlyMethod::ExactSweep,
        tolerance: tol,
    })
}

/// A point just inside disk `d` along the angular range `(lo, hi)` whose
/// depth equals `ply`; falls back to the deepest point tried.
fn find_witness(index: &DiskIndex, d: &PlyDisk, lo: f64, hi: f64, ply: usize, t: Tolerance) -> Point {
    let mut fallback = (0, d.center);
    for frac in [0.5, 0.25, 0.75, 0.1, 0.9, 0.01, 0.99] {
        let theta = lo + (hi - lo) * frac;
        for eta in [1e-6, 1e-9, 1e-4, 1e-3, 1e-2, 1e-1, 1e-11] {
            let q = d.center + Point::polar(theta) * (d.radius * (1.0 - eta));
            let depth = index.depth(q, t);
            if depth == ply {
                return q;
            }
            if depth > fallback.0 {
                fallback = (depth, q);
            }
        }
    }
    fallback.1
}
