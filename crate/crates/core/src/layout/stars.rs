//! Star drawings and the radial layout.

use std::f64::consts::PI;

use thiserror::Error;

use crate::drawing::{Drawing, DrawingMeta};
use crate::geometry::Point;
use crate::tree::{star, RootedTree};

/// Angle step of the spiral star that keeps its ply at 2.
pub const DEFAULT_ANGLE_STEP: f64 = 2.4;

#[derive(Debug, Error, PartialEq)]
pub enum StarError {
    #[error("a star needs at least one leaf")]
    NoLeaves,
    #[error("ratio must exceed 1, got {0}")]
    Ratio(f64),
    #[error("angle step must lie in (0, 2π), got {0}")]
    AngleStep(f64),
    #[error("radius must be positive, got {0}")]
    Radius(f64),
    #[error("shrink factor must be positive, got {0}")]
    Shrink(f64),
}

/// Spiral star: leaf `i` (ids `1..=leaves`) at polar radius `ρ^i` and angle
/// `i·θ`, center `0` at the origin.
pub fn star_ply2_layout(leaves: usize, ratio: f64, angle_step: f64) -> Result<Drawing, StarError> {
    if leaves == 0 {
        return Err(StarError::NoLeaves);
    }
    if !(ratio > 1.0 && ratio.is_finite()) {
        return Err(StarError::Ratio(ratio));
    }
    if !(angle_step > 0.0 && angle_step < 2.0 * PI) {
        return Err(StarError::AngleStep(angle_step));
    }
    let tree = star(leaves).expect("leaves >= 1");
    let mut pos = vec![Point::ORIGIN];
    pos.extend((0..leaves).map(|i| Point::polar(i as f64 * angle_step) * ratio.powi(i as i32)));
    let meta = DrawingMeta::new("star2")
        .with("leaves", leaves)
        .with("ratio", ratio)
        .with("angle_step", angle_step);
    Ok(Drawing::of_tree(&tree, pos, meta))
}

/// Leaves evenly spaced on a circle of the given radius around the center.
pub fn regular_star_layout(leaves: usize, radius: f64) -> Result<Drawing, StarError> {
    if leaves == 0 {
        return Err(StarError::NoLeaves);
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(StarError::Radius(radius));
    }
    let tree = star(leaves).expect("leaves >= 1");
    let step = 2.0 * PI / leaves as f64;
    let mut pos = vec![Point::ORIGIN];
    pos.extend((0..leaves).map(|i| Point::polar(i as f64 * step) * radius));
    let meta = DrawingMeta::new("regular-star")
        .with("leaves", leaves)
        .with("radius", radius);
    Ok(Drawing::of_tree(&tree, pos, meta))
}

/// Radial drawing with no ply guarantee: the root sits at the origin, every
/// vertex owns an angular wedge split evenly among its children, and an edge
/// whose child is at depth `d` has length `shrink^(1-d)`. Lengths thus shrink
/// by the factor `shrink` per level toward the root; `shrink < 1` makes deep
/// edges long, which is what domination chains need.
pub fn radial_layout(tree: &RootedTree, shrink: f64) -> Result<Drawing, StarError> {
    if !(shrink > 0.0 && shrink.is_finite()) {
        return Err(StarError::Shrink(shrink));
    }
    let mut pos = vec![Point::ORIGIN; tree.len()];
    // (start angle, width) of each vertex's wedge.
    let mut wedge = vec![(0.0, 2.0 * PI); tree.len()];
    let mut len = vec![1.0; tree.len()];
    for v in tree.bfs_order() {
        let kids = tree.children(v);
        if kids.is_empty() {
            continue;
        }
        let (start, width) = wedge[v];
        let w = width / kids.len() as f64;
        let l = if tree.parent(v).is_some() { len[v] / shrink } else { 1.0 };
        for (k, &c) in kids.iter().enumerate() {
            let a = start + w * k as f64;
            wedge[c] = (a, w);
            len[c] = l;
            pos[c] = pos[v] + Point::polar(a + w / 2.0) * l;
        }
    }
    let meta = DrawingMeta::new("radial").with("shrink", shrink);
    Ok(Drawing::of_tree(tree, pos, meta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{complete_kary, path};

    #[test]
    fn spiral_radii_and_angles() {
        let d = star_ply2_layout(10, 2.0, DEFAULT_ANGLE_STEP).unwrap();
        assert_eq!(d.len(), 11);
        for i in 0..10u64 {
            let p = d.position_of(i + 1).unwrap();
            assert!((p.norm() - 2f64.powi(i as i32)).abs() < 1e-12 * p.norm());
        }
        assert_eq!(star_ply2_layout(6, 1.0, 2.4), Err(StarError::Ratio(1.0)));
        assert_eq!(star_ply2_layout(1, 2.0, 2.4).unwrap().edges().len(), 1);
    }

    #[test]
    fn regular_star_spacing() {
        let d = regular_star_layout(6, 1.0).unwrap();
        let a = d.position_of(1).unwrap();
        let b = d.position_of(2).unwrap();
        assert!((a.dist(b) - 1.0).abs() < 1e-12);
        assert!(regular_star_layout(0, 1.0).is_err());
    }

    #[test]
    fn radial_lengths_shrink_per_level() {
        let t = complete_kary(3, 3).unwrap();
        let d = radial_layout(&t, 0.25).unwrap();
        let ann = t.annotate();
        for (p, c) in t.edges() {
            let l = d.position(p).dist(d.position(c));
            let want = 4f64.powi(ann.depth[c] as i32 - 1);
            assert!((l - want).abs() < 1e-12 * want);
        }
        let d = radial_layout(&path(4).unwrap(), 1.0).unwrap();
        assert!(d.edge_lengths().all(|l| (l - 1.0).abs() < 1e-12));
    }
}
