//! Edge-length ratio and the annulus census of star drawings.

use std::collections::BTreeMap;

use super::{exact_ply, ply_disks, PlyError};
use crate::drawing::Drawing;

/// Longest edge over shortest edge.
pub fn edge_length_ratio(drawing: &Drawing) -> Result<f64, PlyError> {
    let (lo, hi) = drawing
        .edge_lengths()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), l| (lo.min(l), hi.max(l)));
    if drawing.edges().is_empty() {
        return Err(PlyError::NoEdges);
    }
    Ok(hi / lo)
}

/// Leaf ply-disks of a star grouped by radius class after rescaling the
/// longest edge to 2: class `j ≥ 1` holds radii in `(3^-j, 3^(1-j)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnulusCensus {
    pub classes: BTreeMap<u32, usize>,
    /// Exact ply of the drawing.
    pub ply: usize,
    /// Vertices of the star.
    pub n: usize,
    /// Every class holds at most `80·p` disks.
    pub bound_ok: bool,
    pub edge_ratio: f64,
    /// `3^(n / 80p)`.
    pub ratio_bound: f64,
    /// `edge_ratio ≥ 3^(n / 80p)`.
    pub ratio_ok: bool,
    /// `3^(⌈(n-1) / 80p⌉ - 1)`, what the class counts alone force.
    pub forced_ratio: f64,
    /// `edge_ratio ≥ forced_ratio`.
    pub forced_ratio_ok: bool,
}

pub fn radius_class(r: f64) -> u32 {
    let mut j = 1;
    let mut hi = 1.0;
    while r <= hi / 3.0 {
        hi /= 3.0;
        j += 1;
    }
    j
}

pub fn annulus_census(drawing: &Drawing, tol: f64) -> Result<AnnulusCensus, PlyError> {
    let n = drawing.len();
    if drawing.edges().is_empty() {
        return Err(PlyError::NoEdges);
    }
    let mut degree = vec![0usize; n];
    for &(u, v) in drawing.edges() {
        degree[u] += 1;
        degree[v] += 1;
    }
    if drawing.edges().len() != n - 1 || !degree.contains(&(n - 1)) {
        return Err(PlyError::NotAStar);
    }
    let ply = exact_ply(&ply_disks(drawing)?, tol)?.ply;
    let longest = drawing.edge_lengths().fold(0.0, f64::max);
    let mut classes = BTreeMap::new();
    for &(u, v) in drawing.edges() {
        // Leaf radius ℓ/2 after scaling the longest edge to 2.
        let r = drawing.edge_length((u, v)) / longest;
        *classes.entry(radius_class(r)).or_insert(0) += 1;
    }
    let cap = 80 * ply;
    let edge_ratio = edge_length_ratio(drawing)?;
    let ratio_bound = 3f64.powf(n as f64 / cap as f64);
    let forced_ratio = 3f64.powi((n - 1).div_ceil(cap) as i32 - 1);
    Ok(AnnulusCensus {
        bound_ok: classes.values().all(|&c| c <= cap),
        classes,
        ply,
        n,
        edge_ratio,
        ratio_bound,
        ratio_ok: edge_ratio >= ratio_bound,
        forced_ratio,
        forced_ratio_ok: edge_ratio >= forced_ratio,
    })
}
