//! Spatial index over disks of widely varying radii.
//!
//! Disks are bucketed by size class `c = floor(log2 r)`; class `c` uses a
//! uniform grid of cell side `2^(c+1)`, so a disk can only reach points in
//! the cells around its own.

use std::collections::HashMap;

use super::{PlyDisk, Tolerance};
use crate::geometry::Point;

struct Class {
    cell: f64,
    max_radius: f64,
    members: Vec<usize>,
    grid: HashMap<(i64, i64), Vec<usize>>,
}

impl Class {
    fn key(&self, p: Point) -> (i64, i64) {
        // `as` saturates, which keeps far-away cells ordered.
        ((p.x / self.cell).floor() as i64, (p.y / self.cell).floor() as i64)
    }

    /// Calls `f` on every member whose center may lie within `reach` of `p`.
    fn visit(&self, p: Point, reach: f64, mut f: impl FnMut(usize)) {
        let k = (reach / self.cell).ceil() + 1.0;
        let span = 2.0 * k + 1.0;
        if !(span * span < self.members.len() as f64) {
            self.members.iter().for_each(|&j| f(j));
            return;
        }
        let k = k as i64;
        let (cx, cy) = self.key(p);
        for x in cx.saturating_sub(k)..=cx.saturating_add(k) {
            for y in cy.saturating_sub(k)..=cy.saturating_add(k) {
                if let Some(v) = self.grid.get(&(x, y)) {
                    v.iter().for_each(|&j| f(j));
                }
            }
        }
    }
}

pub(crate) struct DiskIndex<'a> {
    disks: &'a [PlyDisk],
    classes: Vec<(i32, Class)>,
    class_of: Vec<usize>,
}

impl<'a> DiskIndex<'a> {
    pub(crate) fn new(disks: &'a [PlyDisk]) -> DiskIndex<'a> {
        let mut by_class: HashMap<i32, Vec<usize>> = HashMap::new();
        for (i, d) in disks.iter().enumerate() {
            by_class.entry(d.radius.log2().floor() as i32).or_default().push(i);
        }
        let mut classes: Vec<(i32, Class)> = by_class
            .into_iter()
            .map(|(c, members)| {
                let mut class = Class {
                    cell: 2f64.powi(c + 1),
                    max_radius: members.iter().map(|&i| disks[i].radius).fold(0.0, f64::max),
                    members,
                    grid: HashMap::new(),
                };
                for &i in &class.members {
                    let key = class.key(disks[i].center);
                    class.grid.entry(key).or_default().push(i);
                }
                (c, class)
            })
            .collect();
        classes.sort_by_key(|&(c, _)| c);
        let mut class_of = vec![0; disks.len()];
        for (k, (_, class)) in classes.iter().enumerate() {
            for &i in &class.members {
                class_of[i] = k;
            }
        }
        DiskIndex {
            disks,
            classes,
            class_of,
        }
    }

    /// Number of disks containing `q` (open, shrunk by the tolerance band).
    pub(crate) fn depth(&self, q: Point, tol: Tolerance) -> usize {
        let mut count = 0;
        for (_, class) in &self.classes {
            let reach = class.max_radius * (1.0 + tol.0) + tol.0 * q.magnitude();
            class.visit(q, reach, |j| {
                if tol.point_inside(&self.disks[j], q) {
                    count += 1;
                }
            });
        }
        count
    }

    /// For every disk, the other disks whose open interiors may meet it
    /// (distance below the sum of radii plus the band). Symmetric.
    pub(crate) fn neighbours(&self, tol: Tolerance) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.disks.len()];
        for (i, di) in self.disks.iter().enumerate() {
            let ci = self.class_of[i];
            for (k, (_, class)) in self.classes.iter().enumerate().skip(ci) {
                let reach = (di.radius + class.max_radius) * (1.0 + 2.0 * tol.0)
                    + 2.0 * tol.0 * (di.center.magnitude() + di.radius + class.max_radius);
                class.visit(di.center, reach, |j| {
                    if (k > ci || j > i) && tol.may_overlap(di, &self.disks[j]) {
                        adj[i].push(j);
                        adj[j].push(i);
                    }
                });
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }
}
