//! Recursive sector layout over the heavy-path decomposition.
//!
//! Every heavy path `μ` at depth `d` owns a sector with its apex at the
//! path's anchor, radius `unit · b^(h-d) · n_μ` (times `λ` at the root) and
//! opening angle `π`
//! (half-disk mode) or `π/2` (quarter-disk mode), where `h` is the height of
//! the decomposition. The path runs along the sector's bisector.
//!
//! Inner paths use DrawPath lengths scaled by `s = unit · b^(h-d-1)`; every
//! path vertex `v_i` reserves a guard disk of radius `s · w_i`. The subtrees
//! hanging at `v_i` get sectors with apex `v_i` inside that guard disk, one
//! per slot: above/below the path line in half-disk mode, the four quadrants
//! of the local frame in quarter-disk mode. Leaf paths use unit edges.
//!
//! In quarter-disk mode the anchor edge is lengthened to
//! `max(ℓ, λ·w_1, ℓ(v_1,v_2)/√2)` so that the first guard disk and the
//! ply-disk of `v_1` stay inside the 90° wedge. The path stays a 2-drawing
//! and its total length stays below `6 · s · n_μ`.
//!
//! Each level adds at most 2 to the ply, so the drawing has ply at most
//! `2 · (h + 1)`. [`validate_plan`] checks the containment facts on the
//! produced coordinates.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

use thiserror::Error;

use super::drawpath::drawpath_lengths;
use crate::drawing::{Drawing, DrawingMeta};
use crate::geometry::{Point, Sector};
use crate::heavy_path::{decompose, HeavyPathTree};
use crate::tree::{RootedTree, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectorMode {
    /// Half-disks; at most 2 hanging subtrees per path vertex.
    HalfDisk,
    /// Quarter-disks; at most 4 hanging subtrees per path vertex.
    QuarterDisk,
}

impl SectorMode {
    pub fn half_angle(self) -> f64 {
        match self {
            SectorMode::HalfDisk => FRAC_PI_2,
            SectorMode::QuarterDisk => FRAC_PI_4,
        }
    }

    /// Bisector offsets of the child slots relative to the path direction.
    pub fn slots(self) -> &'static [f64] {
        match self {
            SectorMode::HalfDisk => &[FRAC_PI_2, -FRAC_PI_2],
            SectorMode::QuarterDisk => &[FRAC_PI_4, -FRAC_PI_4, 3.0 * FRAC_PI_4, -3.0 * FRAC_PI_4],
        }
    }

    pub fn capacity(self) -> usize {
        self.slots().len()
    }

    pub fn name(self) -> &'static str {
        match self {
            SectorMode::HalfDisk => "half",
            SectorMode::QuarterDisk => "quarter",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayoutConfig {
    pub mode: SectorMode,
    /// Geometric base `b` between consecutive decomposition levels.
    pub base: f64,
    /// Anchor-edge inflation `λ`.
    pub inflation: f64,
    /// Minimum edge length. The layout scales by a relative margin of order
    /// `1e-14 · b^h · n` so that rounded coordinates still respect it.
    pub unit: f64,
}

impl Default for LayoutConfig {
    fn default() -> Self {
        LayoutConfig {
            mode: SectorMode::QuarterDisk,
            base: 6.0,
            inflation: SQRT_2,
            unit: 1.0,
        }
    }
}

impl LayoutConfig {
    pub fn half_disk() -> LayoutConfig {
        LayoutConfig {
            mode: SectorMode::HalfDisk,
            inflation: 1.0,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), LayoutError> {
        let bad = |msg: String| Err(LayoutError::InvalidConfig(msg));
        if !(self.base.is_finite() && self.base >= 6.0) {
            return bad(format!("base must be a finite real >= 6, got {}", self.base));
        }
        if !(self.inflation >= 1.0 && self.inflation <= 2.0) {
            return bad(format!("inflation must lie in [1, 2], got {}", self.inflation));
        }
        if self.mode == SectorMode::QuarterDisk && self.inflation < SQRT_2 * (1.0 - 1e-12) {
            return bad(format!(
                "quarter-disk mode needs inflation >= sqrt(2), got {}",
                self.inflation
            ));
        }
        if !(self.unit.is_finite() && self.unit > 0.0) {
            return bad(format!("unit must be positive, got {}", self.unit));
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum LayoutError {
    #[error("vertex {vertex} has {hanging} hanging subtrees, {mode} mode allows {capacity}")]
    CapacityExceeded {
        vertex: VertexId,
        hanging: usize,
        capacity: usize,
        mode: &'static str,
    },
    #[error("invalid layout configuration: {0}")]
    InvalidConfig(String),
}

/// Geometry reserved for one heavy path.
#[derive(Debug, Clone, PartialEq)]
pub struct NodePlan {
    pub sector: Sector,
    /// Path scale `s`; `unit` for leaf paths.
    pub scale: f64,
    /// Drawn edge lengths, anchor edge first.
    pub lengths: Vec<f64>,
    /// Guard radius per path vertex; empty for leaf paths.
    pub guards: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectorPlan {
    pub config: LayoutConfig,
    /// `config.unit` enlarged by the rounding margin; all lengths scale with it.
    pub unit: f64,
    pub decomposition: HeavyPathTree,
    /// Indexed by decomposition node id.
    pub nodes: Vec<NodePlan>,
}

impl SectorPlan {
    pub fn heavy_height(&self) -> usize {
        self.decomposition.height()
    }

    /// Position of the dummy anchor of the root path.
    pub fn root_apex(&self) -> Point {
        self.nodes[self.decomposition.root_node].sector.apex
    }

    pub fn root_radius(&self) -> f64 {
        self.nodes[self.decomposition.root_node].sector.radius
    }
}

/// Draws `tree` with ply at most `2·(h+1)`; see the module docs.
pub fn layout_logply(
    tree: &RootedTree,
    config: &LayoutConfig,
) -> Result<(Drawing, SectorPlan), LayoutError> {
    config.validate()?;
    let hpt = decompose(tree);
    let capacity = config.mode.capacity();
    for node in &hpt.nodes {
        for &v in &node.path {
            let hanging = node.children.iter().filter(|&&(_, a)| a == v).count();
            if hanging > capacity {
                return Err(LayoutError::CapacityExceeded {
                    vertex: tree.id(v),
                    hanging,
                    capacity,
                    mode: config.mode.name(),
                });
            }
        }
    }

    let h = hpt.height() as i32;
    let b = config.base;
    // Coordinates of magnitude up to R carry rounding errors near ε·R·unit;
    // a matching relative margin keeps every measured edge at least `unit`.
    let unit = config.unit * (1.0 + 64.0 * f64::EPSILON * config.inflation * b.powi(h) * tree.len() as f64);
    let mut positions = vec![Point::ORIGIN; tree.len()];
    let mut plans: Vec<Option<NodePlan>> = vec![None; hpt.nodes.len()];
    plans[hpt.root_node] = Some(NodePlan {
        sector: Sector {
            apex: Point::ORIGIN,
            direction: Point::new(0.0, 1.0),
            half_angle: config.mode.half_angle(),
            radius: unit * config.inflation * b.powi(h) * tree.len() as f64,
        },
        scale: 0.0,
        lengths: Vec::new(),
        guards: Vec::new(),
    });

    for id in hpt.bfs_order() {
        let node = &hpt.nodes[id];
        let plan = plans[id].as_mut().expect("parent placed first");
        let (apex, dir) = (plan.sector.apex, plan.sector.direction);
        if node.is_leaf() {
            plan.scale = unit;
            plan.lengths = vec![unit; node.path.len()];
        } else {
            let s = unit * b.powi(h - node.depth as i32 - 1);
            let mut lengths = drawpath_lengths(&node.weights).expect("weights are positive");
            let mut anchor = lengths[0].max(config.inflation * node.weights[0] as f64);
            if config.mode == SectorMode::QuarterDisk && lengths.len() > 1 {
                anchor = anchor.max(lengths[1] / SQRT_2);
            }
            lengths[0] = anchor;
            plan.scale = s;
            plan.lengths = lengths.iter().map(|l| l * s).collect();
            plan.guards = node.weights.iter().map(|&w| w as f64 * s).collect();
        }

        let mut t = 0.0;
        for (&v, &l) in node.path.iter().zip(&plan.lengths) {
            t += l;
            positions[v] = apex + dir * t;
        }

        let scale = plan.scale;
        let mut used = std::collections::HashMap::<usize, usize>::new();
        for &(child, anchor) in &node.children {
            let slot = used.entry(anchor).or_insert(0);
            let offset = config.mode.slots()[*slot];
            *slot += 1;
            let cnode = &hpt.nodes[child];
            plans[child] = Some(NodePlan {
                sector: Sector {
                    apex: positions[anchor],
                    direction: dir.rotate(offset),
                    half_angle: config.mode.half_angle(),
                    // unit·b^(h-d-1)·n_ν, i.e. the parent's scale times n_ν.
                    radius: scale * cnode.total_weight as f64,
                },
                scale: 0.0,
                lengths: Vec::new(),
                guards: Vec::new(),
            });
        }
    }

    // Put the root vertex at the origin.
    let shift = -positions[tree.root()];
    for p in &mut positions {
        *p = *p + shift;
    }
    let mut nodes: Vec<NodePlan> = plans.into_iter().map(|p| p.unwrap()).collect();
    for plan in &mut nodes {
        plan.sector.apex = plan.sector.apex + shift;
    }

    let meta = DrawingMeta::new("logply")
        .with("mode", config.mode.name())
        .with("base", config.base)
        .with("inflation", config.inflation)
        .with("unit", config.unit)
        .with("heavy_height", hpt.height());
    let drawing = Drawing::of_tree(tree, positions, meta);
    Ok((
        drawing,
        SectorPlan {
            config: *config,
            unit,
            decomposition: hpt,
            nodes,
        },
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanViolation {
    pub node: usize,
    pub message: String,
}

/// Checks the sector plan against the drawing:
///
/// - guard disks on one path have pairwise disjoint interiors;
/// - every guard disk lies in its path's sector;
/// - every child sector lies in its anchor's guard disk;
/// - sibling sectors at one anchor have disjoint interiors;
/// - every vertex of a subtree lies in that subtree's sector;
/// - each path, anchor edge included, is a collinear 2-drawing;
/// - each child path leaves its anchor along its sector's bisector;
/// - every edge has length at least `unit`;
/// - the root sector has radius `unit · λ · b^h · n`.
pub fn validate_plan(tree: &RootedTree, drawing: &Drawing, plan: &SectorPlan) -> Vec<PlanViolation> {
    let hpt = &plan.decomposition;
    let cfg = &plan.config;
    let mut out = Vec::new();
    let root_r = plan.root_radius();
    let tol_for = |local: f64| 1e-12 * root_r + 1e-9 * local;
    let pos = |v: usize| drawing.position(drawing.index_of(tree.id(v)).unwrap());
    let mut bad = |node: usize, message: String| out.push(PlanViolation { node, message });

    let expected_root = plan.unit * cfg.inflation * cfg.base.powi(hpt.height() as i32) * tree.len() as f64;
    if (root_r - expected_root).abs() > 1e-12 * expected_root {
        bad(hpt.root_node, format!("root radius {root_r}, expected {expected_root}"));
    }

    // Vertices of each node's subtree: the node's path plus its descendants.
    let mut members: Vec<Vec<usize>> = hpt.nodes.iter().map(|n| n.path.clone()).collect();
    for id in hpt.bfs_order().into_iter().rev() {
        let kids: Vec<usize> = hpt.nodes[id].children.iter().map(|&(c, _)| c).collect();
        for c in kids {
            let sub = std::mem::take(&mut members[c]);
            members[id].extend_from_slice(&sub);
            members[c] = sub;
        }
    }

    for (id, node) in hpt.nodes.iter().enumerate() {
        let np = &plan.nodes[id];
        let sector = np.sector;
        let tol = tol_for(sector.radius);

        for &v in &members[id] {
            if !sector.contains_point(pos(v), tol) {
                bad(id, format!("vertex {} outside its sector", tree.id(v)));
            }
        }

        // Collinear 2-drawing along the bisector, anchor edge included.
        let mut prev = sector.apex;
        let mut lens = Vec::with_capacity(node.path.len());
        for &v in &node.path {
            let p = pos(v);
            let off = p - sector.apex;
            if off.cross(sector.direction).abs() > tol {
                bad(id, format!("vertex {} off the bisector", tree.id(v)));
            }
            lens.push(p.dist(prev));
            prev = p;
        }
        for (k, pair) in lens.windows(2).enumerate() {
            if pair[1] > 2.0 * pair[0] * (1.0 + 1e-9) || pair[0] > 2.0 * pair[1] * (1.0 + 1e-9) {
                bad(id, format!("edges {k} and {} break the factor-2 rule", k + 1));
            }
        }
        if let Some(l) = lens.iter().copied().find(|&l| l < cfg.unit) {
            bad(id, format!("edge of length {l} below unit"));
        }

        for (i, (&v, &g)) in node.path.iter().zip(&np.guards).enumerate() {
            let c = pos(v);
            if !sector.contains_disk(c, g, tol) {
                bad(id, format!("guard disk of {} leaves the sector", tree.id(v)));
            }
            for (&u, &gu) in node.path[i + 1..].iter().zip(&np.guards[i + 1..]) {
                if c.dist(pos(u)) < g + gu - tol {
                    bad(id, format!("guard disks of {} and {} overlap", tree.id(v), tree.id(u)));
                }
            }
        }

        for (k, &(child, anchor)) in node.children.iter().enumerate() {
            let cs = plan.nodes[child].sector;
            let Some(i) = node.path.iter().position(|&v| v == anchor) else {
                bad(child, "anchor not on parent path".into());
                continue;
            };
            if cs.apex.dist(pos(anchor)) > tol {
                bad(child, "sector apex is not the anchor".into());
            }
            match np.guards.get(i) {
                Some(&g) if cs.radius <= g + tol => {}
                _ => bad(child, format!("sector of radius {} exceeds guard disk", cs.radius)),
            }
            let first = pos(hpt.nodes[child].path[0]) - cs.apex;
            if first.cross(cs.direction).abs() > tol || first.dot(cs.direction) <= 0.0 {
                bad(child, "anchor edge does not follow the bisector".into());
            }
            for &(other, a2) in &node.children[k + 1..] {
                if a2 == anchor
                    && !cs.interior_disjoint_from(&plan.nodes[other].sector, 1e-9)
                {
                    bad(child, format!("sector overlaps sibling node {other}"));
                }
            }
        }
    }

    for (a, b) in tree.edges() {
        let l = pos(a).dist(pos(b));
        if l < cfg.unit {
            bad(usize::MAX, format!("edge {}-{} shorter than unit", tree.id(a), tree.id(b)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::measure_area;
    use crate::ply::{exact_ply, ply_disks, DEFAULT_TOL};
    use crate::tree::{complete_kary, path, random_tree, star};

    fn ply_of(d: &Drawing) -> usize {
        exact_ply(&ply_disks(d).unwrap(), DEFAULT_TOL).unwrap().ply
    }

    #[test]
    fn path_is_collinear_with_ply_at_most_two() {
        let t = path(8).unwrap();
        for cfg in [LayoutConfig::default(), LayoutConfig::half_disk()] {
            let (d, plan) = layout_logply(&t, &cfg).unwrap();
            assert!(d.positions().iter().all(|p| p.x.abs() < 1e-12));
            assert!(ply_of(&d) <= 2);
            assert!(validate_plan(&t, &d, &plan).is_empty());
        }
    }

    #[test]
    fn single_vertex_at_origin() {
        let t = path(1).unwrap();
        let (d, _) = layout_logply(&t, &LayoutConfig::default()).unwrap();
        assert_eq!(d.positions(), &[Point::ORIGIN]);
        assert!(d.edges().is_empty());
    }

    #[test]
    fn kary_5_2_quarter() {
        let t = complete_kary(5, 2).unwrap();
        let (d, plan) = layout_logply(&t, &LayoutConfig::default()).unwrap();
        let v = validate_plan(&t, &d, &plan);
        assert!(v.is_empty(), "{v:?}");
        let h = plan.heavy_height();
        assert!(ply_of(&d) <= 2 * (h + 1));
        assert!(d.check_matches_tree(&t).is_ok());
        let a = measure_area(&d);
        assert!(a.min_edge >= 1.0);
        assert!(a.normalized_area <= (2.0 * SQRT_2 * 6f64.powi(h as i32) * 31.0).powi(2));
    }

    #[test]
    fn half_disk_on_ternary_trees() {
        for seed in 0..20 {
            let t = random_tree(300, 4, seed).unwrap();
            let (d, plan) = layout_logply(&t, &LayoutConfig::half_disk()).unwrap();
            let v = validate_plan(&t, &d, &plan);
            assert!(v.is_empty(), "seed {seed}: {v:?}");
            assert!(ply_of(&d) <= 2 * (plan.heavy_height() + 1));
        }
    }

    #[test]
    fn capacity_errors_name_the_vertex() {
        let t = star(6).unwrap();
        let err = layout_logply(&t, &LayoutConfig::default()).unwrap_err();
        assert!(matches!(err, LayoutError::CapacityExceeded { vertex: 0, hanging: 5, .. }));
        let t = star(4).unwrap();
        assert!(layout_logply(&t, &LayoutConfig::half_disk()).is_err());
        assert!(layout_logply(&t, &LayoutConfig::default()).is_ok());
        assert!(layout_logply(&star(3).unwrap(), &LayoutConfig::half_disk()).is_ok());
    }

    #[test]
    fn config_validation() {
        let mut cfg = LayoutConfig::default();
        cfg.base = 5.0;
        assert!(layout_logply(&path(3).unwrap(), &cfg).is_err());
        let mut cfg = LayoutConfig::default();
        cfg.inflation = 1.0;
        assert!(cfg.validate().is_err());
        let mut cfg = LayoutConfig::half_disk();
        cfg.unit = 0.0;
        assert!(cfg.validate().is_err());
        let mut cfg = LayoutConfig::default();
        cfg.base = 9.0;
        cfg.unit = 0.25;
        assert!(cfg.validate().is_ok());
    }

    #[test]
    fn slots_follow_children_order() {
        // Root 0 with heavy child 1 (two vertices below) and light 2, 3, 4, 5.
        let t = RootedTree::from_edges(&[(0, 1), (1, 6), (1, 7), (0, 2), (0, 3), (0, 4), (0, 5)])
            .unwrap();
        let (d, plan) = layout_logply(&t, &LayoutConfig::default()).unwrap();
        assert!(validate_plan(&t, &d, &plan).is_empty());
        let root = d.position_of(0).unwrap();
        let angle = |id| (d.position_of(id).unwrap() - root).angle().to_degrees();
        // Path points along +y, so slot +45° is at 135° absolute.
        assert!((angle(2) - 135.0).abs() < 1e-9);
        assert!((angle(3) - 45.0).abs() < 1e-9);
        assert!((angle(4) + 135.0).abs() < 1e-9);
        assert!((angle(5) + 45.0).abs() < 1e-9);
    }

    #[test]
    fn larger_base_and_unit() {
        let t = random_tree(400, 6, 3).unwrap();
        let cfg = LayoutConfig { base: 8.0, inflation: 1.5, unit: 2.0, ..Default::default() };
        let (d, plan) = layout_logply(&t, &cfg).unwrap();
        assert!(validate_plan(&t, &d, &plan).is_empty());
        let m = measure_area(&d).min_edge;
        assert!(m >= 2.0, "{m}");
    }
}
