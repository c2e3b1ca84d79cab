//! Benchmark harness: lay out a family of trees, measure ply and area, and
//! flag any instance that breaks its bound.
//!
//! CSV columns, in order: `family, n, heavy_height, measured_ply, ply_bound,
//! min_edge, normalized_area, area_bound, census_ok, wall_time_ms, ok`.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::drawing::measure_area;
use crate::heavy_path::decompose;
use crate::layout::{layout_logply, star_ply2_layout, LayoutConfig, LayoutError, DEFAULT_ANGLE_STEP};
use crate::ply::{annulus_census, exact_ply, ply_disks, PlyError, DEFAULT_TOL};
use crate::tree::{complete_kary, random_tree, TreeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Complete `k`-ary trees of heights `1..=max_h`.
    Kary,
    /// Random trees of bounded degree, sizes `10, 20, 50, ... ≤ max_n`.
    Random,
    /// Spiral stars with `n` vertices, sizes as for `Random`.
    Star,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Kary => "kary",
            Family::Random => "random",
            Family::Star => "star",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: Family,
    pub k: usize,
    pub max_h: usize,
    pub max_n: usize,
    pub max_degree: usize,
    /// Random trees per size.
    pub count: usize,
    pub seed: u64,
    pub layout: LayoutConfig,
    pub jobs: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            family: Family::Kary,
            k: 5,
            max_h: 4,
            max_n: 1000,
            max_degree: 6,
            count: 1,
            seed: 0,
            layout: LayoutConfig::default(),
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub family: String,
    pub n: usize,
    pub heavy_height: usize,
    pub measured_ply: usize,
    pub ply_bound: usize,
    pub min_edge: f64,
    pub normalized_area: f64,
    /// `(2λ · b^h · n)²`; infinite for stars, whose area is exponential.
    pub area_bound: f64,
    /// Annulus census verdict for stars.
    pub census_ok: Option<bool>,
    pub wall_time_ms: f64,
    pub ok: bool,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error(transparent)]
    Ply(#[from] PlyError),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy)]
enum Instance {
    Kary(usize, usize),
    Random(usize, usize, u64),
    Star(usize),
}

/// `10, 20, 50, 100, 200, 500, ...` up to `max`.
pub fn size_ladder(max: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut base = 10;
    'outer: loop {
        for m in [1, 2, 5] {
            let n = base * m;
            if n > max {
                break 'outer;
            }
            out.push(n);
        }
        base *= 10;
    }
    out
}

fn instances(cfg: &BenchConfig) -> Vec<Instance> {
    match cfg.family {
        Family::Kary => (1..=cfg.max_h).map(|h| Instance::Kary(cfg.k, h)).collect(),
        Family::Random => size_ladder(cfg.max_n)
            .into_iter()
            .flat_map(|n| {
                (0..cfg.count as u64).map(move |i| Instance::Random(n, cfg.max_degree, cfg.seed.wrapping_add(i)))
            })
            .collect(),
        Family::Star => size_ladder(cfg.max_n).into_iter().map(Instance::Star).collect(),
    }
}

fn run_one(inst: Instance, cfg: &BenchConfig) -> Result<BenchRecord, BenchError> {
    let start = Instant::now();
    let lambda = cfg.layout.inflation;
    let b = cfg.layout.base;
    let (family, drawing, h, census_ok, area_bound) = match inst {
        Instance::Star(n) => {
            let d = star_ply2_layout(n - 1, 2.0, DEFAULT_ANGLE_STEP).expect("n >= 2");
            let h = decompose(&crate::tree::star(n - 1)?).height();
            let census = annulus_census(&d, DEFAULT_TOL)?;
            (Family::Star, d, h, Some(census.bound_ok), f64::INFINITY)
        }
        Instance::Kary(..) | Instance::Random(..) => {
            let (tree, family) = match inst {
                Instance::Kary(k, h) => (complete_kary(k, h)?, Family::Kary),
                Instance::Random(n, deg, seed) => (random_tree(n, deg, seed)?, Family::Random),
                Instance::Star(_) => unreachable!(),
            };
            let (d, plan) = layout_logply(&tree, &cfg.layout)?;
            let h = plan.heavy_height();
            let bound = (2.0 * lambda * b.powi(h as i32) * tree.len() as f64).powi(2);
            (family, d, h, None, bound)
        }
    };
    let ply = exact_ply(&ply_disks(&drawing)?, DEFAULT_TOL)?.ply;
    let area = measure_area(&drawing);
    let ply_bound = 2 * (h + 1);
    let ok = ply <= ply_bound
        && area.min_edge >= 1.0
        && (census_ok.is_some() || area.normalized_area <= area_bound)
        && census_ok != Some(false);
    Ok(BenchRecord {
        family: family.name().to_string(),
        n: drawing.len(),
        heavy_height: h,
        measured_ply: ply,
        ply_bound,
        min_edge: area.min_edge,
        normalized_area: area.normalized_area,
        area_bound,
        census_ok,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        ok,
    })
}

/// Runs every instance of the family, in parallel when `jobs != 1`. Rows come
/// back in instance order.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    let list = instances(cfg);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| BenchError::Pool(e.to_string()))?;
    pool.install(|| list.par_iter().map(|&inst| run_one(inst, cfg)).collect())
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "family",
        "n",
        "heavy_height",
        "measured_ply",
        "ply_bound",
        "min_edge",
        "normalized_area",
        "area_bound",
        "census_ok",
        "wall_time_ms",
        "ok",
    ])
    .expect("in-memory write");
    for r in records {
        w.write_record([
            r.family.clone(),
            r.n.to_string(),
            r.heavy_height.to_string(),
            r.measured_ply.to_string(),
            r.ply_bound.to_string(),
            r.min_edge.to_string(),
            r.normalized_area.to_string(),
            r.area_bound.to_string(),
            r.census_ok.map_or(String::new(), |c| c.to_string()),
            format!("{:.3}", r.wall_time_ms),
            r.ok.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn to_json(records: &[BenchRecord]) -> String {
    serde_json::to_string_pretty(records).expect("plain data")
}
