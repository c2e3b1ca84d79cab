//! Low-ply straight-line drawings of trees.
//!
//! - [`tree`]: rooted trees, parsing and generators.
//! - [`heavy_path`]: heavy-path decomposition.
//! - [`layout`]: DrawPath, the log-ply sector layout, stars and radial drawings.
//! - [`ply`]: ply-disks, exact and estimated ply-numbers, star diagnostics.
//! - [`domination`]: edge domination and ply lower-bound certificates.
//! - [`svg`] and [`bench`]: rendering and the benchmark harness.
//! - [`cli`]: the `lowply` command line.

pub mod bench;
pub mod cli;
pub mod domination;
pub mod drawing;
pub mod geometry;
pub mod heavy_path;
pub mod layout;
pub mod ply;
pub mod svg;
pub mod tree;

pub use drawing::{measure_area, AreaReport, Drawing, DrawingError, DrawingMeta};
pub use geometry::{Point, Sector};
pub use heavy_path::{decompose, validate_decomposition, HeavyPathNode, HeavyPathTree};
pub use layout::{layout_logply, LayoutConfig, LayoutError, SectorMode, SectorPlan};
pub use ply::{
    candidate_ply, depth_at_point, exact_ply, ply_disks, sample_ply, PlyDiskSet, PlyReport,
    DEFAULT_TOL,
};
pub use tree::{RootedTree, TreeError, TreeFormat, VertexId};
