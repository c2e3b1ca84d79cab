//! Straight-line drawings of trees.

pub mod drawpath;
pub mod logply;
pub mod stars;

pub use drawpath::{drawpath_lengths, initial_lengths, DrawPathError};
pub use logply::{
    layout_logply, validate_plan, LayoutConfig, LayoutError, NodePlan, PlanViolation, SectorMode,
    SectorPlan,
};
pub use stars::{radial_layout, regular_star_layout, star_ply2_layout, StarError, DEFAULT_ANGLE_STEP};
