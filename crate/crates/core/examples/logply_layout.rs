//! Lay out a complete ternary tree in quarter-disk sectors, check the plan,
//! and write an SVG with sectors and ply-disks.
//!
//! `cargo run --example logply_layout -- out.svg`

use lowply::layout::{layout_logply, validate_plan, LayoutConfig};
use lowply::ply::{exact_ply, ply_disks};
use lowply::svg::{emit_svg, SvgOptions};
use lowply::tree::complete_kary;
use lowply::{measure_area, Sector, DEFAULT_TOL};

fn main() {
    let tree = complete_kary(3, 4).unwrap();
    let cfg = LayoutConfig::default();
    let (drawing, plan) = layout_logply(&tree, &cfg).unwrap();
    let violations = validate_plan(&tree, &drawing, &plan);
    assert!(violations.is_empty(), "{violations:?}");

    let ply = exact_ply(&ply_disks(&drawing).unwrap(), DEFAULT_TOL).unwrap().ply;
    let area = measure_area(&drawing);
    let h = plan.heavy_height();
    println!("n = {}, heavy-path height {h}", tree.len());
    println!("ply {ply} (bound {})", 2 * (h + 1));
    println!("min edge {:.6}, normalized area {:.3e}", area.min_edge, area.normalized_area);

    if let Some(out) = std::env::args().nth(1) {
        let sectors: Vec<Sector> = plan.nodes.iter().map(|n| n.sector).collect();
        let opts = SvgOptions { show_ply_disks: true, show_sectors: true, sectors: &sectors };
        std::fs::write(&out, emit_svg(&drawing, &opts)).unwrap();
        println!("wrote {out}");
    }
}
