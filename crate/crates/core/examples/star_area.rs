//! Stars: six leaves on a circle have ply 1, seven have ply 2, and a spiral
//! with doubling radii keeps ply 2 at the price of exponential area.

use lowply::layout::{regular_star_layout, star_ply2_layout, DEFAULT_ANGLE_STEP};
use lowply::ply::{annulus_census, exact_ply, ply_disks};
use lowply::{measure_area, Drawing, DEFAULT_TOL};

fn ply(d: &Drawing) -> usize {
    exact_ply(&ply_disks(d).unwrap(), DEFAULT_TOL).unwrap().ply
}

fn main() {
    for k in [5, 6, 7, 12] {
        println!("regular star, {k:>2} leaves: ply {}", ply(&regular_star_layout(k, 1.0).unwrap()));
    }
    for n in [10, 20, 40] {
        let d = star_ply2_layout(n, 2.0, DEFAULT_ANGLE_STEP).unwrap();
        let census = annulus_census(&d, DEFAULT_TOL).unwrap();
        println!(
            "spiral star, {n:>2} leaves: ply {}, normalized area {:.3e}, classes ok {}, largest class {}",
            ply(&d),
            measure_area(&d).normalized_area,
            census.bound_ok,
            census.classes.values().max().unwrap()
        );
    }
}
