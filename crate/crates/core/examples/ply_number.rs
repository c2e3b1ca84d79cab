//! Three ways to get the ply-number of a drawing.

use lowply::layout::radial_layout;
use lowply::ply::{candidate_ply, exact_ply, ply_disks, sample_ply};
use lowply::tree::complete_kary;
use lowply::DEFAULT_TOL;

fn main() {
    let tree = complete_kary(2, 5).unwrap();
    let drawing = radial_layout(&tree, 1.0).unwrap();
    let disks = ply_disks(&drawing).unwrap();
    let exact = exact_ply(&disks, DEFAULT_TOL).unwrap();
    let candidate = candidate_ply(&disks, DEFAULT_TOL).unwrap();
    let sampled = sample_ply(&disks, 100_000, 42, DEFAULT_TOL).unwrap();
    for r in [&exact, &candidate, &sampled] {
        println!("{:<16} ply {:>2} at ({:.4}, {:.4})", r.method.name(), r.ply, r.witness.x, r.witness.y);
    }
    println!("{}", exact.to_json());
}
