//! A radial drawing whose edges grow fourfold per level carries a long
//! first-hand domination chain, which bounds its ply from below.

use lowply::domination::{check_dominated_subtree, longest_fd_chain, verify_certificate};
use lowply::layout::radial_layout;
use lowply::ply::{exact_ply, ply_disks};
use lowply::tree::complete_kary;
use lowply::DEFAULT_TOL;

fn main() {
    let tree = complete_kary(3, 6).unwrap();
    let drawing = radial_layout(&tree, 0.25).unwrap();
    let cert = longest_fd_chain(&tree, &drawing).unwrap();
    assert!(verify_certificate(&tree, &drawing, &cert).unwrap());
    let ply = exact_ply(&ply_disks(&drawing).unwrap(), DEFAULT_TOL).unwrap().ply;
    println!("certificate {}", cert.to_json());
    println!("chain bound {} <= exact ply {ply}", cert.bound);

    let shrinking = radial_layout(&tree, 4.0).unwrap();
    let check = check_dominated_subtree(&tree, &shrinking, 1).unwrap();
    println!("subtree of vertex 1 inside the disk of {:?}: {}", check.witness_vertex, check.holds);
}
