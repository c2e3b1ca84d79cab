//! Heavy-path decomposition of a random tree.
//!
//! `cargo run --example heavy_paths -- 500 7`

use lowply::heavy_path::{decompose, validate_decomposition};
use lowply::tree::random_tree;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(200) as usize;
    let seed = args.next().unwrap_or(1);
    let tree = random_tree(n, 6, seed).unwrap();
    let hpt = decompose(&tree);
    assert!(validate_decomposition(&tree, &hpt).is_empty());
    println!("n = {n}, decomposition height {} (log2 n = {:.2})", hpt.height(), (n as f64).log2());
    for &k in hpt.bfs_order().iter().take(5) {
        let node = &hpt.nodes[k];
        println!("  node {k}: {} path vertices, {} children", node.path.len(), node.children.len());
    }
}
