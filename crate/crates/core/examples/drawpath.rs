//! Edge lengths for a weighted path and the resulting 2-drawing.

use lowply::layout::{drawpath_lengths, initial_lengths};

fn main() {
    let weights = [1, 9, 1, 1, 14, 1, 2];
    let lengths = drawpath_lengths(&weights).unwrap();
    println!("weights  {weights:?}");
    println!("initial  {:?}", initial_lengths(&weights));
    println!("lengths  {lengths:?}");
    let total: f64 = lengths.iter().sum();
    let budget = 6 * weights.iter().sum::<usize>();
    println!("total {total} <= {budget}");
    for w in lengths.windows(2) {
        assert!(w[1] <= 2.0 * w[0] && w[0] <= 2.0 * w[1]);
    }
}
