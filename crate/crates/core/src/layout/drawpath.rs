//! Edge lengths for a 2-drawing of a weighted path.
//!
//! The path is `a, v1, ..., vm` where `a` is the anchor. Lengths start at
//! `w1` for the anchor edge and `w_i + w_{i+1}` for `(v_i, v_{i+1})`. Edges are
//! then visited longest first (lower index on ties); visiting an edge of
//! length `x` raises each neighbour to at least `x / 2`. A visited edge is
//! never changed again, so the result is the least sequence above the
//! initial one in which neighbours differ by at most a factor of two.
//!
//! All values are integers halved a bounded number of times, so they are
//! exact in binary floating point.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DrawPathError {
    #[error("empty weight list")]
    Empty,
    #[error("weight at position {0} is zero")]
    ZeroWeight(usize),
}

#[derive(PartialEq)]
struct Entry {
    len: f64,
    edge: usize,
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .total_cmp(&other.len)
            .then_with(|| other.edge.cmp(&self.edge))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Initial lengths before any visit: `(w1, w1+w2, ..., w_{m-1}+w_m)`.
pub fn initial_lengths(weights: &[usize]) -> Vec<f64> {
    let mut init = Vec::with_capacity(weights.len());
    if let Some(&w1) = weights.first() {
        init.push(w1 as f64);
    }
    init.extend(weights.windows(2).map(|p| (p[0] + p[1]) as f64));
    init
}

/// Lengths `(ℓ(a,v1), ℓ(v1,v2), ..., ℓ(v_{m-1},v_m))`.
pub fn drawpath_lengths(weights: &[usize]) -> Result<Vec<f64>, DrawPathError> {
    if weights.is_empty() {
        return Err(DrawPathError::Empty);
    }
    if let Some(i) = weights.iter().position(|&w| w == 0) {
        return Err(DrawPathError::ZeroWeight(i));
    }
    let mut len = initial_lengths(weights);
    let mut visited = vec![false; len.len()];
    let mut heap: BinaryHeap<Entry> = len
        .iter()
        .enumerate()
        .map(|(edge, &len)| Entry { len, edge })
        .collect();
    while let Some(Entry { len: l, edge }) = heap.pop() {
        // Stale entries carry an outdated length.
        if visited[edge] || l != len[edge] {
            continue;
        }
        visited[edge] = true;
        let half = l / 2.0;
        for nb in [edge.wrapping_sub(1), edge + 1] {
            if nb < len.len() && !visited[nb] && len[nb] < half {
                len[nb] = half;
                heap.push(Entry { len: half, edge: nb });
            }
        }
    }
    Ok(len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Relax `ℓ_j = max(ℓ_j, ℓ_{j-1}/2, ℓ_{j+1}/2)` until nothing changes.
    fn fixpoint_oracle(weights: &[usize]) -> Vec<f64> {
        let mut l = initial_lengths(weights);
        loop {
            let mut changed = false;
            for j in 0..l.len() {
                let mut best = l[j];
                if j > 0 {
                    best = best.max(l[j - 1] / 2.0);
                }
                if j + 1 < l.len() {
                    best = best.max(l[j + 1] / 2.0);
                }
                if best != l[j] {
                    l[j] = best;
                    changed = true;
                }
            }
            if !changed {
                return l;
            }
        }
    }

    #[test]
    fn worked_examples() {
        assert_eq!(drawpath_lengths(&[3, 1, 1]).unwrap(), vec![3.0, 4.0, 2.0]);
        assert_eq!(drawpath_lengths(&[1, 1, 1, 1]).unwrap(), vec![1.0, 2.0, 2.0, 2.0]);
        assert_eq!(drawpath_lengths(&[5]).unwrap(), vec![5.0]);
        // A heavy vertex deep in the path pushes halves outward both ways.
        assert_eq!(
            drawpath_lengths(&[1, 1, 1, 30, 1]).unwrap(),
            vec![3.875, 7.75, 15.5, 31.0, 31.0]
        );
    }

    #[test]
    fn errors() {
        assert_eq!(drawpath_lengths(&[]), Err(DrawPathError::Empty));
        assert_eq!(drawpath_lengths(&[2, 0]), Err(DrawPathError::ZeroWeight(1)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn matches_oracle_and_contract(weights in prop::collection::vec(1usize..=20, 1..=50)) {
            let l = drawpath_lengths(&weights).unwrap();
            prop_assert_eq!(&l, &fixpoint_oracle(&weights));
            let init = initial_lengths(&weights);
            for (x, i) in l.iter().zip(&init) {
                prop_assert!(x >= i);
            }
            for p in l.windows(2) {
                prop_assert!(p[1] >= p[0] / 2.0 && p[1] <= 2.0 * p[0]);
            }
            let total: f64 = l.iter().sum();
            prop_assert!(total <= 6.0 * weights.iter().sum::<usize>() as f64);
            prop_assert!(l[0] >= 1.0 && l[1..].iter().all(|&x| x >= 2.0));
            // Re-running on the same input is a no-op.
            prop_assert_eq!(drawpath_lengths(&weights).unwrap(), l);
        }
    }
}
