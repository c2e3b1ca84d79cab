//! Heavy-path decomposition.
//!
//! Starting at the root, each path repeatedly descends into the child with
//! the largest subtree (first child on ties) until it reaches a leaf. Every
//! subtree hanging off a path becomes a child node, recursively. Because a
//! hanging subtree holds fewer than half of the vertices of its parent's
//! subtree, the decomposition tree has height at most `floor(log2 n)`.
//!
//! Weights: `weights[i] = 1 + (vertices in subtrees anchored at path[i])`, so
//! the weights of a node sum to the size of the subtree it spans.

use serde::Serialize;

use crate::tree::{RootedTree, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeavyPathNode {
    /// Dense vertex indices, shallowest first; ends at a leaf.
    pub path: Vec<usize>,
    /// Vertex on the parent path adjacent to `path[0]`; `None` is the dummy
    /// anchor of the root node.
    pub anchor: Option<usize>,
    pub depth: usize,
    pub weights: Vec<usize>,
    pub total_weight: usize,
    /// `(child node, anchor vertex)` in path order, then children order.
    pub children: Vec<(usize, usize)>,
}

impl HeavyPathNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeavyPathTree {
    pub nodes: Vec<HeavyPathNode>,
    pub root_node: usize,
}

impl HeavyPathTree {
    pub fn height(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    /// Node ids in breadth-first order (parents before children).
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = vec![self.root_node];
        let mut head = 0;
        while head < order.len() {
            let id = order[head];
            head += 1;
            order.extend(self.nodes[id].children.iter().map(|&(c, _)| c));
        }
        order
    }

    pub fn to_json(&self, tree: &RootedTree) -> String {
        #[derive(Serialize)]
        struct NodeDoc {
            id: usize,
            path: Vec<VertexId>,
            anchor: Option<VertexId>,
            depth: usize,
            weights: Vec<usize>,
            total_weight: usize,
            children: Vec<(usize, VertexId)>,
        }
        #[derive(Serialize)]
        struct Doc {
            root_node: usize,
            height: usize,
            nodes: Vec<NodeDoc>,
        }
        let doc = Doc {
            root_node: self.root_node,
            height: self.height(),
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| NodeDoc {
                    id,
                    path: n.path.iter().map(|&v| tree.id(v)).collect(),
                    anchor: n.anchor.map(|a| tree.id(a)),
                    depth: n.depth,
                    weights: n.weights.clone(),
                    total_weight: n.total_weight,
                    children: n.children.iter().map(|&(c, a)| (c, tree.id(a))).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("decomposition JSON")
    }
}

fn heavy_child(tree: &RootedTree, size: &[usize], v: usize) -> Option<usize> {
    // `max_by_key` keeps the last maximum; fold keeps the first.
    tree.children(v)
        .iter()
        .copied()
        .fold(None, |best: Option<usize>, c| match best {
            Some(b) if size[b] >= size[c] => Some(b),
            _ => Some(c),
        })
}

pub fn decompose(tree: &RootedTree) -> HeavyPathTree {
    let size = tree.annotate().subtree_size;
    let mut nodes: Vec<HeavyPathNode> = Vec::new();
    // (start vertex, anchor, depth, parent node)
    let mut pending = vec![(tree.root(), None, 0usize, None::<usize>)];
    let mut head = 0;
    while head < pending.len() {
        let (start, anchor, depth, parent) = pending[head];
        head += 1;
        let id = nodes.len();
        let mut path = vec![start];
        while let Some(h) = heavy_child(tree, &size, *path.last().unwrap()) {
            path.push(h);
        }
        let mut weights = Vec::with_capacity(path.len());
        for (i, &v) in path.iter().enumerate() {
            let next = path.get(i + 1).copied();
            let mut w = 1;
            for &c in tree.children(v) {
                if Some(c) != next {
                    w += size[c];
                    pending.push((c, Some(v), depth + 1, Some(id)));
                }
            }
            weights.push(w);
        }
        if let Some(p) = parent {
            nodes[p].children.push((id, anchor.unwrap()));
        }
        nodes.push(HeavyPathNode {
            total_weight: size[start],
            path,
            anchor,
            depth,
            weights,
            children: Vec::new(),
        });
    }
    HeavyPathTree {
        nodes,
        root_node: 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Partition,
    PathShape,
    HeavyRule,
    Weights,
    Anchor,
    Depth,
    Balance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub node: usize,
    pub message: String,
}

/// Checks every structural invariant of `hpt` against `tree`. An empty
/// result means the decomposition is valid.
pub fn validate_decomposition(tree: &RootedTree, hpt: &HeavyPathTree) -> Vec<Violation> {
    let size = tree.annotate().subtree_size;
    let n = tree.len();
    let mut out = Vec::new();
    macro_rules! bad {
        ($kind:expr, $node:expr, $msg:expr $(,)?) => {
            out.push(Violation { kind: $kind, node: $node, message: $msg })
        };
    }

    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (id, node) in hpt.nodes.iter().enumerate() {
        for &v in &node.path {
            if v >= n {
                bad!(ViolationKind::Partition, id, format!("vertex index {v} out of range"));
                continue;
            }
            if let Some(other) = owner[v] {
                bad!(
                    ViolationKind::Partition,
                    id,
                    format!("vertex {} also on node {other}", tree.id(v)),
                );
            }
            owner[v] = Some(id);
        }
    }
    for v in 0..n {
        if owner[v].is_none() {
            bad!(ViolationKind::Partition, usize::MAX, format!("vertex {} uncovered", tree.id(v)));
        }
    }

    if hpt.root_node >= hpt.nodes.len() {
        bad!(ViolationKind::Anchor, hpt.root_node, "root node out of range".into());
        return out;
    }
    let mut parent_of: Vec<Option<usize>> = vec![None; hpt.nodes.len()];
    for (id, node) in hpt.nodes.iter().enumerate() {
        for &(c, a) in &node.children {
            if c >= hpt.nodes.len() {
                bad!(ViolationKind::Anchor, id, format!("child node {c} out of range"));
                continue;
            }
            if parent_of[c].replace(id).is_some() {
                bad!(ViolationKind::Anchor, c, "node has two parents".into());
            }
            if hpt.nodes[c].anchor != Some(a) {
                bad!(ViolationKind::Anchor, c, "anchor differs from parent's record".into());
            }
            if !node.path.contains(&a) {
                bad!(ViolationKind::Anchor, c, "anchor not on parent path".into());
            }
            if hpt.nodes[c].depth != node.depth + 1 {
                bad!(ViolationKind::Depth, c, format!("depth {} under parent depth {}", hpt.nodes[c].depth, node.depth));
            }
        }
    }

    for (id, node) in hpt.nodes.iter().enumerate() {
        let Some(&start) = node.path.first() else {
            bad!(ViolationKind::PathShape, id, "empty path".into());
            continue;
        };
        if node.path.iter().any(|&v| v >= n) {
            continue;
        }
        if id == hpt.root_node {
            if start != tree.root() || node.anchor.is_some() || node.depth != 0 {
                bad!(ViolationKind::Anchor, id, "root node must start at the root with the dummy anchor at depth 0".into());
            }
        } else if parent_of[id].is_none() {
            bad!(ViolationKind::Anchor, id, "non-root node without parent".into());
        }
        if node.anchor.is_some() && node.anchor != tree.parent(start) {
            bad!(ViolationKind::Anchor, id, "anchor is not the parent of the path's first vertex".into());
        }
        for pair in node.path.windows(2) {
            if tree.parent(pair[1]) != Some(pair[0]) {
                bad!(ViolationKind::PathShape, id, format!("{} -> {} is not a tree edge", tree.id(pair[0]), tree.id(pair[1])));
            } else {
                let best = tree.children(pair[0]).iter().map(|&c| size[c]).max().unwrap();
                let first_best = tree.children(pair[0]).iter().copied().find(|&c| size[c] == best);
                if first_best != Some(pair[1]) {
                    bad!(ViolationKind::HeavyRule, id, format!("{} descends to {} but a heavier (or earlier equal) child exists", tree.id(pair[0]), tree.id(pair[1])));
                }
            }
        }
        let last = *node.path.last().unwrap();
        if !tree.children(last).is_empty() {
            bad!(ViolationKind::PathShape, id, format!("path ends at non-leaf {}", tree.id(last)));
        }
        if node.weights.len() != node.path.len() {
            bad!(ViolationKind::Weights, id, "weights and path lengths differ".into());
            continue;
        }
        for (i, &v) in node.path.iter().enumerate() {
            let next = node.path.get(i + 1).copied();
            let hanging: usize = tree.children(v).iter().filter(|&&c| Some(c) != next).map(|&c| size[c]).sum();
            if node.weights[i] != 1 + hanging {
                bad!(ViolationKind::Weights, id, format!("weight at {} is {}, expected {}", tree.id(v), node.weights[i], 1 + hanging));
            }
            for &c in tree.children(v) {
                if Some(c) != next && 2 * size[c] > size[start] {
                    bad!(ViolationKind::Balance, id, format!("subtree at {} exceeds half of {}", tree.id(c), size[start]));
                }
            }
        }
        let sum: usize = node.weights.iter().sum();
        if node.total_weight != size[start] || sum != node.total_weight {
            bad!(ViolationKind::Weights, id, format!("total weight {} / weight sum {sum} / subtree size {}", node.total_weight, size[start]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{complete_kary, path, random_tree, star};
    use proptest::prelude::*;

    fn floor_log2(n: usize) -> usize {
        (usize::BITS - 1 - n.leading_zeros()) as usize
    }

    #[test]
    fn path_is_a_single_node() {
        let t = path(10).unwrap();
        let hpt = decompose(&t);
        assert_eq!(hpt.nodes.len(), 1);
        assert_eq!(hpt.height(), 0);
        assert_eq!(hpt.nodes[0].weights, vec![1; 10]);
        assert!(validate_decomposition(&t, &hpt).is_empty());
    }

    #[test]
    fn complete_binary_height_two_by_hand() {
        // 0 -> (1, 2); 1 -> (3, 4); 2 -> (5, 6). Ties go to the first child,
        // so the root path is 0, 1, 3 and 4, 2, 5 and 6 hang off it.
        let t = complete_kary(2, 2).unwrap();
        let hpt = decompose(&t);
        assert_eq!(hpt.nodes.len(), 4);
        assert_eq!(hpt.nodes[0].path, vec![0, 1, 3]);
        assert_eq!(hpt.nodes[0].weights, vec![4, 2, 1]);
        let paths: Vec<Vec<usize>> = hpt.nodes.iter().map(|n| n.path.clone()).collect();
        assert!(paths.contains(&vec![2, 5]));
        assert!(paths.contains(&vec![4]));
        assert!(paths.contains(&vec![6]));
        assert_eq!(hpt.height(), 2);
        assert!(validate_decomposition(&t, &hpt).is_empty());
    }

    #[test]
    fn kary_height_bound() {
        let t = complete_kary(5, 2).unwrap();
        let hpt = decompose(&t);
        assert!(hpt.height() <= floor_log2(31));
        assert!(validate_decomposition(&t, &hpt).is_empty());
    }

    #[test]
    fn shared_vertex_is_a_partition_violation() {
        let t = complete_kary(2, 2).unwrap();
        let mut hpt = decompose(&t);
        let stolen = hpt.nodes[0].path[0];
        let leaf = hpt.nodes.iter().position(|n| n.path == vec![4]).unwrap();
        hpt.nodes[leaf].path.push(stolen);
        let v = validate_decomposition(&t, &hpt);
        assert!(v.iter().any(|v| v.kind == ViolationKind::Partition), "{v:?}");
    }

    #[test]
    fn light_child_choice_is_a_heavy_rule_violation() {
        // 0 -> 1 -> 2 and 0 -> 3: the heavy child of 0 is 1.
        let t = RootedTree::from_edges(&[(0, 3), (0, 1), (1, 2)]).unwrap();
        let mut hpt = decompose(&t);
        assert!(validate_decomposition(&t, &hpt).is_empty());
        let i3 = t.index_of(3).unwrap();
        let i1 = t.index_of(1).unwrap();
        let i2 = t.index_of(2).unwrap();
        hpt.nodes[0].path = vec![t.root(), i3];
        hpt.nodes[0].weights = vec![3, 1];
        hpt.nodes[1].path = vec![i1, i2];
        hpt.nodes[1].weights = vec![1, 1];
        hpt.nodes[1].total_weight = 2;
        let v = validate_decomposition(&t, &hpt);
        assert!(v.iter().any(|v| v.kind == ViolationKind::HeavyRule), "{v:?}");
    }

    #[test]
    fn star_weights() {
        let t = star(6).unwrap();
        let hpt = decompose(&t);
        assert_eq!(hpt.nodes[0].path.len(), 2);
        assert_eq!(hpt.nodes[0].weights, vec![6, 1]);
        assert_eq!(hpt.nodes.len(), 6);
    }

    #[test]
    fn json_dump_uses_ids() {
        let t = RootedTree::from_edges(&[(10, 20), (10, 30)]).unwrap();
        let json = decompose(&t).to_json(&t);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["nodes"][0]["path"], serde_json::json!([10, 20]));
        assert_eq!(v["nodes"][0]["anchor"], serde_json::Value::Null);
        assert_eq!(v["nodes"][1]["anchor"], serde_json::json!(10));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn decomposition_invariants(n in 1usize..1500, deg in 2usize..8, seed: u64) {
            let t = random_tree(n, deg, seed).unwrap();
            let hpt = decompose(&t);
            prop_assert!(validate_decomposition(&t, &hpt).is_empty());
            prop_assert!(hpt.height() <= floor_log2(n));
            let covered: usize = hpt.nodes.iter().map(|n| n.path.len()).sum();
            prop_assert_eq!(covered, n);
        }
    }
}
