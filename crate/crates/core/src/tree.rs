//! Rooted trees: data model, text/JSON formats, generators and structural
//! annotations.
//!
//! Vertices carry arbitrary non-negative integer ids taken from the input.
//! Internally every vertex also has a dense index in `0..n`; all traversal
//! APIs work on dense indices and [`RootedTree::id`] maps back to ids.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// External vertex id as it appears in files and drawings.
pub type VertexId = u64;

/// Upper bound on the number of vertices a generator will produce.
pub const MAX_GENERATED_VERTICES: usize = 20_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("{at}: cycle detected through vertex {vertex}")]
    Cycle { at: String, vertex: VertexId },
    #[error("{at}: disconnected input, vertex {vertex} is not reachable from root {root}")]
    Disconnected {
        at: String,
        vertex: VertexId,
        root: VertexId,
    },
    #[error("{at}: vertex {child} already has parent {existing}")]
    DuplicateParent {
        at: String,
        child: VertexId,
        existing: VertexId,
    },
    #[error("{at}: unknown root {root}")]
    UnknownRoot { at: String, root: VertexId },
    #[error("{at}: root {root} appears as a child")]
    RootHasParent { at: String, root: VertexId },
    #[error("{at}: {msg}")]
    Syntax { at: String, msg: String },
    #[error("empty input: no vertices")]
    Empty,
    #[error("tree would have {requested} vertices, limit is {limit}")]
    TooLarge { requested: u128, limit: usize },
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
}

/// Supported tree file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFormat {
    /// One `parent child` pair per line, optional `# root: <id>` header.
    EdgeList,
    /// `{"root": <id>, "edges": [[parent, child], ...]}`.
    Json,
}

impl TreeFormat {
    /// Guesses the format from the first non-blank character.
    pub fn sniff(text: &str) -> TreeFormat {
        match text.trim_start().chars().next() {
            Some('{') => TreeFormat::Json,
            _ => TreeFormat::EdgeList,
        }
    }
}

/// A rooted tree with ordered children.
#[derive(Debug, Clone)]
pub struct RootedTree {
    ids: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
    labels: Option<HashMap<usize, String>>,
}

impl PartialEq for RootedTree {
    /// Structural equality on ids: same root, same vertex set, same ordered
    /// children lists and labels. Dense indexing is ignored.
    fn eq(&self, other: &Self) -> bool {
        if self.len() != other.len() || self.id(self.root) != other.id(other.root) {
            return false;
        }
        for v in 0..self.len() {
            let Some(w) = other.index_of(self.id(v)) else {
                return false;
            };
            let mine = self.children[v].iter().map(|&c| self.id(c));
            let theirs = other.children[w].iter().map(|&c| other.id(c));
            if !mine.eq(theirs) || self.label(v) != other.label(w) {
                return false;
            }
        }
        true
    }
}

impl Eq for RootedTree {}

#[derive(Serialize, Deserialize)]
struct JsonTree {
    root: VertexId,
    edges: Vec<[VertexId; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<std::collections::BTreeMap<VertexId, String>>,
}

impl RootedTree {
    /// Builds a tree from `(parent, child)` pairs, in order. `root` may be
    /// omitted when it can be inferred as the unique vertex without a parent.
    /// `locations[i]` names the input position of edge `i` for error messages.
    fn build(
        root: Option<VertexId>,
        edges: &[(VertexId, VertexId)],
        locations: &[String],
        root_location: &str,
    ) -> Result<RootedTree, TreeError> {
        let mut ids = Vec::new();
        let mut index = HashMap::new();
        let mut intern = |id: VertexId, ids: &mut Vec<VertexId>| -> usize {
            *index.entry(id).or_insert_with(|| {
                ids.push(id);
                ids.len() - 1
            })
        };
        if let (Some(r), true) = (root, edges.is_empty()) {
            intern(r, &mut ids);
        }
        let mut parent: Vec<Option<usize>> = Vec::new();
        let mut parent_loc: Vec<usize> = Vec::new();
        let mut children: Vec<Vec<usize>> = Vec::new();
        for (k, &(p, c)) in edges.iter().enumerate() {
            let pi = intern(p, &mut ids);
            let ci = intern(c, &mut ids);
            parent.resize(ids.len(), None);
            parent_loc.resize(ids.len(), usize::MAX);
            children.resize(ids.len(), Vec::new());
            if pi == ci {
                return Err(TreeError::Cycle {
                    at: locations[k].clone(),
                    vertex: c,
                });
            }
            if let Some(existing) = parent[ci] {
                return Err(TreeError::DuplicateParent {
                    at: locations[k].clone(),
                    child: c,
                    existing: ids[existing],
                });
            }
            parent[ci] = Some(pi);
            parent_loc[ci] = k;
            children[pi].push(ci);
        }
        let n = ids.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        parent.resize(n, None);
        children.resize(n, Vec::new());

        let orphans: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        let root = match root {
            Some(r) => {
                let Some(&ri) = index.get(&r) else {
                    return Err(TreeError::UnknownRoot {
                        at: root_location.to_string(),
                        root: r,
                    });
                };
                if parent[ri].is_some() {
                    return Err(TreeError::RootHasParent {
                        at: locations[parent_loc[ri]].clone(),
                        root: r,
                    });
                }
                if let Some(&other) = orphans.iter().find(|&&v| v != ri) {
                    return Err(TreeError::Disconnected {
                        at: root_location.to_string(),
                        vertex: ids[other],
                        root: r,
                    });
                }
                ri
            }
            None => match orphans.as_slice() {
                [] => {
                    // Every vertex has a parent, so following parents cycles.
                    return Err(TreeError::Cycle {
                        at: locations[0].clone(),
                        vertex: ids[0],
                    });
                }
                [r] => *r,
                [a, b, ..] => {
                    return Err(TreeError::Disconnected {
                        at: "input".to_string(),
                        vertex: ids[*b],
                        root: ids[*a],
                    });
                }
            },
        };

        // With a unique parentless root, unreachable vertices lie on cycles.
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for &c in &children[v] {
                seen[c] = true;
                queue.push_back(c);
            }
        }
        if let Some(v) = (0..n).find(|&v| !seen[v]) {
            return Err(TreeError::Cycle {
                at: locations[parent_loc[v]].clone(),
                vertex: ids[v],
            });
        }

        Ok(RootedTree {
            ids,
            index,
            parent,
            children,
            root,
            labels: None,
        })
    }

    /// Builds a tree from `(parent, child)` id pairs; the root is inferred.
    pub fn from_edges(edges: &[(VertexId, VertexId)]) -> Result<RootedTree, TreeError> {
        let locs: Vec<String> = (0..edges.len()).map(|k| format!("edge {k}")).collect();
        Self::build(None, edges, &locs, "root")
    }

    /// Builds a tree from `(parent, child)` id pairs with an explicit root.
    pub fn from_edges_with_root(
        root: VertexId,
        edges: &[(VertexId, VertexId)],
    ) -> Result<RootedTree, TreeError> {
        let locs: Vec<String> = (0..edges.len()).map(|k| format!("edge {k}")).collect();
        Self::build(Some(root), edges, &locs, "root")
    }

    /// Dense construction used by the generators: vertex `i` gets id `i`.
    fn from_parents(parents: Vec<Option<usize>>) -> RootedTree {
        let n = parents.len();
        let mut children = vec![Vec::new(); n];
        let mut root = 0;
        for (v, p) in parents.iter().enumerate() {
            match p {
                Some(p) => children[*p].push(v),
                None => root = v,
            }
        }
        RootedTree {
            ids: (0..n as VertexId).collect(),
            index: (0..n).map(|v| (v as VertexId, v)).collect(),
            parent: parents,
            children,
            root,
            labels: None,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn id(&self, v: usize) -> VertexId {
        self.ids[v]
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Parent edge plus child edges.
    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.len()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref()?.get(&v).map(String::as_str)
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels
            .get_or_insert_with(HashMap::new)
            .insert(v, label.into());
    }

    /// Breadth-first order from the root, children in stored order.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        order.push(self.root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            order.extend_from_slice(&self.children[v]);
        }
        order
    }

    /// All edges as dense `(parent, child)` pairs in BFS order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.bfs_order()
            .into_iter()
            .filter_map(|v| self.parent[v].map(|p| (p, v)))
            .collect()
    }

    /// All edges as id pairs in BFS order.
    pub fn edge_ids(&self) -> Vec<(VertexId, VertexId)> {
        self.edges()
            .into_iter()
            .map(|(p, c)| (self.id(p), self.id(c)))
            .collect()
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&v| self.children[v].is_empty())
    }

    /// Computes subtree sizes, depths and height.
    pub fn annotate(&self) -> TreeAnnotations {
        let order = self.bfs_order();
        let mut depth = vec![0usize; self.len()];
        for &v in &order {
            if let Some(p) = self.parent[v] {
                depth[v] = depth[p] + 1;
            }
        }
        let mut subtree_size = vec![1usize; self.len()];
        for &v in order.iter().rev() {
            if let Some(p) = self.parent[v] {
                subtree_size[p] += subtree_size[v];
            }
        }
        let height = depth.iter().copied().max().unwrap_or(0);
        TreeAnnotations {
            subtree_size,
            depth,
            height,
        }
    }

    pub fn parse(text: &str, format: TreeFormat) -> Result<RootedTree, TreeError> {
        match format {
            TreeFormat::EdgeList => parse_edge_list(text),
            TreeFormat::Json => parse_json(text),
        }
    }

    pub fn serialize(&self, format: TreeFormat) -> String {
        match format {
            TreeFormat::EdgeList => {
                let mut out = format!("# root: {}\n", self.id(self.root));
                for (p, c) in self.edge_ids() {
                    let _ = writeln!(out, "{p} {c}");
                }
                out
            }
            TreeFormat::Json => {
                let labels = self.labels.as_ref().map(|ls| {
                    ls.iter()
                        .map(|(&v, l)| (self.id(v), l.clone()))
                        .collect()
                });
                let doc = JsonTree {
                    root: self.id(self.root),
                    edges: self.edge_ids().into_iter().map(|(p, c)| [p, c]).collect(),
                    labels,
                };
                serde_json::to_string(&doc).expect("tree JSON serialization")
            }
        }
    }
}

/// Per-vertex structural data, indexed by dense vertex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeAnnotations {
    pub subtree_size: Vec<usize>,
    pub depth: Vec<usize>,
    pub height: usize,
}

fn parse_edge_list(text: &str) -> Result<RootedTree, TreeError> {
    let mut root = None;
    let mut root_line = String::from("input");
    let mut edges = Vec::new();
    let mut locs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let at = format!("line {}", lineno + 1);
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix("root:") {
                let id = value.trim().parse::<VertexId>().map_err(|e| TreeError::Syntax {
                    at: at.clone(),
                    msg: format!("bad root id {:?}: {e}", value.trim()),
                })?;
                root = Some(id);
                root_line = at;
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut next_id = |what: &str| -> Result<VertexId, TreeError> {
            let tok = fields.next().ok_or_else(|| TreeError::Syntax {
                at: at.clone(),
                msg: format!("missing {what} id"),
            })?;
            tok.parse::<VertexId>().map_err(|e| TreeError::Syntax {
                at: at.clone(),
                msg: format!("bad {what} id {tok:?}: {e}"),
            })
        };
        let p = next_id("parent")?;
        let c = next_id("child")?;
        if fields.next().is_some() {
            return Err(TreeError::Syntax {
                at,
                msg: "expected exactly two ids".into(),
            });
        }
        edges.push((p, c));
        locs.push(at);
    }
    if edges.is_empty() && root.is_none() {
        return Err(TreeError::Empty);
    }
    RootedTree::build(root, &edges, &locs, &root_line)
}

fn parse_json(text: &str) -> Result<RootedTree, TreeError> {
    let doc: JsonTree = serde_json::from_str(text).map_err(|e| TreeError::Syntax {
        at: format!("line {} column {}", e.line(), e.column()),
        msg: e.to_string(),
    })?;
    let edges: Vec<(VertexId, VertexId)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    let locs: Vec<String> = (0..edges.len()).map(|k| format!("edges[{k}]")).collect();
    let mut tree = RootedTree::build(Some(doc.root), &edges, &locs, "root")?;
    if let Some(labels) = doc.labels {
        for (id, label) in labels {
            let v = tree.index_of(id).ok_or_else(|| TreeError::Syntax {
                at: format!("labels[{id}]"),
                msg: "label for unknown vertex".into(),
            })?;
            tree.set_label(v, label);
        }
    }
    Ok(tree)
}

/// Path on `n` vertices rooted at one end.
pub fn path(n: usize) -> Result<RootedTree, TreeError> {
    if n == 0 {
        return Err(TreeError::InvalidParameter("path needs n >= 1".into()));
    }
    if n > MAX_GENERATED_VERTICES {
        return Err(TreeError::TooLarge {
            requested: n as u128,
            limit: MAX_GENERATED_VERTICES,
        });
    }
    Ok(RootedTree::from_parents(
        (0..n).map(|v| v.checked_sub(1)).collect(),
    ))
}

/// Complete `k`-ary tree of height `h`; ids are assigned in BFS order.
pub fn complete_kary(k: usize, h: usize) -> Result<RootedTree, TreeError> {
    if k == 0 {
        return Err(TreeError::InvalidParameter("k must be >= 1".into()));
    }
    let mut count: u128 = 0;
    let mut level: u128 = 1;
    for _ in 0..=h {
        count += level;
        if count > MAX_GENERATED_VERTICES as u128 {
            return Err(TreeError::TooLarge {
                requested: count,
                limit: MAX_GENERATED_VERTICES,
            });
        }
        level *= k as u128;
    }
    let n = count as usize;
    // In BFS numbering the children of v are k*v+1 ..= k*v+k.
    Ok(RootedTree::from_parents(
        (0..n).map(|v| (v > 0).then(|| (v - 1) / k)).collect(),
    ))
}

/// Star with `leaves` leaves; the center has id 0.
pub fn star(leaves: usize) -> Result<RootedTree, TreeError> {
    if leaves >= MAX_GENERATED_VERTICES {
        return Err(TreeError::TooLarge {
            requested: leaves as u128 + 1,
            limit: MAX_GENERATED_VERTICES,
        });
    }
    Ok(RootedTree::from_parents(
        (0..=leaves).map(|v| (v > 0).then_some(0)).collect(),
    ))
}

/// Random tree in which every vertex has at most `max_degree - 1` children,
/// so degrees (parent edge included) never exceed `max_degree`.
///
/// Vertex `v` attaches to a uniformly chosen earlier vertex that still has
/// spare capacity. Deterministic for a fixed seed.
pub fn random_tree(n: usize, max_degree: usize, seed: u64) -> Result<RootedTree, TreeError> {
    if n == 0 {
        return Err(TreeError::InvalidParameter("n must be >= 1".into()));
    }
    if max_degree < 2 {
        return Err(TreeError::InvalidParameter("max_degree must be >= 2".into()));
    }
    if n > MAX_GENERATED_VERTICES {
        return Err(TreeError::TooLarge {
            requested: n as u128,
            limit: MAX_GENERATED_VERTICES,
        });
    }
    let cap = max_degree - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parents = vec![None; n];
    let mut used = vec![0usize; n];
    let mut open = vec![0usize];
    for (v, slot) in parents.iter_mut().enumerate().skip(1) {
        let k = rng.gen_range(0..open.len());
        let p = open[k];
        *slot = Some(p);
        used[p] += 1;
        if used[p] == cap {
            open.swap_remove(k);
        }
        open.push(v);
    }
    Ok(RootedTree::from_parents(parents))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_edge_star_from_text() {
        let t = RootedTree::parse("0 1\n0 2", TreeFormat::EdgeList).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.id(t.root()), 0);
        assert_eq!(t.degree(t.root()), 2);
    }

    #[test]
    fn kary_edge_list_parses_to_111_vertices() {
        let text = complete_kary(10, 2).unwrap().serialize(TreeFormat::EdgeList);
        let t = RootedTree::parse(&text, TreeFormat::EdgeList).unwrap();
        assert_eq!(t.len(), 111);
    }

    #[test]
    fn parse_errors() {
        let err = RootedTree::parse("0 1\n1 0", TreeFormat::EdgeList).unwrap_err();
        assert!(matches!(err, TreeError::Cycle { .. }), "{err}");

        let err = RootedTree::parse("0 1\n2 1", TreeFormat::EdgeList).unwrap_err();
        assert_eq!(
            err,
            TreeError::DuplicateParent {
                at: "line 2".into(),
                child: 1,
                existing: 0
            }
        );

        let err = RootedTree::parse("0 1\n2 3", TreeFormat::EdgeList).unwrap_err();
        assert!(matches!(err, TreeError::Disconnected { .. }), "{err}");

        let err = RootedTree::parse("# root: 9\n0 1", TreeFormat::EdgeList).unwrap_err();
        assert!(matches!(err, TreeError::UnknownRoot { root: 9, .. }), "{err}");

        // 0 -> 1 is fine, but 2 -> 3 -> 4 -> 2 is an unreachable cycle.
        let err = RootedTree::parse("0 1\n2 3\n3 4\n4 2", TreeFormat::EdgeList).unwrap_err();
        assert!(matches!(err, TreeError::Cycle { .. }), "{err}");

        let err = RootedTree::parse("5 5", TreeFormat::EdgeList).unwrap_err();
        assert!(matches!(err, TreeError::Cycle { vertex: 5, .. }), "{err}");

        let err = RootedTree::parse("0 x", TreeFormat::EdgeList).unwrap_err();
        assert!(err.to_string().starts_with("line 1"), "{err}");

        let err =
            RootedTree::parse(r#"{"root": 0, "edges": [[0,1],[2,1]]}"#, TreeFormat::Json)
                .unwrap_err();
        assert!(err.to_string().starts_with("edges[1]"), "{err}");

        assert_eq!(
            RootedTree::parse("\n# nothing\n", TreeFormat::EdgeList).unwrap_err(),
            TreeError::Empty
        );
    }

    #[test]
    fn single_vertex_serializes_to_one_line() {
        let t = star(0).unwrap();
        let text = t.serialize(TreeFormat::EdgeList);
        assert_eq!(text, "# root: 0\n");
        assert_eq!(RootedTree::parse(&text, TreeFormat::EdgeList).unwrap(), t);
        let json = t.serialize(TreeFormat::Json);
        assert_eq!(RootedTree::parse(&json, TreeFormat::Json).unwrap(), t);
    }

    #[test]
    fn arbitrary_ids_survive_round_trip() {
        let text = "# root: 70\n70 3\n70 1000000\n3 12\n";
        let t = RootedTree::parse(text, TreeFormat::EdgeList).unwrap();
        assert_eq!(t.serialize(TreeFormat::EdgeList), text);
        let mut labelled = t.clone();
        labelled.set_label(t.index_of(12).unwrap(), "leaf");
        let back = RootedTree::parse(&labelled.serialize(TreeFormat::Json), TreeFormat::Json)
            .unwrap();
        assert_eq!(back, labelled);
        assert_ne!(back, t);
    }

    #[test]
    fn kary_round_trip_keeps_all_ids() {
        let t = complete_kary(5, 2).unwrap();
        for fmt in [TreeFormat::EdgeList, TreeFormat::Json] {
            let back = RootedTree::parse(&t.serialize(fmt), fmt).unwrap();
            assert_eq!(back, t);
            let mut ids: Vec<_> = (0..back.len()).map(|v| back.id(v)).collect();
            ids.sort_unstable();
            assert_eq!(ids, (0..31).collect::<Vec<_>>());
        }
    }

    #[test]
    fn generator_sizes() {
        assert_eq!(complete_kary(2, 3).unwrap().len(), 15);
        let t = complete_kary(10, 2).unwrap();
        assert_eq!(t.len(), 111);
        assert_eq!(t.leaves().count(), 100);
        assert_eq!(complete_kary(5, 0).unwrap().len(), 1);
        assert_eq!(complete_kary(1, 4).unwrap().len(), 5);
        assert!(matches!(
            complete_kary(10, 9),
            Err(TreeError::TooLarge { .. })
        ));
        assert_eq!(star(6).unwrap().degree(0), 6);
        assert_eq!(star(0).unwrap().len(), 1);
        assert_eq!(star(999).unwrap().len(), 1000);
    }

    #[test]
    fn kary_leaf_counts_exhaustive() {
        for k in 1..=10usize {
            for h in 0..=4u32 {
                let t = complete_kary(k, h as usize).unwrap();
                assert_eq!(t.leaves().count(), k.pow(h), "k={k} h={h}");
                if k > 1 {
                    assert_eq!(t.len(), (k.pow(h + 1) - 1) / (k - 1));
                }
                let ann = t.annotate();
                assert!(t.leaves().all(|v| ann.depth[v] == h as usize));
                assert!((0..t.len())
                    .all(|v| t.children(v).is_empty() || t.children(v).len() == k));
            }
        }
    }

    #[test]
    fn random_tree_properties() {
        for s in 0..5 {
            assert_eq!(random_tree(1, 6, s).unwrap().len(), 1);
        }
        assert_eq!(
            random_tree(500, 6, 42).unwrap(),
            random_tree(500, 6, 42).unwrap()
        );
        let t = random_tree(500, 3, 7).unwrap();
        assert_eq!(t.len(), 500);
        assert!((0..t.len()).all(|v| t.degree(v) <= 3));
        assert!(random_tree(5, 1, 0).is_err());
    }

    #[test]
    fn annotations() {
        let ann = path(5).unwrap().annotate();
        assert_eq!(ann.height, 4);
        let ann = complete_kary(10, 2).unwrap().annotate();
        assert_eq!(ann.height, 2);
        assert_eq!(ann.subtree_size[0], 111);
        let t = star(9).unwrap();
        let ann = t.annotate();
        for leaf in t.leaves() {
            assert_eq!(ann.depth[leaf], 1);
            assert_eq!(ann.subtree_size[leaf], 1);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn round_trip_and_annotation_invariants(n in 1usize..1000, deg in 2usize..8, seed: u64) {
            let t = random_tree(n, deg, seed).unwrap();
            for fmt in [TreeFormat::EdgeList, TreeFormat::Json] {
                prop_assert_eq!(&RootedTree::parse(&t.serialize(fmt), fmt).unwrap(), &t);
            }
            let ann = t.annotate();
            let below_root: usize = t.children(t.root()).iter().map(|&c| ann.subtree_size[c]).sum();
            prop_assert_eq!(below_root, n - 1);
            for v in 0..n {
                let s: usize = t.children(v).iter().map(|&c| ann.subtree_size[c]).sum();
                prop_assert_eq!(ann.subtree_size[v], 1 + s);
                match t.parent(v) {
                    Some(p) => prop_assert_eq!(ann.depth[v], ann.depth[p] + 1),
                    None => prop_assert_eq!(ann.depth[v], 0),
                }
            }
            prop_assert_eq!(ann.height, ann.depth.iter().copied().max().unwrap());
        }
    }

    #[test]
    fn thousand_vertex_round_trip() {
        let t = random_tree(1000, 5, 99).unwrap();
        for fmt in [TreeFormat::EdgeList, TreeFormat::Json] {
            assert_eq!(RootedTree::parse(&t.serialize(fmt), fmt).unwrap(), t);
        }
    }
}
