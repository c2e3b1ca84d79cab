//! Edge domination on drawn rooted trees.
//!
//! Edge `e` dominates edge `f` when both lie on one root-to-leaf branch and
//! `ℓ(e) ≥ 3^(s+1) · ℓ(f)`, with `s` the number of edges strictly between
//! them. `e` first-hand dominates `f` when additionally `f` is closer to the
//! root and no edge strictly between them dominates `f`. A chain
//! `e_1 >FD e_2 >FD ... >FD e_M` forces `M` ply-disks to share a point, so
//! its length is a lower bound on the ply-number.
//!
//! An edge is identified by its child vertex. Comparisons allow a relative
//! slack of `1e-12`, so exact boundary cases count as dominating.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawing::{Drawing, DrawingError};
use crate::tree::{RootedTree, VertexId};

const REL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum DominationError {
    #[error("{0}-{1} is not an edge of the tree")]
    NotAnEdge(VertexId, VertexId),
    #[error("{0}")]
    Mismatch(String),
    #[error("path needs at least two edges")]
    ShortPath,
    #[error("precondition violated: the first edge does not dominate edge {index} of the path")]
    NotDominated { index: usize },
    #[error("hypothesis violated: edge {0}-{1} of the subtree is dominated by no edge above it")]
    Hypothesis(VertexId, VertexId),
    #[error("subtree root must not be the tree root")]
    RootSubtree,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

/// Edge lengths and depths indexed by child vertex.
struct Drawn<'a> {
    tree: &'a RootedTree,
    len: Vec<f64>,
    depth: Vec<usize>,
}

impl<'a> Drawn<'a> {
    fn new(tree: &'a RootedTree, drawing: &Drawing) -> Result<Drawn<'a>, DominationError> {
        drawing
            .check_matches_tree(tree)
            .map_err(|e: DrawingError| DominationError::Mismatch(e.to_string()))?;
        let pos = |v: usize| drawing.position(drawing.index_of(tree.id(v)).unwrap());
        let mut len = vec![0.0; tree.len()];
        for (p, c) in tree.edges() {
            len[c] = pos(p).dist(pos(c));
        }
        Ok(Drawn {
            tree,
            len,
            depth: tree.annotate().depth,
        })
    }

    fn edge(&self, (u, v): (VertexId, VertexId)) -> Result<usize, DominationError> {
        let t = self.tree;
        let (iu, iv) = match (t.index_of(u), t.index_of(v)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(DominationError::NotAnEdge(u, v)),
        };
        if t.parent(iv) == Some(iu) {
            Ok(iv)
        } else if t.parent(iu) == Some(iv) {
            Ok(iu)
        } else {
            Err(DominationError::NotAnEdge(u, v))
        }
    }

    fn is_ancestor(&self, a: usize, mut b: usize) -> bool {
        while self.depth[b] > self.depth[a] {
            b = self.tree.parent(b).unwrap();
        }
        a == b
    }

    fn dominates(&self, e: usize, f: usize) -> bool {
        if e == f || !(self.is_ancestor(e, f) || self.is_ancestor(f, e)) {
            return false;
        }
        let gap = self.depth[e].abs_diff(self.depth[f]);
        self.len[e] >= 3f64.powi(gap as i32) * self.len[f] * (1.0 - REL)
    }

    /// Edges strictly between `e` and the rootward edge `f`.
    fn between(&self, e: usize, f: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut g = self.tree.parent(e).unwrap();
        while g != f {
            out.push(g);
            g = self.tree.parent(g).unwrap();
        }
        out
    }

    fn first_hand(&self, e: usize, f: usize) -> bool {
        e != f
            && self.is_ancestor(f, e)
            && self.dominates(e, f)
            && self.between(e, f).iter().all(|&g| !self.dominates(g, f))
    }

    fn pair(&self, c: usize) -> [VertexId; 2] {
        [self.tree.id(self.tree.parent(c).unwrap()), self.tree.id(c)]
    }
}

pub type Edge = (VertexId, VertexId);

/// `e >D f`.
pub fn dominates(tree: &RootedTree, drawing: &Drawing, e: Edge, f: Edge) -> Result<bool, DominationError> {
    let d = Drawn::new(tree, drawing)?;
    Ok(d.dominates(d.edge(e)?, d.edge(f)?))
}

/// `e >FD f`.
pub fn first_hand_dominates(
    tree: &RootedTree,
    drawing: &Drawing,
    e: Edge,
    f: Edge,
) -> Result<bool, DominationError> {
    let d = Drawn::new(tree, drawing)?;
    Ok(d.first_hand(d.edge(e)?, d.edge(f)?))
}

/// A first-hand domination chain, deepest edge first, each edge written as
/// `[parent, child]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FdChainCertificate {
    pub chain: Vec<[VertexId; 2]>,
    pub bound: usize,
}

impl FdChainCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<FdChainCertificate, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Longest first-hand domination chain over all branches.
///
/// With `key(g) = ln ℓ(g) - depth(g)·ln 3`, a deeper edge `g` dominates a
/// rootward edge `f` iff `key(g) ≥ key(f)`. So `e >FD f` iff `key(e) ≥ key(f)`
/// and every edge strictly between has a smaller key than `f`, which a single
/// upward scan with a running maximum decides for all ancestors of `e`.
pub fn longest_fd_chain(tree: &RootedTree, drawing: &Drawing) -> Result<FdChainCertificate, DominationError> {
    let d = Drawn::new(tree, drawing)?;
    let ln3 = 3f64.ln();
    let key: Vec<f64> = (0..tree.len())
        .map(|c| d.len[c].ln() - d.depth[c] as f64 * ln3)
        .collect();
    let slack = -(1.0 - REL).ln();

    // best[c]: longest chain starting at edge c; next[c]: its second edge.
    let mut best = vec![0usize; tree.len()];
    let mut next = vec![None; tree.len()];
    let mut top: Option<usize> = None;
    for c in tree.bfs_order() {
        let Some(mut f) = tree.parent(c) else { continue };
        best[c] = 1;
        let mut inner = f64::NEG_INFINITY;
        while tree.parent(f).is_some() {
            if key[c] >= key[f] - slack && inner < key[f] - slack && best[f] + 1 > best[c] {
                best[c] = best[f] + 1;
                next[c] = Some(f);
            }
            inner = inner.max(key[f]);
            f = tree.parent(f).unwrap();
        }
        if top.map_or(true, |t| best[c] > best[t]) {
            top = Some(c);
        }
    }

    let mut chain = Vec::new();
    let mut cur = top;
    while let Some(c) = cur {
        chain.push(d.pair(c));
        cur = next[c];
    }
    Ok(FdChainCertificate {
        bound: chain.len(),
        chain,
    })
}

/// Re-checks a certificate edge by edge from the definitions.
pub fn verify_certificate(
    tree: &RootedTree,
    drawing: &Drawing,
    cert: &FdChainCertificate,
) -> Result<bool, DominationError> {
    let d = Drawn::new(tree, drawing)?;
    if cert.bound != cert.chain.len() || (cert.chain.is_empty() && tree.len() > 1) {
        return Ok(false);
    }
    let mut edges = Vec::with_capacity(cert.chain.len());
    for &[u, v] in &cert.chain {
        edges.push(d.edge((u, v))?);
    }
    Ok(edges.windows(2).all(|w| d.first_hand(w[0], w[1])))
}

fn position(drawing: &Drawing, id: VertexId) -> Result<crate::geometry::Point, DominationError> {
    drawing.position_of(id).ok_or(DominationError::UnknownVertex(id))
}

/// Given a path `x_0, x_1, ..., x_{p+1}` of the drawing with edges
/// `f_k = (x_k, x_{k+1})` where `f_0` dominates every other `f_k`, tells
/// whether `f_1, ..., f_p` lie strictly inside the ply-disk of `x_1`.
pub fn check_dominated_path_containment(drawing: &Drawing, path: &[VertexId]) -> Result<bool, DominationError> {
    if path.len() < 3 {
        return Err(DominationError::ShortPath);
    }
    let mut adjacent = std::collections::HashSet::new();
    for &(u, v) in drawing.edges() {
        adjacent.insert((drawing.id(u), drawing.id(v)));
        adjacent.insert((drawing.id(v), drawing.id(u)));
    }
    let mut pts = Vec::with_capacity(path.len());
    for &x in path {
        pts.push(position(drawing, x)?);
    }
    for w in path.windows(2) {
        if !adjacent.contains(&(w[0], w[1])) {
            return Err(DominationError::NotAnEdge(w[0], w[1]));
        }
    }
    let l0 = pts[0].dist(pts[1]);
    for k in 1..path.len() - 1 {
        let lk = pts[k].dist(pts[k + 1]);
        if l0 < 3f64.powi(k as i32) * lk * (1.0 - REL) {
            return Err(DominationError::NotDominated { index: k });
        }
    }
    let v = drawing.index_of(path[1]).unwrap();
    let r = drawing.longest_incident()[v] / 2.0;
    Ok(pts[2..].iter().all(|p| p.dist(pts[1]) < r))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubtreeCheck {
    pub holds: bool,
    pub witness_vertex: Option<VertexId>,
}

/// Let `e_0, ..., e_t` be the edges from the root down to `subtree_root`, and
/// suppose every edge of the subtree below is dominated by some `e_j`. With `i`
/// maximizing `3^i · ℓ(e_i)`, the whole subtree should lie strictly inside the
/// ply-disk of the lower endpoint of `e_i`; this checks that on the drawing.
pub fn check_dominated_subtree(
    tree: &RootedTree,
    drawing: &Drawing,
    subtree_root: VertexId,
) -> Result<SubtreeCheck, DominationError> {
    let d = Drawn::new(tree, drawing)?;
    let r = tree.index_of(subtree_root).ok_or(DominationError::UnknownVertex(subtree_root))?;
    if tree.parent(r).is_none() {
        return Err(DominationError::RootSubtree);
    }
    // Path edges, top down, identified by child vertex.
    let mut path = vec![r];
    while let Some(p) = tree.parent(*path.last().unwrap()) {
        if tree.parent(p).is_some() {
            path.push(p);
        } else {
            break;
        }
    }
    path.reverse();

    let mut subtree = vec![r];
    let mut k = 0;
    while k < subtree.len() {
        subtree.extend_from_slice(tree.children(subtree[k]));
        k += 1;
    }
    for &g in &subtree[1..] {
        if !path.iter().any(|&e| d.dominates(e, g)) {
            let p = tree.parent(g).unwrap();
            return Err(DominationError::Hypothesis(tree.id(p), tree.id(g)));
        }
    }

    let ln3 = 3f64.ln();
    let mut i = 0;
    for j in 1..path.len() {
        if j as f64 * ln3 + d.len[path[j]].ln() > i as f64 * ln3 + d.len[path[i]].ln() {
            i = j;
        }
    }
    let v = path[i];
    let at = |x: usize| drawing.position(drawing.index_of(tree.id(x)).unwrap());
    let radius = drawing.longest_incident()[drawing.index_of(tree.id(v)).unwrap()] / 2.0;
    let holds = subtree.iter().all(|&x| x == v || at(x).dist(at(v)) < radius);
    Ok(SubtreeCheck {
        holds,
        witness_vertex: Some(tree.id(v)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::DrawingMeta;
    use crate::geometry::Point;
    use crate::layout::radial_layout;
    use crate::tree::{complete_kary, path};
    use proptest::prelude::*;

    /// Root 0 at the origin, then edges f3, f2, f1, f0 going down the x axis.
    fn fig() -> (RootedTree, Drawing) {
        let t = path(5).unwrap();
        let xs = [0.0, 1.0, 5.0, 11.0, 39.0];
        let pos = xs.iter().map(|&x| Point::new(x, 0.0)).collect();
        let d = Drawing::of_tree(&t, pos, DrawingMeta::new("fig"));
        (t, d)
    }

    const F0: Edge = (3, 4);
    const F1: Edge = (2, 3);
    const F2: Edge = (1, 2);
    const F3: Edge = (0, 1);

    #[test]
    fn figure_values() {
        let (t, d) = fig();
        assert!(dominates(&t, &d, F0, F1).unwrap());
        assert!(dominates(&t, &d, F0, F3).unwrap());
        assert!(dominates(&t, &d, F2, F3).unwrap());
        // 28 < 9 · 4: the definition says no.
        assert!(!dominates(&t, &d, F0, F2).unwrap());
        assert!(!dominates(&t, &d, F0, F0).unwrap());
        assert!(first_hand_dominates(&t, &d, F0, F1).unwrap());
        assert!(!first_hand_dominates(&t, &d, F0, F3).unwrap());
        assert!(!first_hand_dominates(&t, &d, F1, F0).unwrap());
        assert_eq!(dominates(&t, &d, (0, 4), F1), Err(DominationError::NotAnEdge(0, 4)));
    }

    /// Exhaustive search over all chains on the branch.
    fn brute_chain(t: &RootedTree, d: &Drawing) -> usize {
        let dr = Drawn::new(t, d).unwrap();
        let edges: Vec<usize> = (0..t.len()).filter(|&v| t.parent(v).is_some()).collect();
        fn go(dr: &Drawn, edges: &[usize], e: usize) -> usize {
            1 + edges.iter().filter(|&&f| dr.first_hand(e, f)).map(|&f| go(dr, edges, f)).max().unwrap_or(0)
        }
        edges.iter().map(|&e| go(&dr, &edges, e)).max().unwrap_or(0)
    }

    #[test]
    fn figure_chain() {
        let (t, d) = fig();
        let c = longest_fd_chain(&t, &d).unwrap();
        assert_eq!(c.bound, 2);
        assert_eq!(brute_chain(&t, &d), 2);
        assert!(verify_certificate(&t, &d, &c).unwrap());
        let text = c.to_json();
        assert_eq!(FdChainCertificate::from_json(&text).unwrap(), c);
    }

    #[test]
    fn figure_containment() {
        let (_, d) = fig();
        assert_eq!(
            check_dominated_path_containment(&d, &[4, 3, 2, 1, 0]),
            Err(DominationError::NotDominated { index: 2 })
        );
        assert_eq!(check_dominated_path_containment(&d, &[4, 3, 2]), Ok(true));
    }

    #[test]
    fn uniform_lengths() {
        let t = complete_kary(2, 4).unwrap();
        let d = radial_layout(&t, 1.0).unwrap();
        let c = longest_fd_chain(&t, &d).unwrap();
        assert_eq!(c.bound, 1);
        assert!(!first_hand_dominates(&t, &d, (0, 1), (1, 3)).unwrap());
        assert!(!first_hand_dominates(&t, &d, (1, 3), (0, 1)).unwrap());
    }

    #[test]
    fn shrinking_radial_drawing() {
        let t = complete_kary(3, 6).unwrap();
        let d = radial_layout(&t, 0.25).unwrap();
        let c = longest_fd_chain(&t, &d).unwrap();
        assert_eq!(c.bound, 6);
        assert!(verify_certificate(&t, &d, &c).unwrap());
        let mut bad = c.clone();
        bad.chain.swap(0, 1);
        assert!(!verify_certificate(&t, &d, &bad).unwrap());
        let t = complete_kary(2, 4).unwrap();
        let d = radial_layout(&t, 0.25).unwrap();
        assert_eq!(longest_fd_chain(&t, &d).unwrap().bound, brute_chain(&t, &d));
    }

    #[test]
    fn subtree_containment() {
        // Root edge of length 1, then a single edge of length 0.3.
        let t = path(3).unwrap();
        let pos = vec![Point::ORIGIN, Point::new(1.0, 0.0), Point::new(1.0, 0.3)];
        let d = Drawing::of_tree(&t, pos, DrawingMeta::new("t"));
        let r = check_dominated_subtree(&t, &d, 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.witness_vertex, Some(1));

        let t = complete_kary(2, 5).unwrap();
        let d = radial_layout(&t, 4.0).unwrap();
        let r = check_dominated_subtree(&t, &d, 3).unwrap();
        assert!(r.holds);

        let t = path(3).unwrap();
        let pos = vec![Point::ORIGIN, Point::new(1.0, 0.0), Point::new(2.0, 0.0)];
        let d = Drawing::of_tree(&t, pos, DrawingMeta::new("t"));
        assert_eq!(check_dominated_subtree(&t, &d, 1), Err(DominationError::Hypothesis(1, 2)));
        assert_eq!(check_dominated_subtree(&t, &d, 0), Err(DominationError::RootSubtree));
    }

    /// A branch drawn with random directions and lengths.
    fn branch() -> impl Strategy<Value = (RootedTree, Drawing)> {
        prop::collection::vec((0.0..std::f64::consts::TAU, -3.0..3.0f64), 2..12).prop_map(|steps| {
            let t = path(steps.len() + 1).unwrap();
            let mut pos = vec![Point::ORIGIN];
            for &(a, e) in &steps {
                let last = *pos.last().unwrap();
                pos.push(last + Point::polar(a) * 3f64.powf(e));
            }
            (t.clone(), Drawing::of_tree(&t, pos, DrawingMeta::new("branch")))
        })
    }

    proptest! {
        #[test]
        fn domination_is_transitive((t, d) in branch()) {
            let dr = Drawn::new(&t, &d).unwrap();
            let n = t.len();
            for e in 1..n {
                for f in 1..n {
                    for g in 1..n {
                        let ordered = (e > f && f > g) || (e < f && f < g);
                        if ordered && dr.dominates(e, f) && dr.dominates(f, g) {
                            prop_assert!(dr.dominates(e, g));
                        }
                        if dr.first_hand(e, f) {
                            prop_assert!(dr.dominates(e, f));
                        }
                    }
                }
            }
            prop_assert_eq!(longest_fd_chain(&t, &d).unwrap().bound, brute_chain(&t, &d));
        }

        #[test]
        fn dominated_paths_stay_in_the_disk(
            l0 in 0.1..100.0f64,
            steps in prop::collection::vec((0.0..std::f64::consts::TAU, 0.0..=1.0f64), 1..10),
            a0 in 0.0..std::f64::consts::TAU,
        ) {
            let mut pos = vec![Point::ORIGIN, Point::polar(a0) * l0];
            for (k, &(a, frac)) in steps.iter().enumerate() {
                let l = l0 / 3f64.powi(k as i32 + 1) * frac.max(1e-6);
                let last = *pos.last().unwrap();
                pos.push(last + Point::polar(a) * l);
            }
            let t = path(pos.len()).unwrap();
            let d = Drawing::of_tree(&t, pos, DrawingMeta::new("p"));
            let ids: Vec<VertexId> = (0..t.len() as u64).collect();
            prop_assert_eq!(check_dominated_path_containment(&d, &ids), Ok(true));
        }
    }
}
