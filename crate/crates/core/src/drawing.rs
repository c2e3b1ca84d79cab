//! Straight-line drawings and their JSON file format.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::geometry::Point;
use crate::tree::{RootedTree, VertexId};

#[derive(Debug, Error)]
pub enum DrawingError {
    #[error("malformed drawing JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("edge [{0}, {1}] references an unknown vertex")]
    UnknownEndpoint(VertexId, VertexId),
    #[error("vertex {0} has a non-finite coordinate")]
    NonFinite(VertexId),
    #[error("vertices {0} and {1} share a position")]
    CoincidentVertices(VertexId, VertexId),
    #[error("edge [{0}, {1}] has zero length")]
    ZeroLengthEdge(VertexId, VertexId),
    #[error("drawing does not match tree: {0}")]
    TreeMismatch(String),
}

/// Generator name, parameters and seed recorded with a drawing.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DrawingMeta {
    pub generator: String,
    pub params: BTreeMap<String, Value>,
    pub seed: Option<u64>,
}

impl DrawingMeta {
    pub fn new(generator: impl Into<String>) -> DrawingMeta {
        DrawingMeta {
            generator: generator.into(),
            ..Default::default()
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> DrawingMeta {
        self.params.insert(key.to_string(), value.into());
        self
    }
}

/// Positions for a set of vertices plus the straight-line edges between them.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    ids: Vec<VertexId>,
    positions: Vec<Point>,
    index: HashMap<VertexId, usize>,
    /// Edges as dense index pairs.
    edges: Vec<(usize, usize)>,
    pub meta: DrawingMeta,
}

#[derive(Deserialize)]
struct JsonVertex {
    id: VertexId,
    x: f64,
    y: f64,
}

#[derive(Deserialize)]
struct JsonDrawing {
    vertices: Vec<JsonVertex>,
    #[serde(default)]
    edges: Vec<[VertexId; 2]>,
    #[serde(default)]
    meta: Option<Value>,
}

impl Drawing {
    pub fn new(
        vertices: impl IntoIterator<Item = (VertexId, Point)>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
        meta: DrawingMeta,
    ) -> Result<Drawing, DrawingError> {
        let mut ids = Vec::new();
        let mut positions = Vec::new();
        let mut index = HashMap::new();
        for (id, p) in vertices {
            if index.insert(id, ids.len()).is_some() {
                return Err(DrawingError::DuplicateVertex(id));
            }
            ids.push(id);
            positions.push(p);
        }
        let edges = edges
            .into_iter()
            .map(|(a, b)| match (index.get(&a), index.get(&b)) {
                (Some(&i), Some(&j)) => Ok((i, j)),
                _ => Err(DrawingError::UnknownEndpoint(a, b)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Drawing {
            ids,
            positions,
            index,
            edges,
            meta,
        })
    }

    /// Drawing of `tree` with `positions[v]` for dense vertex `v`.
    pub fn of_tree(tree: &RootedTree, positions: Vec<Point>, meta: DrawingMeta) -> Drawing {
        assert_eq!(tree.len(), positions.len());
        let ids: Vec<VertexId> = (0..tree.len()).map(|v| tree.id(v)).collect();
        let index = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        Drawing {
            ids,
            positions,
            index,
            edges: tree.edges(),
            meta,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn id(&self, i: usize) -> VertexId {
        self.ids[i]
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn position(&self, i: usize) -> Point {
        self.positions[i]
    }

    pub fn position_of(&self, id: VertexId) -> Option<Point> {
        self.index_of(id).map(|i| self.positions[i])
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_length(&self, e: (usize, usize)) -> f64 {
        self.positions[e.0].dist(self.positions[e.1])
    }

    pub fn edge_lengths(&self) -> impl Iterator<Item = f64> + '_ {
        self.edges.iter().map(|&e| self.edge_length(e))
    }

    /// Longest incident edge per vertex (0 for isolated vertices).
    pub fn longest_incident(&self) -> Vec<f64> {
        let mut longest = vec![0.0f64; self.len()];
        for &(a, b) in &self.edges {
            let l = self.edge_length((a, b));
            longest[a] = longest[a].max(l);
            longest[b] = longest[b].max(l);
        }
        longest
    }

    /// Checks finiteness, distinct positions and positive edge lengths.
    pub fn validate(&self) -> Result<(), DrawingError> {
        for (i, p) in self.positions.iter().enumerate() {
            if !p.is_finite() {
                return Err(DrawingError::NonFinite(self.ids[i]));
            }
        }
        let mut seen: HashMap<(u64, u64), usize> = HashMap::new();
        for (i, p) in self.positions.iter().enumerate() {
            // +0.0 and -0.0 are the same position.
            let key = ((p.x + 0.0).to_bits(), (p.y + 0.0).to_bits());
            if let Some(&j) = seen.get(&key) {
                return Err(DrawingError::CoincidentVertices(self.ids[j], self.ids[i]));
            }
            seen.insert(key, i);
        }
        for &(a, b) in &self.edges {
            if self.edge_length((a, b)) <= 0.0 {
                return Err(DrawingError::ZeroLengthEdge(self.ids[a], self.ids[b]));
            }
        }
        Ok(())
    }

    /// Checks that vertex ids and the undirected edge set match `tree`.
    pub fn check_matches_tree(&self, tree: &RootedTree) -> Result<(), DrawingError> {
        if self.len() != tree.len() {
            return Err(DrawingError::TreeMismatch(format!(
                "{} drawn vertices, {} tree vertices",
                self.len(),
                tree.len()
            )));
        }
        for v in 0..tree.len() {
            if self.index_of(tree.id(v)).is_none() {
                return Err(DrawingError::TreeMismatch(format!(
                    "tree vertex {} is not drawn",
                    tree.id(v)
                )));
            }
        }
        let key = |a: VertexId, b: VertexId| (a.min(b), a.max(b));
        let drawn: HashSet<_> = self
            .edges
            .iter()
            .map(|&(a, b)| key(self.ids[a], self.ids[b]))
            .collect();
        let expected: HashSet<_> = tree.edge_ids().into_iter().map(|(a, b)| key(a, b)).collect();
        if drawn != expected || drawn.len() != self.edges.len() {
            return Err(DrawingError::TreeMismatch("edge sets differ".into()));
        }
        Ok(())
    }

    /// Applies `f` to every position.
    pub fn map_positions(&self, f: impl Fn(Point) -> Point) -> Drawing {
        let mut d = self.clone();
        for p in &mut d.positions {
            *p = f(*p);
        }
        d
    }

    pub fn from_json(text: &str) -> Result<Drawing, DrawingError> {
        let doc: JsonDrawing = serde_json::from_str(text)?;
        let mut meta = DrawingMeta::default();
        if let Some(Value::Object(m)) = doc.meta {
            for (k, v) in m {
                match (k.as_str(), v) {
                    ("generator", Value::String(s)) => meta.generator = s,
                    ("seed", Value::Number(n)) => meta.seed = n.as_u64(),
                    ("params", Value::Object(p)) => meta.params = p.into_iter().collect(),
                    (_, v) => {
                        meta.params.insert(k, v);
                    }
                }
            }
        }
        let d = Drawing::new(
            doc.vertices.into_iter().map(|v| (v.id, Point::new(v.x, v.y))),
            doc.edges.into_iter().map(|e| (e[0], e[1])),
            meta,
        )?;
        for (i, p) in d.positions.iter().enumerate() {
            if !p.is_finite() {
                return Err(DrawingError::NonFinite(d.ids[i]));
            }
        }
        Ok(d)
    }

    /// Serializes with 17 significant digits per coordinate, which
    /// round-trips every `f64` exactly.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"vertices\":[");
        for (i, (id, p)) in self.ids.iter().zip(&self.positions).enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\n{{\"id\":{id},\"x\":{},\"y\":{}}}", real(p.x), real(p.y));
        }
        out.push_str("\n],\"edges\":[");
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "[{},{}]", self.ids[a], self.ids[b]);
        }
        let meta = serde_json::json!({
            "generator": self.meta.generator,
            "params": self.meta.params,
            "seed": self.meta.seed,
        });
        let _ = write!(out, "],\n\"meta\":{meta}}}\n");
        out
    }
}

/// JSON number text with 17 significant digits.
pub(crate) fn real(x: f64) -> String {
    format!("{x:.16e}")
}

/// Bounding box and resolution figures of a drawing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaReport {
    pub min_edge: f64,
    pub bbox_area: f64,
    /// `bbox_area / min_edge²`: the area after scaling so the shortest edge
    /// has length 1. Zero when there are no edges.
    pub normalized_area: f64,
}

pub fn measure_area(drawing: &Drawing) -> AreaReport {
    let (mut lo, mut hi) = (
        Point::new(f64::INFINITY, f64::INFINITY),
        Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    );
    for p in drawing.positions() {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let bbox_area = if drawing.is_empty() {
        0.0
    } else {
        (hi.x - lo.x) * (hi.y - lo.y)
    };
    let min_edge = drawing.edge_lengths().fold(f64::INFINITY, f64::min);
    let normalized_area = if min_edge.is_finite() && min_edge > 0.0 {
        bbox_area / (min_edge * min_edge)
    } else {
        0.0
    };
    AreaReport {
        min_edge,
        bbox_area,
        normalized_area,
    }
}
