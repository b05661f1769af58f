use plcw_core::{Direction, EdgeRole, Marking, PlcwComplex};

use crate::GraphError;

/// Half-edges are labelled by the edge name and the direction in which the
/// face traverses the edge.
pub type Label = (String, bool);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfEdge {
    pub vertex: usize,
    pub label: Label,
    /// The other half of an internal edge; `None` for external half-edges.
    pub partner: Option<usize>,
    /// In/Out for external half-edges.
    pub external: Option<Direction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// Vertex names (the names of the dual faces).
    pub vertices: Vec<String>,
    pub half_edges: Vec<HalfEdge>,
    /// Counterclockwise cyclic order of the half-edges at each vertex.
    pub rotation: Vec<Vec<usize>>,
}

impl Graph {
    pub fn valency(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn half_edge_by_label(&self, label: &Label) -> Option<usize> {
        self.half_edges.iter().position(|h| &h.label == label)
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Internal edges as `(h, partner)` with `h < partner`.
    pub fn internal_edges(&self) -> Vec<(usize, usize)> {
        self.half_edges
            .iter()
            .enumerate()
            .filter_map(|(h, he)| he.partner.filter(|&p| h < p).map(|p| (h, p)))
            .collect()
    }

    /// Checks the involution, the attachment and the rotation system.
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |m: String| Err(GraphError::Malformed(m));
        if self.rotation.len() != self.vertices.len() {
            return bad("rotation table does not match the vertices".into());
        }
        let mut seen = vec![false; self.half_edges.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            if rot.is_empty() {
                return bad(format!("vertex {} has valency 0", self.vertices[v]));
            }
            for &h in rot {
                if h >= self.half_edges.len() || self.half_edges[h].vertex != v || std::mem::replace(&mut seen[h], true) {
                    return bad(format!("rotation at {} is inconsistent", self.vertices[v]));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("a half-edge is missing from the rotation system".into());
        }
        for (h, he) in self.half_edges.iter().enumerate() {
            match (he.partner, he.external) {
                (Some(p), None) => {
                    if p == h || self.half_edges.get(p).and_then(|q| q.partner) != Some(h) {
                        return bad(format!("involution fails at half-edge {h}"));
                    }
                }
                (None, Some(Direction::In | Direction::Out)) => {}
                _ => return bad(format!("half-edge {h} is neither internal nor external")),
            }
        }
        Ok(())
    }
}

/// The dual graph: one vertex per face, one half-edge per face side on a
/// non-free edge. Internal edges pair the two sides of an interior edge;
/// sides on parametrized boundary edges are external. The rotation at a
/// vertex lists the sides in the order of the face word, starting at the
/// marked side (or the first non-free side after it).
pub fn dual_graph(k: &PlcwComplex, m: &Marking) -> Result<Graph, GraphError> {
    k.validate()?;
    m.validate(k)?;
    let roles = k.edge_roles();
    let mut half_edges = Vec::new();
    let mut rotation = Vec::new();
    let mut of_side: Vec<Vec<Option<usize>>> = Vec::new();
    for (f, face) in k.faces.iter().enumerate() {
        let n = face.word.len();
        let mut rot = Vec::new();
        let mut ids = vec![None; n];
        for t in 0..n {
            let p = (m.mark[f] + t) % n;
            let s = face.word[p];
            let external = match roles[s.edge] {
                EdgeRole::Free => continue,
                EdgeRole::Interior => None,
                EdgeRole::Parametrized(c) => Some(k.boundary[c].direction),
            };
            ids[p] = Some(half_edges.len());
            rot.push(half_edges.len());
            half_edges.push(HalfEdge {
                vertex: f,
                label: (k.edges[s.edge].name.clone(), s.forward),
                partner: None,
                external,
            });
        }
        if rot.is_empty() {
            return Err(GraphError::Argument(format!("face {} has only free sides", face.name)));
        }
        rotation.push(rot);
        of_side.push(ids);
    }
    for e in 0..k.edges.len() {
        if roles[e] != EdgeRole::Interior {
            continue;
        }
        let occ = k.occurrences(e);
        let a = of_side[occ[0].0][occ[0].1].expect("interior side");
        let b = of_side[occ[1].0][occ[1].1].expect("interior side");
        half_edges[a].partner = Some(b);
        half_edges[b].partner = Some(a);
    }
    let g = Graph { vertices: k.faces.iter().map(|f| f.name.clone()).collect(), half_edges, rotation };
    g.validate()?;
    Ok(g)
}
