use std::fmt::Write as _;

use cyclic_cat::{CyclicMorphism, CyclicObject};
use plcw_core::{check_admissible, Direction, EdgeRole, Marking, PlcwComplex};

use crate::graph::{dual_graph, Graph};
use crate::GraphError;

/// A Λ_r-structure on a graph.
///
/// Each vertex `v` of valency `n + 1` carries `[n]_r`, each edge `[1]_r`.
/// `morphism[h]` is the incidence morphism from the vertex of `h` to the
/// edge of `h`. `mu_v[v][p]` is the half-edge at position `p` of `[n]`, and
/// `mu_e[h]` is the half-edge at position `i` of the edge of `h` for
/// `i = 0, 1`; external edges use the identity on `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaStructure {
    pub r: u32,
    pub graph: Graph,
    pub morphism: Vec<CyclicMorphism>,
    pub mu_v: Vec<Vec<usize>>,
    /// Indexed by half-edge; both halves of an internal edge store the same
    /// pair. Unused for external half-edges.
    pub mu_e: Vec<[usize; 2]>,
}

/// Set-level incidence map from the half-edges at a vertex to the two
/// points of the edge of `h`, as seen through `mu_e`: for an internal edge
/// `h` goes to its partner and every other half-edge to `h`; an incoming
/// external half-edge goes to `1` and the rest to `0`, an outgoing one the
/// other way round.
fn incidence_point(g: &Graph, h: usize, x: usize) -> Incidence {
    let he = &g.half_edges[h];
    match (he.partner, he.external) {
        (Some(p), _) => Incidence::HalfEdge(if x == h { p } else { h }),
        (None, Some(Direction::In)) => Incidence::Point(usize::from(x == h)),
        _ => Incidence::Point(usize::from(x != h)),
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Incidence {
    HalfEdge(usize),
    Point(usize),
}

impl LambdaStructure {
    pub fn vertex_object(&self, v: usize) -> CyclicObject {
        CyclicObject { n: self.graph.valency(v) - 1, r: self.r }
    }

    /// Position of each half-edge at its vertex.
    pub fn position(&self, h: usize) -> usize {
        let v = self.graph.half_edges[h].vertex;
        self.mu_v[v].iter().position(|&x| x == h).expect("half-edge listed at its vertex")
    }

    /// Checks sources and targets, the functor-over-sets condition and that
    /// `mu_v` induces the rotation system.
    pub fn check_well_formed(&self) -> Result<(), GraphError> {
        let bad = |m: String| Err(GraphError::Malformed(m));
        let g = &self.graph;
        g.validate()?;
        if self.morphism.len() != g.half_edges.len() || self.mu_e.len() != g.half_edges.len() {
            return bad("tables do not match the half-edges".into());
        }
        for (v, rot) in g.rotation.iter().enumerate() {
            let mu = &self.mu_v[v];
            let n = rot.len();
            if mu.len() != n {
                return bad(format!("mu at vertex {} has the wrong size", g.vertices[v]));
            }
            let shift = rot.iter().position(|&h| h == mu[0]);
            let ok = shift.is_some_and(|s| (0..n).all(|p| mu[p] == rot[(s + p) % n]));
            if !ok {
                return bad(format!("mu at vertex {} does not follow the cyclic order", g.vertices[v]));
            }
        }
        for (h, he) in g.half_edges.iter().enumerate() {
            let f = &self.morphism[h];
            let v = he.vertex;
            if f.source() != self.vertex_object(v) || f.target() != (CyclicObject { n: 1, r: self.r }) {
                return bad(format!("morphism at half-edge {h} has the wrong type"));
            }
            if let Some(p) = he.partner {
                let pair = self.mu_e[h];
                if self.mu_e[p] != pair || !(pair == [h, p] || pair == [p, h]) {
                    return bad(format!("mu at the edge of half-edge {h} is not a bijection"));
                }
            }
            let set = f.set_map();
            for (pos, &x) in self.mu_v[v].iter().enumerate() {
                let seen = match he.partner {
                    Some(_) => Incidence::HalfEdge(self.mu_e[h][set[pos]]),
                    None => Incidence::Point(set[pos]),
                };
                if seen != incidence_point(g, h, x) {
                    return bad(format!("half-edge {h}: set map disagrees with the incidence diagram"));
                }
            }
        }
        Ok(())
    }

    /// Text form: one line per half-edge with its morphism in the cyclic
    /// notation.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "graph r {}", self.r).unwrap();
        for (v, name) in self.graph.vertices.iter().enumerate() {
            let rot: Vec<String> = self.mu_v[v]
                .iter()
                .map(|&h| {
                    let (e, fwd) = &self.graph.half_edges[h].label;
                    format!("{}{e}", if *fwd { '+' } else { '-' })
                })
                .collect();
            writeln!(s, "vertex {name} {}", rot.join(" ")).unwrap();
        }
        for (h, he) in self.graph.half_edges.iter().enumerate() {
            let kind = match (he.partner, he.external) {
                (Some(_), _) => {
                    let [a, _] = self.mu_e[h];
                    if a == h {
                        "internal 0"
                    } else {
                        "internal 1"
                    }
                }
                (None, Some(Direction::In)) => "in",
                _ => "out",
            };
            let (e, fwd) = &he.label;
            writeln!(
                s,
                "half {}{e} {} {kind} {}",
                if *fwd { '+' } else { '-' },
                self.graph.vertices[he.vertex],
                self.morphism[h].word()
            )
            .unwrap();
        }
        s
    }
}

/// The structure of a marked complex: at a face with `n + 1` non-free sides
/// and a side in position `k` (counted from the marked side) on an edge
/// with index `s`,
///
/// ```text
/// interior edge against the face   ψ^{k,n} τ^{-(n+1)s}
/// interior edge along the face     ψ^{k,0}
/// incoming boundary edge           ψ^{k,n} τ^{-(n+1)s}
/// outgoing boundary edge           ψ^{k,0} τ^{(n+1)(s+1)}
/// ```
///
/// The edge torsor lists the half-edge on the face the edge runs against
/// first.
pub fn marking_to_structure(k: &PlcwComplex, m: &Marking) -> Result<LambdaStructure, GraphError> {
    let rep = check_admissible(k, m)?;
    if !rep.pass {
        return Err(GraphError::Argument("the marking is not admissible".into()));
    }
    let g = dual_graph(k, m)?;
    let r = m.r;
    let roles = k.edge_roles();
    let mut morphism = Vec::with_capacity(g.half_edges.len());
    let mut mu_e = vec![[0, 0]; g.half_edges.len()];
    for (h, he) in g.half_edges.iter().enumerate() {
        let v = he.vertex;
        let n = g.valency(v) - 1;
        let kpos = g.rotation[v].iter().position(|&x| x == h).unwrap();
        let e = k.edge_index(&he.label.0).unwrap();
        let side = plcw_core::Side::new(e, he.label.1);
        let along = m.along(side);
        let s = m.index[e];
        let np1 = n as i64 + 1;
        let f = match (roles[e], along) {
            (EdgeRole::Interior, false) => CyclicMorphism::psi_top(n, kpos, r)?.pre_tau(-np1 * s),
            (EdgeRole::Interior, true) => CyclicMorphism::psi_bottom(n, kpos, r)?,
            (EdgeRole::Parametrized(_), _) => match he.external {
                Some(Direction::In) => CyclicMorphism::psi_top(n, kpos, r)?.pre_tau(-np1 * s),
                _ => CyclicMorphism::psi_bottom(n, kpos, r)?.pre_tau(np1 * (s + 1)),
            },
            (EdgeRole::Free, _) => unreachable!("free sides have no half-edge"),
        };
        morphism.push(f);
        if let Some(p) = he.partner {
            mu_e[h] = if along { [p, h] } else { [h, p] };
        }
    }
    let mu_v = g.rotation.clone();
    let l = LambdaStructure { r, graph: g, morphism, mu_v, mu_e };
    l.check_well_formed()?;
    Ok(l)
}
