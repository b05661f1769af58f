use std::fmt;

use crate::graph::Graph;
use crate::structure::LambdaStructure;
use crate::GraphError;

/// The object an elementary isomorphism acts on. Internal edges are named
/// by their smaller half-edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoObject {
    Vertex(usize),
    Edge(usize),
}

impl fmt::Display for IsoObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoObject::Vertex(v) => write!(f, "vertex {v}"),
            IsoObject::Edge(h) => write!(f, "edge at half-edge {h}"),
        }
    }
}

/// `η(o, τ^t)`. On a vertex every incidence morphism `f` becomes `f ∘ τ^{-t}`;
/// on an internal edge both incidence morphisms become `τ^t ∘ f`. The
/// torsor identifications are transported along.
pub fn apply_elementary_iso(l: &LambdaStructure, o: IsoObject, t: i64) -> Result<LambdaStructure, GraphError> {
    let mut out = l.clone();
    match o {
        IsoObject::Vertex(v) => {
            if v >= l.graph.vertices.len() {
                return Err(GraphError::Argument(format!("no vertex {v}")));
            }
            let n1 = l.graph.valency(v) as i64;
            for &h in &l.graph.rotation[v] {
                out.morphism[h] = l.morphism[h].pre_tau(-t);
            }
            out.mu_v[v] = (0..n1).map(|p| l.mu_v[v][(p + t).rem_euclid(n1) as usize]).collect();
        }
        IsoObject::Edge(h) => {
            let he = l.graph.half_edges.get(h).ok_or_else(|| GraphError::Argument(format!("no half-edge {h}")))?;
            let Some(p) = he.partner else {
                return Err(GraphError::Argument(format!("half-edge {h} is external")));
            };
            for x in [h, p] {
                out.morphism[x] = l.morphism[x].post_tau(t);
            }
            let old = l.mu_e[h];
            let new = if t.rem_euclid(2) == 0 { old } else { [old[1], old[0]] };
            out.mu_e[h] = new;
            out.mu_e[p] = new;
        }
    }
    Ok(out)
}

pub fn apply_isos(l: &LambdaStructure, isos: &[(IsoObject, i64)]) -> Result<LambdaStructure, GraphError> {
    let mut out = l.clone();
    for &(o, t) in isos {
        out = apply_elementary_iso(&out, o, t)?;
    }
    Ok(out)
}

fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i])))
}

/// Re-expresses `l` on `target`, a graph with the same vertex names,
/// half-edge labels and cyclic orders but possibly different numbering.
pub fn transport_to(l: &LambdaStructure, target: &Graph) -> Result<LambdaStructure, GraphError> {
    let g = &l.graph;
    let mismatch = |m: String| Err(GraphError::Mismatch(m));
    if g.vertices.len() != target.vertices.len() || g.half_edges.len() != target.half_edges.len() {
        return mismatch("different numbers of vertices or half-edges".into());
    }
    let mut hmap = vec![0; g.half_edges.len()];
    for (h, he) in g.half_edges.iter().enumerate() {
        let Some(t) = target.half_edge_by_label(&he.label) else {
            return mismatch(format!("no half-edge labelled {:?}", he.label));
        };
        hmap[h] = t;
    }
    let mut vmap = vec![0; g.vertices.len()];
    for (v, name) in g.vertices.iter().enumerate() {
        let Some(t) = target.vertex_by_name(name) else {
            return mismatch(format!("no vertex named {name}"));
        };
        vmap[v] = t;
    }
    for (h, he) in g.half_edges.iter().enumerate() {
        let th = &target.half_edges[hmap[h]];
        if th.vertex != vmap[he.vertex] || th.partner != he.partner.map(|p| hmap[p]) || th.external != he.external {
            return mismatch(format!("half-edge {:?} is attached differently", he.label));
        }
    }
    for v in 0..g.vertices.len() {
        let rot: Vec<usize> = g.rotation[v].iter().map(|&h| hmap[h]).collect();
        if !same_cycle(&rot, &target.rotation[vmap[v]]) {
            return mismatch(format!("cyclic orders at {} differ", g.vertices[v]));
        }
    }
    let mut out = LambdaStructure {
        r: l.r,
        graph: target.clone(),
        morphism: l.morphism.clone(),
        mu_v: vec![Vec::new(); g.vertices.len()],
        mu_e: vec![[0, 0]; g.half_edges.len()],
    };
    for h in 0..g.half_edges.len() {
        out.morphism[hmap[h]] = l.morphism[h].clone();
        if g.half_edges[h].partner.is_some() {
            out.mu_e[hmap[h]] = l.mu_e[h].map(|x| hmap[x]);
        }
    }
    for v in 0..g.vertices.len() {
        out.mu_v[vmap[v]] = l.mu_v[v].iter().map(|&h| hmap[h]).collect();
    }
    Ok(out)
}

struct Search<'a> {
    l1: &'a LambdaStructure,
    l2: &'a LambdaStructure,
    order: Vec<usize>,
    a: Vec<Option<i64>>,
}

impl Search<'_> {
    fn vertex_period(&self, v: usize) -> i64 {
        self.l1.graph.valency(v) as i64 * i64::from(self.l1.r)
    }

    /// Edge gauge forced by the vertex gauge at `h`'s end.
    fn edge_gauge(&self, h: usize, av: i64) -> Option<i64> {
        self.l1.morphism[h].pre_tau(-av).tau_offset_to(&self.l2.morphism[h])
    }

    /// Checks the torsor at `v` and every half-edge whose vertex gauges are
    /// known. Morphisms alone can admit gauges that the torsors rule out.
    fn consistent(&self, v: usize) -> bool {
        let g = &self.l1.graph;
        let av = self.a[v].unwrap();
        let n1 = g.valency(v);
        let shift = av.rem_euclid(n1 as i64) as usize;
        if (0..n1).any(|p| self.l1.mu_v[v][(p + shift) % n1] != self.l2.mu_v[v][p]) {
            return false;
        }
        for &h in &g.rotation[v] {
            let moved = self.l1.morphism[h].pre_tau(-av);
            match g.half_edges[h].partner {
                None => {
                    if moved != self.l2.morphism[h] {
                        return false;
                    }
                }
                Some(p) => {
                    let Some(ae) = moved.tau_offset_to(&self.l2.morphism[h]) else { return false };
                    let [x, y] = self.l1.mu_e[h];
                    if self.l2.mu_e[h] != if ae % 2 == 0 { [x, y] } else { [y, x] } {
                        return false;
                    }
                    if let Some(ap) = self.a[g.half_edges[p].vertex] {
                        if self.l1.morphism[p].pre_tau(-ap).post_tau(ae) != self.l2.morphism[p] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        for t in 0..self.vertex_period(v) {
            self.a[v] = Some(t);
            if self.consistent(v) && self.run(i + 1) {
                return true;
            }
        }
        self.a[v] = None;
        false
    }
}

/// Decides whether an isomorphism fixing the external half-edges carries
/// `l1` to `l2`, and returns it as a list of elementary isomorphisms.
pub fn structures_isomorphic(
    l1: &LambdaStructure,
    l2: &LambdaStructure,
) -> Result<Option<Vec<(IsoObject, i64)>>, GraphError> {
    if l1.r != l2.r {
        return Err(GraphError::Mismatch(format!("r = {} and r = {}", l1.r, l2.r)));
    }
    let l2 = transport_to(l2, &l1.graph)?;
    let g = &l1.graph;
    // Breadth-first order so that each vertex after the first of its
    // component is adjacent to an earlier one.
    let mut order = Vec::new();
    let mut seen = vec![false; g.vertices.len()];
    for root in 0..g.vertices.len() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &h in &g.rotation[v] {
                if let Some(p) = g.half_edges[h].partner {
                    let w = g.half_edges[p].vertex;
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    let mut search = Search { l1, l2: &l2, order, a: vec![None; g.vertices.len()] };
    if !search.run(0) {
        return Ok(None);
    }
    let mut witness = Vec::new();
    for v in 0..g.vertices.len() {
        let t = search.a[v].unwrap();
        if t != 0 {
            witness.push((IsoObject::Vertex(v), t));
        }
    }
    for (h, _) in g.internal_edges() {
        let v = g.half_edges[h].vertex;
        let t = search.edge_gauge(h, search.a[v].unwrap()).expect("consistent gauge");
        if t != 0 {
            witness.push((IsoObject::Edge(h), t));
        }
    }
    let image = apply_isos(l1, &witness)?;
    if image != l2 {
        return Ok(None);
    }
    Ok(Some(witness))
}
