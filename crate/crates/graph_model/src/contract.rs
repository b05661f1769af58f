use cyclic_cat::CyclicMorphism;

use crate::graph::{Graph, HalfEdge};
use crate::structure::LambdaStructure;
use crate::GraphError;

/// Contracts the internal edge of half-edge `h`, whose ends must be
/// distinct vertices `v1` (at `h`) and `v2`. The merged vertex keeps the
/// name and index slot of `v1`; its half-edges run through `v1` up to `h`,
/// then around `v2` starting after the partner of `h`, then the rest of
/// `v1`.
///
/// With `v1 = [n]`, `v2 = [m]` and positions `k1`, `k2` of the two halves,
/// half-edges from `v1` are precomposed with `θ^{n,m,k1}` and those from
/// `v2` with `θ^{m,n,k2} ∘ τ^c`, where `c` is the unique power for which the
/// set map is the block collapse and the square over the contracted edge
/// commutes.
pub fn contract_edge(l: &LambdaStructure, h: usize) -> Result<LambdaStructure, GraphError> {
    let g = &l.graph;
    let he = g.half_edges.get(h).ok_or_else(|| GraphError::Argument(format!("no half-edge {h}")))?;
    let p = he.partner.ok_or_else(|| GraphError::Argument(format!("half-edge {h} is external")))?;
    let (v1, v2) = (he.vertex, g.half_edges[p].vertex);
    if v1 == v2 {
        return Err(GraphError::Argument(format!("the edge at half-edge {h} is a loop")));
    }
    let r = l.r;
    let (k1, k2) = (l.position(h), l.position(p));
    let (n, m) = (g.valency(v1) - 1, g.valency(v2) - 1);
    let mu1 = &l.mu_v[v1];
    let mu2 = &l.mu_v[v2];

    // Merged order, as old half-edges.
    let mut merged: Vec<usize> = mu1[..k1].to_vec();
    merged.extend((1..=m).map(|i| mu2[(k2 + i) % (m + 1)]));
    merged.extend_from_slice(&mu1[k1 + 1..]);

    let rho1 = CyclicMorphism::theta(n, m, k1, r)?;
    let target_set: Vec<usize> = merged
        .iter()
        .map(|&x| if g.half_edges[x].vertex == v2 { mu2.iter().position(|&y| y == x).unwrap() } else { k2 })
        .collect();
    let base = CyclicMorphism::theta(m, n, k2, r)?;
    let lhs = l.morphism[h].compose(&rho1)?;
    let period = (n + m) as i64 * i64::from(r);
    let mut rho2 = None;
    for c in 0..period {
        let cand = base.pre_tau(c);
        if cand.set_map() == target_set && l.morphism[p].compose(&cand)? == lhs {
            rho2 = Some(cand);
            break;
        }
    }
    let rho2 = rho2.ok_or_else(|| GraphError::Malformed("no lift of the contraction at the second vertex".into()))?;

    // Renumber vertices and half-edges.
    let vmap: Vec<Option<usize>> = (0..g.vertices.len())
        .map(|v| match v.cmp(&v2) {
            std::cmp::Ordering::Less => Some(v),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(v - 1),
        })
        .collect();
    let vnew = |v: usize| if v == v2 { vmap[v1].unwrap() } else { vmap[v].unwrap() };
    let mut hmap = vec![None; g.half_edges.len()];
    let mut next = 0;
    for x in 0..g.half_edges.len() {
        if x != h && x != p {
            hmap[x] = Some(next);
            next += 1;
        }
    }
    let hnew = |x: usize| hmap[x].expect("surviving half-edge");

    let mut half_edges = Vec::with_capacity(next);
    let mut morphism = Vec::with_capacity(next);
    let mut mu_e = Vec::with_capacity(next);
    for (x, e) in g.half_edges.iter().enumerate() {
        if x == h || x == p {
            continue;
        }
        half_edges.push(HalfEdge {
            vertex: vnew(e.vertex),
            label: e.label.clone(),
            partner: e.partner.map(hnew),
            external: e.external,
        });
        morphism.push(if e.vertex == v1 {
            l.morphism[x].compose(&rho1)?
        } else if e.vertex == v2 {
            l.morphism[x].compose(&rho2)?
        } else {
            l.morphism[x].clone()
        });
        mu_e.push(if e.partner.is_some() { l.mu_e[x].map(hnew) } else { [0, 0] });
    }
    let mut vertices = Vec::new();
    let mut mu_v = Vec::new();
    for v in 0..g.vertices.len() {
        if v == v2 {
            continue;
        }
        vertices.push(g.vertices[v].clone());
        mu_v.push(if v == v1 { merged.iter().map(|&x| hnew(x)).collect() } else { l.mu_v[v].iter().map(|&x| hnew(x)).collect() });
    }
    let graph = Graph { vertices, half_edges, rotation: mu_v.clone() };
    let out = LambdaStructure { r, graph, morphism, mu_v, mu_e };
    out.check_well_formed()?;
    Ok(out)
}
