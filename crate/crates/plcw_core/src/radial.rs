use std::collections::BTreeSet;

use crate::complex::{EdgeRole, PlcwComplex, VertexRole};
use crate::elementary::{apply_elementary_move, apply_elementary_move_normalized, prepare_merge_edge, ElementaryMove};
use crate::marking::Marking;
use crate::PlcwError;

/// A union of faces to be replaced by a single star-subdivided disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub faces: Vec<usize>,
}

/// Cell names of the radial decomposition produced by [`radialize_disk`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialCells {
    pub center: String,
    pub spokes: Vec<String>,
    pub faces: Vec<String>,
}

fn face_id(k: &PlcwComplex, name: &str) -> usize {
    k.face_index(name).expect("tracked face exists")
}

fn edge_id(k: &PlcwComplex, name: &str) -> usize {
    k.edge_index(name).expect("tracked edge exists")
}

/// Replaces the region by a radial decomposition: one central vertex, one
/// spoke to every corner of the region's boundary word and one triangle per
/// boundary side (a single face with one spoke if the boundary has one
/// side). Works entirely through fixed and elementary moves:
///
/// 1. merge the region's faces along a spanning tree of shared edges,
/// 2. prune edges that hang into the merged face,
/// 3. cut the merged face into a star.
pub fn radialize_disk(
    k: &PlcwComplex,
    m: &Marking,
    region: &Region,
) -> Result<(PlcwComplex, Marking, RadialCells), PlcwError> {
    let faces: BTreeSet<usize> = region.faces.iter().copied().collect();
    if faces.is_empty() {
        return Err(PlcwError::Argument("the region is empty".into()));
    }
    if let Some(&f) = faces.iter().find(|&&f| f >= k.faces.len()) {
        return Err(PlcwError::Argument(format!("no face {f}")));
    }
    let mut cur_k = k.clone();
    let mut cur_m = m.clone();
    let names: Vec<String> = faces.iter().map(|&f| k.faces[f].name.clone()).collect();
    let root = names[0].clone();

    // Spanning tree: absorb region faces into the root one edge at a time.
    let mut merged: BTreeSet<String> = BTreeSet::from([root.clone()]);
    while merged.len() < names.len() {
        let rf = face_id(&cur_k, &root);
        let mut step = None;
        for &side in &cur_k.faces[rf].word {
            if cur_k.edge_role(side.edge) != EdgeRole::Interior {
                continue;
            }
            for (g, _) in cur_k.occurrences(side.edge) {
                let gname = &cur_k.faces[g].name;
                if g != rf && names.contains(gname) && !merged.contains(gname) {
                    step = Some((side.edge, g));
                }
            }
        }
        let Some((e, g)) = step else {
            return Err(PlcwError::Argument("the region is not connected through shared edges".into()));
        };
        let gname = cur_k.faces[g].name.clone();
        let moves = prepare_merge_edge(&cur_k, &cur_m, e, g)?;
        let roles = cur_k.edge_roles();
        for mv in &moves {
            mv.act_with(&cur_k, &roles, &mut cur_m);
        }
        let (k2, m2) = apply_elementary_move(&cur_k, &cur_m, ElementaryMove::MergeEdge(e))?;
        cur_k = k2;
        cur_m = m2;
        merged.insert(gname);
    }

    // Prune trees hanging into the merged face.
    loop {
        let rf = face_id(&cur_k, &root);
        let roles = cur_k.vertex_roles();
        let word = &cur_k.faces[rf].word;
        let n = word.len();
        let leaf = (0..n).find_map(|p| {
            let (a, b) = (word[p], word[(p + 1) % n]);
            let v = cur_k.end(a);
            (a.edge == b.edge && a.forward != b.forward && roles[v] == VertexRole::Interior && n > 2).then_some(v)
        });
        let Some(v) = leaf else { break };
        let ends = cur_k.edges.iter().filter(|e| e.tail == v || e.head == v).count();
        if ends != 1 {
            break;
        }
        let (k2, m2) = apply_elementary_move_normalized(&cur_k, &cur_m, ElementaryMove::RemoveLeaf(v))?;
        cur_k = k2;
        cur_m = m2;
    }

    // Star subdivision.
    let rf = face_id(&cur_k, &root);
    let n = cur_k.faces[rf].word.len();
    let mut spokes = Vec::new();
    let mut out_faces = vec![root.clone()];
    let center;
    if n == 1 {
        let (k2, m2) =
            apply_elementary_move(&cur_k, &cur_m, ElementaryMove::SplitFace { face: rf, from: 0, to: 0 })?;
        let chord = k2.edges.last().unwrap().name.clone();
        let other = k2.faces.last().unwrap().name.clone();
        let (k3, m3) = apply_elementary_move(&k2, &m2, ElementaryMove::SplitEdge(edge_id(&k2, &chord)))?;
        center = k3.vertices.last().unwrap().clone();
        let half = k3.edges.last().unwrap().name.clone();
        let g = face_id(&k3, &root);
        let e = edge_id(&k3, &half);
        let moves = prepare_merge_edge(&k3, &m3, e, g)?;
        let mut m3 = m3;
        let roles = k3.edge_roles();
        for mv in &moves {
            mv.act_with(&k3, &roles, &mut m3);
        }
        let (k4, m4) = apply_elementary_move(&k3, &m3, ElementaryMove::MergeEdge(e))?;
        spokes.push(chord);
        out_faces = vec![other];
        cur_k = k4;
        cur_m = m4;
    } else {
        let (k2, m2) =
            apply_elementary_move(&cur_k, &cur_m, ElementaryMove::SplitFace { face: rf, from: 0, to: 1 })?;
        let chord = k2.edges.last().unwrap().name.clone();
        let mut rest = k2.faces.last().unwrap().name.clone();
        let (k3, m3) = apply_elementary_move(&k2, &m2, ElementaryMove::SplitEdge(edge_id(&k2, &chord)))?;
        center = k3.vertices.last().unwrap().clone();
        spokes.push(chord);
        spokes.push(k3.edges.last().unwrap().name.clone());
        cur_k = k3;
        cur_m = m3;
        let c = cur_k.vertex_index(&center).unwrap();
        for _ in 2..n {
            let f = face_id(&cur_k, &rest);
            let word = &cur_k.faces[f].word;
            let len = word.len();
            let from = (0..len).find(|&p| cur_k.start(word[p]) == c).expect("center lies on the face");
            let to = (from + 2) % len;
            let (k2, m2) = apply_elementary_move(&cur_k, &cur_m, ElementaryMove::SplitFace { face: f, from, to })?;
            spokes.push(k2.edges.last().unwrap().name.clone());
            out_faces.push(rest.clone());
            rest = k2.faces.last().unwrap().name.clone();
            cur_k = k2;
            cur_m = m2;
        }
        out_faces.push(rest);
    }
    Ok((cur_k, cur_m, RadialCells { center, spokes, faces: out_faces }))
}
