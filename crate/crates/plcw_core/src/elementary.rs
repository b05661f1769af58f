use std::fmt;

use crate::admissible::require_admissible;
use crate::complex::{Edge, EdgeRole, Face, PlcwComplex, Side, VertexRole};
use crate::fixed::FixedMove;
use crate::marking::Marking;
use crate::PlcwError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementaryMove {
    /// Adds a bivalent vertex in the middle of an edge.
    SplitEdge(usize),
    /// Removes a bivalent vertex, joining its two edges.
    MergeVertex(usize),
    /// Adds a chord from the corner before position `from` to the corner
    /// before position `to`; `from == to` cuts off a monogon.
    SplitFace { face: usize, from: usize, to: usize },
    /// Removes an interior edge between two distinct faces.
    MergeEdge(usize),
    /// Removes an interior univalent vertex together with its edge.
    RemoveLeaf(usize),
}

impl fmt::Display for ElementaryMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryMove::SplitEdge(e) => write!(f, "split_edge({e})"),
            ElementaryMove::MergeVertex(v) => write!(f, "merge_vertex({v})"),
            ElementaryMove::SplitFace { face, from, to } => write!(f, "split_face({face}, {from}, {to})"),
            ElementaryMove::MergeEdge(e) => write!(f, "merge_edge({e})"),
            ElementaryMove::RemoveLeaf(v) => write!(f, "remove_leaf({v})"),
        }
    }
}

fn arg<T>(msg: impl Into<String>) -> Result<T, PlcwError> {
    Err(PlcwError::Argument(msg.into()))
}

/// Applies an elementary move to an admissible marked complex whose local
/// data is already in the normal form the move requires.
pub fn apply_elementary_move(
    k: &PlcwComplex,
    m: &Marking,
    mv: ElementaryMove,
) -> Result<(PlcwComplex, Marking), PlcwError> {
    require_admissible(k, m)?;
    match mv {
        ElementaryMove::SplitEdge(e) => split_edge(k, m, e),
        ElementaryMove::MergeVertex(v) => merge_vertex(k, m, v),
        ElementaryMove::SplitFace { face, from, to } => split_face(k, m, face, from, to),
        ElementaryMove::MergeEdge(e) => merge_edge(k, m, e),
        ElementaryMove::RemoveLeaf(v) => remove_leaf(k, m, v),
    }
}

/// Fixed moves that bring the marking into the normal form of `mv`.
pub fn prepare(k: &PlcwComplex, m: &Marking, mv: ElementaryMove) -> Result<Vec<FixedMove>, PlcwError> {
    match mv {
        ElementaryMove::SplitEdge(_) | ElementaryMove::SplitFace { .. } => Ok(Vec::new()),
        ElementaryMove::MergeVertex(v) => prepare_merge_vertex(k, m, v),
        ElementaryMove::MergeEdge(e) => {
            let ((f0, _), (f1, p1)) = distinct_faces(k, e)?;
            let g = if k.faces[f0].word.len() == 1 {
                f0
            } else if k.faces[f1].word.len() == 1 || m.along(k.faces[f1].word[p1]) {
                f1
            } else {
                f0
            };
            prepare_merge_edge(k, m, e, g)
        }
        ElementaryMove::RemoveLeaf(v) => prepare_remove_leaf(k, m, v),
    }
}

/// Normalizes locally with fixed moves, then applies the move.
pub fn apply_elementary_move_normalized(
    k: &PlcwComplex,
    m: &Marking,
    mv: ElementaryMove,
) -> Result<(PlcwComplex, Marking), PlcwError> {
    require_admissible(k, m)?;
    let moves = prepare(k, m, mv)?;
    let roles = k.edge_roles();
    let mut m2 = m.clone();
    for fm in &moves {
        fm.act_with(k, &roles, &mut m2);
    }
    apply_elementary_move(k, &m2, mv)
}

/// Rewrites a face word. `pairs` lists positions `p` such that sides `p` and
/// `p + 1` (cyclically) are replaced by `join(p)`; `None` drops both. Returns
/// the new word and the new position of every old position.
fn rewrite_pairs(
    word: &[Side],
    pairs: &[usize],
    join: impl Fn(usize) -> Option<Side>,
) -> (Vec<Side>, Vec<Option<usize>>) {
    let n = word.len();
    let start = if pairs.contains(&(n - 1)) { 1 % n } else { 0 };
    let mut out = Vec::new();
    let mut map = vec![None; n];
    let mut i = 0;
    while i < n {
        let p = (start + i) % n;
        if pairs.contains(&p) {
            let q = (p + 1) % n;
            if let Some(s) = join(p) {
                map[p] = Some(out.len());
                map[q] = Some(out.len());
                out.push(s);
            }
            i += 2;
        } else {
            map[p] = Some(out.len());
            out.push(word[p]);
            i += 1;
        }
    }
    (out, map)
}

fn split_edge(k: &PlcwComplex, m: &Marking, e: usize) -> Result<(PlcwComplex, Marking), PlcwError> {
    if e >= k.edges.len() {
        return arg(format!("no edge {e}"));
    }
    if let EdgeRole::Parametrized(_) = k.edge_role(e) {
        return arg(format!("edge {} lies on a parametrized boundary component", k.edges[e].name));
    }
    let mut out = k.clone();
    let mut mm = m.clone();
    let mid = out.vertices.len();
    out.vertices.push(k.fresh_name("v"));
    let e2 = out.edges.len();
    let head = k.edges[e].head;
    out.edges.push(Edge { name: k.fresh_name("e"), tail: mid, head });
    out.edges[e].head = mid;
    let pieces = |s: Side| {
        if s.forward {
            [Side::new(e, true), Side::new(e2, true)]
        } else {
            [Side::new(e2, false), Side::new(e, false)]
        }
    };
    for (f, face) in k.faces.iter().enumerate() {
        let mut word = Vec::with_capacity(face.word.len() + 1);
        let mut new_mark = 0;
        for (p, &s) in face.word.iter().enumerate() {
            if p == m.mark[f] {
                new_mark = word.len();
            }
            if s.edge == e {
                word.extend(pieces(s));
            } else {
                word.push(s);
            }
        }
        out.faces[f].word = word;
        mm.mark[f] = new_mark;
    }
    for comp in &mut out.boundary {
        comp.core = comp.core.iter().flat_map(|&s| if s.edge == e { pieces(s).to_vec() } else { vec![s] }).collect();
    }
    mm.flip.push(m.flip[e]);
    mm.index.push(m.index[e]);
    Ok((out, mm))
}

/// The two edge ends at a bivalent vertex `v`, as `(edge, far vertex)`.
fn bivalent_edges(k: &PlcwComplex, v: usize) -> Result<[(usize, usize); 2], PlcwError> {
    let name = &k.vertices[v];
    let mut ends = Vec::new();
    for (e, edge) in k.edges.iter().enumerate() {
        if edge.tail == v {
            ends.push((e, edge.head));
        }
        if edge.head == v {
            ends.push((e, edge.tail));
        }
    }
    if ends.len() != 2 {
        return arg(format!("vertex {name} has {} edge ends, not 2", ends.len()));
    }
    if ends[0].0 == ends[1].0 {
        return arg(format!("vertex {name} lies on a loop"));
    }
    Ok([ends[0], ends[1]])
}

fn check_mergeable_vertex(k: &PlcwComplex, v: usize) -> Result<[(usize, usize); 2], PlcwError> {
    if v >= k.vertices.len() {
        return arg(format!("no vertex {v}"));
    }
    let name = &k.vertices[v];
    match k.vertex_roles()[v] {
        VertexRole::Puncture => return arg(format!("vertex {name} is a puncture")),
        VertexRole::ClosedBoundary(_) => return arg(format!("vertex {name} lies on a parametrized boundary component")),
        _ => {}
    }
    let ends = bivalent_edges(k, v)?;
    let roles = k.edge_roles();
    for (e, _) in ends {
        if let EdgeRole::Parametrized(_) = roles[e] {
            return arg(format!("vertex {name} is an endpoint of a parametrized interval"));
        }
    }
    Ok(ends)
}

fn prepare_merge_vertex(k: &PlcwComplex, m: &Marking, v: usize) -> Result<Vec<FixedMove>, PlcwError> {
    let [(e1, _), (e2, _)] = check_mergeable_vertex(k, v)?;
    let mut moves = Vec::new();
    let roles = k.edge_roles();
    if roles[e1] == EdgeRole::Interior {
        let into = |e: usize| m.oriented_ends(k, e).1 == v;
        if into(e1) == into(e2) {
            moves.push(FixedMove::ReverseEdge(e2));
        }
    }
    for f in 0..k.faces.len() {
        if k.start(m.marked_side(k, f)) == v {
            moves.push(FixedMove::RotateMark(f));
        }
    }
    Ok(moves)
}

fn merge_vertex(k: &PlcwComplex, m: &Marking, v: usize) -> Result<(PlcwComplex, Marking), PlcwError> {
    let [(e1, far1), (e2, far2)] = check_mergeable_vertex(k, v)?;
    let name = &k.vertices[v];
    let roles = k.edge_roles();
    let interior = roles[e1] == EdgeRole::Interior;
    if roles[e1] != roles[e2] {
        return arg(format!("vertex {name} joins an interior and a boundary edge"));
    }
    let mut mm = m.clone();
    if interior {
        let into1 = m.oriented_ends(k, e1).1 == v;
        let into2 = m.oriented_ends(k, e2).1 == v;
        if into1 == into2 {
            return arg(format!("edges at {name} are not oriented through the vertex"));
        }
        for f in 0..k.faces.len() {
            if k.start(m.marked_side(k, f)) == v {
                return arg(format!("a marked side of face {} starts at {name}", k.faces[f].name));
            }
        }
        if m.index[e1] != m.index[e2] {
            return arg(format!("edges at {name} have different indices"));
        }
        mm.flip[e1] = !into1;
    } else {
        mm.flip[e1] = false;
    }
    let mut out = k.clone();
    out.edges[e1] = Edge { name: k.edges[e1].name.clone(), tail: far1, head: far2 };
    for (f, face) in k.faces.iter().enumerate() {
        let n = face.word.len();
        let pairs: Vec<usize> = (0..n).filter(|&p| k.end(face.word[p]) == v).collect();
        let (word, map) = rewrite_pairs(&face.word, &pairs, |p| Some(Side::new(e1, face.word[p].edge == e1)));
        out.faces[f].word = word;
        mm.mark[f] = map[m.mark[f]].expect("merged sides are kept");
    }
    for comp in &mut out.boundary {
        let n = comp.core.len();
        let cyclic = k.end(comp.core[n - 1]) == k.start(comp.core[0]);
        let pairs: Vec<usize> = (0..n).filter(|&p| k.end(comp.core[p]) == v && (p + 1 < n || cyclic)).collect();
        let core = comp.core.clone();
        if pairs.is_empty() {
            continue;
        }
        comp.core = rewrite_pairs(&core, &pairs, |p| Some(Side::new(e1, core[p].edge == e1))).0;
    }
    let mut keep_v = vec![true; k.vertices.len()];
    keep_v[v] = false;
    let mut keep_e = vec![true; k.edges.len()];
    keep_e[e2] = false;
    let out = out.compact(&keep_v, &keep_e, &vec![true; k.faces.len()]);
    mm.flip.remove(e2);
    mm.index.remove(e2);
    Ok((out, mm))
}

fn split_face(
    k: &PlcwComplex,
    m: &Marking,
    f: usize,
    i: usize,
    j: usize,
) -> Result<(PlcwComplex, Marking), PlcwError> {
    if f >= k.faces.len() {
        return arg(format!("no face {f}"));
    }
    let word = &k.faces[f].word;
    let n = word.len();
    if i >= n || j >= n {
        return arg(format!("chord ({i}, {j}) out of range for a {n}-gon"));
    }
    let ci = k.start(word[i]);
    let cj = k.start(word[j]);
    let mut out = k.clone();
    let mut mm = m.clone();
    let d = out.edges.len();
    out.edges.push(Edge { name: k.fresh_name("e"), tail: ci, head: cj });
    let len1 = (j + n - i) % n;
    let w1: Vec<Side> = (0..len1).map(|t| word[(i + t) % n]).collect();
    let w2: Vec<Side> = (0..n - len1).map(|t| word[(j + t) % n]).collect();
    let p = m.mark[f];
    let in_f1 = (p + n - i) % n < len1;
    let mut word1 = w1;
    word1.push(Side::new(d, false));
    let mut word2 = w2;
    word2.push(Side::new(d, true));
    out.faces[f].word = word1;
    out.faces.push(Face { name: k.fresh_name("f"), word: word2 });
    mm.flip.push(false);
    if in_f1 {
        mm.mark[f] = (p + n - i) % n;
        mm.mark.push(n - len1);
        mm.index.push(0);
    } else {
        mm.mark[f] = len1;
        mm.mark.push((p + n - j) % n);
        mm.index.push(m.modulus() - 1);
    }
    Ok((out, mm))
}

/// The two sides of an interior edge, as `(face, position)`, requiring
/// distinct faces.
fn distinct_faces(k: &PlcwComplex, e: usize) -> Result<((usize, usize), (usize, usize)), PlcwError> {
    if e >= k.edges.len() {
        return arg(format!("no edge {e}"));
    }
    let name = &k.edges[e].name;
    if k.edge_role(e) != EdgeRole::Interior {
        return arg(format!("edge {name} is not an interior edge"));
    }
    let occ = k.occurrences(e);
    if occ[0].0 == occ[1].0 {
        return arg(format!("edge {name} has the same face on both sides"));
    }
    Ok((occ[0], occ[1]))
}

/// Fixed moves after which `merge_edge(e)` removes `e` and absorbs face `g`
/// into the other face.
pub fn prepare_merge_edge(k: &PlcwComplex, m: &Marking, e: usize, g: usize) -> Result<Vec<FixedMove>, PlcwError> {
    let (a, b) = distinct_faces(k, e)?;
    let ((g, pg), (f, pf)) = if a.0 == g {
        (a, b)
    } else if b.0 == g {
        (b, a)
    } else {
        return arg(format!("face {g} does not contain edge {}", k.edges[e].name));
    };
    let roles = k.edge_roles();
    let mut mm = m.clone();
    let mut moves = Vec::new();
    let mut push = |mv: FixedMove, mm: &mut Marking| {
        mv.act_with(k, &roles, mm);
        moves.push(mv);
    };
    if !mm.along(k.faces[g].word[pg]) {
        push(FixedMove::ReverseEdge(e), &mut mm);
    }
    while mm.mark[g] != pg {
        push(FixedMove::RotateMark(g), &mut mm);
    }
    if mm.mark[f] == pf {
        push(FixedMove::RotateMark(f), &mut mm);
    }
    let s = mm.index[e];
    if s != 0 {
        push(FixedMove::Deck(f, -s), &mut mm);
    }
    Ok(moves)
}

fn merge_edge(k: &PlcwComplex, m: &Marking, e: usize) -> Result<(PlcwComplex, Marking), PlcwError> {
    let (a, b) = distinct_faces(k, e)?;
    let name = &k.edges[e].name;
    let a_marked = m.mark[a.0] == a.1;
    let b_marked = m.mark[b.0] == b.1;
    let ((g, pg), (f, pf)) = match (a_marked, b_marked) {
        (true, false) => (a, b),
        (false, true) => (b, a),
        (true, true) => return arg(format!("both faces at {name} are marked on it")),
        (false, false) => return arg(format!("no face at {name} is marked on it")),
    };
    if !m.along(k.faces[g].word[pg]) {
        return arg(format!("edge {name} is not oriented along its marked side"));
    }
    if m.index[e] != 0 {
        return arg(format!("edge {name} has index {}, not 0", m.index[e]));
    }
    let gw = &k.faces[g].word;
    let ng = gw.len();
    let inserted: Vec<Side> = (1..ng).map(|t| gw[(pg + t) % ng]).collect();
    let fw = &k.faces[f].word;
    let mut word = Vec::new();
    let mut mark = 0;
    for (p, &s) in fw.iter().enumerate() {
        if p == m.mark[f] {
            mark = word.len();
        }
        if p == pf {
            word.extend(inserted.iter().copied());
        } else {
            word.push(s);
        }
    }
    if word.is_empty() {
        return arg(format!("removing {name} leaves an empty face"));
    }
    let mut out = k.clone();
    let mut mm = m.clone();
    out.faces[f].word = word;
    mm.mark[f] = mark;
    let mut keep_e = vec![true; k.edges.len()];
    keep_e[e] = false;
    let mut keep_f = vec![true; k.faces.len()];
    keep_f[g] = false;
    let out = out.compact(&vec![true; k.vertices.len()], &keep_e, &keep_f);
    mm.flip.remove(e);
    mm.index.remove(e);
    mm.mark.remove(g);
    Ok((out, mm))
}

fn leaf_edge(k: &PlcwComplex, v: usize) -> Result<(usize, usize, usize), PlcwError> {
    if v >= k.vertices.len() {
        return arg(format!("no vertex {v}"));
    }
    let name = &k.vertices[v];
    if k.vertex_roles()[v] != VertexRole::Interior {
        return arg(format!("vertex {name} is not an unpunctured interior vertex"));
    }
    let ends: Vec<usize> =
        (0..k.edges.len()).filter(|&e| k.edges[e].tail == v || k.edges[e].head == v).collect();
    let count: usize = ends.iter().map(|&e| usize::from(k.edges[e].tail == v) + usize::from(k.edges[e].head == v)).sum();
    if count != 1 {
        return arg(format!("vertex {name} is not univalent"));
    }
    let e = ends[0];
    let occ = k.occurrences(e);
    let f = occ[0].0;
    let n = k.faces[f].word.len();
    let p = (0..n).find(|&p| k.faces[f].word[p].edge == e && k.end(k.faces[f].word[p]) == v).expect("leaf side");
    Ok((e, f, p))
}

fn prepare_remove_leaf(k: &PlcwComplex, m: &Marking, v: usize) -> Result<Vec<FixedMove>, PlcwError> {
    let (e, f, _) = leaf_edge(k, v)?;
    let n = k.faces[f].word.len();
    if n <= 2 {
        return arg("removing the leaf would leave an empty face");
    }
    let mut moves = Vec::new();
    let mut mark = m.mark[f];
    while k.faces[f].word[mark].edge == e {
        moves.push(FixedMove::RotateMark(f));
        mark = (mark + 1) % n;
    }
    Ok(moves)
}

fn remove_leaf(k: &PlcwComplex, m: &Marking, v: usize) -> Result<(PlcwComplex, Marking), PlcwError> {
    let (e, f, p) = leaf_edge(k, v)?;
    let word = &k.faces[f].word;
    if word.len() <= 2 {
        return arg("removing the leaf would leave an empty face");
    }
    if word[m.mark[f]].edge == e {
        return arg(format!("face {} is marked on the leaf edge", k.faces[f].name));
    }
    let (new_word, map) = rewrite_pairs(word, &[p], |_| None);
    let mut out = k.clone();
    let mut mm = m.clone();
    out.faces[f].word = new_word;
    mm.mark[f] = map[m.mark[f]].expect("mark is kept");
    let mut keep_v = vec![true; k.vertices.len()];
    keep_v[v] = false;
    let mut keep_e = vec![true; k.edges.len()];
    keep_e[e] = false;
    let out = out.compact(&keep_v, &keep_e, &vec![true; k.faces.len()]);
    mm.flip.remove(e);
    mm.index.remove(e);
    Ok((out, mm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::is_admissible;
    use crate::complex::complex_from_words;
    use crate::enumerate::{enumerate_structures, DEFAULT_BUDGET};

    fn torus() -> PlcwComplex {
        complex_from_words(&[("f", &["+a", "+b", "-a", "-b"])]).unwrap()
    }

    #[test]
    fn split_edge_then_merge_vertex_round_trips() {
        let k = torus();
        let mut m = Marking::standard(&k, 3);
        m.index = vec![1, 2];
        m.flip = vec![true, false];
        let (k2, m2) = apply_elementary_move(&k, &m, ElementaryMove::SplitEdge(0)).unwrap();
        k2.validate().unwrap();
        assert!(is_admissible(&k2, &m2));
        let v = k2.vertices.len() - 1;
        let (k3, m3) = apply_elementary_move_normalized(&k2, &m2, ElementaryMove::MergeVertex(v)).unwrap();
        k3.validate().unwrap();
        assert_eq!(k3.faces[0].word, k.faces[0].word);
        assert_eq!(m3, m);
    }

    #[test]
    fn split_face_keeps_the_torus_count() {
        let k = torus();
        let m = Marking::standard(&k, 2);
        let (k2, _) = apply_elementary_move(&k, &m, ElementaryMove::SplitFace { face: 0, from: 0, to: 2 }).unwrap();
        k2.validate().unwrap();
        assert_eq!(k2.faces.len(), 2);
        for r in 2..=3 {
            assert_eq!(enumerate_structures(&k2, r, DEFAULT_BUDGET).unwrap().class_count(), (r * r) as usize);
        }
    }

    #[test]
    fn split_face_on_either_side_of_the_mark_is_admissible() {
        let k = torus();
        for mark in 0..4 {
            for i in 0..4 {
                for j in 0..4 {
                    let mut m = Marking::standard(&k, 3);
                    m.mark[0] = mark;
                    m.index = vec![2, 1];
                    let (k2, m2) =
                        apply_elementary_move(&k, &m, ElementaryMove::SplitFace { face: 0, from: i, to: j }).unwrap();
                    k2.validate().unwrap();
                    assert!(is_admissible(&k2, &m2), "mark {mark} chord {i} {j}");
                    let d = k2.edges.len() - 1;
                    let (k3, m3) = apply_elementary_move_normalized(&k2, &m2, ElementaryMove::MergeEdge(d)).unwrap();
                    k3.validate().unwrap();
                    assert!(is_admissible(&k3, &m3));
                }
            }
        }
    }

    #[test]
    fn merge_edge_needs_zero_index() {
        let k = torus();
        let m = Marking::standard(&k, 3);
        let (k2, mut m2) = apply_elementary_move(&k, &m, ElementaryMove::SplitFace { face: 0, from: 0, to: 2 }).unwrap();
        let d = k2.edges.len() - 1;
        let (k3, m3) = apply_elementary_move(&k2, &m2, ElementaryMove::MergeEdge(d)).unwrap();
        assert_eq!((k3.faces[0].word.clone(), m3), (k.faces[0].word.clone(), m.clone()));
        // Shift the chord index by a deck move on the new face.
        FixedMove::Deck(0, 1).act(&k2, &mut m2);
        assert!(m2.index[d] != 0);
        assert!(matches!(apply_elementary_move(&k2, &m2, ElementaryMove::MergeEdge(d)), Err(PlcwError::Argument(_))));
        let fix = FixedMove::Deck(0, -m2.index[d]);
        fix.act(&k2, &mut m2);
        assert!(apply_elementary_move(&k2, &m2, ElementaryMove::MergeEdge(d)).is_ok());
    }

    #[test]
    fn leaves_can_be_removed() {
        // A square with a spike: the leaf edge l hangs into the face.
        let k = complex_from_words(&[("f", &["+a", "+b", "-a", "-b", "+l", "-l"])]).unwrap();
        k.validate().unwrap();
        let leaf = k.edges[k.edge_index("l").unwrap()].head;
        let e = enumerate_structures(&k, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(e.class_count(), 4);
        for m in e.admissible.iter().take(40) {
            let (k2, m2) = apply_elementary_move_normalized(&k, m, ElementaryMove::RemoveLeaf(leaf)).unwrap();
            k2.validate().unwrap();
            assert!(is_admissible(&k2, &m2));
        }
    }

    #[test]
    fn illegal_moves_are_rejected() {
        let k = torus();
        let m = Marking::standard(&k, 2);
        assert!(apply_elementary_move(&k, &m, ElementaryMove::MergeVertex(0)).is_err());
        assert!(apply_elementary_move(&k, &m, ElementaryMove::MergeEdge(0)).is_err());
        assert!(apply_elementary_move(&k, &m, ElementaryMove::RemoveLeaf(0)).is_err());
        assert!(apply_elementary_move(&k, &m, ElementaryMove::SplitFace { face: 0, from: 0, to: 9 }).is_err());
    }
}
