//! Random walks through fixed and elementary moves.

use std::fmt;

use crate::complex::{EdgeRole, PlcwComplex, VertexRole};
use crate::elementary::{apply_elementary_move_normalized, ElementaryMove};
use crate::fixed::{apply_fixed_move, FixedMove};
use crate::glue::Bordism;
use crate::marking::Marking;
use crate::PlcwError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnyMove {
    Fixed(FixedMove),
    Elementary(ElementaryMove),
}

impl fmt::Display for AnyMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyMove::Fixed(m) => m.fmt(f),
            AnyMove::Elementary(m) => m.fmt(f),
        }
    }
}

/// Moves worth trying on `k`. Some of them may still be rejected when
/// applied. Face and edge splits are left out once `k` has `max_faces`
/// faces.
pub fn candidate_moves(k: &PlcwComplex, r: u32, max_faces: usize) -> Vec<AnyMove> {
    let roles = k.edge_roles();
    let vroles = k.vertex_roles();
    let mut out = Vec::new();
    for (e, role) in roles.iter().enumerate() {
        if *role == EdgeRole::Interior {
            out.push(AnyMove::Fixed(FixedMove::ReverseEdge(e)));
            out.push(AnyMove::Elementary(ElementaryMove::MergeEdge(e)));
        }
        if !matches!(role, EdgeRole::Parametrized(_)) && k.faces.len() < max_faces {
            out.push(AnyMove::Elementary(ElementaryMove::SplitEdge(e)));
        }
    }
    for (f, face) in k.faces.iter().enumerate() {
        out.push(AnyMove::Fixed(FixedMove::RotateMark(f)));
        for d in 1..i64::from(r) {
            out.push(AnyMove::Fixed(FixedMove::Deck(f, d)));
        }
        if k.faces.len() < max_faces {
            let n = face.word.len();
            for from in 0..n {
                for to in 0..n {
                    out.push(AnyMove::Elementary(ElementaryMove::SplitFace { face: f, from, to }));
                }
            }
        }
    }
    for (v, role) in vroles.iter().enumerate() {
        if *role != VertexRole::Puncture {
            out.push(AnyMove::Elementary(ElementaryMove::MergeVertex(v)));
            out.push(AnyMove::Elementary(ElementaryMove::RemoveLeaf(v)));
        }
    }
    out
}

/// Applies a move to a bordism, keeping its source and target lists.
pub fn apply_move(b: &Bordism, mv: AnyMove) -> Result<Bordism, PlcwError> {
    let (complex, marking): (PlcwComplex, Marking) = match mv {
        AnyMove::Fixed(f) => (b.complex.clone(), apply_fixed_move(&b.complex, &b.marking, f)?),
        AnyMove::Elementary(e) => apply_elementary_move_normalized(&b.complex, &b.marking, e)?,
    };
    let out = Bordism { complex, marking, source: b.source.clone(), target: b.target.clone() };
    out.validate()?;
    Ok(out)
}

/// Picks candidates with `choose(n) < n` until one applies. Returns `None`
/// when every candidate is rejected.
pub fn random_move(b: &Bordism, max_faces: usize, choose: &mut dyn FnMut(usize) -> usize) -> Option<(AnyMove, Bordism)> {
    let mut cands = candidate_moves(&b.complex, b.marking.r, max_faces);
    while !cands.is_empty() {
        let mv = cands.swap_remove(choose(cands.len()));
        if let Ok(next) = apply_move(b, mv) {
            return Some((mv, next));
        }
    }
    None
}
