use std::fmt;

use crate::admissible::require_admissible;
use crate::complex::{EdgeRole, PlcwComplex};
use crate::marking::Marking;
use crate::PlcwError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedMove {
    ReverseEdge(usize),
    RotateMark(usize),
    Deck(usize, i64),
}

impl fmt::Display for FixedMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedMove::ReverseEdge(e) => write!(f, "reverse_edge({e})"),
            FixedMove::RotateMark(g) => write!(f, "rotate_mark({g})"),
            FixedMove::Deck(g, k) => write!(f, "deck({g}, {k})"),
        }
    }
}

impl FixedMove {
    /// Checks that the move target exists and is legal, without looking at
    /// admissibility.
    pub fn check_target(&self, k: &PlcwComplex) -> Result<(), PlcwError> {
        match *self {
            FixedMove::ReverseEdge(e) => {
                if e >= k.edges.len() {
                    return Err(PlcwError::Argument(format!("no edge {e}")));
                }
                match k.edge_role(e) {
                    EdgeRole::Interior => Ok(()),
                    EdgeRole::Parametrized(_) => Err(PlcwError::Argument(format!(
                        "edge {} lies on a parametrized boundary component",
                        k.edges[e].name
                    ))),
                    EdgeRole::Free => {
                        Err(PlcwError::Argument(format!("free edge {} carries no orientation", k.edges[e].name)))
                    }
                }
            }
            FixedMove::RotateMark(f) | FixedMove::Deck(f, _) => {
                if f >= k.faces.len() {
                    Err(PlcwError::Argument(format!("no face {f}")))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Applies the move without any checks.
    pub fn act(&self, k: &PlcwComplex, m: &mut Marking) {
        self.act_with(k, &k.edge_roles(), m)
    }

    /// As [`FixedMove::act`], with precomputed edge roles.
    pub fn act_with(&self, k: &PlcwComplex, roles: &[EdgeRole], m: &mut Marking) {
        let is_free = |e: usize| roles[e] == EdgeRole::Free;
        match *self {
            FixedMove::ReverseEdge(e) => {
                m.flip[e] = !m.flip[e];
                m.index[e] = (-1 - m.index[e]).rem_euclid(m.modulus());
            }
            FixedMove::RotateMark(f) => {
                let side = m.marked_side(k, f);
                if !is_free(side.edge) {
                    m.add_index(side.edge, if m.along(side) { -1 } else { 1 });
                }
                m.mark[f] = (m.mark[f] + 1) % k.faces[f].word.len();
            }
            FixedMove::Deck(f, d) => {
                for &side in &k.faces[f].word {
                    if !is_free(side.edge) {
                        m.add_index(side.edge, if m.along(side) { -d } else { d });
                    }
                }
            }
        }
    }
}

/// Applies a fixed move to an admissible marking.
pub fn apply_fixed_move(k: &PlcwComplex, m: &Marking, mv: FixedMove) -> Result<Marking, PlcwError> {
    mv.check_target(k)?;
    require_admissible(k, m)?;
    let mut out = m.clone();
    mv.act(k, &mut out);
    Ok(out)
}

/// Applies a sequence of fixed moves, checking each target.
pub fn apply_fixed_moves(k: &PlcwComplex, m: &Marking, moves: &[FixedMove]) -> Result<Marking, PlcwError> {
    require_admissible(k, m)?;
    let roles = k.edge_roles();
    let mut out = m.clone();
    for mv in moves {
        mv.check_target(k)?;
        mv.act_with(k, &roles, &mut out);
    }
    Ok(out)
}
