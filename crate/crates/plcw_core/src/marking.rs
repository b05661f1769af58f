use crate::complex::{BoundaryKind, Direction, EdgeRole, PlcwComplex, Side};
use crate::PlcwError;

/// Edge orientations, marked sides and edge indices of a marked complex.
///
/// `flip[e]` reverses the stored `tail -> head` direction. Entries for free
/// boundary edges are kept at `false` and `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Marking {
    pub r: u32,
    pub flip: Vec<bool>,
    pub mark: Vec<usize>,
    pub index: Vec<i64>,
}

impl Marking {
    /// Zero indices, marks at position 0, interior edges in their stored
    /// direction and parametrized edges oriented by the boundary convention.
    pub fn standard(k: &PlcwComplex, r: u32) -> Marking {
        let mut m = Marking {
            r,
            flip: vec![false; k.edges.len()],
            mark: vec![0; k.faces.len()],
            index: vec![0; k.edges.len()],
        };
        for comp in &k.boundary {
            for s in &comp.core {
                m.flip[s.edge] = match comp.direction {
                    Direction::In => s.forward,
                    Direction::Out => !s.forward,
                    Direction::None => false,
                };
            }
        }
        m
    }

    pub fn modulus(&self) -> i64 {
        i64::from(self.r)
    }

    /// Whether the edge orientation agrees with the traversal direction of the
    /// given face side.
    pub fn along(&self, s: Side) -> bool {
        s.forward != self.flip[s.edge]
    }

    /// Oriented `(tail, head)` of an edge.
    pub fn oriented_ends(&self, k: &PlcwComplex, e: usize) -> (usize, usize) {
        let edge = &k.edges[e];
        if self.flip[e] {
            (edge.head, edge.tail)
        } else {
            (edge.tail, edge.head)
        }
    }

    pub fn marked_side(&self, k: &PlcwComplex, f: usize) -> Side {
        k.faces[f].word[self.mark[f]]
    }

    pub(crate) fn add_index(&mut self, e: usize, d: i64) {
        self.index[e] = (self.index[e] + d).rem_euclid(self.modulus());
    }

    /// Structural checks: sizes, ranges, the boundary orientation convention
    /// and the normal form on free edges.
    pub fn validate(&self, k: &PlcwComplex) -> Result<(), PlcwError> {
        let err = |m: String| Err(PlcwError::Marking(m));
        if self.r == 0 {
            return err("r must be at least 1".into());
        }
        if self.flip.len() != k.edges.len() || self.index.len() != k.edges.len() {
            return err("orientation or index table does not match the edges".into());
        }
        if self.mark.len() != k.faces.len() {
            return err("marked-side table does not match the faces".into());
        }
        for (f, face) in k.faces.iter().enumerate() {
            if self.mark[f] >= face.word.len() {
                return err(format!("face {} marks position {} of {}", face.name, self.mark[f], face.word.len()));
            }
        }
        let roles = k.edge_roles();
        for (e, role) in roles.iter().enumerate() {
            let name = &k.edges[e].name;
            if !(0..self.modulus()).contains(&self.index[e]) {
                return err(format!("index of edge {name} is not reduced mod {}", self.r));
            }
            if *role == EdgeRole::Free && (self.flip[e] || self.index[e] != 0) {
                return err(format!("free edge {name} carries data"));
            }
        }
        for comp in &k.boundary {
            if comp.kind == BoundaryKind::Free {
                continue;
            }
            for s in &comp.core {
                let along = self.along(*s);
                let ok = match comp.direction {
                    Direction::In => !along,
                    Direction::Out => along,
                    Direction::None => true,
                };
                if !ok {
                    return err(format!(
                        "boundary edge {} is not oriented by the in/out convention",
                        k.edges[s.edge].name
                    ));
                }
            }
        }
        Ok(())
    }
}
