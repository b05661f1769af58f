use std::collections::HashMap;

use rayon::prelude::*;

use crate::admissible::report;
use crate::complex::{EdgeRole, PlcwComplex};
use crate::fixed::FixedMove;
use crate::marking::Marking;
use crate::PlcwError;

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Admissible markings of a complex and their classes under fixed moves.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub r: u32,
    /// Number of candidate markings that were generated.
    pub candidates: u128,
    /// Every admissible marking, in candidate order.
    pub admissible: Vec<Marking>,
    /// Class number of each admissible marking.
    pub class_of: Vec<usize>,
    /// One marking per class: the first member in candidate order.
    pub representatives: Vec<Marking>,
}

impl Enumeration {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.representatives.len()];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }
}

struct Layout {
    flip_edges: Vec<usize>,
    index_edges: Vec<usize>,
    face_sizes: Vec<usize>,
}

impl Layout {
    fn new(k: &PlcwComplex) -> Self {
        let roles = k.edge_roles();
        Layout {
            flip_edges: (0..k.edges.len()).filter(|&e| roles[e] == EdgeRole::Interior).collect(),
            index_edges: (0..k.edges.len()).filter(|&e| roles[e] != EdgeRole::Free).collect(),
            face_sizes: k.faces.iter().map(|f| f.word.len()).collect(),
        }
    }

    fn count(&self, r: u32) -> u128 {
        let mut n: u128 = 1;
        let mul = |n: u128, x: u128| n.saturating_mul(x);
        for _ in &self.flip_edges {
            n = mul(n, 2);
        }
        for _ in &self.index_edges {
            n = mul(n, u128::from(r));
        }
        for &s in &self.face_sizes {
            n = mul(n, s as u128);
        }
        n
    }

    fn decode(&self, base: &Marking, mut code: u128) -> Marking {
        let mut m = base.clone();
        let r = u128::from(m.r);
        for &e in &self.flip_edges {
            m.flip[e] = code % 2 == 1;
            code /= 2;
        }
        for &e in &self.index_edges {
            m.index[e] = (code % r) as i64;
            code /= r;
        }
        for (f, &s) in self.face_sizes.iter().enumerate() {
            m.mark[f] = (code % s as u128) as usize;
            code /= s as u128;
        }
        m
    }
}

/// Number of candidate markings the exhaustive search visits.
pub fn candidate_count(k: &PlcwComplex, r: u32) -> u128 {
    Layout::new(k).count(r)
}

/// Every admissible marking of `k` with the boundary labels stored in `k`.
pub fn admissible_markings(k: &PlcwComplex, r: u32, budget: u128) -> Result<(u128, Vec<Marking>), PlcwError> {
    if r == 0 {
        return Err(PlcwError::Argument("r must be at least 1".into()));
    }
    k.validate()?;
    let layout = Layout::new(k);
    let needed = layout.count(r);
    if needed > budget {
        return Err(PlcwError::Budget { needed, budget });
    }
    let base = Marking::standard(k, r);
    let found: Vec<Marking> = (0..needed as u64)
        .into_par_iter()
        .filter_map(|code| {
            let m = layout.decode(&base, u128::from(code));
            report(k, &m).pass.then_some(m)
        })
        .collect();
    Ok((needed, found))
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut y = x;
    while parent[y] != root {
        let next = parent[y];
        parent[y] = root;
        y = next;
    }
    root
}

/// The generating fixed moves: reversal of each interior edge and rotation
/// of each marked side. Deck moves are composites of rotations.
pub fn generating_moves(k: &PlcwComplex) -> Vec<FixedMove> {
    let roles = k.edge_roles();
    let mut moves: Vec<FixedMove> =
        (0..k.edges.len()).filter(|&e| roles[e] == EdgeRole::Interior).map(FixedMove::ReverseEdge).collect();
    moves.extend((0..k.faces.len()).map(FixedMove::RotateMark));
    moves
}

/// Enumerates admissible markings and groups them into classes under the
/// equivalence generated by fixed moves.
pub fn enumerate_structures(k: &PlcwComplex, r: u32, budget: u128) -> Result<Enumeration, PlcwError> {
    let (candidates, admissible) = admissible_markings(k, r, budget)?;
    let position: HashMap<&Marking, usize> = admissible.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let moves = generating_moves(k);
    let roles = k.edge_roles();
    let neighbours: Vec<Vec<usize>> = admissible
        .par_iter()
        .map(|m| {
            moves
                .iter()
                .map(|mv| {
                    let mut out = m.clone();
                    mv.act_with(k, &roles, &mut out);
                    *position.get(&out).expect("fixed moves preserve admissibility")
                })
                .collect()
        })
        .collect();
    let mut parent: Vec<usize> = (0..admissible.len()).collect();
    for (i, ns) in neighbours.iter().enumerate() {
        for &j in ns {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut class_id: HashMap<usize, usize> = HashMap::new();
    let mut representatives = Vec::new();
    let mut class_of = Vec::with_capacity(admissible.len());
    for i in 0..admissible.len() {
        let root = find(&mut parent, i);
        let id = *class_id.entry(root).or_insert_with(|| {
            representatives.push(admissible[i].clone());
            representatives.len() - 1
        });
        class_of.push(id);
    }
    Ok(Enumeration { r, candidates, admissible, class_of, representatives })
}
