use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::PlcwError;

/// One traversal of an edge inside a face boundary word. `forward` means the
/// face runs from the stored tail to the stored head.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Side {
    pub edge: usize,
    pub forward: bool,
}

impl Side {
    pub fn new(edge: usize, forward: bool) -> Self {
        Side { edge, forward }
    }

    pub fn reversed(self) -> Self {
        Side { edge: self.edge, forward: !self.forward }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub tail: usize,
    pub head: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub name: String,
    /// Counterclockwise boundary word.
    pub word: Vec<Side>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    Open,
    Closed,
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    In,
    Out,
    None,
}

impl Direction {
    /// `ε_v`: `+1` for incoming, `-1` for outgoing components.
    pub fn sign(self) -> i64 {
        match self {
            Direction::In => 1,
            Direction::Out => -1,
            Direction::None => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryComponent {
    pub kind: BoundaryKind,
    pub direction: Direction,
    /// Residue for closed components; `None` for open (`*`) and free ones.
    pub label: Option<i64>,
    /// Core edge sides, in the order the adjacent faces traverse them.
    pub core: Vec<Side>,
}

impl BoundaryComponent {
    pub fn closed(direction: Direction, label: i64, core: Vec<Side>) -> Self {
        BoundaryComponent { kind: BoundaryKind::Closed, direction, label: Some(label), core }
    }

    pub fn open(direction: Direction, core: Vec<Side>) -> Self {
        BoundaryComponent { kind: BoundaryKind::Open, direction, label: None, core }
    }

    pub fn free(core: Vec<Side>) -> Self {
        BoundaryComponent { kind: BoundaryKind::Free, direction: Direction::None, label: None, core }
    }

    pub fn is_parametrized(&self) -> bool {
        self.kind != BoundaryKind::Free
    }
}

/// Role of an edge with respect to the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRole {
    Interior,
    /// Core edge of the given parametrized boundary component.
    Parametrized(usize),
    Free,
}

/// What the admissibility condition asks of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    Interior,
    Puncture,
    /// On the core of the given closed component.
    ClosedBoundary(usize),
    /// Any other boundary vertex: open cores and free boundary.
    OtherBoundary,
}

/// A corner of a face: the vertex where side `pos - 1` ends and side `pos`
/// starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub face: usize,
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlcwComplex {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
    pub punctures: BTreeSet<usize>,
    pub boundary: Vec<BoundaryComponent>,
}

impl PlcwComplex {
    pub fn start(&self, s: Side) -> usize {
        let e = &self.edges[s.edge];
        if s.forward {
            e.tail
        } else {
            e.head
        }
    }

    pub fn end(&self, s: Side) -> usize {
        let e = &self.edges[s.edge];
        if s.forward {
            e.head
        } else {
            e.tail
        }
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].tail == self.edges[e].head
    }

    /// Every `(face, position)` at which the edge occurs.
    pub fn occurrences(&self, e: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (f, face) in self.faces.iter().enumerate() {
            for (p, s) in face.word.iter().enumerate() {
                if s.edge == e {
                    out.push((f, p));
                }
            }
        }
        out
    }

    fn occurrence_table(&self) -> Vec<Vec<(usize, usize)>> {
        let mut occ = vec![Vec::new(); self.edges.len()];
        for (f, face) in self.faces.iter().enumerate() {
            for (p, s) in face.word.iter().enumerate() {
                if s.edge < occ.len() {
                    occ[s.edge].push((f, p));
                }
            }
        }
        occ
    }

    pub fn is_boundary_edge(&self, e: usize) -> bool {
        self.occurrences(e).len() == 1
    }

    pub fn edge_roles(&self) -> Vec<EdgeRole> {
        let occ = self.occurrence_table();
        let mut roles: Vec<EdgeRole> =
            occ.iter().map(|o| if o.len() == 1 { EdgeRole::Free } else { EdgeRole::Interior }).collect();
        for (c, comp) in self.boundary.iter().enumerate() {
            if comp.is_parametrized() {
                for s in &comp.core {
                    roles[s.edge] = EdgeRole::Parametrized(c);
                }
            }
        }
        roles
    }

    pub fn edge_role(&self, e: usize) -> EdgeRole {
        self.edge_roles()[e]
    }

    pub fn vertex_roles(&self) -> Vec<VertexRole> {
        let roles = self.edge_roles();
        let mut out = vec![VertexRole::Interior; self.vertices.len()];
        for (e, role) in roles.iter().enumerate() {
            if *role != EdgeRole::Interior {
                let edge = &self.edges[e];
                for v in [edge.tail, edge.head] {
                    out[v] = VertexRole::OtherBoundary;
                }
            }
        }
        for (c, comp) in self.boundary.iter().enumerate() {
            if comp.kind == BoundaryKind::Closed {
                for s in &comp.core {
                    let edge = &self.edges[s.edge];
                    out[edge.tail] = VertexRole::ClosedBoundary(c);
                    out[edge.head] = VertexRole::ClosedBoundary(c);
                }
            }
        }
        for &p in &self.punctures {
            if out[p] == VertexRole::Interior {
                out[p] = VertexRole::Puncture;
            }
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Connected components, as lists of faces.
    pub fn face_components(&self) -> Vec<Vec<usize>> {
        let occ = self.occurrence_table();
        let mut comp = vec![usize::MAX; self.faces.len()];
        let mut out = Vec::new();
        for start in 0..self.faces.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut members = Vec::new();
            while let Some(f) = stack.pop() {
                members.push(f);
                for s in &self.faces[f].word {
                    for &(g, _) in &occ[s.edge] {
                        if comp[g] == usize::MAX {
                            comp[g] = id;
                            stack.push(g);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The corner following `c` when turning around its vertex through the
    /// edge of the side leaving `c`; `None` at a boundary edge.
    pub fn next_corner(&self, c: Corner) -> Option<Corner> {
        let side = self.faces[c.face].word[c.pos];
        for (g, face) in self.faces.iter().enumerate() {
            for (j, s) in face.word.iter().enumerate() {
                if *s == side.reversed() && !(g == c.face && j == c.pos) {
                    return Some(Corner { face: g, pos: (j + 1) % face.word.len() });
                }
            }
        }
        None
    }

    pub fn corner_vertex(&self, c: Corner) -> usize {
        self.start(self.faces[c.face].word[c.pos])
    }

    /// Corners around each vertex, in rotation order: a cycle for interior
    /// vertices and a chain starting after a boundary edge otherwise.
    pub fn vertex_links(&self) -> Result<Vec<Vec<Corner>>, PlcwError> {
        let mut by_vertex: Vec<Vec<Corner>> = vec![Vec::new(); self.vertices.len()];
        for (f, face) in self.faces.iter().enumerate() {
            for pos in 0..face.word.len() {
                let c = Corner { face: f, pos };
                by_vertex[self.corner_vertex(c)].push(c);
            }
        }
        let mut prev: HashMap<Corner, Corner> = HashMap::new();
        let mut next: HashMap<Corner, Corner> = HashMap::new();
        for corners in &by_vertex {
            for &c in corners {
                if let Some(n) = self.next_corner(c) {
                    next.insert(c, n);
                    prev.insert(n, c);
                }
            }
        }
        let mut links = Vec::with_capacity(by_vertex.len());
        for (v, corners) in by_vertex.iter().enumerate() {
            if corners.is_empty() {
                return Err(PlcwError::Structure(format!("vertex {} lies on no face", self.vertices[v])));
            }
            let start = corners.iter().copied().find(|c| !prev.contains_key(c)).unwrap_or(corners[0]);
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(&n) = next.get(&cur) {
                if n == start {
                    break;
                }
                chain.push(n);
                cur = n;
                if chain.len() > corners.len() {
                    break;
                }
            }
            if chain.len() != corners.len() {
                return Err(PlcwError::Structure(format!(
                    "the link of vertex {} is not a single circle or arc",
                    self.vertices[v]
                )));
            }
            links.push(chain);
        }
        Ok(links)
    }

    /// Checks the invariants of a PLCW decomposition of an oriented surface.
    pub fn validate(&self) -> Result<(), PlcwError> {
        let err = |m: String| Err(PlcwError::Structure(m));
        let nv = self.vertices.len();
        let mut names = BTreeSet::new();
        for n in &self.vertices {
            if !names.insert(("v", n.as_str())) {
                return err(format!("duplicate vertex name {n}"));
            }
        }
        for e in &self.edges {
            if e.tail >= nv || e.head >= nv {
                return err(format!("edge {} has an endpoint out of range", e.name));
            }
            if !names.insert(("e", e.name.as_str())) {
                return err(format!("duplicate edge name {}", e.name));
            }
        }
        if self.faces.is_empty() {
            return err("a surface needs at least one face".into());
        }
        for f in &self.faces {
            if !names.insert(("f", f.name.as_str())) {
                return err(format!("duplicate face name {}", f.name));
            }
            if f.word.is_empty() {
                return err(format!("face {} has an empty boundary word", f.name));
            }
            for s in &f.word {
                if s.edge >= self.edges.len() {
                    return err(format!("face {} uses an unknown edge", f.name));
                }
            }
            for (i, s) in f.word.iter().enumerate() {
                let t = f.word[(i + 1) % f.word.len()];
                if self.end(*s) != self.start(t) {
                    return err(format!(
                        "face {}: side {} does not end where side {} starts",
                        f.name,
                        self.side_name(*s),
                        self.side_name(t)
                    ));
                }
            }
        }
        let occ = self.occurrence_table();
        for (e, o) in occ.iter().enumerate() {
            let name = &self.edges[e].name;
            match o.len() {
                0 => return err(format!("edge {name} lies on no face")),
                1 => {}
                2 => {
                    let a = self.faces[o[0].0].word[o[0].1];
                    let b = self.faces[o[1].0].word[o[1].1];
                    if a.forward == b.forward {
                        return err(format!("edge {name} is traversed twice in the same direction"));
                    }
                }
                _ => return err(format!("edge {name} lies on more than two face sides")),
            }
        }
        self.vertex_links()?;
        let mut used = vec![false; self.edges.len()];
        for (c, comp) in self.boundary.iter().enumerate() {
            if comp.core.is_empty() {
                return err(format!("boundary component {c} has an empty core"));
            }
            if comp.is_parametrized() && comp.core.len() != 1 {
                return err(format!("parametrized boundary component {c} must consist of a single edge"));
            }
            match (comp.kind, comp.direction, comp.label) {
                (BoundaryKind::Closed, Direction::In | Direction::Out, Some(_)) => {}
                (BoundaryKind::Open, Direction::In | Direction::Out, None) => {}
                (BoundaryKind::Free, Direction::None, None) => {}
                _ => return err(format!("boundary component {c} has inconsistent kind, direction and label")),
            }
            for s in &comp.core {
                if s.edge >= self.edges.len() || occ[s.edge].len() != 1 {
                    return err(format!("boundary component {c} uses a non-boundary edge"));
                }
                let (f, p) = occ[s.edge][0];
                if self.faces[f].word[p] != *s {
                    return err(format!("boundary component {c} lists side {} against its face", self.side_name(*s)));
                }
                if std::mem::replace(&mut used[s.edge], true) {
                    return err(format!("edge {} is in two boundary components", self.edges[s.edge].name));
                }
            }
            for w in comp.core.windows(2) {
                if self.end(w[0]) != self.start(w[1]) {
                    return err(format!("core of boundary component {c} is not a chain"));
                }
            }
            let closes = self.end(*comp.core.last().unwrap()) == self.start(comp.core[0]);
            match comp.kind {
                BoundaryKind::Closed if !closes => return err(format!("closed component {c} is not a cycle")),
                BoundaryKind::Open if closes => return err(format!("open component {c} closes up")),
                _ => {}
            }
        }
        let roles = self.vertex_roles();
        for &p in &self.punctures {
            if p >= nv {
                return err("puncture out of range".into());
            }
            if roles[p] != VertexRole::Puncture {
                return err(format!("puncture {} is not an interior vertex", self.vertices[p]));
            }
        }
        Ok(())
    }

    pub fn side_name(&self, s: Side) -> String {
        format!("{}{}", if s.forward { '+' } else { '-' }, self.edges[s.edge].name)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    pub fn face_index(&self, name: &str) -> Option<usize> {
        self.faces.iter().position(|f| f.name == name)
    }

    /// A name with the given prefix not used by any cell.
    pub fn fresh_name(&self, prefix: &str) -> String {
        let taken = |n: &str| {
            self.vertices.iter().any(|v| v == n)
                || self.edges.iter().any(|e| e.name == n)
                || self.faces.iter().any(|f| f.name == n)
        };
        (0..).map(|i| format!("{prefix}{i}")).find(|n| !taken(n)).expect("unbounded")
    }

    /// Deletes the flagged cells and renumbers the rest; sides, cores and
    /// punctures referring to deleted cells must already be gone.
    pub(crate) fn compact(&self, keep_v: &[bool], keep_e: &[bool], keep_f: &[bool]) -> PlcwComplex {
        let remap = |keep: &[bool]| {
            let mut m = vec![usize::MAX; keep.len()];
            let mut n = 0;
            for (i, &k) in keep.iter().enumerate() {
                if k {
                    m[i] = n;
                    n += 1;
                }
            }
            m
        };
        let rn_vertex = remap(keep_v);
        let rn_edge = remap(keep_e);
        let side = |s: &Side| Side { edge: rn_edge[s.edge], forward: s.forward };
        PlcwComplex {
            vertices: self.vertices.iter().zip(keep_v).filter(|(_, &k)| k).map(|(v, _)| v.clone()).collect(),
            edges: self
                .edges
                .iter()
                .zip(keep_e)
                .filter(|(_, &k)| k)
                .map(|(e, _)| Edge { name: e.name.clone(), tail: rn_vertex[e.tail], head: rn_vertex[e.head] })
                .collect(),
            faces: self
                .faces
                .iter()
                .zip(keep_f)
                .filter(|(_, &k)| k)
                .map(|(f, _)| Face { name: f.name.clone(), word: f.word.iter().map(side).collect() })
                .collect(),
            punctures: self.punctures.iter().map(|&p| rn_vertex[p]).collect(),
            boundary: self
                .boundary
                .iter()
                .map(|c| BoundaryComponent { core: c.core.iter().map(side).collect(), ..c.clone() })
                .collect(),
        }
    }
}

impl fmt::Display for PlcwComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for face in &self.faces {
            let word: Vec<String> = face.word.iter().map(|s| self.side_name(*s)).collect();
            writeln!(f, "{}: {}", face.name, word.join(" "))?;
        }
        Ok(())
    }
}

/// Builds a complex from face words written with edge names, `+a`/`-a`.
/// Vertices are inferred by identifying edge ends through consecutive sides.
pub fn complex_from_words(faces: &[(&str, &[&str])]) -> Result<PlcwComplex, PlcwError> {
    let mut edge_names: Vec<String> = Vec::new();
    let mut words = Vec::new();
    for (_, w) in faces {
        let mut word = Vec::new();
        for tok in w.iter() {
            let (forward, name) = match tok.as_bytes().first() {
                Some(b'+') => (true, &tok[1..]),
                Some(b'-') => (false, &tok[1..]),
                _ => return Err(PlcwError::Structure(format!("side {tok} needs a sign"))),
            };
            let e = match edge_names.iter().position(|n| n == name) {
                Some(e) => e,
                None => {
                    edge_names.push(name.to_string());
                    edge_names.len() - 1
                }
            };
            word.push(Side::new(e, forward));
        }
        words.push(word);
    }
    // Union-find over edge ends: 2e is the tail, 2e + 1 the head.
    let mut parent: Vec<usize> = (0..2 * edge_names.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    let end = |s: Side| 2 * s.edge + usize::from(s.forward);
    let start = |s: Side| 2 * s.edge + usize::from(!s.forward);
    for w in &words {
        for i in 0..w.len() {
            let (a, b) = (find(&mut parent, end(w[i])), find(&mut parent, start(w[(i + 1) % w.len()])));
            parent[a] = b;
        }
    }
    let mut vid: HashMap<usize, usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (e, name) in edge_names.iter().enumerate() {
        let mut id = |x: usize, parent: &mut Vec<usize>| {
            let root = find(parent, x);
            *vid.entry(root).or_insert_with(|| {
                vertices.push(format!("v{}", vertices.len()));
                vertices.len() - 1
            })
        };
        let tail = id(2 * e, &mut parent);
        let head = id(2 * e + 1, &mut parent);
        edges.push(Edge { name: name.clone(), tail, head });
    }
    Ok(PlcwComplex {
        vertices,
        edges,
        faces: faces.iter().zip(words).map(|((n, _), word)| Face { name: n.to_string(), word }).collect(),
        punctures: BTreeSet::new(),
        boundary: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_square_has_one_vertex() {
        let k = complex_from_words(&[("f", &["+a", "+b", "-a", "-b"])]).unwrap();
        k.validate().unwrap();
        assert_eq!(k.vertices.len(), 1);
        assert_eq!(k.euler_characteristic(), 0);
        let links = k.vertex_links().unwrap();
        assert_eq!(links[0].len(), 4);
    }

    #[test]
    fn sphere_from_two_triangles() {
        let k = complex_from_words(&[("f", &["+a", "+b", "+c"]), ("g", &["-c", "-b", "-a"])]).unwrap();
        k.validate().unwrap();
        assert_eq!(k.euler_characteristic(), 2);
        assert!(k.edge_roles().iter().all(|r| *r == EdgeRole::Interior));
    }

    #[test]
    fn rejects_nonorientable_gluing() {
        // Klein bottle word: a b a^{-1} b.
        let k = complex_from_words(&[("f", &["+a", "+b", "-a", "+b"])]).unwrap();
        assert!(k.validate().is_err());
    }

    #[test]
    fn rejects_broken_chain() {
        let mut k = complex_from_words(&[("f", &["+a", "+b", "+c"]), ("g", &["-c", "-b", "-a"])]).unwrap();
        k.faces[0].word.swap(0, 1);
        k.faces[1].word.swap(0, 1);
        assert!(k.validate().is_err());
    }

    #[test]
    fn pinched_vertex_is_rejected() {
        // Two disjoint disks sharing a vertex: its link is two arcs.
        let mut k = complex_from_words(&[("f", &["+a"]), ("g", &["+b"])]).unwrap();
        let v = k.edges[0].tail;
        k.edges[1].tail = v;
        k.edges[1].head = v;
        k.vertices.truncate(1);
        assert!(k.validate().is_err());
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let k = complex_from_words(&[("e0", &["+v0"])]).unwrap();
        assert_eq!(k.fresh_name("e"), "e1");
    }
}
