use std::collections::BTreeSet;

use crate::admissible::require_admissible;
use crate::complex::{BoundaryComponent, BoundaryKind, Direction, EdgeRole, PlcwComplex, Side};
use crate::marking::Marking;
use crate::PlcwError;

/// A marked complex with ordered incoming and outgoing boundary components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bordism {
    pub complex: PlcwComplex,
    pub marking: Marking,
    /// Indices into `complex.boundary` of the incoming components, in order.
    pub source: Vec<usize>,
    /// Indices of the outgoing components, in order.
    pub target: Vec<usize>,
}

/// Boundary type of an object: `Some(x)` for a closed circle with label `x`,
/// `None` for an open interval.
pub type BoundaryLabel = Option<i64>;

impl Bordism {
    /// Uses all incoming components as source and all outgoing ones as target,
    /// in the order they are stored.
    pub fn new(complex: PlcwComplex, marking: Marking) -> Result<Bordism, PlcwError> {
        let pick = |d: Direction| {
            complex
                .boundary
                .iter()
                .enumerate()
                .filter(|(_, c)| c.is_parametrized() && c.direction == d)
                .map(|(i, _)| i)
                .collect::<Vec<_>>()
        };
        let (source, target) = (pick(Direction::In), pick(Direction::Out));
        let b = Bordism { complex, marking, source, target };
        b.validate()?;
        Ok(b)
    }

    pub fn r(&self) -> u32 {
        self.marking.r
    }

    pub fn validate(&self) -> Result<(), PlcwError> {
        self.complex.validate()?;
        require_admissible(&self.complex, &self.marking)?;
        let mut seen = BTreeSet::new();
        for (list, dir) in [(&self.source, Direction::In), (&self.target, Direction::Out)] {
            for &c in list {
                let comp = self
                    .complex
                    .boundary
                    .get(c)
                    .ok_or_else(|| PlcwError::Structure(format!("no boundary component {c}")))?;
                if !comp.is_parametrized() || comp.direction != dir || !seen.insert(c) {
                    return Err(PlcwError::Structure(format!("boundary component {c} cannot be listed there")));
                }
            }
        }
        let parametrized = self.complex.boundary.iter().filter(|c| c.is_parametrized()).count();
        if seen.len() != parametrized {
            return Err(PlcwError::Structure("every parametrized component must be a source or a target".into()));
        }
        Ok(())
    }

    fn labels(&self, list: &[usize]) -> Vec<BoundaryLabel> {
        let r = self.marking.modulus();
        list.iter().map(|&c| self.complex.boundary[c].label.map(|x| x.rem_euclid(r))).collect()
    }

    pub fn source_labels(&self) -> Vec<BoundaryLabel> {
        self.labels(&self.source)
    }

    pub fn target_labels(&self) -> Vec<BoundaryLabel> {
        self.labels(&self.target)
    }

    /// Disjoint union; sources and targets are concatenated.
    pub fn tensor(&self, other: &Bordism) -> Result<Bordism, PlcwError> {
        let (k, m, offset) = disjoint_union(&self.complex, &self.marking, &other.complex, &other.marking)?;
        let shift = |v: &[usize]| v.iter().map(|c| c + offset).collect::<Vec<_>>();
        let mut source = self.source.clone();
        source.extend(shift(&other.source));
        let mut target = self.target.clone();
        target.extend(shift(&other.target));
        Ok(Bordism { complex: k, marking: m, source, target })
    }

    /// `other ∘ self`: glues the targets of `self` to the sources of `other`.
    pub fn then(&self, other: &Bordism) -> Result<Bordism, PlcwError> {
        if self.target.len() != other.source.len() {
            return Err(PlcwError::Glue(format!(
                "{} outgoing components cannot meet {} incoming ones",
                self.target.len(),
                other.source.len()
            )));
        }
        let (k, m, offset) = disjoint_union(&self.complex, &self.marking, &other.complex, &other.marking)?;
        let pairs: Vec<(usize, usize)> =
            self.target.iter().zip(&other.source).map(|(&a, &b)| (a, b + offset)).collect();
        let (k, m, remap) = glue_pairs(&k, &m, &pairs)?;
        let source = self.source.iter().map(|&c| remap[c].expect("source survives")).collect();
        let target = other.target.iter().map(|&c| remap[c + offset].expect("target survives")).collect();
        Ok(Bordism { complex: k, marking: m, source, target })
    }
}

fn fresh(taken: &BTreeSet<String>, name: &str) -> String {
    if !taken.contains(name) {
        return name.to_string();
    }
    (1..).map(|i| format!("{name}_{i}")).find(|n| !taken.contains(n)).expect("unbounded")
}

/// Disjoint union, renaming cells of the second complex on collision.
/// Returns the offset of the second complex's boundary components.
pub fn disjoint_union(
    k1: &PlcwComplex,
    m1: &Marking,
    k2: &PlcwComplex,
    m2: &Marking,
) -> Result<(PlcwComplex, Marking, usize), PlcwError> {
    if m1.r != m2.r {
        return Err(PlcwError::Glue(format!("r = {} and r = {} differ", m1.r, m2.r)));
    }
    let mut taken: BTreeSet<String> = k1
        .vertices
        .iter()
        .cloned()
        .chain(k1.edges.iter().map(|e| e.name.clone()))
        .chain(k1.faces.iter().map(|f| f.name.clone()))
        .collect();
    let mut rename = |n: &str| {
        let n = fresh(&taken, n);
        taken.insert(n.clone());
        n
    };
    let (nv, ne) = (k1.vertices.len(), k1.edges.len());
    let mut k = k1.clone();
    k.vertices.extend(k2.vertices.iter().map(|v| rename(v)));
    for e in &k2.edges {
        let mut e = e.clone();
        e.name = rename(&e.name);
        e.tail += nv;
        e.head += nv;
        k.edges.push(e);
    }
    let shift = |s: &Side| Side::new(s.edge + ne, s.forward);
    for f in &k2.faces {
        let mut f = f.clone();
        f.name = rename(&f.name);
        f.word = f.word.iter().map(shift).collect();
        k.faces.push(f);
    }
    k.punctures.extend(k2.punctures.iter().map(|p| p + nv));
    let offset = k.boundary.len();
    for c in &k2.boundary {
        k.boundary.push(BoundaryComponent { core: c.core.iter().map(shift).collect(), ..c.clone() });
    }
    let mut m = m1.clone();
    m.flip.extend(&m2.flip);
    m.index.extend(&m2.index);
    m.mark.extend(&m2.mark);
    Ok((k, m, offset))
}

/// Rebuilds the free boundary components as maximal chains and cycles of
/// free boundary sides.
pub fn rebuild_free_boundary(k: &mut PlcwComplex) {
    k.boundary.retain(|c| c.kind != BoundaryKind::Free);
    let roles = k.edge_roles();
    let mut free: Vec<Side> = Vec::new();
    for face in &k.faces {
        for &s in &face.word {
            if roles[s.edge] == EdgeRole::Free {
                free.push(s);
            }
        }
    }
    let mut used = vec![false; free.len()];
    let next_of = |s: Side, used: &[bool]| free.iter().enumerate().position(|(i, t)| !used[i] && k.start(*t) == k.end(s));
    let starts: Vec<usize> = (0..free.len()).filter(|&i| !free.iter().any(|t| k.end(*t) == k.start(free[i]))).collect();
    let mut comps = Vec::new();
    for i in starts.into_iter().chain(0..free.len()) {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut core = vec![free[i]];
        while let Some(j) = next_of(*core.last().unwrap(), &used) {
            used[j] = true;
            core.push(free[j]);
        }
        comps.push(BoundaryComponent::free(core));
    }
    k.boundary.extend(comps);
}

/// Glues several `(outgoing, incoming)` pairs of boundary components of one
/// complex. Returns the new position of every old boundary component.
pub fn glue_pairs(
    k: &PlcwComplex,
    m: &Marking,
    pairs: &[(usize, usize)],
) -> Result<(PlcwComplex, Marking, Vec<Option<usize>>), PlcwError> {
    let r = m.modulus();
    let mut out = k.clone();
    let mut mm = m.clone();
    let mut parent: Vec<usize> = (0..k.vertices.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut drop_edge = vec![false; k.edges.len()];
    let mut drop_comp = vec![false; k.boundary.len()];
    let mut redirect: Vec<Option<Side>> = vec![None; k.edges.len()];
    for &(co, ci) in pairs {
        let (Some(o), Some(i)) = (k.boundary.get(co), k.boundary.get(ci)) else {
            return Err(PlcwError::Glue("no such boundary component".into()));
        };
        if o.direction != Direction::Out || i.direction != Direction::In {
            return Err(PlcwError::Glue("components must be outgoing and incoming".into()));
        }
        if o.kind != i.kind {
            return Err(PlcwError::Glue("an open component cannot meet a closed one".into()));
        }
        if let (Some(x), Some(y)) = (o.label, i.label) {
            if (x - y).rem_euclid(r) != 0 {
                return Err(PlcwError::Glue(format!("boundary labels {x} and {y} do not agree")));
            }
        }
        if o.core.len() != i.core.len() {
            return Err(PlcwError::Glue(format!("cores have {} and {} cells", o.core.len(), i.core.len())));
        }
        if std::mem::replace(&mut drop_comp[co], true) || std::mem::replace(&mut drop_comp[ci], true) {
            return Err(PlcwError::Glue("a boundary component is glued twice".into()));
        }
        let l = o.core.len();
        for t in 0..l {
            let so = o.core[t];
            let si = i.core[l - 1 - t];
            for (a, b) in [(k.start(so), k.end(si)), (k.end(so), k.start(si))] {
                let (a, b) = (find(&mut parent, a), find(&mut parent, b));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
            drop_edge[si.edge] = true;
            redirect[si.edge] = Some(Side::new(so.edge, !so.forward));
            mm.index[so.edge] = (m.index[so.edge] + m.index[si.edge] + 1).rem_euclid(r);
        }
    }
    for f in &mut out.faces {
        for s in &mut f.word {
            if let Some(t) = redirect[s.edge] {
                *s = t;
            }
        }
    }
    for e in &mut out.edges {
        e.tail = find(&mut parent, e.tail);
        e.head = find(&mut parent, e.head);
    }
    let keep_v: Vec<bool> = (0..k.vertices.len()).map(|v| find(&mut parent, v) == v).collect();
    out.punctures = k.punctures.iter().map(|&p| find(&mut parent, p)).collect();
    let mut remap = vec![None; k.boundary.len()];
    let mut comps = Vec::new();
    for (c, comp) in k.boundary.iter().enumerate() {
        if !drop_comp[c] && comp.is_parametrized() {
            remap[c] = Some(comps.len());
            comps.push(comp.clone());
        }
    }
    out.boundary = comps;
    let keep_e: Vec<bool> = drop_edge.iter().map(|d| !d).collect();
    let mut out = out.compact(&keep_v, &keep_e, &vec![true; k.faces.len()]);
    rebuild_free_boundary(&mut out);
    mm.flip = mm.flip.iter().zip(&keep_e).filter(|(_, &k)| k).map(|(f, _)| *f).collect();
    mm.index = mm.index.iter().zip(&keep_e).filter(|(_, &k)| k).map(|(f, _)| *f).collect();
    out.validate()?;
    Ok((out, mm, remap))
}

/// Glues an outgoing component of `(k1, m1)` to an incoming component of
/// `(k2, m2)`.
pub fn glue(
    k1: &PlcwComplex,
    m1: &Marking,
    out_component: usize,
    k2: &PlcwComplex,
    m2: &Marking,
    in_component: usize,
) -> Result<(PlcwComplex, Marking), PlcwError> {
    let (k, m, offset) = disjoint_union(k1, m1, k2, m2)?;
    let (k, m, _) = glue_pairs(&k, &m, &[(out_component, in_component + offset)])?;
    Ok((k, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::is_admissible;
    use crate::complex::complex_from_words;

    fn cylinder(r: u32, x: i64) -> (PlcwComplex, Marking) {
        let mut k = complex_from_words(&[("f", &["-a", "+c", "+b", "-c"])]).unwrap();
        k.boundary.push(BoundaryComponent::closed(Direction::In, x, vec![Side::new(0, false)]));
        k.boundary.push(BoundaryComponent::closed(Direction::Out, x, vec![Side::new(2, true)]));
        let mut m = Marking::standard(&k, r);
        m.index[1] = x.rem_euclid(i64::from(r));
        (k, m)
    }

    #[test]
    fn glued_index_examples() {
        let (k, m) = cylinder(3, 1);
        assert!(is_admissible(&k, &m));
        let (g, gm) = glue(&k, &m, 1, &k, &m, 0).unwrap();
        g.validate().unwrap();
        let glued = g.edge_index("b").unwrap();
        assert_eq!(gm.index[glued], 1);
        let mut m2 = m.clone();
        m2.index[0] = 2;
        let (g, gm) = glue(&k, &m, 1, &k, &m2, 0).unwrap();
        assert_eq!(gm.index[g.edge_index("b").unwrap()], 0);
        assert_eq!(g.boundary.len(), 2);
    }

    #[test]
    fn labels_must_agree() {
        let (k1, m1) = cylinder(3, 1);
        let (k2, m2) = cylinder(3, 2);
        assert!(matches!(glue(&k1, &m1, 1, &k2, &m2, 0), Err(PlcwError::Glue(_))));
    }

    #[test]
    fn closing_a_cylinder_gives_a_torus() {
        let (k, m) = cylinder(2, 0);
        let (g, gm, _) = glue_pairs(&k, &m, &[(1, 0)]).unwrap();
        g.validate().unwrap();
        assert_eq!(g.euler_characteristic(), 0);
        assert!(g.boundary.is_empty());
        assert!(is_admissible(&g, &gm));
    }
}
