use frob_algebra::{FrobeniusAlgebra, GradedSpace, LinearMap, Q};
use graded_center::GradedCenter;
use num::Zero;
use plcw_core::{BoundaryKind, Bordism, Corner, Direction, EdgeRole, VertexRole};

use crate::network::{LegId, LegKind, Network};
use crate::StateSumError;

/// The algebra together with its graded center and the data the state sum
/// reads off repeatedly.
#[derive(Debug, Clone)]
pub struct StateSumData {
    pub algebra: FrobeniusAlgebra,
    pub center: GradedCenter,
    nak_pows: Vec<LinearMap>,
    copairing: LinearMap,
    /// The inverse window element `ζ(1)`.
    window_inverse: Vec<Q>,
    /// `table[i][j]` lists `(k, c)` with `e_i e_j = Σ c e_k`.
    table: Vec<Vec<Vec<(usize, Q)>>>,
    counit: Vec<Q>,
}

impl StateSumData {
    pub fn new(algebra: &FrobeniusAlgebra, r: u32) -> Result<StateSumData, StateSumError> {
        let center = graded_center::graded_center(algebra, r, &frob_algebra::Conventions::default())?;
        Self::with_center(algebra, center)
    }

    pub fn with_center(algebra: &FrobeniusAlgebra, center: GradedCenter) -> Result<StateSumData, StateSumError> {
        let r = center.r;
        let nak_pows = (0..i64::from(r)).map(|k| algebra.nakayama_pow(k)).collect::<Result<_, _>>()?;
        let copairing = algebra.copairing()?;
        let window_inverse = algebra.zeta()?.after(&algebra.eta).matrix.col(0);
        let n = algebra.dim();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .filter_map(|k| {
                                let c = algebra.mu.matrix.get(k, i * n + j);
                                (!c.is_zero()).then(|| (k, c.clone()))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let counit = algebra.epsilon.matrix.transpose().col(0);
        if (0..n).any(|i| algebra.space.is_odd(i) && !counit[i].is_zero()) {
            return Err(StateSumError::Malformed("the counit is not even".into()));
        }
        Ok(StateSumData { algebra: algebra.clone(), center, nak_pows, copairing, window_inverse, table, counit })
    }

    pub fn r(&self) -> u32 {
        self.center.r
    }

    fn n_pow(&self, k: i64) -> &LinearMap {
        &self.nak_pows[k.rem_euclid(i64::from(self.r())) as usize]
    }

    fn times_basis(&self, a: &[Q], j: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); a.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i][j] {
                out[*k] += x * c;
            }
        }
        out
    }

    fn times(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); a.len()];
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                for (k, v) in self.times_basis(a, j).into_iter().enumerate() {
                    out[k] += v * y;
                }
            }
        }
        out
    }

    /// All nonzero values `ε(u e_{l_1} ... e_{l_n})`.
    fn face_values(&self, u: &[Q], arity: usize) -> Vec<(Vec<u16>, Q)> {
        let mut out = Vec::new();
        let mut idx = Vec::with_capacity(arity);
        self.face_rec(u, arity, &mut idx, &mut out);
        out
    }

    fn face_rec(&self, prefix: &[Q], left: usize, idx: &mut Vec<u16>, out: &mut Vec<(Vec<u16>, Q)>) {
        if prefix.iter().all(Zero::is_zero) {
            return;
        }
        if left == 0 {
            let v: Q = prefix.iter().zip(&self.counit).map(|(a, b)| a * b).sum();
            if !v.is_zero() {
                out.push((idx.clone(), v));
            }
            return;
        }
        for j in 0..prefix.len() {
            let next = self.times_basis(prefix, j);
            idx.push(j as u16);
            self.face_rec(&next, left - 1, idx, out);
            idx.pop();
        }
    }

    /// Legs of the form `a_1 ⊗ ... ⊗ a_n ↦ ε(u a_1 ... a_n)`: one dense
    /// tensor for small `n`, otherwise the chain `a ↦ u a`, then `n - 2`
    /// products, then the pairing `ε(x a_n)`.
    fn face_legs(&self, net: &mut Network, u: &[Q], arity: usize, dense_max: usize) -> Vec<LegId> {
        let space = &self.algebra.space;
        if arity <= dense_max.max(1) {
            let values = self.face_values(u, arity);
            return net.form(space, arity, values);
        }
        let n = u.len();
        let both_odd = |i: usize, j: usize| space.is_odd(i) && space.is_odd(j);
        let (v, f) = (LegKind::Vector, LegKind::Form);
        let mut first = Vec::new();
        for a in 0..n {
            for (c, val) in self.times_basis(u, a).into_iter().enumerate() {
                first.push((vec![c as u16, a as u16], val));
            }
        }
        let legs = net.raw(&[(space, v), (space, f)], first);
        let mut out = vec![legs[1]];
        let mut carry = legs[0];
        for _ in 1..arity - 1 {
            let mut entries = Vec::new();
            for x in 0..n {
                for l in 0..n {
                    for (c, val) in &self.table[x][l] {
                        let val = if both_odd(x, l) { -val.clone() } else { val.clone() };
                        entries.push((vec![*c as u16, x as u16, l as u16], val));
                    }
                }
            }
            let legs = net.raw(&[(space, v), (space, f), (space, f)], entries);
            net.connect(legs[1], carry);
            out.push(legs[2]);
            carry = legs[0];
        }
        let mut last = Vec::new();
        for x in 0..n {
            for l in 0..n {
                let val: Q = self.table[x][l].iter().map(|(c, val)| val * &self.counit[*c]).sum();
                last.push((vec![x as u16, l as u16], if both_odd(x, l) { -val } else { val }));
            }
        }
        let legs = net.raw(&[(space, f), (space, f)], last);
        net.connect(legs[0], carry);
        out.push(legs[1]);
        out
    }

    fn closed_component(&self, x: i64) -> &graded_center::CenterComponent {
        &self.center.components[x.rem_euclid(i64::from(self.r())) as usize]
    }

    /// The state space of a boundary object.
    pub fn space_of(&self, label: Option<i64>) -> GradedSpace {
        match label {
            None => self.algebra.space.clone(),
            Some(x) => self.closed_component(x).space().clone(),
        }
    }
}

/// Evaluates a bordism without punctures to the linear map from the tensor
/// product of the source state spaces to that of the target state spaces
/// (`A` for intervals, `C_x` for circles with label `x`).
///
/// Faces carry `ε(ω · a_0 a_1 ... a_n)`, read from the marked side, where
/// free sides contribute the unit and `ω` collects one inverse window
/// element for every interior and closed-boundary vertex assigned to the
/// face; large faces are factored into a chain of products so that no
/// tensor has more than three legs. An interior edge with index `s` is the
/// copairing `(N^s ⊗ id)c` whose first leg enters the face the edge runs
/// against. An incoming side
/// receives `N^s ι_x(u)` (just `N^s(u)` on intervals); an outgoing side is
/// `(π_x N^{s+1} ⊗ id)c` with the first leg leaving the surface. Gluing an
/// outgoing side of index `s` to an incoming one of index `t` therefore
/// gives the copairing of an interior edge of index `s + t + 1`.
pub fn evaluate(b: &Bordism, data: &StateSumData, max_entries: usize) -> Result<LinearMap, StateSumError> {
    evaluate_with(b, data, max_entries, DENSE_FACE_MAX)
}

/// Faces with at most this many non-free sides get a single dense tensor.
pub const DENSE_FACE_MAX: usize = 4;

/// [`evaluate`] with faces of more than `dense_max` sides split into chains.
pub fn evaluate_with(b: &Bordism, data: &StateSumData, max_entries: usize, dense_max: usize) -> Result<LinearMap, StateSumError> {
    let k = &b.complex;
    let m = &b.marking;
    if m.r != data.r() {
        return Err(StateSumError::Mismatch(format!("bordism has r = {}, algebra data r = {}", m.r, data.r())));
    }
    b.validate()?;
    if !k.punctures.is_empty() {
        return Err(StateSumError::Puncture);
    }
    let a_space = data.algebra.space.clone();
    let roles = k.edge_roles();
    let vroles = k.vertex_roles();
    let mut net = Network::new(max_entries);

    // Inverse window elements, one per weighted vertex, put into the first
    // face that has the vertex as a corner.
    let mut weight = vec![0usize; k.faces.len()];
    for (v, role) in vroles.iter().enumerate() {
        match role {
            VertexRole::Interior | VertexRole::ClosedBoundary(_) => {}
            VertexRole::Puncture => return Err(StateSumError::Puncture),
            VertexRole::OtherBoundary => continue,
        }
        let host = (0..k.faces.len())
            .find(|&f| (0..k.faces[f].word.len()).any(|pos| k.corner_vertex(Corner { face: f, pos }) == v))
            .ok_or_else(|| StateSumError::Malformed(format!("vertex {} lies on no face", k.vertices[v])))?;
        weight[host] += 1;
    }

    // Face tensors; leg_of[f][p] is the form leg of side p.
    let mut leg_of: Vec<Vec<Option<usize>>> = Vec::with_capacity(k.faces.len());
    for (f, face) in k.faces.iter().enumerate() {
        let n = face.word.len();
        let sides: Vec<usize> = (0..n).map(|t| (m.mark[f] + t) % n).filter(|&p| roles[face.word[p].edge] != EdgeRole::Free).collect();
        let mut u = data.algebra.unit_vector();
        for _ in 0..weight[f] {
            u = data.times(&u, &data.window_inverse);
        }
        let legs = data.face_legs(&mut net, &u, sides.len(), dense_max);
        let mut row = vec![None; n];
        for (p, l) in sides.into_iter().zip(legs) {
            row[p] = Some(l);
        }
        leg_of.push(row);
    }

    let mut inputs = vec![None; b.source.len()];
    let mut outputs = vec![None; b.target.len()];
    for e in 0..k.edges.len() {
        let s = m.index[e];
        let occ = k.occurrences(e);
        match roles[e] {
            EdgeRole::Free => {}
            EdgeRole::Interior => {
                let side = |(f, p): (usize, usize)| k.faces[f].word[p];
                let (opp, along) = if m.along(side(occ[0])) { (occ[1], occ[0]) } else { (occ[0], occ[1]) };
                let c = data.n_pow(s).tensor(&LinearMap::identity(&a_space)).after(&data.copairing);
                let (x, y) = net.bivector(&c, &a_space, &a_space);
                net.connect(leg_of[opp.0][opp.1].unwrap(), x);
                net.connect(leg_of[along.0][along.1].unwrap(), y);
            }
            EdgeRole::Parametrized(c) => {
                let comp = &k.boundary[c];
                let (f, p) = occ[0];
                let face_leg = leg_of[f][p].unwrap();
                match comp.direction {
                    Direction::In => {
                        let mut map = data.n_pow(s).clone();
                        if comp.kind == BoundaryKind::Closed {
                            let x = comp.label.expect("closed components are labelled");
                            map = map.after(&data.center.iota[x.rem_euclid(i64::from(data.r())) as usize]);
                        }
                        let (w, v) = net.map_tensor(&map);
                        net.connect(face_leg, w);
                        let slot = b.source.iter().position(|&i| i == c).expect("listed source");
                        inputs[slot] = Some(v);
                    }
                    Direction::Out => {
                        let mut out_map = LinearMap::identity(&a_space);
                        if comp.kind == BoundaryKind::Closed {
                            let x = comp.label.expect("closed components are labelled");
                            out_map = data.closed_component(x).proj.clone();
                        }
                        let cop = out_map.after(data.n_pow(s + 1)).tensor(&LinearMap::identity(&a_space)).after(&data.copairing);
                        let (o, w) = net.bivector(&cop, &out_map.target, &a_space);
                        net.connect(face_leg, w);
                        let slot = b.target.iter().position(|&i| i == c).expect("listed target");
                        outputs[slot] = Some(o);
                    }
                    Direction::None => unreachable!("parametrized components have a direction"),
                }
            }
        }
    }
    net.inputs = inputs.into_iter().map(|l| l.expect("every source has a side")).collect();
    net.outputs = outputs.into_iter().map(|l| l.expect("every target has a side")).collect();
    debug_assert!(net.inputs.iter().all(|&l| net.kind(l) == LegKind::Form));
    net.contract()
}

/// The scalar of a closed surface.
pub fn evaluate_closed(b: &Bordism, data: &StateSumData, max_entries: usize) -> Result<Q, StateSumError> {
    let map = evaluate(b, data, max_entries)?;
    if map.source.dim() != 1 || map.target.dim() != 1 {
        return Err(StateSumError::Mismatch("the bordism has boundary".into()));
    }
    Ok(map.scalar())
}

/// The source and target state spaces of a bordism.
pub fn state_spaces(b: &Bordism, data: &StateSumData) -> (GradedSpace, GradedSpace) {
    let spaces = |labels: Vec<Option<i64>>| GradedSpace::tensor_all(&labels.into_iter().map(|l| data.space_of(l)).collect::<Vec<_>>());
    (spaces(b.source_labels()), spaces(b.target_labels()))
}
