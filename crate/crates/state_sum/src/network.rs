//! Sparse tensor networks over the rationals in super vector spaces.
//!
//! A network is the formal product, in a fixed global order, of tensors
//! whose legs are either vectors or linear forms on a graded space, together
//! with a list of contractions pairing a form leg with a vector leg. A pair is
//! evaluated by moving the form to the front, the vector right behind it,
//! and applying the form; every move past odd legs contributes the Koszul
//! sign. Tensors are merged one at a time into an accumulator, which fixes
//! the global order to the merge order. The caller is responsible for only
//! reordering tensors whose entries are all even.

use std::collections::HashMap;

use frob_algebra::{GradedSpace, LinearMap, Matrix, Q};
use num::{One, Zero};

use crate::StateSumError;

pub type LegId = usize;

#[derive(Debug, Clone)]
pub struct Tensor {
    pub legs: Vec<LegId>,
    pub entries: HashMap<Vec<u16>, Q>,
}

impl Tensor {
    pub fn scalar(v: Q) -> Tensor {
        let mut entries = HashMap::new();
        if !v.is_zero() {
            entries.insert(Vec::new(), v);
        }
        Tensor { legs: Vec::new(), entries }
    }

    fn add(&mut self, idx: Vec<u16>, v: Q) {
        if v.is_zero() {
            return;
        }
        match self.entries.entry(idx) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += v;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(s) => {
                s.insert(v);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegKind {
    Vector,
    Form,
}

#[derive(Debug, Clone, Default)]
pub struct Network {
    spaces: Vec<GradedSpace>,
    kinds: Vec<LegKind>,
    pub tensors: Vec<Tensor>,
    /// `(form leg, vector leg)`
    pairs: Vec<(LegId, LegId)>,
    /// Open vector legs, in the order of the target.
    pub outputs: Vec<LegId>,
    /// Open form legs, in the order of the source.
    pub inputs: Vec<LegId>,
    /// Bound on the number of entries of any intermediate tensor.
    pub max_entries: usize,
}

impl Network {
    pub fn new(max_entries: usize) -> Network {
        Network { max_entries, ..Network::default() }
    }

    pub fn leg(&mut self, space: &GradedSpace, kind: LegKind) -> LegId {
        self.spaces.push(space.clone());
        self.kinds.push(kind);
        self.spaces.len() - 1
    }

    pub fn space(&self, l: LegId) -> &GradedSpace {
        &self.spaces[l]
    }

    pub fn kind(&self, l: LegId) -> LegKind {
        self.kinds[l]
    }

    pub fn connect(&mut self, form: LegId, vector: LegId) {
        assert_eq!(self.kinds[form], LegKind::Form);
        assert_eq!(self.kinds[vector], LegKind::Vector);
        self.pairs.push((form, vector));
    }

    pub fn push(&mut self, t: Tensor) {
        self.tensors.push(t);
    }

    /// A map `f : V -> W` as the tensor `Σ f_ab e_a ⊗ e_b^*`, returning the
    /// vector leg (on `W`) and the form leg (on `V`).
    pub fn map_tensor(&mut self, f: &LinearMap) -> (LegId, LegId) {
        let w = self.leg(&f.target, LegKind::Vector);
        let v = self.leg(&f.source, LegKind::Form);
        let mut t = Tensor { legs: vec![w, v], entries: HashMap::new() };
        for a in 0..f.target.dim() {
            for b in 0..f.source.dim() {
                t.add(vec![a as u16, b as u16], f.matrix.get(a, b).clone());
            }
        }
        self.push(t);
        (w, v)
    }

    /// An element `I -> X ⊗ Y` as a tensor with two vector legs.
    pub fn bivector(&mut self, c: &LinearMap, x: &GradedSpace, y: &GradedSpace) -> (LegId, LegId) {
        assert_eq!(c.target.dim(), x.dim() * y.dim());
        let lx = self.leg(x, LegKind::Vector);
        let ly = self.leg(y, LegKind::Vector);
        let mut t = Tensor { legs: vec![lx, ly], entries: HashMap::new() };
        for i in 0..x.dim() {
            for k in 0..y.dim() {
                t.add(vec![i as u16, k as u16], c.matrix.get(i * y.dim() + k, 0).clone());
            }
        }
        self.push(t);
        (lx, ly)
    }

    /// A tensor on fresh legs of the given spaces and kinds. Entries are
    /// stored as given.
    pub fn raw(&mut self, legs: &[(&GradedSpace, LegKind)], entries: Vec<(Vec<u16>, Q)>) -> Vec<LegId> {
        let ids: Vec<LegId> = legs.iter().map(|(s, k)| self.leg(s, *k)).collect();
        let mut t = Tensor { legs: ids.clone(), entries: HashMap::new() };
        for (idx, v) in entries {
            t.add(idx, v);
        }
        self.push(t);
        ids
    }

    /// A multilinear form given by its values on basis tuples. The stored
    /// coefficient of `e^*_{l_1} ⊗ ... ⊗ e^*_{l_n}` is the value times the
    /// Koszul sign of separating the forms from the vectors.
    pub fn form(&mut self, space: &GradedSpace, arity: usize, values: Vec<(Vec<u16>, Q)>) -> Vec<LegId> {
        let legs: Vec<LegId> = (0..arity).map(|_| self.leg(space, LegKind::Form)).collect();
        let mut t = Tensor { legs: legs.clone(), entries: HashMap::new() };
        for (idx, v) in values {
            let odd = idx.iter().filter(|&&i| space.is_odd(i as usize)).count();
            let sign_negative = (odd * odd.saturating_sub(1) / 2) % 2 == 1;
            t.add(idx, if sign_negative { -v } else { v });
        }
        self.push(t);
        legs
    }

    fn odd(&self, l: LegId, i: u16) -> bool {
        self.spaces[l].is_odd(i as usize)
    }

    /// Merges `b` into `a` (in that order), contracting every pair between
    /// them.
    fn merge(&self, a: &Tensor, b: &Tensor) -> Result<Tensor, StateSumError> {
        let in_a: HashMap<LegId, usize> = a.legs.iter().enumerate().map(|(p, &l)| (l, p)).collect();
        let in_b: HashMap<LegId, usize> = b.legs.iter().enumerate().map(|(p, &l)| (l, p)).collect();
        // Pairs as positions in the concatenated leg list, with the side of
        // the form leg.
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let na = a.legs.len();
        for &(f, v) in &self.pairs {
            let pf = in_a.get(&f).copied().or_else(|| in_b.get(&f).map(|p| p + na));
            let pv = in_a.get(&v).copied().or_else(|| in_b.get(&v).map(|p| p + na));
            if let (Some(pf), Some(pv)) = (pf, pv) {
                if (pf < na) != (pv < na) {
                    pairs.push((pf, pv));
                }
            }
        }
        let all: Vec<LegId> = a.legs.iter().chain(&b.legs).copied().collect();
        let removed: Vec<bool> = {
            let mut r = vec![false; all.len()];
            for &(x, y) in &pairs {
                r[x] = true;
                r[y] = true;
            }
            r
        };
        let legs: Vec<LegId> = all.iter().zip(&removed).filter(|(_, &r)| !r).map(|(&l, _)| l).collect();
        // Key of each entry on the contracted legs of its own side.
        let key_b: Vec<usize> = pairs.iter().map(|&(x, y)| if x >= na { x - na } else { y - na }).collect();
        let key_a: Vec<usize> = pairs.iter().map(|&(x, y)| if x < na { x } else { y }).collect();
        let mut by_key: HashMap<Vec<u16>, Vec<(&Vec<u16>, &Q)>> = HashMap::new();
        for (idx, v) in &b.entries {
            by_key.entry(key_b.iter().map(|&p| idx[p]).collect()).or_default().push((idx, v));
        }
        let mut out = Tensor { legs, entries: HashMap::new() };
        let mut alive = vec![true; all.len()];
        let mut full: Vec<u16> = vec![0; all.len()];
        for (ia, va) in &a.entries {
            let key: Vec<u16> = key_a.iter().map(|&p| ia[p]).collect();
            let Some(matches) = by_key.get(&key) else { continue };
            full[..na].copy_from_slice(ia);
            for (ib, vb) in matches {
                full[na..].copy_from_slice(ib);
                alive.iter_mut().for_each(|x| *x = true);
                let mut negative = false;
                for &(pf, pv) in &pairs {
                    if self.odd(all[pf], full[pf]) {
                        let before = |p: usize, alive: &[bool]| {
                            (0..p).filter(|&q| alive[q] && self.odd(all[q], full[q])).count()
                        };
                        let n1 = before(pf, &alive);
                        alive[pf] = false;
                        let n2 = before(pv, &alive);
                        alive[pv] = false;
                        negative ^= (n1 + n2) % 2 == 1;
                    } else {
                        alive[pf] = false;
                        alive[pv] = false;
                    }
                }
                let idx: Vec<u16> = full.iter().zip(&removed).filter(|(_, &r)| !r).map(|(&i, _)| i).collect();
                let v = va * *vb;
                out.add(idx, if negative { -v } else { v });
            }
            if out.entries.len() > self.max_entries {
                return Err(StateSumError::Budget(self.max_entries));
            }
        }
        Ok(out)
    }

    /// Contracts everything and reads off the map from the tensor product of
    /// the input spaces to that of the output spaces.
    pub fn contract(mut self) -> Result<LinearMap, StateSumError> {
        let mut partner: HashMap<LegId, LegId> = HashMap::new();
        for &(f, v) in &self.pairs {
            partner.insert(f, v);
            partner.insert(v, f);
        }
        let tensors = std::mem::take(&mut self.tensors);
        let mut remaining: Vec<Option<Tensor>> = tensors.into_iter().map(Some).collect();
        let mut acc = Tensor::scalar(Q::one());
        for _ in 0..remaining.len() {
            let acc_legs: std::collections::HashSet<LegId> = acc.legs.iter().copied().collect();
            let mut best: Option<(i64, usize)> = None;
            for (t, slot) in remaining.iter().enumerate() {
                let Some(tensor) = slot else { continue };
                let shared = tensor.legs.iter().filter(|l| partner.get(l).is_some_and(|p| acc_legs.contains(p))).count();
                let grow = tensor.legs.len() as i64 - 2 * shared as i64;
                let score = grow * 4 - shared as i64;
                let connected = shared > 0 || acc.legs.is_empty();
                let score = if connected { score } else { score + 1_000_000 };
                if best.map_or(true, |(s, _)| score < s) {
                    best = Some((score, t));
                }
            }
            let (_, t) = best.expect("a tensor remains");
            let tensor = remaining[t].take().unwrap();
            acc = self.merge(&acc, &tensor)?;
        }
        self.read_off(acc)
    }

    fn read_off(&self, acc: Tensor) -> Result<LinearMap, StateSumError> {
        let in_spaces: Vec<GradedSpace> = self.inputs.iter().map(|&l| self.spaces[l].clone()).collect();
        let out_spaces: Vec<GradedSpace> = self.outputs.iter().map(|&l| self.spaces[l].clone()).collect();
        let source = GradedSpace::tensor_all(&in_spaces);
        let target = GradedSpace::tensor_all(&out_spaces);
        let mut m = Matrix::zeros(target.dim(), source.dim());
        let pos: HashMap<LegId, usize> = acc.legs.iter().enumerate().map(|(p, &l)| (l, p)).collect();
        for l in self.inputs.iter().chain(&self.outputs) {
            if !pos.contains_key(l) {
                return Err(StateSumError::Malformed(format!("open leg {l} was contracted")));
            }
        }
        if acc.legs.len() != self.inputs.len() + self.outputs.len() {
            return Err(StateSumError::Malformed("a leg was left uncontracted".into()));
        }
        for (idx, v) in &acc.entries {
            // Legs followed by the input vectors v_1 ... v_k.
            let mut seq: Vec<(LegId, bool, bool)> =
                acc.legs.iter().zip(idx).map(|(&l, &i)| (l, self.odd(l, i), true)).collect();
            for (&l, _) in self.inputs.iter().zip(0..) {
                seq.push((usize::MAX, self.odd(l, idx[pos[&l]]), true));
            }
            let nlegs = acc.legs.len();
            let mut negative = false;
            for (i, &l) in self.inputs.iter().enumerate() {
                let pf = pos[&l];
                let pv = nlegs + i;
                if seq[pf].1 {
                    let before = |p: usize, s: &[(LegId, bool, bool)]| (0..p).filter(|&q| s[q].2 && s[q].1).count();
                    let n1 = before(pf, &seq);
                    seq[pf].2 = false;
                    let n2 = before(pv, &seq);
                    negative ^= (n1 + n2) % 2 == 1;
                }
                seq[pf].2 = false;
                seq[pv].2 = false;
            }
            // Remaining output legs in accumulator order; sort them into
            // the target order.
            let order: Vec<usize> = seq.iter().filter(|s| s.2).map(|s| s.0).collect();
            let rank: Vec<usize> = order.iter().map(|l| self.outputs.iter().position(|o| o == l).unwrap()).collect();
            for a in 0..rank.len() {
                for b in (a + 1)..rank.len() {
                    if rank[a] > rank[b] && self.odd(order[a], idx[pos[&order[a]]]) && self.odd(order[b], idx[pos[&order[b]]])
                    {
                        negative = !negative;
                    }
                }
            }
            let mut row = 0;
            for (o, &l) in self.outputs.iter().enumerate() {
                row = row * out_spaces[o].dim() + idx[pos[&l]] as usize;
            }
            let mut col = 0;
            for (i, &l) in self.inputs.iter().enumerate() {
                col = col * in_spaces[i].dim() + idx[pos[&l]] as usize;
            }
            m.add_at(row, col, &if negative { -v.clone() } else { v.clone() });
        }
        Ok(LinearMap::new(source, target, m)?)
    }
}
