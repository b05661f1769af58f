use num::{One, Zero};

use crate::matrix::{Matrix, Q};
use crate::AlgebraError;

/// A finite-dimensional Z/2-graded vector space with a homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    odd: Vec<bool>,
}

impl GradedSpace {
    pub fn new(odd: Vec<bool>) -> Self {
        GradedSpace { odd }
    }

    pub fn even(dim: usize) -> Self {
        GradedSpace { odd: vec![false; dim] }
    }

    /// The tensor unit.
    pub fn unit() -> Self {
        Self::even(1)
    }

    pub fn dim(&self) -> usize {
        self.odd.len()
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.odd[i]
    }

    pub fn parities(&self) -> &[bool] {
        &self.odd
    }

    /// Basis `e_i ⊗ f_k` has index `i * other.dim() + k`.
    pub fn tensor(&self, other: &GradedSpace) -> GradedSpace {
        let mut odd = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.odd {
            for &b in &other.odd {
                odd.push(a ^ b);
            }
        }
        GradedSpace { odd }
    }

    pub fn tensor_all(spaces: &[GradedSpace]) -> GradedSpace {
        spaces.iter().fold(Self::unit(), |acc, s| acc.tensor(s))
    }

    /// Super-dimension: even count minus odd count.
    pub fn super_dim(&self) -> i64 {
        self.odd.iter().map(|&o| if o { -1 } else { 1 }).sum()
    }
}

/// A linear map between graded spaces; the matrix has `target.dim()` rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    pub source: GradedSpace,
    pub target: GradedSpace,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: GradedSpace, target: GradedSpace, matrix: Matrix) -> Result<Self, AlgebraError> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(AlgebraError::Shape(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(LinearMap { source, target, matrix })
    }

    pub fn identity(space: &GradedSpace) -> Self {
        LinearMap { source: space.clone(), target: space.clone(), matrix: Matrix::identity(space.dim()) }
    }

    pub fn zero(source: &GradedSpace, target: &GradedSpace) -> Self {
        LinearMap { source: source.clone(), target: target.clone(), matrix: Matrix::zeros(target.dim(), source.dim()) }
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &LinearMap) -> LinearMap {
        assert_eq!(f.target, self.source, "composition of incompatible maps");
        LinearMap { source: f.source.clone(), target: self.target.clone(), matrix: &self.matrix * &f.matrix }
    }

    pub fn try_after(&self, f: &LinearMap) -> Result<LinearMap, AlgebraError> {
        if f.target != self.source {
            return Err(AlgebraError::Shape("composition of incompatible maps".into()));
        }
        Ok(self.after(f))
    }

    pub fn scale(&self, s: &Q) -> LinearMap {
        LinearMap { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.scale(s) }
    }

    pub fn plus(&self, other: &LinearMap) -> LinearMap {
        assert!(self.source == other.source && self.target == other.target, "sum of incompatible maps");
        LinearMap { source: self.source.clone(), target: self.target.clone(), matrix: &self.matrix + &other.matrix }
    }

    pub fn minus(&self, other: &LinearMap) -> LinearMap {
        self.plus(&other.scale(&-Q::one()))
    }

    /// True when every nonzero entry connects basis vectors of equal parity.
    pub fn is_even(&self) -> bool {
        (0..self.target.dim()).all(|i| {
            (0..self.source.dim())
                .all(|j| self.matrix.get(i, j).is_zero() || self.target.is_odd(i) == self.source.is_odd(j))
        })
    }

    /// `self ⊗ g` with the Koszul rule `(f ⊗ g)(a ⊗ b) = (-1)^{|g||a|} f(a) ⊗ g(b)`.
    pub fn tensor(&self, g: &LinearMap) -> LinearMap {
        let source = self.source.tensor(&g.source);
        let target = self.target.tensor(&g.target);
        let mut m = Matrix::zeros(target.dim(), source.dim());
        let (gr, gc) = (g.target.dim(), g.source.dim());
        for i in 0..self.target.dim() {
            for j in 0..self.source.dim() {
                let a = self.matrix.get(i, j);
                if a.is_zero() {
                    continue;
                }
                let aj_odd = self.source.is_odd(j);
                for k in 0..gr {
                    for l in 0..gc {
                        let b = g.matrix.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        let g_odd = g.target.is_odd(k) ^ g.source.is_odd(l);
                        let v = a * b;
                        m.set(i * gr + k, j * gc + l, if g_odd && aj_odd { -v } else { v });
                    }
                }
            }
        }
        LinearMap { source, target, matrix: m }
    }

    pub fn tensor_all(maps: &[LinearMap]) -> LinearMap {
        let mut it = maps.iter();
        let first = it.next().cloned().unwrap_or_else(|| LinearMap::identity(&GradedSpace::unit()));
        it.fold(first, |acc, m| acc.tensor(m))
    }

    /// The symmetric braiding `V ⊗ W -> W ⊗ V`, `a ⊗ b ↦ (-1)^{|a||b|} b ⊗ a`.
    pub fn braiding(v: &GradedSpace, w: &GradedSpace) -> LinearMap {
        let source = v.tensor(w);
        let target = w.tensor(v);
        let mut m = Matrix::zeros(target.dim(), source.dim());
        for i in 0..v.dim() {
            for k in 0..w.dim() {
                let sign = if v.is_odd(i) && w.is_odd(k) { -Q::one() } else { Q::one() };
                m.set(k * v.dim() + i, i * w.dim() + k, sign);
            }
        }
        LinearMap { source, target, matrix: m }
    }

    /// Permutation of tensor factors: factor `i` of the source ends up at
    /// position `perm[i]` of the target, with the Koszul sign.
    pub fn permutation(spaces: &[GradedSpace], perm: &[usize]) -> LinearMap {
        assert_eq!(spaces.len(), perm.len());
        let n = spaces.len();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let target_spaces: Vec<GradedSpace> = inv.iter().map(|&i| spaces[i].clone()).collect();
        let source = GradedSpace::tensor_all(spaces);
        let target = GradedSpace::tensor_all(&target_spaces);
        let dims: Vec<usize> = spaces.iter().map(GradedSpace::dim).collect();
        let tdims: Vec<usize> = target_spaces.iter().map(GradedSpace::dim).collect();
        let mut m = Matrix::zeros(target.dim(), source.dim());
        let mut idx = vec![0usize; n];
        for col in 0..source.dim() {
            let mut rest = col;
            for f in (0..n).rev() {
                idx[f] = rest % dims[f];
                rest /= dims[f];
            }
            let odd: Vec<bool> = (0..n).map(|f| spaces[f].is_odd(idx[f])).collect();
            let mut negative = false;
            for a in 0..n {
                for b in (a + 1)..n {
                    if perm[a] > perm[b] && odd[a] && odd[b] {
                        negative = !negative;
                    }
                }
            }
            let mut row = 0;
            for t in 0..n {
                row = row * tdims[t] + idx[inv[t]];
            }
            m.set(row, col, if negative { -Q::one() } else { Q::one() });
        }
        LinearMap { source, target, matrix: m }
    }

    /// Supertrace of an endomorphism.
    pub fn supertrace(&self) -> Q {
        assert_eq!(self.source, self.target, "supertrace of a non-endomorphism");
        let mut t = Q::zero();
        for i in 0..self.source.dim() {
            let v = self.matrix.get(i, i);
            if self.source.is_odd(i) {
                t -= v;
            } else {
                t += v;
            }
        }
        t
    }

    pub fn pow(&self, k: u32) -> LinearMap {
        let mut acc = LinearMap::identity(&self.source);
        for _ in 0..k {
            acc = self.after(&acc);
        }
        acc
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        Some(LinearMap { source: self.target.clone(), target: self.source.clone(), matrix: self.matrix.inverse()? })
    }

    /// The scalar of a map `I -> I`.
    pub fn scalar(&self) -> Q {
        assert!(self.source.dim() == 1 && self.target.dim() == 1);
        self.matrix.get(0, 0).clone()
    }
}
