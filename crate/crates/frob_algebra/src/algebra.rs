use num::{One, Zero};

use crate::linear::{GradedSpace, LinearMap};
use crate::matrix::{Matrix, Q};
use crate::AlgebraError;

/// A Frobenius algebra in super vector spaces over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusAlgebra {
    pub name: String,
    pub basis_names: Vec<String>,
    pub space: GradedSpace,
    /// `A ⊗ A -> A`
    pub mu: LinearMap,
    /// `I -> A`
    pub eta: LinearMap,
    /// `A -> A ⊗ A`
    pub delta: LinearMap,
    /// `A -> I`
    pub epsilon: LinearMap,
    /// The `r` the algebra was declared for, if any.
    pub r: Option<u32>,
}

impl FrobeniusAlgebra {
    /// Builds an algebra from structure constants and derives the coproduct
    /// from the inverse of the Gram matrix of `ε ∘ μ`.
    pub fn from_structure(
        name: impl Into<String>,
        basis_names: Vec<String>,
        space: GradedSpace,
        mu: Matrix,
        eta: Vec<Q>,
        epsilon: Vec<Q>,
    ) -> Result<Self, AlgebraError> {
        let a2 = space.tensor(&space);
        let mu = LinearMap::new(a2.clone(), space.clone(), mu)?;
        let eta = LinearMap::new(GradedSpace::unit(), space.clone(), Matrix::column(eta))?;
        let epsilon = LinearMap::new(space.clone(), GradedSpace::unit(), Matrix::column(epsilon).transpose())?;
        let mut alg = FrobeniusAlgebra {
            name: name.into(),
            basis_names,
            space: space.clone(),
            mu,
            eta,
            delta: LinearMap::zero(&space, &a2),
            epsilon,
            r: None,
        };
        alg.delta = alg.derived_delta()?;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn derived_delta(&self) -> Result<LinearMap, AlgebraError> {
        let cop = self.copairing()?;
        let id = LinearMap::identity(&self.space);
        // Δ(a) = (μ ⊗ id)(a ⊗ c)
        let a_c = id.tensor(&cop);
        Ok(self.mu.tensor(&id).after(&a_c))
    }

    pub fn product(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let n = self.dim();
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let c = &a[i] * &b[j];
                for k in 0..n {
                    let m = self.mu.matrix.get(k, i * n + j);
                    if !m.is_zero() {
                        out[k] += &c * m;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        (0..self.dim()).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()
    }

    pub fn unit_vector(&self) -> Vec<Q> {
        self.eta.matrix.col(0)
    }

    /// Gram matrix `G_ij = ε(e_i e_j)`.
    pub fn gram(&self) -> Matrix {
        let n = self.dim();
        let pairing = self.epsilon.after(&self.mu);
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, pairing.matrix.get(0, i * n + j).clone());
            }
        }
        g
    }

    /// The copairing `I -> A ⊗ A`, `Σ c^{jk} e_j ⊗ e_k` with `c = G^{-1}`.
    pub fn copairing(&self) -> Result<LinearMap, AlgebraError> {
        let n = self.dim();
        let inv = self
            .gram()
            .inverse()
            .ok_or_else(|| AlgebraError::Degenerate(format!("{}: the pairing ε∘μ is degenerate", self.name)))?;
        let mut col = vec![Q::zero(); n * n];
        for j in 0..n {
            for k in 0..n {
                col[j * n + k] = inv.get(j, k).clone();
            }
        }
        LinearMap::new(GradedSpace::unit(), self.space.tensor(&self.space), Matrix::column(col))
    }

    /// The map `N` with `⟨a, b⟩ = (-1)^{|a||b|} ⟨b, N a⟩`.
    pub fn nakayama(&self) -> Result<LinearMap, AlgebraError> {
        let n = self.dim();
        let g = self.gram();
        let ginv = g
            .inverse()
            .ok_or_else(|| AlgebraError::Degenerate(format!("{}: the pairing ε∘μ is degenerate", self.name)))?;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for a in 0..n {
                let v = g.get(a, j).clone();
                m.set(j, a, if self.space.is_odd(a) && self.space.is_odd(j) { -v } else { v });
            }
        }
        LinearMap::new(self.space.clone(), self.space.clone(), &ginv * &m)
    }

    /// `N^k` for any integer `k`.
    pub fn nakayama_pow(&self, k: i64) -> Result<LinearMap, AlgebraError> {
        let nk = self.nakayama()?;
        let base = if k < 0 {
            nk.inverse().ok_or_else(|| AlgebraError::Degenerate("Nakayama map is not invertible".into()))?
        } else {
            nk
        };
        Ok(base.pow(k.unsigned_abs() as u32))
    }

    /// Smallest `k >= 1` with `N^k = id`, searching up to `limit`.
    pub fn nakayama_order(&self, limit: u32) -> Result<Option<u32>, AlgebraError> {
        let nk = self.nakayama()?;
        let id = LinearMap::identity(&self.space);
        let mut acc = nk.clone();
        for k in 1..=limit {
            if acc == id {
                return Ok(Some(k));
            }
            acc = nk.after(&acc);
        }
        Ok(None)
    }

    /// Whether `N^r = id`.
    pub fn is_lambda_r(&self, r: u32) -> Result<bool, AlgebraError> {
        Ok(self.nakayama()?.pow(r) == LinearMap::identity(&self.space))
    }

    pub fn mu_delta(&self) -> LinearMap {
        self.mu.after(&self.delta)
    }

    /// `(μ ∘ Δ ∘ η)(1)` in basis coordinates.
    pub fn window_element(&self) -> Vec<Q> {
        self.mu_delta().after(&self.eta).matrix.col(0)
    }

    /// `ζ = (μ ∘ Δ)^{-1}`.
    pub fn zeta(&self) -> Result<LinearMap, AlgebraError> {
        self.mu_delta()
            .inverse()
            .ok_or_else(|| AlgebraError::NotInvertible(format!("{}: μ∘Δ is singular", self.name)))
    }

    /// Verifies the Frobenius algebra axioms; returns the names of failed ones.
    pub fn axiom_failures(&self) -> Vec<&'static str> {
        let id = LinearMap::identity(&self.space);
        let mut fails = Vec::new();
        let mut check = |name, ok: bool| {
            if !ok {
                fails.push(name);
            }
        };
        if !(self.mu.is_even() && self.eta.is_even() && self.delta.is_even() && self.epsilon.is_even()) {
            check("parity", false);
        }
        check("associativity", self.mu.after(&self.mu.tensor(&id)) == self.mu.after(&id.tensor(&self.mu)));
        check("left unit", self.mu.after(&self.eta.tensor(&id)) == id);
        check("right unit", self.mu.after(&id.tensor(&self.eta)) == id);
        check(
            "coassociativity",
            self.delta.tensor(&id).after(&self.delta) == id.tensor(&self.delta).after(&self.delta),
        );
        check("left counit", self.epsilon.tensor(&id).after(&self.delta) == id);
        check("right counit", id.tensor(&self.epsilon).after(&self.delta) == id);
        let dm = self.delta.after(&self.mu);
        check("Frobenius (left)", self.mu.tensor(&id).after(&id.tensor(&self.delta)) == dm);
        check("Frobenius (right)", id.tensor(&self.mu).after(&self.delta.tensor(&id)) == dm);
        fails
    }

    /// Replaces the derived coproduct by an explicitly supplied one.
    pub fn with_delta(mut self, delta: Matrix) -> Result<Self, AlgebraError> {
        self.delta = LinearMap::new(self.space.clone(), self.space.tensor(&self.space), delta)?;
        Ok(self)
    }

    pub fn with_r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    /// Formats an element in basis names.
    pub fn format_element(&self, v: &[Q]) -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(&self.basis_names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| if c.is_one() { n.clone() } else { format!("{c}*{n}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}
