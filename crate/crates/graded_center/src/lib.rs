//! The Z/r-graded center of a Λ_r-Frobenius algebra with invertible window
//! element.
//!
//! For each label `x` the projector `P_x` sends `a` to
//! `ζ(Σ ± N^k(e_j) · a · e^j)`, summed over the copairing `Σ e_j ⊗ e^j`, with
//! `k` the exponent fixed by [`Conventions::center`]. Its image is the
//! `N^k`-twisted center `{z : z b = (-1)^{|z||b|} N^k(b) z}`, and `C_x` is that
//! image with the splitting `P_x = ι̃_x ∘ π̃_x`.

use frob_algebra::{AlgebraError, ClosedFamily, Conventions, FrobeniusAlgebra, GradedSpace, LinearMap, Matrix};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CenterError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("r must be positive")]
    ZeroR,
    #[error("the Nakayama map does not satisfy N^{0} = id")]
    NotLambdaR(u32),
    #[error("P_{0} is not idempotent")]
    NotIdempotent(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterComponent {
    pub x: i64,
    pub projector: LinearMap,
    /// `ι̃_x : C_x -> A`; its columns are the basis of the image.
    pub incl: LinearMap,
    /// `π̃_x : A -> C_x`.
    pub proj: LinearMap,
}

impl CenterComponent {
    pub fn space(&self) -> &GradedSpace {
        &self.incl.source
    }

    pub fn dim(&self) -> usize {
        self.space().dim()
    }
}

/// `Z^r(A)` as a closed family together with the maps `ι_x = μΔι̃_x` and
/// `π_x = π̃_x`.
#[derive(Debug, Clone)]
pub struct GradedCenter {
    pub r: u32,
    pub components: Vec<CenterComponent>,
    pub family: ClosedFamily,
    pub iota: Vec<LinearMap>,
    pub pi: Vec<LinearMap>,
}

/// The projector `P_x`, checked for idempotency.
pub fn projector(a: &FrobeniusAlgebra, x: i64, conv: &Conventions) -> Result<LinearMap, CenterError> {
    let zeta = a.zeta()?;
    let id = LinearMap::identity(&a.space);
    let k = conv.center.at(x, 0);
    let nk = a.nakayama_pow(k)?;
    let spread = id.tensor(&a.copairing()?);
    let cross = LinearMap::braiding(&a.space, &a.space).tensor(&id);
    let twist = LinearMap::tensor_all(&[nk, id.clone(), id.clone()]);
    let multiply = a.mu.after(&a.mu.tensor(&id));
    let p = zeta.after(&multiply).after(&twist).after(&cross).after(&spread);
    if p.after(&p) != p {
        return Err(CenterError::NotIdempotent(x));
    }
    Ok(p)
}

/// Splits an even idempotent through a homogeneous basis of its image.
pub fn split(p: &LinearMap) -> (LinearMap, LinearMap) {
    let space = &p.source;
    let n = space.dim();
    let mut columns: Vec<(Vec<frob_algebra::Q>, bool)> = Vec::new();
    for odd in [false, true] {
        let cols: Vec<usize> = (0..n).filter(|&j| space.is_odd(j) == odd).collect();
        let mut block = Matrix::zeros(n, cols.len());
        for (k, &j) in cols.iter().enumerate() {
            for i in 0..n {
                block.set(i, k, p.matrix.get(i, j).clone());
            }
        }
        let basis = block.column_space();
        for k in 0..basis.cols() {
            columns.push((basis.col(k), odd));
        }
    }
    let c = GradedSpace::new(columns.iter().map(|(_, o)| *o).collect());
    let mut b = Matrix::zeros(n, columns.len());
    for (k, (col, _)) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            b.set(i, k, v.clone());
        }
    }
    let left = if columns.is_empty() { Matrix::zeros(0, n) } else { b.left_inverse().expect("independent columns") };
    let incl = LinearMap::new(c.clone(), space.clone(), b).expect("shape");
    let proj = LinearMap::new(space.clone(), c, &left * &p.matrix).expect("shape");
    (incl, proj)
}

pub fn component(a: &FrobeniusAlgebra, x: i64, conv: &Conventions) -> Result<CenterComponent, CenterError> {
    let projector = projector(a, x, conv)?;
    let (incl, proj) = split(&projector);
    Ok(CenterComponent { x, projector, incl, proj })
}

/// Builds `Z^r(A)` with structure maps
/// `μ_{x,y} = π̃_{x+y-1} μ (ι_x ⊗ ι̃_y)`, `Δ_{x,y} = (π̃_x ⊗ π̃_y) Δ ι̃_{x+y+1}`,
/// `η = π̃_1 ζ η` and `ε = ε ι̃_{-1}`, and `N_x = π̃_x N ι̃_x`.
pub fn graded_center(a: &FrobeniusAlgebra, r: u32, conv: &Conventions) -> Result<GradedCenter, CenterError> {
    if r == 0 {
        return Err(CenterError::ZeroR);
    }
    if !a.is_lambda_r(r)? {
        return Err(CenterError::NotLambdaR(r));
    }
    let ri = i64::from(r);
    let components: Vec<CenterComponent> =
        (0..ri).into_par_iter().map(|x| component(a, x, conv)).collect::<Result<_, _>>()?;
    let at = |x: i64| &components[x.rem_euclid(ri) as usize];
    let zeta = a.zeta()?;
    let md = a.mu_delta();
    let nak = a.nakayama()?;
    let spaces = components.iter().map(|c| c.space().clone()).collect();
    let actions = components.iter().map(|c| c.proj.after(&nak).after(&c.incl)).collect();
    let mut mu = Vec::with_capacity(r as usize);
    let mut delta = Vec::with_capacity(r as usize);
    for x in 0..ri {
        let mut mrow = Vec::with_capacity(r as usize);
        let mut drow = Vec::with_capacity(r as usize);
        for y in 0..ri {
            mrow.push(at(x + y - 1).proj.after(&a.mu).after(&md.after(&at(x).incl).tensor(&at(y).incl)));
            drow.push(at(x).proj.tensor(&at(y).proj).after(&a.delta).after(&at(x + y + 1).incl));
        }
        mu.push(mrow);
        delta.push(drow);
    }
    let eta = at(1).proj.after(&zeta).after(&a.eta);
    let epsilon = a.epsilon.after(&at(-1).incl);
    let iota = components.iter().map(|c| md.after(&c.incl)).collect();
    let pi = components.iter().map(|c| c.proj.clone()).collect();
    let family = ClosedFamily { r, spaces, actions, mu, delta, eta, epsilon };
    Ok(GradedCenter { r, components, family, iota, pi })
}

impl GradedCenter {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(CenterComponent::dim).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use frob_algebra::q;

    #[test]
    fn split_of_identity_is_identity() {
        let s = GradedSpace::new(vec![false, true]);
        let (i, p) = split(&LinearMap::identity(&s));
        assert_eq!(i.after(&p), LinearMap::identity(&s));
        assert_eq!(i.source.super_dim(), 0);
    }

    #[test]
    fn split_of_zero_is_empty() {
        let s = GradedSpace::even(3);
        let (i, p) = split(&LinearMap::zero(&s, &s));
        assert_eq!(i.source.dim(), 0);
        assert_eq!(p.target.dim(), 0);
    }

    #[test]
    fn ground_field_center() {
        let gc = graded_center(&frob_algebra::presets::ground_field(), 2, &Conventions::default()).unwrap();
        assert_eq!(gc.dims(), vec![1, 1]);
        assert_eq!(gc.family.epsilon.scalar(), q(1));
    }
}
