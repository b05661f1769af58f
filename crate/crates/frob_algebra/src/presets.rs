//! Ready-made algebras.

use crate::algebra::FrobeniusAlgebra;
use crate::linear::GradedSpace;
use crate::matrix::{q, qf, Matrix, Q};
use crate::AlgebraError;

fn structure_matrix(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<(usize, Q)>) -> Matrix {
    let mut m = Matrix::zeros(dim, dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            for (k, v) in f(i, j) {
                m.add_at(k, i * dim + j, &v);
            }
        }
    }
    m
}

fn unit_at_zero(dim: usize) -> Vec<Q> {
    (0..dim).map(|i| q(i64::from(i == 0))).collect()
}

/// Sign of `e_S e_T = ± e_{S xor T}` in a Clifford algebra with `θ_i² = 1`.
fn clifford_sign(s: usize, t: usize) -> i64 {
    let mut swaps = 0;
    for i in 0..usize::BITS as usize {
        if s >> i & 1 == 1 {
            swaps += (t & ((1usize << i) - 1)).count_ones();
        }
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

fn monomial_name(mask: usize) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..usize::BITS as usize).filter(|i| mask >> i & 1 == 1).map(|i| format!("t{}", i + 1)).collect::<Vec<_>>().join("")
}

/// Clifford algebra on `n` odd generators with `θ_i² = 1`; basis indexed by
/// bitmasks, the counit given per basis monomial.
pub fn clifford(n: usize, epsilon: Vec<Q>) -> Result<FrobeniusAlgebra, AlgebraError> {
    let dim = 1usize << n;
    let space = GradedSpace::new((0..dim).map(|m: usize| m.count_ones() % 2 == 1).collect());
    let mu = structure_matrix(dim, |s, t| vec![(s ^ t, q(clifford_sign(s, t)))]);
    let names = (0..dim).map(monomial_name).collect();
    FrobeniusAlgebra::from_structure(format!("clifford{n}"), names, space, mu, unit_at_zero(dim), epsilon)
}

/// `Cℓ(1) = k ⊕ kθ` with `θ` odd, `θ² = 1`, `ε(1) = 1/2`, `ε(θ) = 0`.
pub fn clifford1() -> FrobeniusAlgebra {
    let mut a = clifford(1, vec![qf(1, 2), q(0)]).expect("nondegenerate");
    a.name = "clifford1".into();
    a.basis_names = vec!["1".into(), "theta".into()];
    a
}

/// `Cℓ(2)` with counit `ε(a) = top(u·a)`, `u = 1 + θ1θ2`; its Nakayama map
/// has order 4.
pub fn clifford2_twisted() -> FrobeniusAlgebra {
    let mut a = clifford(2, vec![q(1), q(0), q(0), q(1)]).expect("nondegenerate");
    a.name = "clifford2_twisted".into();
    a
}

/// Group algebra of `Z/n` with `ε(g) = δ_{g,e}`.
pub fn group_algebra(n: usize) -> Result<FrobeniusAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::Parse { line: 0, msg: "group order must be positive".into() });
    }
    let mu = structure_matrix(n, |i, j| vec![((i + j) % n, q(1))]);
    let names = (0..n).map(|i| if i == 0 { "e".into() } else { format!("g{i}") }).collect();
    FrobeniusAlgebra::from_structure(format!("group_algebra({n})"), names, GradedSpace::even(n), mu, unit_at_zero(n), unit_at_zero(n))
}

/// `M_n(k)` with `ε = trace`; basis `E_ij` at index `i*n + j`.
pub fn matrix_algebra(n: usize) -> Result<FrobeniusAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::Parse { line: 0, msg: "matrix size must be positive".into() });
    }
    let dim = n * n;
    let mu = structure_matrix(dim, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            vec![(i * n + l, q(1))]
        } else {
            vec![]
        }
    });
    let eta = (0..dim).map(|a| q(i64::from(a / n == a % n))).collect();
    let eps = (0..dim).map(|a| q(i64::from(a / n == a % n))).collect();
    let names = (0..dim).map(|a| format!("E{}{}", a / n + 1, a % n + 1)).collect();
    FrobeniusAlgebra::from_structure(format!("matrix_algebra({n})"), names, GradedSpace::even(dim), mu, eta, eps)
}

/// `k[t]/t²` with `ε(1) = 0`, `ε(t) = 1`.
pub fn dual_numbers() -> FrobeniusAlgebra {
    let mu = structure_matrix(2, |i, j| if i + j < 2 { vec![(i + j, q(1))] } else { vec![] });
    FrobeniusAlgebra::from_structure(
        "dual_numbers",
        vec!["1".into(), "t".into()],
        GradedSpace::even(2),
        mu,
        vec![q(1), q(0)],
        vec![q(0), q(1)],
    )
    .expect("nondegenerate")
}

/// The one-dimensional algebra `k` with `ε(1) = 1`.
pub fn ground_field() -> FrobeniusAlgebra {
    FrobeniusAlgebra::from_structure(
        "k",
        vec!["1".into()],
        GradedSpace::even(1),
        Matrix::from_ints(&[&[1]]),
        vec![q(1)],
        vec![q(1)],
    )
    .expect("nondegenerate")
}

/// Looks up a preset by name: `clifford1`, `clifford2_twisted`, `dual_numbers`,
/// `k`, `group_algebra(n)`, `matrix_algebra(n)`.
pub fn by_name(name: &str) -> Result<FrobeniusAlgebra, AlgebraError> {
    let name = name.trim();
    let arg = |prefix: &str| -> Option<Result<usize, AlgebraError>> {
        let rest = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
        Some(rest.trim().parse().map_err(|_| AlgebraError::Parse { line: 0, msg: format!("bad argument in '{name}'") }))
    };
    match name {
        "clifford1" => Ok(clifford1()),
        "clifford2_twisted" => Ok(clifford2_twisted()),
        "dual_numbers" => Ok(dual_numbers()),
        "k" => Ok(ground_field()),
        _ => {
            if let Some(n) = arg("group_algebra") {
                group_algebra(n?)
            } else if let Some(n) = arg("matrix_algebra") {
                matrix_algebra(n?)
            } else {
                Err(AlgebraError::Parse { line: 0, msg: format!("unknown preset '{name}'") })
            }
        }
    }
}

pub const PRESET_NAMES: &[&str] =
    &["clifford1", "clifford2_twisted", "dual_numbers", "k", "group_algebra(n)", "matrix_algebra(n)"];
