use frob_algebra::presets::{clifford1, clifford2_twisted, dual_numbers, group_algebra, matrix_algebra};
use frob_algebra::{check_knowledgeable, q, AlgebraError, Conventions, FrobeniusAlgebra, LinearMap, Matrix};
use graded_center::{component, graded_center, projector, CenterError};
use proptest::prelude::*;

fn conv() -> Conventions {
    Conventions::default()
}

/// The `N^k`-twisted center `{z : z b = (-1)^{|z||b|} N^k(b) z}` as the null
/// space of the commutation constraints, one row per `(b, output)` pair.
fn twisted_center(a: &FrobeniusAlgebra, k: i64) -> Matrix {
    let n = a.dim();
    let nk = a.nakayama_pow(k).unwrap();
    let mut rows = Vec::new();
    for b in 0..n {
        let nb = nk.matrix.col(b);
        for out in 0..n {
            rows.push(
                (0..n)
                    .map(|z| {
                        let zb = a.mu.matrix.get(out, z * n + b).clone();
                        let sign = if a.space.is_odd(z) && a.space.is_odd(b) { q(-1) } else { q(1) };
                        let nbz: frob_algebra::Q = (0..n).map(|c| &nb[c] * a.mu.matrix.get(out, c * n + z)).sum();
                        zb - sign * nbz
                    })
                    .collect(),
            );
        }
    }
    Matrix::from_rows(rows).null_space()
}

fn same_span(a: &Matrix, b: &Matrix) -> bool {
    let mut both = Vec::new();
    for m in [a, b] {
        for j in 0..m.cols() {
            both.push(m.col(j));
        }
    }
    let joined = Matrix::from_rows(both).transpose();
    a.rank() == b.rank() && joined.rank() == a.rank()
}

#[test]
fn clifford_components_are_powers_of_theta() {
    let a = clifford1();
    for x in 0..2i64 {
        let c = component(&a, x, &conv()).unwrap();
        assert_eq!(c.dim(), 1);
        let v = c.incl.matrix.col(0);
        // θ^{1-x}: θ for x = 0, 1 for x = 1
        let expected = if x == 0 { vec![q(0), q(1)] } else { vec![q(1), q(0)] };
        assert_eq!(v, expected, "x={x}");
        assert_eq!(c.space().is_odd(0), x == 0);
    }
}

#[test]
fn clifford_center_for_r_two_and_four() {
    for r in [2u32, 4] {
        let a = clifford1();
        let gc = graded_center(&a, r, &conv()).unwrap();
        assert_eq!(gc.dims(), vec![1; r as usize]);
        let rep = gc.family.check(&conv());
        assert!(rep.passed(), "{rep}");
        let kn = check_knowledgeable(&a, &gc.family, &gc.iota, &gc.pi, &conv()).unwrap();
        assert!(kn.passed(), "{kn}");
        for x in 0..r as i64 {
            let p = projector(&a, x, &conv()).unwrap();
            assert_eq!(p.after(&p), p);
        }
        assert_eq!(gc.family.n(0).matrix, Matrix::from_ints(&[&[-1]]));
        assert_eq!(gc.family.n(0).pow(2), gc.family.id(0));
    }
}

#[test]
fn projector_images_are_twisted_centers() {
    for (a, r) in [(clifford1(), 2), (clifford2_twisted(), 4), (group_algebra(3).unwrap(), 1)] {
        for x in 0..r {
            let c = component(&a, x, &conv()).unwrap();
            let k = conv().center.at(x, 0);
            assert!(same_span(&c.incl.matrix, &twisted_center(&a, k)), "{} x={x}", a.name);
        }
    }
}

#[test]
fn twisted_clifford_components_are_distinct() {
    let a = clifford2_twisted();
    let gc = graded_center(&a, 4, &conv()).unwrap();
    let lines: Vec<Matrix> = gc.components.iter().map(|c| c.incl.matrix.clone()).collect();
    for i in 0..4 {
        for j in (i + 1)..4 {
            assert!(!same_span(&lines[i], &lines[j]), "C_{i} = C_{j}");
        }
    }
    assert!(gc.family.check(&conv()).passed());
    assert!(check_knowledgeable(&a, &gc.family, &gc.iota, &gc.pi, &conv()).unwrap().passed());
}

#[test]
fn commutative_algebra_is_its_own_center() {
    let a = group_algebra(3).unwrap();
    let p = projector(&a, 0, &conv()).unwrap();
    assert_eq!(p, LinearMap::identity(&a.space));
    let gc = graded_center(&a, 1, &conv()).unwrap();
    assert_eq!(gc.dims(), vec![3]);
    assert!(gc.family.check(&conv()).passed());
}

#[test]
fn matrix_algebra_center_is_scalars() {
    let a = matrix_algebra(2).unwrap();
    let gc = graded_center(&a, 1, &conv()).unwrap();
    assert_eq!(gc.dims(), vec![1]);
    assert!(gc.family.check(&conv()).passed());
    assert!(check_knowledgeable(&a, &gc.family, &gc.iota, &gc.pi, &conv()).unwrap().passed());
}

#[test]
fn singular_window_is_an_error() {
    assert!(matches!(graded_center(&dual_numbers(), 1, &conv()), Err(CenterError::Algebra(AlgebraError::NotInvertible(_)))));
    assert!(matches!(graded_center(&clifford1(), 3, &conv()), Err(CenterError::NotLambdaR(3))));
    assert!(matches!(graded_center(&clifford1(), 0, &conv()), Err(CenterError::ZeroR)));
}

#[test]
fn scaled_inclusion_breaks_duality() {
    let a = clifford1();
    let gc = graded_center(&a, 2, &conv()).unwrap();
    let iota: Vec<LinearMap> = gc.iota.iter().map(|i| i.scale(&q(2))).collect();
    let failed = check_knowledgeable(&a, &gc.family, &iota, &gc.pi, &conv()).unwrap().failed_relations();
    assert!(failed.contains(&"duality".to_string()));
}

#[test]
fn clifford_categorical_dimensions() {
    let gc = graded_center(&clifford1(), 2, &conv()).unwrap();
    // super-dimension of kθ^{1-x}: the odd line θ for x = 0, the even line for x = 1
    assert_eq!(gc.family.categorical_dimension(0), q(-1));
    assert_eq!(gc.family.categorical_dimension(1), q(1));
    for x in 0..2 {
        assert!(gc.family.snake_holds(x));
        assert_eq!(gc.family.categorical_dimension(x), q(gc.family.space(x).super_dim()));
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn torus_depends_only_on_gcd() {
    for (a, r) in [(clifford1(), 4i64), (clifford1(), 6), (clifford2_twisted(), 4)] {
        let gc = graded_center(&a, r as u32, &conv()).unwrap();
        let f = &gc.family;
        for x in 0..r {
            for y in 0..r {
                let g = gcd(gcd(x, y), r);
                assert_eq!(f.torus(x, y, &conv()), f.torus(g, 0, &conv()), "{} x={x} y={y}", a.name);
            }
            assert_eq!(f.torus(x, x, &conv()), f.categorical_dimension(x));
        }
    }
}

#[test]
fn clifford_torus_values_r2() {
    let gc = graded_center(&clifford1(), 2, &conv()).unwrap();
    let t: Vec<_> = [(0, 0), (0, 1), (1, 0), (1, 1)].iter().map(|&(x, y)| gc.family.torus(x, y, &conv())).collect();
    assert_eq!(t, vec![q(-1), q(1), q(1), q(1)]);
}

proptest! {
    #[test]
    fn splitting_is_exact(half_r in 1u32..=4, x in 0i64..8) {
        let a = clifford1();
        let c = component(&a, x, &conv()).unwrap();
        prop_assert_eq!(c.proj.after(&c.incl), LinearMap::identity(c.space()));
        prop_assert_eq!(c.incl.after(&c.proj), c.projector.clone());
        let gc = graded_center(&a, 2 * half_r, &conv()).unwrap();
        prop_assert!(gc.family.check(&conv()).passed());
    }
}
