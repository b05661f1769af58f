use frob_algebra::presets::{group_algebra, matrix_algebra};
use frob_algebra::{check_knowledgeable, q, qf, ClosedFamily, Conventions, FrobeniusAlgebra, GradedSpace, LinearMap, Matrix};

/// An `r = 1` family with the single space `C_0 = A`, built from a commutative
/// purely even algebra.
fn from_commutative(a: &FrobeniusAlgebra) -> ClosedFamily {
    ClosedFamily {
        r: 1,
        spaces: vec![a.space.clone()],
        actions: vec![LinearMap::identity(&a.space)],
        mu: vec![vec![a.mu.clone()]],
        delta: vec![vec![a.delta.clone()]],
        eta: a.eta.clone(),
        epsilon: a.epsilon.clone(),
    }
}

fn line_map(v: i64, d: i64) -> Matrix {
    Matrix::from_rows(vec![vec![qf(v, d)]])
}

/// Center of `M_2` computed by hand: spanned by the identity, with product
/// `1·1 = 1` and counit `ε(μΔ(I)) = tr(2I) = 4`.
fn center_of_m2() -> ClosedFamily {
    let k = GradedSpace::even(1);
    let kk = k.tensor(&k);
    ClosedFamily {
        r: 1,
        spaces: vec![k.clone()],
        actions: vec![LinearMap::identity(&k)],
        mu: vec![vec![LinearMap::new(kk.clone(), k.clone(), line_map(1, 1)).unwrap()]],
        delta: vec![vec![LinearMap::new(k.clone(), kk, line_map(1, 4)).unwrap()]],
        eta: LinearMap::new(GradedSpace::unit(), k.clone(), line_map(1, 1)).unwrap(),
        epsilon: LinearMap::new(k, GradedSpace::unit(), line_map(4, 1)).unwrap(),
    }
}

#[test]
fn center_of_matrix_algebra_is_closed() {
    let m2 = matrix_algebra(2).unwrap();
    // The identity matrix spans the center: it is the only direction fixed by
    // all commutators with elementary matrices.
    assert_eq!(m2.unit_vector(), vec![q(1), q(0), q(0), q(1)]);
    let c = center_of_m2();
    let rep = c.check(&Conventions::default());
    assert!(rep.passed(), "{rep}");
    assert_eq!(c.categorical_dimension(0), q(1));
    assert!(c.snake_holds(0));
}

#[test]
fn commutative_algebra_is_closed_family_for_r1() {
    let a = group_algebra(3).unwrap();
    let c = from_commutative(&a);
    let rep = c.check(&Conventions::default());
    assert!(rep.passed(), "{rep}");
    assert_eq!(c.categorical_dimension(0), q(3));
    assert_eq!(c.torus(0, 0, &Conventions::default()), q(3));
}

#[test]
fn redirected_unit_breaks_unitality() {
    let a = group_algebra(2).unwrap();
    let mut c = from_commutative(&a);
    c.eta = LinearMap::new(GradedSpace::unit(), a.space.clone(), Matrix::column(vec![q(0), q(1)])).unwrap();
    let failed = c.check(&Conventions::default()).failed_relations();
    assert!(failed.contains(&"left unit".to_string()));
    assert!(failed.contains(&"right unit".to_string()));
    assert!(!failed.contains(&"associativity".to_string()));
}

#[test]
fn action_of_wrong_order_is_reported() {
    let a = group_algebra(2).unwrap();
    let mut c = from_commutative(&a);
    c.actions[0] = LinearMap::identity(&a.space).scale(&q(-1));
    let failed = c.check(&Conventions::default()).failed_relations();
    assert!(failed.contains(&"action order".to_string()));
    assert!(failed.contains(&"product intertwines".to_string()));
}

#[test]
fn group_algebra_with_identity_maps_is_knowledgeable() {
    // With ε(e) = |G| the copairing is Σ g ⊗ g^{-1} / |G| and μσΔ = id, so
    // ι = π = id satisfy the Cardy condition.
    let base = group_algebra(2).unwrap();
    let a = FrobeniusAlgebra::from_structure(
        "Z/2 (ε(e)=2)",
        base.basis_names.clone(),
        base.space.clone(),
        base.mu.matrix.clone(),
        base.unit_vector(),
        vec![q(2), q(0)],
    )
    .unwrap();
    let c = from_commutative(&a);
    let id = LinearMap::identity(&a.space);
    let rep = check_knowledgeable(&a, &c, &[id.clone()], &[id.clone()], &Conventions::default()).unwrap();
    assert!(rep.passed(), "{rep}");
    // With the plain counit the Cardy map is 2·id.
    let c = from_commutative(&base);
    let rep = check_knowledgeable(&base, &c, &[id.clone()], &[id], &Conventions::default()).unwrap();
    assert_eq!(rep.failed_relations(), vec!["Cardy".to_string()]);
}

#[test]
fn wrong_shapes_are_errors() {
    let a = group_algebra(2).unwrap();
    let c = from_commutative(&a);
    let id = LinearMap::identity(&a.space);
    assert!(check_knowledgeable(&a, &c, &[], &[id], &Conventions::default()).is_err());
}
