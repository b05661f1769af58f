use frob_algebra::{presets, Conventions, FrobeniusAlgebra, LinearMap};
use state_sum::generators::{identity, swap, torus, Generator};
use state_sum::relations::expected_map;
use state_sum::{evaluate, evaluate_closed, verify_generator_relations, verify_with, StateSumData};

const BUDGET: usize = 10_000_000;

fn presets_list() -> Vec<(FrobeniusAlgebra, u32)> {
    vec![
        (presets::clifford1(), 2),
        (presets::clifford1(), 4),
        (presets::ground_field(), 3),
        (presets::matrix_algebra(2).unwrap(), 2),
    ]
}

#[test]
fn cylinders_are_identities() {
    for (alg, r) in presets_list() {
        let data = StateSumData::new(&alg, r).unwrap();
        for x in 0..i64::from(r) {
            let b = Generator::Cylinder(x).bordism(r).unwrap();
            let id = LinearMap::identity(&data.space_of(Some(x)));
            assert_eq!(evaluate(&b, &data, BUDGET).unwrap(), id, "{} r={r} x={x}", alg.name);
        }
        let b = Generator::OpenCylinder.bordism(r).unwrap();
        assert_eq!(evaluate(&b, &data, BUDGET).unwrap(), LinearMap::identity(&alg.space));
    }
}

#[test]
fn every_generator_gives_its_structure_map() {
    for (alg, r) in presets_list() {
        let data = StateSumData::new(&alg, r).unwrap();
        for g in Generator::all(r) {
            let got = evaluate(&g.bordism(r).unwrap(), &data, BUDGET).unwrap();
            assert_eq!(got, expected_map(&data, g), "{} r={r} {g}", alg.name);
        }
    }
}

#[test]
fn torus_matches_algebraic_invariant() {
    let conv = Conventions::default();
    for (alg, r) in presets_list() {
        let data = StateSumData::new(&alg, r).unwrap();
        for x in 0..i64::from(r) {
            for y in 0..i64::from(r) {
                let t = evaluate_closed(&torus(r, x, y).unwrap(), &data, BUDGET).unwrap();
                assert_eq!(t, data.center.family.torus(x, y, &conv), "{} r={r} ({x},{y})", alg.name);
            }
        }
    }
}

#[test]
fn swap_is_the_graded_flip() {
    let alg = presets::clifford1();
    let data = StateSumData::new(&alg, 2).unwrap();
    let b = swap(2, &[None], &[None]).unwrap();
    let got = evaluate(&b, &data, BUDGET).unwrap();
    assert_eq!(got, LinearMap::braiding(&alg.space, &alg.space));
    let id = identity(2, &[Some(0), None]).unwrap();
    assert_eq!(evaluate(&id, &data, BUDGET).unwrap().source.dim(), data.space_of(Some(0)).dim() * 2);
}

#[test]
fn relations_hold_on_small_presets() {
    for (alg, r) in presets_list() {
        let data = StateSumData::new(&alg, r).unwrap();
        let rep = verify_generator_relations(&data, BUDGET).unwrap();
        assert!(rep.passed(), "{} r={r}: {:?}", alg.name, rep.failed_relations());
    }
}

#[test]
fn a_corrupted_generator_is_caught() {
    let data = StateSumData::new(&presets::clifford1(), 2).unwrap();
    // The open twist replaced by the identity strip.
    let rep = verify_with(&data, BUDGET, &|g: Generator| match g {
        Generator::OpenTwist => Generator::OpenCylinder.bordism(2),
        other => other.bordism(2),
    })
    .unwrap();
    assert!(!rep.passed());
    assert!(rep.failed_relations().iter().any(|r| r.contains("generator")));
}

#[test]
fn relations_hold_on_twisted_clifford() {
    let data = StateSumData::new(&presets::clifford2_twisted(), 4).unwrap();
    let rep = verify_generator_relations(&data, BUDGET).unwrap();
    assert!(rep.passed(), "{:?}", rep.failed_relations());
}
