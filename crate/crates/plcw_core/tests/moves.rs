use plcw_core::surfaces::{square_torus, triangle_sphere, triangle_torus};
use plcw_core::{
    apply_elementary_move, apply_elementary_move_normalized, apply_fixed_move, check_admissible, enumerate_structures,
    glue, BoundaryComponent, Direction, ElementaryMove, FixedMove, Marking, PlcwComplex, PlcwError, Side,
    DEFAULT_BUDGET,
};
use proptest::prelude::*;

fn surfaces() -> Vec<PlcwComplex> {
    vec![square_torus(), triangle_torus(), triangle_sphere(), plcw_core::surfaces::closed_surface(2)]
}

fn admissible(k: &PlcwComplex, r: u32) -> Vec<Marking> {
    enumerate_structures(k, r, DEFAULT_BUDGET).unwrap().admissible
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fixed_moves_keep_every_vertex_verdict(which in 0usize..4, r in 1u32..=3, pick in any::<prop::sample::Index>(), mv in 0usize..3, arg in 0usize..8, shift in -5i64..5) {
        let k = &surfaces()[which];
        let all = admissible(k, r);
        prop_assume!(!all.is_empty());
        let m = pick.get(&all);
        let mv = match mv {
            0 => FixedMove::ReverseEdge(arg % k.edges.len()),
            1 => FixedMove::RotateMark(arg % k.faces.len()),
            _ => FixedMove::Deck(arg % k.faces.len(), shift),
        };
        let before = check_admissible(k, m).unwrap();
        let out = apply_fixed_move(k, m, mv).unwrap();
        let after = check_admissible(k, &out).unwrap();
        prop_assert!(after.pass);
        for (a, b) in before.vertices.iter().zip(&after.vertices) {
            prop_assert_eq!(a.pass, b.pass);
        }
    }

    #[test]
    fn full_turns_of_the_mark_are_trivial(which in 0usize..4, r in 1u32..=3, pick in any::<prop::sample::Index>(), face in 0usize..4) {
        let k = &surfaces()[which];
        let all = admissible(k, r);
        prop_assume!(!all.is_empty());
        let m = pick.get(&all);
        let f = face % k.faces.len();
        let turns = k.faces[f].word.len() * r as usize;
        let moves = vec![FixedMove::RotateMark(f); turns];
        let out = plcw_core::apply_fixed_moves(k, m, &moves).unwrap();
        prop_assert_eq!(&out, m);
    }

    #[test]
    fn splitting_keeps_admissibility(which in 0usize..3, r in 1u32..=3, pick in any::<prop::sample::Index>(), face in 0usize..4, i in 0usize..8, j in 0usize..8, e in 0usize..8) {
        let k = &surfaces()[which];
        let all = admissible(k, r);
        prop_assume!(!all.is_empty());
        let m = pick.get(&all);
        let f = face % k.faces.len();
        let n = k.faces[f].word.len();
        let (k2, m2) = apply_elementary_move(k, m, ElementaryMove::SplitFace { face: f, from: i % n, to: j % n }).unwrap();
        k2.validate().unwrap();
        prop_assert!(check_admissible(&k2, &m2).unwrap().pass);
        let (k3, m3) = apply_elementary_move(&k2, &m2, ElementaryMove::SplitEdge(e % k2.edges.len())).unwrap();
        k3.validate().unwrap();
        prop_assert!(check_admissible(&k3, &m3).unwrap().pass);
        let v = k3.vertices.len() - 1;
        let (k4, m4) = apply_elementary_move_normalized(&k3, &m3, ElementaryMove::MergeVertex(v)).unwrap();
        prop_assert!(check_admissible(&k4, &m4).unwrap().pass);
        let d = k2.edges.len() - 1;
        let (k5, m5) = apply_elementary_move_normalized(&k2, &m2, ElementaryMove::MergeEdge(d)).unwrap();
        prop_assert!(check_admissible(&k5, &m5).unwrap().pass);
        prop_assert_eq!(k5.faces.len(), k.faces.len());
    }
}

#[test]
fn elementary_moves_keep_counts() {
    let k = triangle_torus();
    let m = Marking::standard(&k, 2);
    for r in 2..=3 {
        let base = enumerate_structures(&k, r, DEFAULT_BUDGET).unwrap().class_count();
        let (k2, _) = apply_elementary_move(&k, &m, ElementaryMove::SplitEdge(0)).unwrap();
        assert_eq!(enumerate_structures(&k2, r, DEFAULT_BUDGET).unwrap().class_count(), base);
        let (k3, _) = apply_elementary_move(&k, &m, ElementaryMove::SplitFace { face: 1, from: 0, to: 0 }).unwrap();
        assert_eq!(enumerate_structures(&k3, r, DEFAULT_BUDGET).unwrap().class_count(), base);
    }
}

#[test]
fn reverse_and_rotate_examples() {
    let k = square_torus();
    let m = Marking::standard(&k, 3);
    assert_eq!(apply_fixed_move(&k, &m, FixedMove::ReverseEdge(0)).unwrap().index[0], 2);
    // Moving the mark across an edge side that runs against the edge.
    let mut m2 = m.clone();
    m2.flip[0] = true;
    m2.index[0] = 2;
    let out = apply_fixed_move(&k, &m2, FixedMove::RotateMark(0)).unwrap();
    assert_eq!(out.index[0], 0);
    let mut m3 = m.clone();
    m3.mark[0] = 2;
    let out = apply_fixed_move(&k, &m3, FixedMove::RotateMark(0)).unwrap();
    assert_eq!(out.index[0], 1);
    assert_eq!(apply_fixed_move(&k, &m, FixedMove::Deck(0, 3)).unwrap(), m);
}

#[test]
fn inadmissible_input_is_rejected() {
    let k = triangle_sphere();
    let m = Marking::standard(&k, 3);
    assert!(matches!(apply_fixed_move(&k, &m, FixedMove::RotateMark(0)), Err(PlcwError::Inadmissible(_))));
}

fn disk_out(r: u32, s: i64) -> (PlcwComplex, Marking) {
    // A cup: one monogon whose boundary is outgoing with label 1.
    let mut k = plcw_core::complex_from_words(&[("f", &["+b"])]).unwrap();
    k.boundary.push(BoundaryComponent::closed(Direction::Out, 1, vec![Side::new(0, true)]));
    let mut m = Marking::standard(&k, r);
    m.index[0] = s.rem_euclid(i64::from(r));
    (k, m)
}

fn disk_in(r: u32, s: i64) -> (PlcwComplex, Marking) {
    let mut k = plcw_core::complex_from_words(&[("f", &["-a"])]).unwrap();
    k.boundary.push(BoundaryComponent::closed(Direction::In, 1, vec![Side::new(0, false)]));
    let mut m = Marking::standard(&k, r);
    m.index[0] = s.rem_euclid(i64::from(r));
    (k, m)
}

#[test]
fn gluing_disks_gives_spheres() {
    for r in [1u32, 2] {
        for s1 in 0..i64::from(r) {
            for s2 in 0..i64::from(r) {
                let (k1, m1) = disk_out(r, s1);
                let (k2, m2) = disk_in(r, s2);
                let ok1 = check_admissible(&k1, &m1).unwrap().pass;
                let ok2 = check_admissible(&k2, &m2).unwrap().pass;
                if !(ok1 && ok2) {
                    continue;
                }
                let (k, m) = glue(&k1, &m1, 0, &k2, &m2, 0).unwrap();
                k.validate().unwrap();
                assert_eq!(k.euler_characteristic(), 2);
                assert_eq!(m.index[0], (s1 + s2 + 1).rem_euclid(i64::from(r)));
                assert!(check_admissible(&k, &m).unwrap().pass);
            }
        }
    }
}

#[test]
fn closed_disks_exist_only_with_label_one() {
    let r = 3;
    for label in 0..3 {
        let mut k = plcw_core::complex_from_words(&[("f", &["+b"])]).unwrap();
        k.boundary.push(BoundaryComponent::closed(Direction::Out, label, vec![Side::new(0, true)]));
        let n = enumerate_structures(&k, r, DEFAULT_BUDGET).unwrap().class_count();
        assert_eq!(n, usize::from(label == 1), "label {label}");
    }
}
