use graph_model::*;
use plcw_core::surfaces::{triangle_sphere, triangle_torus};
use plcw_core::*;

/// Merging two faces along an edge corresponds to contracting the dual edge.
fn check(k: &PlcwComplex, r: u32, stride: usize) {
    let en = enumerate_structures(k, r, DEFAULT_BUDGET).unwrap();
    let mut checked = 0;
    for m in en.admissible.iter().step_by(stride) {
        for e in 0..k.edges.len() {
            let occ = k.occurrences(e);
            if k.edge_role(e) != EdgeRole::Interior || occ[0].0 == occ[1].0 {
                continue;
            }
            for g in [occ[0].0, occ[1].0] {
                let mut prepared = m.clone();
                let roles = k.edge_roles();
                for mv in prepare_merge_edge(k, m, e, g).unwrap() {
                    mv.act_with(k, &roles, &mut prepared);
                }
                let (k2, m2) = apply_elementary_move(k, &prepared, ElementaryMove::MergeEdge(e)).unwrap();
                let l = marking_to_structure(k, &prepared).unwrap();
                let f = if g == occ[0].0 { occ[1] } else { occ[0] };
                let side = k.faces[f.0].word[f.1];
                let h = l.graph.half_edge_by_label(&(k.edges[e].name.clone(), side.forward)).unwrap();
                assert_eq!(l.graph.half_edges[h].vertex, f.0);
                let contracted = contract_edge(&l, h).unwrap();
                let expected = marking_to_structure(&k2, &m2).unwrap();
                let moved = transport_to(&contracted, &expected.graph).unwrap();
                assert_eq!(moved, expected, "edge {} absorbing face {}", k.edges[e].name, k.faces[g].name);
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn merging_faces_contracts_the_dual_edge_on_the_sphere() {
    check(&triangle_sphere(), 2, 1);
    check(&triangle_sphere(), 1, 1);
}

#[test]
fn merging_faces_contracts_the_dual_edge_on_the_torus() {
    check(&triangle_torus(), 2, 1);
    check(&triangle_torus(), 3, 3);
}

#[test]
fn merging_faces_contracts_the_dual_edge_in_genus_two() {
    let k = complex_from_words(&[
        ("f", &["+a", "+b", "-a", "-b", "+x"]),
        ("g", &["-x", "+c", "+d", "-c", "-d"]),
    ])
    .unwrap();
    check(&k, 2, 3);
}
