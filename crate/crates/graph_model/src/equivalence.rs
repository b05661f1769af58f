use rayon::prelude::*;

use plcw_core::{enumerate_structures, generating_moves, PlcwComplex};

use crate::iso::structures_isomorphic;
use crate::structure::{marking_to_structure, LambdaStructure};
use crate::GraphError;

/// Comparison of the two equivalence relations on admissible markings of
/// one complex: the one generated by fixed moves and isomorphism of the
/// associated Λ_r-structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub r: u32,
    pub admissible: usize,
    pub move_classes: usize,
    pub iso_classes: usize,
    pub moves_checked: usize,
    /// Moves whose two ends gave non-isomorphic structures.
    pub move_failures: usize,
    pub pass: bool,
}

/// Checks, for every admissible marking and every generating fixed move,
/// that the structures before and after are isomorphic, and counts
/// isomorphism classes among the class representatives.
pub fn check_model_equivalence(k: &PlcwComplex, r: u32, budget: u128) -> Result<EquivalenceReport, GraphError> {
    let en = enumerate_structures(k, r, budget)?;
    let moves = generating_moves(k);
    let roles = k.edge_roles();
    let structures: Vec<LambdaStructure> =
        en.admissible.par_iter().map(|m| marking_to_structure(k, m)).collect::<Result<_, _>>()?;
    let failures: usize = en
        .admissible
        .par_iter()
        .zip(structures.par_iter())
        .map(|(m, l)| -> Result<usize, GraphError> {
            let mut bad = 0;
            for mv in &moves {
                let mut m2 = m.clone();
                mv.act_with(k, &roles, &mut m2);
                let l2 = marking_to_structure(k, &m2)?;
                if structures_isomorphic(l, &l2)?.is_none() {
                    bad += 1;
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    let reps: Vec<LambdaStructure> =
        en.representatives.iter().map(|m| marking_to_structure(k, m)).collect::<Result<_, _>>()?;
    let mut iso_reps: Vec<&LambdaStructure> = Vec::new();
    for l in &reps {
        let mut found = false;
        for other in &iso_reps {
            if structures_isomorphic(other, l)?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            iso_reps.push(l);
        }
    }
    let move_classes = en.class_count();
    Ok(EquivalenceReport {
        r,
        admissible: en.admissible.len(),
        move_classes,
        iso_classes: iso_reps.len(),
        moves_checked: en.admissible.len() * moves.len(),
        move_failures: failures,
        pass: failures == 0 && iso_reps.len() == move_classes,
    })
}
