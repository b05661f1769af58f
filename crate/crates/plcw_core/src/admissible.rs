use crate::complex::{EdgeRole, PlcwComplex, VertexRole};
use crate::marking::Marking;
use crate::PlcwError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRecord {
    pub vertex: usize,
    pub role: VertexRole,
    /// Faces whose marked side starts at the vertex.
    pub d: i64,
    /// Oriented edge ends at the vertex; loops count twice.
    pub n: i64,
    pub s_hat_sum: i64,
    /// `Σŝ - expected`, reduced mod r. Zero for skipped vertices.
    pub defect: i64,
    /// `None` if the vertex imposes no condition.
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub r: u32,
    pub vertices: Vec<VertexRecord>,
    pub pass: bool,
}

impl AdmissibilityReport {
    pub fn failures(&self) -> impl Iterator<Item = &VertexRecord> {
        self.vertices.iter().filter(|v| v.pass == Some(false))
    }
}

/// Evaluates the vertex conditions
///
/// ```text
/// Σ ŝ_e ≡ D_v - N_v + 1              (interior vertex)
/// Σ ŝ_e ≡ D_v - N_v + 1 + ε_v x_v    (vertex on a closed component)
/// ```
///
/// with `ŝ_e = -1` for a loop, `s_e` for an edge leaving `v` and `-1 - s_e`
/// for an edge entering `v`.
pub fn check_admissible(k: &PlcwComplex, m: &Marking) -> Result<AdmissibilityReport, PlcwError> {
    m.validate(k)?;
    Ok(report(k, m))
}

pub(crate) fn report(k: &PlcwComplex, m: &Marking) -> AdmissibilityReport {
    let r = m.modulus();
    let nv = k.vertices.len();
    let mut d = vec![0i64; nv];
    let mut n = vec![0i64; nv];
    let mut s_hat = vec![0i64; nv];
    for f in 0..k.faces.len() {
        d[k.start(m.marked_side(k, f))] += 1;
    }
    for (e, role) in k.edge_roles().iter().enumerate() {
        if *role == EdgeRole::Free {
            continue;
        }
        let (t, h) = m.oriented_ends(k, e);
        n[t] += 1;
        n[h] += 1;
        if t == h {
            s_hat[t] -= 1;
        } else {
            s_hat[t] += m.index[e];
            s_hat[h] += -1 - m.index[e];
        }
    }
    let roles = k.vertex_roles();
    let mut pass = true;
    let vertices = (0..nv)
        .map(|v| {
            let expected = match roles[v] {
                VertexRole::Interior => Some(d[v] - n[v] + 1),
                VertexRole::ClosedBoundary(c) => {
                    let comp = &k.boundary[c];
                    Some(d[v] - n[v] + 1 + comp.direction.sign() * comp.label.unwrap_or(0))
                }
                VertexRole::Puncture | VertexRole::OtherBoundary => None,
            };
            let (defect, ok) = match expected {
                Some(x) => {
                    let defect = (s_hat[v] - x).rem_euclid(r);
                    (defect, Some(defect == 0))
                }
                None => (0, None),
            };
            if ok == Some(false) {
                pass = false;
            }
            VertexRecord { vertex: v, role: roles[v], d: d[v], n: n[v], s_hat_sum: s_hat[v], defect, pass: ok }
        })
        .collect();
    AdmissibilityReport { r: m.r, vertices, pass }
}

pub fn is_admissible(k: &PlcwComplex, m: &Marking) -> bool {
    m.validate(k).is_ok() && report(k, m).pass
}

pub(crate) fn require_admissible(k: &PlcwComplex, m: &Marking) -> Result<(), PlcwError> {
    let rep = check_admissible(k, m)?;
    if rep.pass {
        return Ok(());
    }
    let bad: Vec<String> = rep
        .failures()
        .map(|v| format!("{} (defect {})", k.vertices[v.vertex], v.defect))
        .collect();
    Err(PlcwError::Inadmissible(bad.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complex_from_words;

    fn torus() -> PlcwComplex {
        complex_from_words(&[("f", &["+a", "+b", "-a", "-b"])]).unwrap()
    }

    #[test]
    fn square_torus_vertex_numbers() {
        let k = torus();
        for r in 1..6 {
            for sa in 0..i64::from(r) {
                for sb in 0..i64::from(r) {
                    let mut m = Marking::standard(&k, r);
                    m.index = vec![sa, sb];
                    let rep = check_admissible(&k, &m).unwrap();
                    let v = &rep.vertices[0];
                    assert_eq!((v.d, v.n, v.s_hat_sum), (1, 4, -2));
                    assert!(rep.pass);
                }
            }
        }
    }

    #[test]
    fn sphere_fails_for_odd_r() {
        let k = complex_from_words(&[("f", &["+a", "+b", "+c"]), ("g", &["-c", "-b", "-a"])]).unwrap();
        let mut any = false;
        for code in 0..27i64 {
            let mut m = Marking::standard(&k, 3);
            m.index = vec![code % 3, code / 3 % 3, code / 9];
            for marks in 0..9 {
                m.mark = vec![marks % 3, marks / 3];
                any |= check_admissible(&k, &m).unwrap().pass;
            }
        }
        assert!(!any);
    }

    #[test]
    fn everything_passes_for_r_one() {
        let k = complex_from_words(&[("f", &["+a", "+b", "+c"]), ("g", &["-c", "-b", "-a"])]).unwrap();
        let m = Marking::standard(&k, 1);
        assert!(check_admissible(&k, &m).unwrap().pass);
    }
}
