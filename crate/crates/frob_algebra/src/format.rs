//! Plain-text algebra files.
//!
//! ```text
//! # Cℓ(1)
//! name clifford1
//! r 2
//! basis 1 even
//! basis theta odd
//! mu theta theta 1 1        # e_theta · e_theta = 1 · e_1
//! mu 1 1 1 1
//! mu 1 theta theta 1
//! mu theta 1 theta 1
//! eta 1 1
//! epsilon 1 1/2
//! ```
//!
//! `mu a b c v` adds `v` to the coefficient of `e_c` in `e_a e_b`; `eta a v`
//! and `epsilon a v` set coordinates of the unit and the counit. An optional
//! `delta a b c v` block replaces the derived coproduct: `v` is the
//! coefficient of `e_b ⊗ e_c` in `Δ(e_a)`. Entries are exact rationals `p/q`.

use std::collections::HashMap;

use num::{BigInt, Zero};

use crate::algebra::FrobeniusAlgebra;
use crate::linear::GradedSpace;
use crate::matrix::{Matrix, Q};
use crate::AlgebraError;

fn parse_q(s: &str, line: usize) -> Result<Q, AlgebraError> {
    let bad = || AlgebraError::Parse { line, msg: format!("'{s}' is not a rational number") };
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

pub fn parse_algebra(text: &str) -> Result<FrobeniusAlgebra, AlgebraError> {
    let mut name = String::from("unnamed");
    let mut r = None;
    let mut names: Vec<String> = Vec::new();
    let mut odd = Vec::new();
    let mut mu_entries = Vec::new();
    let mut eta_entries = Vec::new();
    let mut eps_entries = Vec::new();
    let mut delta_entries = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let want = |n: usize| -> Result<(), AlgebraError> {
            if words.len() == n {
                Ok(())
            } else {
                Err(AlgebraError::Parse { line, msg: format!("'{}' expects {} fields", words[0], n - 1) })
            }
        };
        match words[0] {
            "name" => {
                want(2)?;
                name = words[1].to_string();
            }
            "r" => {
                want(2)?;
                let v: u32 = words[1].parse().map_err(|_| AlgebraError::Parse { line, msg: "r must be a positive integer".into() })?;
                if v == 0 {
                    return Err(AlgebraError::Parse { line, msg: "r must be a positive integer".into() });
                }
                r = Some(v);
            }
            "basis" => {
                want(3)?;
                if names.iter().any(|n| n == words[1]) {
                    return Err(AlgebraError::Parse { line, msg: format!("duplicate basis name '{}'", words[1]) });
                }
                names.push(words[1].to_string());
                odd.push(match words[2] {
                    "even" | "0" => false,
                    "odd" | "1" => true,
                    other => return Err(AlgebraError::Parse { line, msg: format!("unknown parity '{other}'") }),
                });
            }
            "mu" => {
                want(5)?;
                mu_entries.push((line, [words[1], words[2], words[3]].map(String::from), parse_q(words[4], line)?));
            }
            "delta" => {
                want(5)?;
                delta_entries.push((line, [words[1], words[2], words[3]].map(String::from), parse_q(words[4], line)?));
            }
            "eta" => {
                want(3)?;
                eta_entries.push((line, words[1].to_string(), parse_q(words[2], line)?));
            }
            "epsilon" => {
                want(3)?;
                eps_entries.push((line, words[1].to_string(), parse_q(words[2], line)?));
            }
            other => return Err(AlgebraError::Parse { line, msg: format!("unknown keyword '{other}'") }),
        }
    }
    if names.is_empty() {
        return Err(AlgebraError::Parse { line: 0, msg: "no basis declared".into() });
    }
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let look = |n: &str, line: usize| {
        index.get(n).copied().ok_or_else(|| AlgebraError::Parse { line, msg: format!("unknown basis element '{n}'") })
    };
    let dim = names.len();
    let mut mu = Matrix::zeros(dim, dim * dim);
    for (line, [a, b, c], v) in &mu_entries {
        let (a, b, c) = (look(a, *line)?, look(b, *line)?, look(c, *line)?);
        mu.add_at(c, a * dim + b, v);
    }
    let mut eta = vec![Q::zero(); dim];
    for (line, a, v) in &eta_entries {
        eta[look(a, *line)?] = v.clone();
    }
    let mut eps = vec![Q::zero(); dim];
    for (line, a, v) in &eps_entries {
        eps[look(a, *line)?] = v.clone();
    }
    let mut alg = FrobeniusAlgebra::from_structure(name, names.clone(), GradedSpace::new(odd), mu, eta, eps)?;
    if !delta_entries.is_empty() {
        let mut delta = Matrix::zeros(dim * dim, dim);
        for (line, [a, b, c], v) in &delta_entries {
            let (a, b, c) = (look(a, *line)?, look(b, *line)?, look(c, *line)?);
            delta.add_at(b * dim + c, a, v);
        }
        alg = alg.with_delta(delta)?;
    }
    if let Some(r) = r {
        alg = alg.with_r(r);
    }
    Ok(alg)
}

/// Writes an algebra in the format read by [`parse_algebra`], including the
/// coproduct so that the file is self-contained.
pub fn write_algebra(a: &FrobeniusAlgebra) -> String {
    let mut out = format!("name {}\n", a.name);
    if let Some(r) = a.r {
        out += &format!("r {r}\n");
    }
    let n = a.dim();
    for (i, name) in a.basis_names.iter().enumerate() {
        out += &format!("basis {name} {}\n", if a.space.is_odd(i) { "odd" } else { "even" });
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = a.mu.matrix.get(k, i * n + j);
                if !v.is_zero() {
                    out += &format!("mu {} {} {} {v}\n", a.basis_names[i], a.basis_names[j], a.basis_names[k]);
                }
            }
        }
    }
    for i in 0..n {
        let v = a.eta.matrix.get(i, 0);
        if !v.is_zero() {
            out += &format!("eta {} {v}\n", a.basis_names[i]);
        }
    }
    for i in 0..n {
        let v = a.epsilon.matrix.get(0, i);
        if !v.is_zero() {
            out += &format!("epsilon {} {v}\n", a.basis_names[i]);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = a.delta.matrix.get(j * n + k, i);
                if !v.is_zero() {
                    out += &format!("delta {} {} {} {v}\n", a.basis_names[i], a.basis_names[j], a.basis_names[k]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    const CL1: &str = "name clifford1\nr 2\nbasis 1 even\nbasis theta odd\nmu 1 1 1 1\nmu 1 theta theta 1\nmu theta 1 theta 1\nmu theta theta 1 1 # square\neta 1 1\nepsilon 1 1/2\n";

    #[test]
    fn reads_clifford() {
        let a = parse_algebra(CL1).unwrap();
        let mut p = presets::clifford1();
        p.r = Some(2);
        assert_eq!(a, p);
    }

    #[test]
    fn round_trips_presets() {
        for a in [presets::clifford1(), presets::clifford2_twisted(), presets::dual_numbers(), presets::group_algebra(3).unwrap()] {
            let back = parse_algebra(&write_algebra(&a)).unwrap();
            assert_eq!(back.mu, a.mu);
            assert_eq!(back.delta, a.delta);
            assert_eq!(back.epsilon, a.epsilon);
            assert_eq!(back.space, a.space);
        }
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_algebra("basis a even\nmu a a b 1\n").unwrap_err();
        assert_eq!(err, AlgebraError::Parse { line: 2, msg: "unknown basis element 'b'".into() });
        assert!(matches!(parse_algebra("basis a even\nepsilon a 1/0\n"), Err(AlgebraError::Parse { line: 2, .. })));
        assert!(matches!(parse_algebra("frobnicate\n"), Err(AlgebraError::Parse { line: 1, .. })));
        assert!(matches!(parse_algebra(""), Err(AlgebraError::Parse { .. })));
    }

    #[test]
    fn degenerate_pairing_is_rejected() {
        let text = "basis 1 even\nbasis t even\nmu 1 1 1 1\nmu 1 t t 1\nmu t 1 t 1\neta 1 1\nepsilon 1 1\n";
        assert!(matches!(parse_algebra(text), Err(AlgebraError::Degenerate(_))));
    }
}
