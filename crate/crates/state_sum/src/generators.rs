//! Marked decompositions of the generating bordisms.
//!
//! Each generator is a one-face surface read from a template in which
//! labels and edge indices are placeholders.

use std::fmt;

use plcw_core::surfaces::square_torus;
use plcw_core::{parse_surface, Bordism, BoundaryLabel, Marking};

use crate::StateSumError;

pub const CYLINDER: &str = include_str!("../fixtures/cylinder.surf");
pub const PANTS: &str = include_str!("../fixtures/pants.surf");
pub const COPANTS: &str = include_str!("../fixtures/copants.surf");
pub const CUP: &str = include_str!("../fixtures/cup.surf");
pub const CAP: &str = include_str!("../fixtures/cap.surf");
pub const OPEN_CYLINDER: &str = include_str!("../fixtures/open_cylinder.surf");
pub const OPEN_PANTS: &str = include_str!("../fixtures/open_pants.surf");
pub const OPEN_COPANTS: &str = include_str!("../fixtures/open_copants.surf");
pub const OPEN_CUP: &str = include_str!("../fixtures/open_cup.surf");
pub const OPEN_CAP: &str = include_str!("../fixtures/open_cap.surf");
pub const COZIP: &str = include_str!("../fixtures/cozip.surf");
pub const ZIP: &str = include_str!("../fixtures/zip.surf");

/// Replaces whole whitespace-separated tokens and prepends `r`.
pub fn fill(template: &str, r: u32, values: &[(&str, i64)]) -> String {
    let mut out = format!("r {r}\n");
    for line in template.lines() {
        let content = line.split('#').next().unwrap_or("");
        let toks: Vec<String> = content
            .split_whitespace()
            .map(|t| match values.iter().find(|(k, _)| *k == t) {
                Some((_, v)) => v.to_string(),
                None => t.to_string(),
            })
            .collect();
        if !toks.is_empty() {
            out.push_str(&toks.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn from_template(template: &str, r: u32, values: &[(&str, i64)]) -> Result<Bordism, StateSumError> {
    Ok(parse_surface(&fill(template, r, values))?.to_bordism()?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `S¹_x -> S¹_x`, the identity.
    Cylinder(i64),
    /// `S¹_x -> S¹_x`, the Dehn twist.
    Twist(i64),
    /// `S¹_x ⊔ S¹_y -> S¹_{x+y-1}`
    Pants(i64, i64),
    /// `S¹_{x+y+1} -> S¹_x ⊔ S¹_y`
    Copants(i64, i64),
    /// `∅ -> S¹_1`
    Cup,
    /// `S¹_{-1} -> ∅`
    Cap,
    OpenCylinder,
    /// The interval cylinder realizing the Nakayama automorphism.
    OpenTwist,
    OpenPants,
    OpenCopants,
    OpenCup,
    OpenCap,
    /// `S¹_x -> I`
    Cozip(i64),
    /// `I -> S¹_x`
    Zip(i64),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Cylinder(x) => write!(f, "cylinder({x})"),
            Generator::Twist(x) => write!(f, "twist({x})"),
            Generator::Pants(x, y) => write!(f, "pants({x}, {y})"),
            Generator::Copants(x, y) => write!(f, "copants({x}, {y})"),
            Generator::Cup => write!(f, "cup"),
            Generator::Cap => write!(f, "cap"),
            Generator::OpenCylinder => write!(f, "open_cylinder"),
            Generator::OpenTwist => write!(f, "open_twist"),
            Generator::OpenPants => write!(f, "open_pants"),
            Generator::OpenCopants => write!(f, "open_copants"),
            Generator::OpenCup => write!(f, "open_cup"),
            Generator::OpenCap => write!(f, "open_cap"),
            Generator::Cozip(x) => write!(f, "cozip({x})"),
            Generator::Zip(x) => write!(f, "zip({x})"),
        }
    }
}

impl Generator {
    /// Every generator whose labels lie in `0..r`.
    pub fn all(r: u32) -> Vec<Generator> {
        let ri = i64::from(r);
        let mut out = vec![
            Generator::Cup,
            Generator::Cap,
            Generator::OpenCylinder,
            Generator::OpenTwist,
            Generator::OpenPants,
            Generator::OpenCopants,
            Generator::OpenCup,
            Generator::OpenCap,
        ];
        for x in 0..ri {
            out.extend([Generator::Cylinder(x), Generator::Twist(x), Generator::Cozip(x), Generator::Zip(x)]);
            for y in 0..ri {
                out.extend([Generator::Pants(x, y), Generator::Copants(x, y)]);
            }
        }
        out
    }

    pub fn bordism(self, r: u32) -> Result<Bordism, StateSumError> {
        if r == 0 {
            return Err(StateSumError::Malformed("r must be positive".into()));
        }
        let ri = i64::from(r);
        let m = |v: i64| v.rem_euclid(ri);
        match self {
            Generator::Cylinder(x) => from_template(CYLINDER, r, &[("X", m(x)), ("BA", 1), ("BB", 1)]),
            Generator::Twist(x) => from_template(CYLINDER, r, &[("X", m(x)), ("BA", m(2)), ("BB", 1)]),
            Generator::Pants(x, y) => from_template(
                PANTS,
                r,
                &[
                    ("X", m(x)),
                    ("Y", m(y)),
                    ("Z", m(x + y - 1)),
                    ("S1", m(x)),
                    ("S2", m(y - 1)),
                    ("BA", 1),
                    ("BB", m(1 - x)),
                    ("BC", 1),
                ],
            ),
            Generator::Copants(x, y) => from_template(
                COPANTS,
                r,
                &[("X", m(x)), ("Y", m(y)), ("W", m(x + y + 1)), ("S1", m(y)), ("S2", m(x)), ("BA", 1), ("BB", 1), ("BC", 1)],
            ),
            Generator::Cup => from_template(CUP, r, &[("BB", 1)]),
            Generator::Cap => from_template(CAP, r, &[("BA", 1)]),
            Generator::OpenCylinder => from_template(OPEN_CYLINDER, r, &[("BI", 1), ("BO", 1)]),
            Generator::OpenTwist => from_template(OPEN_CYLINDER, r, &[("BI", 1), ("BO", m(2))]),
            Generator::OpenPants => from_template(OPEN_PANTS, r, &[("BI1", 1), ("BI2", 1), ("BO", 1)]),
            Generator::OpenCopants => from_template(OPEN_COPANTS, r, &[("BI", 1), ("BO1", 1), ("BO2", 1)]),
            Generator::OpenCup => from_template(OPEN_CUP, r, &[("BO", 1)]),
            Generator::OpenCap => from_template(OPEN_CAP, r, &[("BI", 1)]),
            Generator::Cozip(x) => from_template(COZIP, r, &[("X", m(x)), ("SE", m(x)), ("BA", 1), ("BO", 1)]),
            Generator::Zip(x) => from_template(ZIP, r, &[("X", m(x)), ("SE", m(x)), ("BO", 1), ("BC", 1)]),
        }
    }
}

impl Generator {
    /// Source and target labels.
    pub fn boundary(self, r: u32) -> (Vec<BoundaryLabel>, Vec<BoundaryLabel>) {
        let m = |v: i64| Some(v.rem_euclid(i64::from(r)));
        match self {
            Generator::Cylinder(x) | Generator::Twist(x) => (vec![m(x)], vec![m(x)]),
            Generator::Pants(x, y) => (vec![m(x), m(y)], vec![m(x + y - 1)]),
            Generator::Copants(x, y) => (vec![m(x + y + 1)], vec![m(x), m(y)]),
            Generator::Cup => (vec![], vec![m(1)]),
            Generator::Cap => (vec![m(-1)], vec![]),
            Generator::OpenCylinder | Generator::OpenTwist => (vec![None], vec![None]),
            Generator::OpenPants => (vec![None, None], vec![None]),
            Generator::OpenCopants => (vec![None], vec![None, None]),
            Generator::OpenCup => (vec![], vec![None]),
            Generator::OpenCap => (vec![None], vec![]),
            Generator::Cozip(x) => (vec![m(x)], vec![None]),
            Generator::Zip(x) => (vec![None], vec![m(x)]),
        }
    }
}

/// The one-square torus `a b a^-1 b^-1` with edge indices `(x, y)`.
pub fn torus(r: u32, x: i64, y: i64) -> Result<Bordism, StateSumError> {
    let k = square_torus();
    let mut m = Marking::standard(&k, r);
    m.index = vec![x.rem_euclid(i64::from(r)), y.rem_euclid(i64::from(r))];
    Ok(Bordism::new(k, m)?)
}

/// The identity bordism on a list of boundary labels.
pub fn identity(r: u32, labels: &[BoundaryLabel]) -> Result<Bordism, StateSumError> {
    let mut out: Option<Bordism> = None;
    for l in labels {
        let g = match l {
            Some(x) => Generator::Cylinder(*x),
            None => Generator::OpenCylinder,
        };
        let b = g.bordism(r)?;
        out = Some(match out {
            None => b,
            Some(acc) => acc.tensor(&b)?,
        });
    }
    out.ok_or_else(|| StateSumError::Malformed("the empty identity has no decomposition".into()))
}

/// `first ⊗ second -> second ⊗ first`.
pub fn swap(r: u32, first: &[BoundaryLabel], second: &[BoundaryLabel]) -> Result<Bordism, StateSumError> {
    let mut b = identity(r, &[first, second].concat())?;
    b.target.rotate_left(first.len());
    Ok(b)
}
